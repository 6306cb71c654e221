#![no_main]

use chanorder::poly::parse_rational;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(r) = parse_rational(text) {
        assert_eq!(parse_rational(&r.to_string()).ok(), Some(r));
    }
});
