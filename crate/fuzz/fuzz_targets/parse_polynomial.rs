#![no_main]

use chanorder::IntPolynomial;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if text.len() > 256 {
        return;
    }
    if let Ok(p) = text.parse::<IntPolynomial>() {
        let again: IntPolynomial = p.to_string().parse().expect("display round trip");
        assert_eq!(again, p);
    }
});
