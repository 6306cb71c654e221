#![no_main]

use chanorder::partition::Partition;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(p) = text.parse::<Partition>() {
        assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
        assert_eq!(p.to_string().parse::<Partition>().ok(), Some(p));
    }
});
