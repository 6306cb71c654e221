#![no_main]

use chanorder::{BinaryWord, QuaternaryWord};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(w) = text.parse::<QuaternaryWord>() {
        let again: QuaternaryWord = w.to_string().parse().expect("display round trip");
        assert_eq!(again, w);
        assert_eq!(w.inverse().inverse(), w);
    }
    if let Ok(b) = text.parse::<BinaryWord>() {
        assert_eq!(b.to_string().parse::<BinaryWord>().ok(), Some(b));
    }
});
