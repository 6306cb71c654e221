//! Rationals travel as `"a/b"` strings so that JSON consumers keep exactness.

pub mod rational_str {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::poly::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}
