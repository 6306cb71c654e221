//! Words over the evolution alphabet `{0, 1}` and the extended alphabet
//! `{0, 1, 2, 3}`.
//!
//! Symbol `0` squares the capacity, `1` maps `x` to `1 - (1 - x)^2`, and `2`
//! and `3` are their inverses (`sqrt(x)` and `1 - sqrt(1 - x)`). Symbols act
//! left to right: the leftmost symbol is applied to the capacity first.
//!
//! A [`QuaternaryWord`] is always stored reduced, i.e. it never contains one
//! of the adjacent pairs `02`, `20`, `13`, `31`. Since `I_0` and `I_1` generate
//! a free group, two reduced words denote the same function exactly when they
//! are equal as strings.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The symbol that cancels `s` when adjacent to it.
#[inline]
pub fn inverse_symbol(s: u8) -> u8 {
    (s + 2) % 4
}

/// Swaps `0 <-> 1` and `2 <-> 3`.
#[inline]
pub fn complement_symbol(s: u8) -> u8 {
    s ^ 1
}

fn parse_symbols(text: &str, alphabet: u8) -> Result<Vec<u8>> {
    text.char_indices()
        .map(|(position, c)| match c.to_digit(10) {
            Some(d) if (d as u8) < alphabet => Ok(d as u8),
            _ => Err(Error::InvalidSymbol {
                input: text.to_string(),
                position,
                found: c,
            }),
        })
        .collect()
}

fn render(symbols: &[u8]) -> String {
    symbols.iter().map(|&s| char::from(b'0' + s)).collect()
}

/// A string over `{0, 1}`, possibly empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BinaryWord(Vec<u8>);

impl BinaryWord {
    pub fn empty() -> Self {
        BinaryWord(Vec::new())
    }

    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        if let Some(position) = bits.iter().position(|&b| b > 1) {
            return Err(Error::InvalidSymbol {
                input: render(&bits.iter().map(|&b| b.min(9)).collect::<Vec<_>>()),
                position,
                found: char::from(b'0' + bits[position].min(9)),
            });
        }
        Ok(BinaryWord(bits.to_vec()))
    }

    /// The word of length `len` spelling `value` in binary, most significant
    /// bit first.
    pub fn from_index(value: u64, len: usize) -> Self {
        BinaryWord(
            (0..len)
                .rev()
                .map(|i| if i < 64 { ((value >> i) & 1) as u8 } else { 0 })
                .collect(),
        )
    }

    /// All words of length exactly `len`, in lexicographic order.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = BinaryWord> {
        assert!(len < 64, "word length {len} is too large to enumerate");
        (0..(1u64 << len)).map(move |v| BinaryWord::from_index(v, len))
    }

    /// All words of length at most `len`, shortest first and lexicographic
    /// within a length.
    pub fn all_up_to(len: usize) -> impl Iterator<Item = BinaryWord> {
        (0..=len).flat_map(BinaryWord::all_of_length)
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of ones.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }

    pub fn complement(&self) -> Self {
        BinaryWord(self.0.iter().map(|&b| b ^ 1).collect())
    }

    pub fn concat(&self, other: &BinaryWord) -> Self {
        let mut bits = self.0.clone();
        bits.extend_from_slice(&other.0);
        BinaryWord(bits)
    }

    pub fn to_quaternary(&self) -> QuaternaryWord {
        // binary words never contain an inverse pair
        QuaternaryWord(self.0.clone())
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.0))
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_symbols(s, 2).map(BinaryWord)
    }
}

impl Serialize for BinaryWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BinaryWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A reduced string over `{0, 1, 2, 3}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QuaternaryWord(Vec<u8>);

impl QuaternaryWord {
    pub fn epsilon() -> Self {
        QuaternaryWord(Vec::new())
    }

    /// Reduces a raw symbol sequence by deleting adjacent inverse pairs until
    /// none remain.
    pub fn reduce(raw: &[u8]) -> Result<Self> {
        if let Some(position) = raw.iter().position(|&s| s > 3) {
            return Err(Error::InvalidSymbol {
                input: render(&raw.iter().map(|&s| s.min(9)).collect::<Vec<_>>()),
                position,
                found: char::from(b'0' + raw[position].min(9)),
            });
        }
        Ok(Self::reduce_valid(raw.iter().copied()))
    }

    pub(crate) fn reduce_valid(raw: impl IntoIterator<Item = u8>) -> Self {
        // a stack reduction reaches the unique fixed point in one pass
        let mut out: Vec<u8> = Vec::new();
        for s in raw {
            match out.last() {
                Some(&t) if t == inverse_symbol(s) => {
                    out.pop();
                }
                _ => out.push(s),
            }
        }
        QuaternaryWord(out)
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_binary(&self) -> bool {
        self.0.iter().all(|&s| s < 2)
    }

    pub fn to_binary(&self) -> Option<BinaryWord> {
        self.is_binary().then(|| BinaryWord(self.0.clone()))
    }

    /// Number of radical symbols (`2` or `3`).
    pub fn radical_count(&self) -> usize {
        self.0.iter().filter(|&&s| s >= 2).count()
    }

    /// Reverses the word and swaps `0 <-> 2`, `1 <-> 3`.
    pub fn inverse(&self) -> Self {
        QuaternaryWord(self.0.iter().rev().map(|&s| inverse_symbol(s)).collect())
    }

    pub fn complement(&self) -> Self {
        QuaternaryWord(self.0.iter().map(|&s| complement_symbol(s)).collect())
    }

    /// Reduced concatenation `self · other`.
    pub fn concat(&self, other: &QuaternaryWord) -> Self {
        Self::reduce_valid(self.0.iter().chain(other.0.iter()).copied())
    }

    /// `self^k`, reduced.
    pub fn pow(&self, k: usize) -> Self {
        let mut out = QuaternaryWord::epsilon();
        for _ in 0..k {
            out = out.concat(self);
        }
        out
    }

    /// Strips matching inverse pairs from the two ends. The result is a
    /// conjugate of `self`, so it is `≽ ε` exactly when `self` is.
    pub fn cyclic_reduce(&self) -> Self {
        let s = &self.0;
        let (mut lo, mut hi) = (0, s.len());
        while hi - lo >= 2 && s[hi - 1] == inverse_symbol(s[lo]) {
            lo += 1;
            hi -= 1;
        }
        QuaternaryWord(s[lo..hi].to_vec())
    }
}

/// `α · bit · α^{-1}`, the word whose comparisons decide TBM relations.
pub fn tbm_word(alpha: &QuaternaryWord, bit: u8) -> QuaternaryWord {
    assert!(bit < 2, "TBM bit must be 0 or 1");
    QuaternaryWord::reduce_valid(
        alpha
            .0
            .iter()
            .copied()
            .chain(std::iter::once(bit))
            .chain(alpha.inverse().0),
    )
}

impl fmt::Display for QuaternaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.0))
    }
}

impl FromStr for QuaternaryWord {
    type Err = Error;

    /// Parses and reduces. The empty string denotes `ε`.
    fn from_str(s: &str) -> Result<Self> {
        parse_symbols(s, 4).map(Self::reduce_valid)
    }
}

impl From<&BinaryWord> for QuaternaryWord {
    fn from(b: &BinaryWord) -> Self {
        b.to_quaternary()
    }
}

impl Serialize for QuaternaryWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for QuaternaryWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn q(s: &str) -> QuaternaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(QuaternaryWord::reduce(&[1, 0, 0, 2]).unwrap().to_string(), "10");
        assert_eq!(QuaternaryWord::reduce(&[1, 3, 3, 1]).unwrap(), QuaternaryWord::epsilon());
        assert_eq!(q("100103223").to_string(), "100103223");
        assert!(matches!(
            QuaternaryWord::reduce(&[0, 4]),
            Err(Error::InvalidSymbol { position: 1, .. })
        ));
    }

    #[test]
    fn parse_rejects_bad_symbols() {
        let err = "01x".parse::<QuaternaryWord>().unwrap_err();
        assert_eq!(
            err,
            Error::InvalidSymbol { input: "01x".into(), position: 2, found: 'x' }
        );
        assert!("012".parse::<BinaryWord>().is_err());
        assert_eq!("".parse::<QuaternaryWord>().unwrap(), QuaternaryWord::epsilon());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(q("0").inverse().to_string(), "2");
        assert_eq!(QuaternaryWord::epsilon().inverse(), QuaternaryWord::epsilon());
        assert_eq!(q("10").inverse().to_string(), "23");
    }

    #[test]
    fn inverse_of_10_undoes_it_numerically() {
        // I_{1023}(x) = x on a grid
        let apply = |w: &str, mut x: f64| {
            for c in w.chars() {
                x = match c {
                    '0' => x * x,
                    '1' => 1.0 - (1.0 - x) * (1.0 - x),
                    '2' => x.sqrt(),
                    _ => 1.0 - (1.0 - x).sqrt(),
                };
            }
            x
        };
        let w = format!("10{}", q("10").inverse());
        for i in 1..100 {
            let x = i as f64 / 100.0;
            assert!((apply(&w, x) - x).abs() < 1e-12);
        }
    }

    #[test]
    fn complement_examples() {
        assert_eq!(q("10").complement().to_string(), "01");
        assert_eq!(q("2").complement().to_string(), "3");
        assert_eq!(QuaternaryWord::epsilon().complement(), QuaternaryWord::epsilon());
    }

    #[test]
    fn tbm_word_examples() {
        // 10·0·23 is stored reduced: the middle 02 cancels
        assert_eq!(tbm_word(&q("10"), 0), q("10023"));
        assert_eq!(tbm_word(&q("10"), 0).to_string(), "103");
        assert_eq!(tbm_word(&QuaternaryWord::epsilon(), 1).to_string(), "1");
        assert_eq!(tbm_word(&q("01"), 0).to_string(), "01032");
    }

    #[test]
    fn cyclic_reduce_strips_conjugation() {
        assert_eq!(q("0112").cyclic_reduce().to_string(), "11");
        assert_eq!(q("1").cyclic_reduce().to_string(), "1");
        assert_eq!(q("012").cyclic_reduce().to_string(), "1");
        assert_eq!(q("0121").cyclic_reduce().to_string(), "0121");
    }

    #[test]
    fn binary_enumeration_order() {
        let words: Vec<String> = BinaryWord::all_up_to(2).map(|w| w.to_string()).collect();
        assert_eq!(words, vec!["", "0", "1", "00", "01", "10", "11"]);
    }

    fn raw_word(max: usize) -> impl Strategy<Value = Vec<u8>> {
        prop::collection::vec(0u8..4, 0..=max)
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent(raw in raw_word(12)) {
            let once = QuaternaryWord::reduce(&raw).unwrap();
            prop_assert_eq!(QuaternaryWord::reduce(once.symbols()).unwrap(), once);
        }

        #[test]
        fn word_times_inverse_is_empty(raw in raw_word(8)) {
            let w = QuaternaryWord::reduce(&raw).unwrap();
            prop_assert!(w.concat(&w.inverse()).is_empty());
            prop_assert!(w.inverse().concat(&w).is_empty());
        }

        #[test]
        fn involutions_commute(raw in raw_word(12)) {
            let w = QuaternaryWord::reduce(&raw).unwrap();
            prop_assert_eq!(w.complement().complement(), w.clone());
            prop_assert_eq!(w.inverse().inverse(), w.clone());
            prop_assert_eq!(w.complement().inverse(), w.inverse().complement());
        }
    }

    #[test]
    fn reduction_is_confluent() {
        // delete inverse pairs in random order and compare with the stack reduction
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..1000 {
            let len = rng.gen_range(0..=16);
            let raw: Vec<u8> = (0..len).map(|_| rng.gen_range(0..4)).collect();
            let mut word = raw.clone();
            loop {
                let spots: Vec<usize> = (0..word.len().saturating_sub(1))
                    .filter(|&i| word[i + 1] == inverse_symbol(word[i]))
                    .collect();
                if spots.is_empty() {
                    break;
                }
                let i = spots[rng.gen_range(0..spots.len())];
                word.drain(i..i + 2);
            }
            assert_eq!(word, QuaternaryWord::reduce(&raw).unwrap().symbols());
        }
    }
}
