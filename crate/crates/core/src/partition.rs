//! Integer partitions of binary words and the dominance order.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::order::compare;
use crate::verdict::{Judgement, Relation};
use crate::words::BinaryWord;

/// Weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u64>);

impl Partition {
    /// Sorts into decreasing order and drops zero parts.
    pub fn new(mut parts: Vec<u64>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.retain(|&p| p > 0);
        Partition(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated weakly decreasing integers; trailing zeros allowed.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::default());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad partition part {t:?} in {s:?}"))))
            .collect::<Result<Vec<u64>>>()?;
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("partition parts must be weakly decreasing: {s:?}")));
        }
        Ok(Partition::new(parts))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Part `i` counts the zeros to the right of the `i`-th one in `1 a 0`.
pub fn pi(a: &BinaryWord) -> Partition {
    let mut parts = Vec::with_capacity(a.weight() + 1);
    let mut zeros = 1u64;
    for &bit in a.bits().iter().rev() {
        if bit == 0 {
            zeros += 1;
        } else {
            parts.push(zeros);
        }
    }
    parts.push(zeros);
    parts.reverse();
    Partition(parts)
}

/// Prefix sums of `p` dominate those of `q`; `false` for different totals.
pub fn dominates(p: &Partition, q: &Partition) -> bool {
    if p.total() != q.total() {
        return false;
    }
    let len = p.0.len().max(q.0.len());
    let (mut sp, mut sq) = (0u64, 0u64);
    (0..len).all(|i| {
        sp += p.0.get(i).copied().unwrap_or(0);
        sq += q.0.get(i).copied().unwrap_or(0);
        sp >= sq
    })
}

/// Replaces every `0` by `rule0` and every `1` by `rule1` simultaneously.
pub fn lindenmayer(b: &BinaryWord, rule0: &BinaryWord, rule1: &BinaryWord) -> BinaryWord {
    let bits: Vec<u8> = b
        .bits()
        .iter()
        .flat_map(|&c| if c == 0 { rule0.bits() } else { rule1.bits() })
        .copied()
        .collect();
    BinaryWord::from_bits(&bits).expect("binary")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    #[serde(rename = "plain")]
    Plain,
    #[serde(rename = "L(01,10)")]
    L01,
    #[serde(rename = "L(100,011)")]
    L100,
}

impl Variant {
    pub fn rules(self) -> Option<(BinaryWord, BinaryWord)> {
        let w = |s: &str| s.parse::<BinaryWord>().expect("literal");
        match self {
            Variant::Plain => None,
            Variant::L01 => Some((w("01"), w("10"))),
            Variant::L100 => Some((w("100"), w("011"))),
        }
    }

    pub fn apply(self, b: &BinaryWord) -> BinaryWord {
        match self.rules() {
            None => b.clone(),
            Some((r0, r1)) => lindenmayer(b, &r0, &r1),
        }
    }

    fn stretch(self) -> usize {
        self.rules().map_or(1, |(r0, _)| r0.len())
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Plain => "plain",
            Variant::L01 => "L(01,10)",
            Variant::L100 => "L(100,011)",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().trim_start_matches('L').trim_start_matches('(').trim_end_matches(')') {
            "plain" => Ok(Variant::Plain),
            "01,10" => Ok(Variant::L01),
            "100,011" => Ok(Variant::L100),
            _ => Err(Error::Parse(format!("unknown variant {s:?}; expected plain, L(01,10) or L(100,011)"))),
        }
    }
}

/// Largest length for the plain check, and for substituted words.
pub const PLAIN_LIMIT: usize = 8;
pub const SUBSTITUTED_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DominanceReport {
    pub n: usize,
    pub variant: Variant,
    /// Pairs `(a, b)` with `a != b` and `π(a)` dominating `π(b)`.
    pub checked: Vec<(BinaryWord, BinaryWord)>,
    /// Substituted comparisons that came out FALSE.
    pub violations: Vec<Judgement>,
}

impl DominanceReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Same-weight dominance pairs among words of length `n`.
pub fn dominance_pairs(n: usize) -> Vec<(BinaryWord, BinaryWord)> {
    let words: Vec<(BinaryWord, Partition)> = BinaryWord::all_of_length(n).map(|w| {
        let p = pi(&w);
        (w, p)
    }).collect();
    let mut out = Vec::new();
    for (a, pa) in &words {
        for (b, pb) in &words {
            if a != b && a.weight() == b.weight() && dominates(pa, pb) {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

/// Checks that dominance of `π(a)` over `π(b)` gives `v(a) ≽ v(b)` for the
/// substitution `v` of the variant, over all words of length `n`.
pub fn check_dominance_theorem(n: usize, variant: Variant) -> Result<DominanceReport> {
    if n == 0 {
        return Err(Error::Precondition("dominance check needs a positive length".into()));
    }
    let len = n * variant.stretch();
    let limit = if variant == Variant::Plain { PLAIN_LIMIT } else { SUBSTITUTED_LIMIT };
    if len > limit {
        return Err(Error::ResourceLimit(format!("{variant} check at length {n} compares words of length {len} > {limit}")));
    }
    let checked = dominance_pairs(n);
    let verdicts = checked
        .par_iter()
        .map(|(a, b)| {
            let (va, vb) = (variant.apply(a), variant.apply(b));
            let v = compare(&va.to_quaternary(), &vb.to_quaternary())?;
            Ok((!v.truth).then(|| v.judge(&va, &vb, Relation::Geq)))
        })
        .collect::<Result<Vec<Option<Judgement>>>>()?;
    Ok(DominanceReport { n, variant, checked, violations: verdicts.into_iter().flatten().collect() })
}

/// Distinct words of one length with the same partition, for every length
/// up to `max_len`.
pub fn injectivity_report(max_len: usize) -> Vec<(BinaryWord, BinaryWord, Partition)> {
    let mut collisions = Vec::new();
    for len in 0..=max_len {
        let mut seen: HashMap<Partition, BinaryWord> = HashMap::new();
        for w in BinaryWord::all_of_length(len) {
            let p = pi(&w);
            match seen.get(&p) {
                Some(first) => collisions.push((first.clone(), w, p)),
                None => {
                    seen.insert(p, w);
                }
            }
        }
    }
    collisions
}

/// Whether `b` arises from `a` by rewriting one window `10 c^m 01` into
/// `01 c^m 10` for a bit `c` and `m >= 0`.
pub fn is_cover_step(a: &BinaryWord, b: &BinaryWord) -> bool {
    let (x, y) = (a.bits(), b.bits());
    if x.len() != y.len() {
        return false;
    }
    let Some(lo) = (0..x.len()).find(|&i| x[i] != y[i]) else {
        return false;
    };
    let hi = (0..x.len()).rev().find(|&i| x[i] != y[i]).unwrap();
    if hi < lo + 3 {
        return false;
    }
    let (wa, wb) = (&x[lo..=hi], &y[lo..=hi]);
    let k = wa.len();
    let middle = &wa[2..k - 2];
    wa[..2] == [1, 0]
        && wa[k - 2..] == [0, 1]
        && wb[..2] == [0, 1]
        && wb[k - 2..] == [1, 0]
        && middle == &wb[2..k - 2]
        && middle.windows(2).all(|w| w[0] == w[1])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub n: usize,
    /// Covers of the dominance order among `π` of same-weight words.
    pub covers: Vec<(BinaryWord, BinaryWord)>,
    /// Covers that are not a single window rewrite.
    pub discrepancies: Vec<(BinaryWord, BinaryWord)>,
}

/// Covers in the dominance order on the partitions of same-weight words of
/// length `n`, each tested for the window rewrite.
pub fn cover_step_report(n: usize) -> CoverReport {
    let pairs = dominance_pairs(n);
    let related: std::collections::HashSet<(BinaryWord, BinaryWord)> = pairs.iter().cloned().collect();
    let words: Vec<BinaryWord> = BinaryWord::all_of_length(n).collect();
    let covers: Vec<(BinaryWord, BinaryWord)> = pairs
        .iter()
        .filter(|(a, b)| {
            !words.iter().any(|c| {
                related.contains(&(a.clone(), c.clone())) && related.contains(&(c.clone(), b.clone()))
            })
        })
        .cloned()
        .collect();
    let discrepancies = covers.iter().filter(|(a, b)| !is_cover_step(a, b)).cloned().collect();
    CoverReport { n, covers, discrepancies }
}
