//! Comparisons of words under `≽`, TBM relations and rule families.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{decide_nonneg, IntPolynomial};
use crate::radical::{capacity_poly, decide_nonneg_radical_with, word_eval_f64, RadicalOptions};
use crate::verdict::{Judgement, Relation, Verdict, Witness};
use crate::words::{tbm_word, QuaternaryWord};

/// `I_p - I_q` for words without roots.
pub fn capacity_difference(p: &QuaternaryWord, q: &QuaternaryWord) -> Option<IntPolynomial> {
    Some(&capacity_poly(p)? - &capacity_poly(q)?)
}

/// Decides `p ≽ q` on the polynomial `I_p - I_q`; `None` unless both words
/// are binary.
pub fn compare_polynomial(p: &QuaternaryWord, q: &QuaternaryWord) -> Option<Verdict> {
    capacity_difference(p, q).map(|d| decide_nonneg(&d))
}

/// Decides `p ≽ q` as `p q^-1 ≽ ε` through root elimination.
pub fn compare_radical(p: &QuaternaryWord, q: &QuaternaryWord, opts: &RadicalOptions) -> Result<Verdict> {
    decide_nonneg_radical_with(&p.concat(&q.inverse()), opts)
}

pub fn compare(p: &QuaternaryWord, q: &QuaternaryWord) -> Result<Verdict> {
    compare_with(p, q, &RadicalOptions::default())
}

/// Decides `p ≽ q`, i.e. `I_p(x) >= I_q(x)` on `[0, 1]`.
///
/// Binary words go through the polynomial procedure on `I_p - I_q`, all
/// others through `I_{pq^-1}(x) - x`. A counterexample point `xi` satisfies
/// `I_p(xi) < I_q(xi)` on either route.
pub fn compare_with(p: &QuaternaryWord, q: &QuaternaryWord, opts: &RadicalOptions) -> Result<Verdict> {
    if p == q {
        return Ok(Verdict::trivial(true, "identical words"));
    }
    match compare_polynomial(p, q) {
        Some(v) => Ok(v),
        None => compare_radical(p, q, opts),
    }
}

pub fn tbm_prefix(alpha: &QuaternaryWord, beta: &QuaternaryWord) -> Result<Verdict> {
    tbm_prefix_with(alpha, beta, &RadicalOptions::default())
}

/// Decides `α ⊵ β` from `α b α^-1 ≽ β b β^-1` for both bits. Stops at the
/// first failing bit, whose judgement is then the certificate.
pub fn tbm_prefix_with(alpha: &QuaternaryWord, beta: &QuaternaryWord, opts: &RadicalOptions) -> Result<Verdict> {
    let mut parts = Vec::with_capacity(2);
    for bit in [0, 1] {
        let (a, b) = (tbm_word(alpha, bit), tbm_word(beta, bit));
        let v = compare_with(&a, &b, opts)?;
        let truth = v.truth;
        parts.push(v.judge(&a, &b, Relation::Geq));
        if !truth {
            return Ok(Verdict { truth: false, witness: Witness::Conjunction { parts } });
        }
    }
    Ok(Verdict { truth: true, witness: Witness::Conjunction { parts } })
}

pub fn tbm_suffix(alpha: &QuaternaryWord, beta: &QuaternaryWord) -> Result<Verdict> {
    tbm_suffix_with(alpha, beta, &RadicalOptions::default())
}

/// Decides `α ⊵' β`, which holds exactly when `β^-1 ⊵ α^-1`.
pub fn tbm_suffix_with(alpha: &QuaternaryWord, beta: &QuaternaryWord, opts: &RadicalOptions) -> Result<Verdict> {
    tbm_prefix_with(&beta.inverse(), &alpha.inverse(), opts)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Prefix,
    Suffix,
}

impl std::str::FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "prefix" => Ok(Side::Prefix),
            "suffix" => Ok(Side::Suffix),
            _ => Err(Error::Parse(format!("side must be prefix or suffix, got {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub base_lhs: QuaternaryWord,
    pub base_rhs: QuaternaryWord,
    pub alpha: QuaternaryWord,
    pub beta: QuaternaryWord,
    pub side: Side,
    /// Member `k` has `fill^k` inserted at the seam, for `k = 1..=depth`.
    pub fill: u8,
    pub members: Vec<Judgement>,
    pub all_true: bool,
}

fn strip_prefix(w: &QuaternaryWord, head: &QuaternaryWord) -> Option<QuaternaryWord> {
    w.symbols().strip_prefix(head.symbols()).map(|rest| QuaternaryWord::reduce(rest).expect("valid symbols"))
}

fn strip_suffix(w: &QuaternaryWord, tail: &QuaternaryWord) -> Option<QuaternaryWord> {
    w.symbols().strip_suffix(tail.symbols()).map(|rest| QuaternaryWord::reduce(rest).expect("valid symbols"))
}

fn join(parts: &[&QuaternaryWord]) -> QuaternaryWord {
    let raw: Vec<u8> = parts.iter().flat_map(|w| w.symbols().iter().copied()).collect();
    QuaternaryWord::reduce(&raw).expect("valid symbols")
}

/// Emits and verifies the first `depth` members of the rule family that a
/// base comparison and a TBM relation generate.
///
/// Prefix: from `α y ≽ β z` and `α ⊵ β`, every `α c y ≽ β c z`.
/// Suffix: from `z β ≽ y α` and `α ⊵' β`, every `z c β ≽ y c α`; the larger
/// side carries `β`. Each member is decided on its own rather than trusted
/// to the induction.
pub fn prove_family(
    base_p: &QuaternaryWord,
    base_q: &QuaternaryWord,
    alpha: &QuaternaryWord,
    beta: &QuaternaryWord,
    side: Side,
    depth: usize,
    fill: u8,
) -> Result<FamilyReport> {
    if fill > 1 {
        return Err(Error::Precondition("fill symbol must be 0 or 1".into()));
    }
    let (head_p, head_q) = match side {
        Side::Prefix => (strip_prefix(base_p, alpha), strip_prefix(base_q, beta)),
        Side::Suffix => (strip_suffix(base_p, beta), strip_suffix(base_q, alpha)),
    };
    let (Some(rest_p), Some(rest_q)) = (head_p, head_q) else {
        let shape = match side {
            Side::Prefix => format!("{base_p} = {alpha}·y and {base_q} = {beta}·z"),
            Side::Suffix => format!("{base_p} = z·{beta} and {base_q} = y·{alpha}"),
        };
        return Err(Error::Precondition(format!("base words do not factor as {shape}")));
    };
    if !compare(base_p, base_q)?.truth {
        return Err(Error::Precondition(format!("base comparison {base_p} ≽ {base_q} is false")));
    }
    let tbm = match side {
        Side::Prefix => tbm_prefix(alpha, beta)?,
        Side::Suffix => tbm_suffix(alpha, beta)?,
    };
    if !tbm.truth {
        let rel = if side == Side::Prefix { "⊵" } else { "⊵'" };
        return Err(Error::Precondition(format!("TBM relation {alpha} {rel} {beta} is false")));
    }
    let mut members = Vec::with_capacity(depth);
    for k in 1..=depth {
        let c = QuaternaryWord::reduce(&vec![fill; k]).expect("binary");
        let (p, q) = match side {
            Side::Prefix => (join(&[alpha, &c, &rest_p]), join(&[beta, &c, &rest_q])),
            Side::Suffix => (join(&[&rest_p, &c, beta]), join(&[&rest_q, &c, alpha])),
        };
        members.push(compare(&p, &q)?.judge(&p, &q, Relation::Geq));
    }
    let all_true = members.iter().all(|m| m.truth);
    Ok(FamilyReport {
        base_lhs: base_p.clone(),
        base_rhs: base_q.clone(),
        alpha: alpha.clone(),
        beta: beta.clone(),
        side,
        fill,
        members,
        all_true,
    })
}

/// Minimum of `I_p - I_q` over `grid` equally spaced points of `[0, 1]`, in
/// floating point. A necessary-condition check only.
pub fn numeric_probe(p: &QuaternaryWord, q: &QuaternaryWord, grid: usize) -> f64 {
    assert!(grid >= 2, "grid needs at least the two endpoints");
    (0..grid)
        .map(|i| {
            let x = i as f64 / (grid - 1) as f64;
            word_eval_f64(p, x) - word_eval_f64(q, x)
        })
        .fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QuaternaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn compare_examples() {
        assert!(compare(&q("1"), &q("0")).unwrap().truth);
        assert!(compare(&q("1001"), &q("0110")).unwrap().truth);
        let v = compare(&q("01"), &q("10")).unwrap();
        assert!(!v.truth);
        let x = v.counterexample().unwrap().point.clone();
        assert_eq!(capacity_difference(&q("01"), &q("10")).unwrap().sign_at(&x), crate::Sign::Negative);
    }

    #[test]
    fn tbm_examples() {
        assert!(tbm_prefix(&q("10"), &q("01")).unwrap().truth);
        assert!(tbm_prefix(&q("1"), &q("")).unwrap().truth);
        assert!(!tbm_prefix(&q("01"), &q("10")).unwrap().truth);
        assert!(tbm_suffix(&q("10"), &q("01")).unwrap().truth);
        assert!(tbm_suffix(&q("110"), &q("011")).unwrap().truth);
        assert!(!tbm_suffix(&q("0"), &q("1")).unwrap().truth);
    }

    #[test]
    fn probe_examples() {
        assert!(numeric_probe(&q("1"), &q("0"), 101) >= 0.0);
        assert!(numeric_probe(&q("10"), &q("01"), 101) >= 0.0);
        assert!(numeric_probe(&q("01"), &q("10"), 101) < 0.0);
    }

    #[test]
    fn family_members_and_preconditions() {
        let r = prove_family(&q("1001"), &q("0110"), &q("10"), &q("01"), Side::Prefix, 3, 0).unwrap();
        let pairs: Vec<(String, String)> = r.members.iter().map(|m| (m.lhs.clone(), m.rhs.clone())).collect();
        assert_eq!(pairs[0], ("10001".into(), "01010".into()));
        assert_eq!(pairs[2], ("1000001".into(), "0100010".into()));
        assert!(r.all_true);
        let r = prove_family(&q("1000101"), &q("0101010"), &q("10"), &q("01"), Side::Suffix, 2, 0).unwrap();
        assert_eq!(r.members[0].lhs, "10001001");
        assert!(r.all_true);
        let err = prove_family(&q("0110"), &q("1001"), &q("10"), &q("01"), Side::Prefix, 2, 0).unwrap_err();
        assert!(err.to_string().contains("factor"));
        let err = prove_family(&q("1001"), &q("0110"), &q("01"), &q("10"), Side::Prefix, 2, 0).unwrap_err();
        assert!(err.to_string().contains("factor"));
    }
}
