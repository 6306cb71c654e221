use super::{distinct_root_part, IntPolynomial, Rational, Sign};
use crate::error::{Error, Result};

/// Sturm sequence `S, S', -rem(S, S'), ...` of the distinct-root part `S` of
/// `p`, each remainder scaled by a positive constant.
pub fn sturm_sequence(p: &IntPolynomial) -> Result<Vec<IntPolynomial>> {
    let s = distinct_root_part(p)?;
    let mut seq = vec![s.clone(), s.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        if seq[n - 1].is_constant() {
            break;
        }
        let r = -seq[n - 2].pseudo_rem(&seq[n - 1]).primitive_part();
        seq.push(r);
    }
    Ok(seq)
}

fn variations_at(seq: &[IntPolynomial], x: &Rational) -> usize {
    let signs: Vec<Sign> = seq
        .iter()
        .map(|q| q.sign_at(x))
        .filter(|&s| s != Sign::Zero)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots in the half-open interval `(lo, hi]`.
///
/// A root exactly at `hi` is counted and a root exactly at `lo` is not;
/// callers needing `[lo, hi]` check `lo` themselves.
pub fn count_roots(p: &IntPolynomial, lo: &Rational, hi: &Rational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(Error::Precondition(format!("empty interval ({lo}, {hi}]")));
    }
    let seq = sturm_sequence(p)?;
    let (vl, vh) = (variations_at(&seq, lo), variations_at(&seq, hi));
    debug_assert!(vl >= vh);
    Ok(vl - vh)
}
