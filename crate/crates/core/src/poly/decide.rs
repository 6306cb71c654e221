use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::isolate::halve_toward_root;
use super::{isolate_roots, squarefree, strip_boundary, IntPolynomial, IsolatingInterval, Rational, Sign};
use crate::verdict::{Counterexample, Span, Verdict, Witness};

/// Trace of a successful nonnegativity proof on `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonnegProof {
    pub zero_multiplicity: usize,
    pub one_multiplicity: usize,
    pub squarefree: IntPolynomial,
    pub midpoint_sign: Sign,
    pub roots_in_unit: usize,
}

/// A root-free stretch between consecutive isolating intervals, with the
/// point at which its sign is sampled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gap {
    pub lo: Rational,
    pub hi: Rational,
    pub sample: Rational,
}

fn half(a: &Rational, b: &Rational) -> Rational {
    (a + b) / Rational::from_integer(BigInt::from(2))
}

/// Splits `(0, 1)` at the isolating intervals of the square-free `d` and
/// picks one interior sample per gap. Intervals that are exactly `[0, 0]` or
/// `[1, 1]` are ignored. Open intervals touching 0 or 1 are bisected first so
/// that every sample lies strictly inside `(0, 1)`.
pub fn gap_samples(d: &IntPolynomial, roots: &[IsolatingInterval]) -> Vec<Gap> {
    let zero = Rational::zero();
    let one = Rational::one();
    let mut roots: Vec<IsolatingInterval> = roots
        .iter()
        .filter(|iv| !(iv.is_exact() && (iv.lo == zero || iv.lo == one)))
        .cloned()
        .collect();
    if let Some(first) = roots.first_mut() {
        while first.lo <= zero && !first.is_exact() {
            *first = halve_toward_root(d, first);
        }
    }
    if let Some(last) = roots.last_mut() {
        while last.hi >= one && !last.is_exact() {
            *last = halve_toward_root(d, last);
        }
    }
    let mut gaps = Vec::with_capacity(roots.len() + 1);
    let mut start = zero;
    for iv in &roots {
        gaps.push(Gap { sample: half(&start, &iv.lo), lo: start, hi: iv.lo.clone() });
        start = iv.hi.clone();
    }
    gaps.push(Gap { sample: half(&start, &one), lo: start, hi: one });
    gaps
}

/// Moves from `start` toward `toward` until `p` is strictly negative. `p`
/// must vanish at only finitely many points of the segment and be negative
/// at all others.
pub(crate) fn nudge_negative(
    p: impl Fn(&Rational) -> Sign,
    start: &Rational,
    toward: &Rational,
) -> Rational {
    if p(start) == Sign::Negative {
        return start.clone();
    }
    let mut step = toward - start;
    loop {
        step = step / Rational::from_integer(BigInt::from(2));
        let candidate = start + &step;
        if p(&candidate) == Sign::Negative {
            return candidate;
        }
    }
}

fn counterexample(p: &IntPolynomial, gap: &Gap) -> Verdict {
    let toward = if gap.hi > gap.sample { gap.hi.clone() } else { gap.lo.clone() };
    let point = nudge_negative(|x| p.sign_at(x), &gap.sample, &toward);
    let approx = p.eval(&point).to_f64().unwrap_or(0.0);
    Verdict {
        truth: false,
        witness: Witness::Counterexample(Counterexample {
            point,
            sign: Sign::Negative,
            interval: Some(Span { lo: gap.lo.clone(), hi: gap.hi.clone() }),
            approx,
        }),
    }
}

/// Decides `P(x) >= 0` for all `x` in `[0, 1]`.
///
/// Boundary roots are stripped, square factors removed, the sign at `1/2`
/// taken, and the roots in `(0, 1)` isolated. What remains has only simple
/// roots, so it is nonnegative exactly when it is positive at `1/2` and has
/// no root in between. A FALSE verdict carries a rational point at which the
/// original `P` is negative.
pub fn decide_nonneg(p: &IntPolynomial) -> Verdict {
    if p.is_zero() {
        return Verdict::trivial(true, "zero polynomial");
    }
    let stripped = strip_boundary(p).expect("nonzero");
    let s = squarefree(&stripped.poly).expect("nonzero");
    let midpoint = Rational::new(BigInt::one(), BigInt::from(2));
    let midpoint_sign = s.sign_at(&midpoint);
    let roots = isolate_roots(&s, &Rational::zero(), &Rational::one()).expect("nonzero");
    let gaps = gap_samples(&s, &roots);
    if midpoint_sign == Sign::Negative {
        if let Some(g) = gaps.iter().find(|g| g.lo <= midpoint && midpoint <= g.hi) {
            let g = Gap { sample: midpoint.clone(), ..g.clone() };
            return counterexample(p, &g);
        }
    }
    if let Some(g) = gaps.iter().find(|g| s.sign_at(&g.sample) == Sign::Negative) {
        return counterexample(p, g);
    }
    debug_assert!(roots.is_empty() && midpoint_sign == Sign::Positive);
    Verdict {
        truth: true,
        witness: Witness::Polynomial(NonnegProof {
            zero_multiplicity: stripped.zero_multiplicity,
            one_multiplicity: stripped.one_multiplicity,
            squarefree: s,
            midpoint_sign,
            roots_in_unit: roots.len(),
        }),
    }
}
