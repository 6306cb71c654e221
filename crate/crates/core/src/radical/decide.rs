use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::{capacity_expr, capacity_poly, degree_bound, eliminate, word_eval_f64, word_interval, word_phi_interval_sign};
use crate::error::{Error, Result};
use crate::poly::{decide_nonneg, distinct_root_part, gap_samples, isolate_roots, IntPolynomial, Rational, Sign};
use crate::verdict::{Counterexample, RadicalProof, SampleSign, Span, Verdict, Witness};
use crate::words::QuaternaryWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RadicalOptions {
    /// Largest eliminant degree bound that may be expanded.
    pub max_degree: u128,
    /// Grid size of the interval pre-check for counterexamples; 0 disables it.
    pub refute_grid: u32,
    /// Send binary cores through elimination too, instead of handing them to
    /// the polynomial procedure.
    pub eliminate_binary: bool,
}

impl Default for RadicalOptions {
    fn default() -> Self {
        RadicalOptions { max_degree: 1 << 14, refute_grid: 256, eliminate_binary: false }
    }
}

const MIN_PREC: u64 = 64;
const MAX_INTERVAL_PREC: u64 = 1 << 13;

/// Exact sign of `I_w(xi) - xi` for `xi` in `(0, 1)`. Interval enclosures
/// at growing precision settle almost every case; the quadratic tower
/// settles the rest, including exact zeros.
pub fn word_phi_sign(w: &QuaternaryWord, xi: &Rational) -> Result<Sign> {
    let mut prec = MIN_PREC;
    while prec <= MAX_INTERVAL_PREC {
        if let Some(s) = word_phi_interval_sign(w, xi, prec) {
            return Ok(s);
        }
        prec *= 2;
    }
    capacity_expr(w).minus_x().sign_at(xi)
}

fn refutation_points(grid: u32) -> Vec<Rational> {
    let mut pts: Vec<Rational> = (1..grid).map(|k| Rational::new(k.into(), grid.into())).collect();
    for j in 9..=24u32 {
        let e = Rational::new(BigInt::one(), BigInt::one() << j);
        pts.push(e.clone());
        pts.push(Rational::one() - e);
    }
    pts
}

/// A grid point at which `I_w(x) < x` is certified by intervals, if any.
fn quick_refute(w: &QuaternaryWord, grid: u32) -> Option<Rational> {
    if grid < 2 {
        return None;
    }
    refutation_points(grid)
        .into_iter()
        .find(|xi| word_phi_interval_sign(w, xi, 96) == Some(Sign::Negative))
}

/// Splits `w = r c r^-1` with `c` cyclically reduced.
fn cyclic_split(w: &QuaternaryWord) -> (QuaternaryWord, QuaternaryWord) {
    let c = w.cyclic_reduce();
    let lo = (w.len() - c.len()) / 2;
    (QuaternaryWord::reduce_valid(w.symbols()[..lo].iter().copied()), c)
}

/// The rotation `v = u^-1 c u` of `c` with the smallest eliminant bound,
/// together with `u`.
fn best_rotation(c: &QuaternaryWord) -> (QuaternaryWord, QuaternaryWord, u128) {
    let s = c.symbols();
    (0..s.len().max(1))
        .map(|i| {
            let v = QuaternaryWord::reduce_valid(s[i..].iter().chain(&s[..i]).copied());
            let u = QuaternaryWord::reduce_valid(s[..i].iter().copied());
            let bound = degree_bound(&capacity_expr(&v).minus_x());
            (v, u, bound)
        })
        .min_by_key(|t| t.2)
        .expect("nonempty")
}

/// Given `I_v(y) < y` for `v = g^-1 w g`, the point `I_{g^-1}(y)` violates
/// `I_w(x) >= x`. Returns a nearby rational point that still does.
fn transfer_witness(w: &QuaternaryWord, g: &QuaternaryWord, y: &Rational) -> Result<Rational> {
    if g.is_empty() {
        return Ok(y.clone());
    }
    let back = g.inverse();
    let mut prec = MIN_PREC;
    while prec <= 1 << 16 {
        let candidate = word_interval(&back, y, prec).midpoint();
        if candidate > Rational::zero()
            && candidate < Rational::one()
            && word_phi_sign(w, &candidate)? == Sign::Negative
        {
            return Ok(candidate);
        }
        prec *= 2;
    }
    Err(Error::Precondition(format!("could not locate a rational witness for {w}")))
}

fn refuted(w: &QuaternaryWord, point: Rational, interval: Option<Span>) -> Verdict {
    let approx = point.to_f64().map(|x| word_eval_f64(w, x) - x).unwrap_or(0.0);
    Verdict {
        truth: false,
        witness: Witness::Counterexample(Counterexample { point, sign: Sign::Negative, interval, approx }),
    }
}

/// Decides `w ≽ ε`, i.e. `I_w(x) >= x` on `[0, 1]`, with default options.
pub fn decide_nonneg_radical(w: &QuaternaryWord) -> Result<Verdict> {
    decide_nonneg_radical_with(w, &RadicalOptions::default())
}

/// Decides `I_w(x) >= x` on `[0, 1]`.
///
/// The word is first conjugated to a cyclically reduced rotation that keeps
/// the eliminant small; conjugation does not change the answer. Roots of the
/// eliminant split `(0, 1)` into gaps on which `I_v(x) - x` has constant
/// sign, and one exact sign per gap decides. Counterexamples are moved back
/// to the original word.
pub fn decide_nonneg_radical_with(w: &QuaternaryWord, opts: &RadicalOptions) -> Result<Verdict> {
    if w.is_empty() {
        return Ok(Verdict::trivial(true, "identity word"));
    }
    if let Some(xi) = quick_refute(w, opts.refute_grid) {
        return Ok(refuted(w, xi, None));
    }
    let (r, c) = cyclic_split(w);
    if c.is_binary() && !opts.eliminate_binary {
        let p = &capacity_poly(&c).expect("binary") - &IntPolynomial::x();
        let v = decide_nonneg(&p);
        return match v.counterexample() {
            None => Ok(v),
            Some(ce) => {
                let span = r.is_empty().then(|| ce.interval.clone()).flatten();
                let point = transfer_witness(w, &r, &ce.point)?;
                Ok(refuted(w, point, span))
            }
        };
    }
    let (v, u, bound) = best_rotation(&c);
    if bound > opts.max_degree {
        return Err(Error::ResourceLimit(format!(
            "eliminant degree bound {bound} exceeds the limit {} for {w}",
            opts.max_degree
        )));
    }
    let expr = capacity_expr(&v).minus_x();
    let f = match eliminate(&expr) {
        Ok(f) => f,
        Err(Error::IdenticallyZero) => return Ok(Verdict::trivial(true, "identity map")),
        Err(e) => return Err(e),
    };
    debug_assert!(f.degree().unwrap_or(0) as u128 <= bound);
    let d = distinct_root_part(&f)?;
    let roots = isolate_roots(&d, &Rational::zero(), &Rational::one())?;
    let gaps = gap_samples(&d, &roots);
    let g = r.concat(&u);
    let mut samples = Vec::with_capacity(gaps.len());
    for gap in &gaps {
        let sign = word_phi_sign(&v, &gap.sample)?;
        samples.push(SampleSign { point: gap.sample.clone(), sign });
        if sign == Sign::Negative {
            let span = g.is_empty().then(|| Span { lo: gap.lo.clone(), hi: gap.hi.clone() });
            let point = transfer_witness(w, &g, &gap.sample)?;
            return Ok(refuted(w, point, span));
        }
        debug_assert_ne!(sign, Sign::Zero, "gap samples avoid the roots of the eliminant");
    }
    Ok(Verdict {
        truth: true,
        witness: Witness::Radical(RadicalProof {
            word: v,
            eliminant_degree: f.degree().unwrap_or(0),
            eliminant: Some(d),
            roots_in_unit: roots.len(),
            samples,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational;

    fn q(s: &str) -> QuaternaryWord {
        s.parse().unwrap()
    }

    fn no_grid() -> RadicalOptions {
        RadicalOptions { refute_grid: 0, ..Default::default() }
    }

    #[test]
    fn examples() {
        assert!(decide_nonneg_radical(&q("2")).unwrap().truth);
        assert!(!decide_nonneg_radical(&q("03")).unwrap().truth);
        assert!(decide_nonneg_radical(&QuaternaryWord::epsilon()).unwrap().truth);
        let w = q("10023").concat(&q("01032").inverse());
        assert!(decide_nonneg_radical(&w).unwrap().truth);
    }

    #[test]
    fn elimination_path_finds_counterexamples() {
        for text in ["03", "0", "1032", "3", "0312"] {
            let w = q(text);
            let v = decide_nonneg_radical_with(&w, &no_grid()).unwrap();
            let grid = decide_nonneg_radical(&w).unwrap();
            assert_eq!(v.truth, grid.truth, "{text}");
            if let Some(ce) = v.counterexample() {
                assert_eq!(capacity_expr(&w).minus_x().sign_at(&ce.point).unwrap(), Sign::Negative, "{text}");
            }
        }
    }

    #[test]
    fn conjugated_words_transfer_witnesses() {
        // 1 (03) 3 and 2 (30) 0 are conjugates of false words
        for text in ["1033", "2300", "11032" ] {
            let w = q(text);
            let v = decide_nonneg_radical_with(&w, &no_grid()).unwrap();
            if let Some(ce) = v.counterexample() {
                assert_eq!(word_phi_sign(&w, &ce.point).unwrap(), Sign::Negative);
            }
        }
    }

    #[test]
    fn tower_fallback_agrees_with_intervals() {
        let w = q("0331201");
        for k in 1..10 {
            let xi = rational(k, 10);
            let exact = capacity_expr(&w).minus_x().sign_at(&xi).unwrap();
            assert_eq!(word_phi_sign(&w, &xi).unwrap(), exact);
        }
    }

    #[test]
    fn degree_guard() {
        let w = q("10023").concat(&q("01032").inverse());
        let tight = RadicalOptions { max_degree: 2, refute_grid: 0, ..Default::default() };
        assert!(matches!(decide_nonneg_radical_with(&w, &tight), Err(Error::ResourceLimit(_))));
    }
}
