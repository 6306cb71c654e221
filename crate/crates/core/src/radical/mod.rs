//! Nested square-root expressions in one variable.
//!
//! An expression is a linear tower: a base polynomial `H_0(x)` and layers
//! `H_1(x, y_1), ..., H_L(x, y_L)` where `y_k` is the square root of the
//! value of level `k - 1`. The value of the expression is the value of the
//! top level.

mod bipoly;
mod decide;
mod eliminate;
mod interval;
mod tower;

pub use bipoly::BiPoly;
pub use decide::{decide_nonneg_radical, decide_nonneg_radical_with, word_phi_sign, RadicalOptions};
pub use eliminate::{degree_bound, eliminate, eliminate_steps};
pub use interval::{word_interval, word_phi_interval_sign, FixedInterval};
pub use tower::{QuadraticTowerValue, Tower};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Result;
use crate::poly::{IntPolynomial, Rational, Sign};
use crate::words::QuaternaryWord;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalExpr {
    pub base: IntPolynomial,
    pub layers: Vec<BiPoly>,
}

impl RadicalExpr {
    pub fn polynomial(p: IntPolynomial) -> Self {
        RadicalExpr { base: p, layers: Vec::new() }
    }

    pub fn radical_count(&self) -> usize {
        self.layers.len()
    }

    /// The value of the top level as a polynomial in `x` and the outermost root.
    pub fn top(&self) -> BiPoly {
        match self.layers.last() {
            Some(h) => h.clone(),
            None => BiPoly::from_x(self.base.clone()),
        }
    }

    fn with_top(&self, top: BiPoly) -> Self {
        let mut out = self.clone();
        match out.layers.last_mut() {
            Some(h) => *h = top,
            None => out.base = top.as_univariate().expect("base level has no root"),
        }
        out
    }

    /// `self - x`.
    pub fn minus_x(&self) -> Self {
        self.with_top(&self.top() - &BiPoly::x())
    }

    /// Value at a floating-point `x`, rounded once at the end. Levels are
    /// kept as rationals and roots are taken to `EVAL_BITS` relative bits,
    /// since tiny radicands under nested roots do not survive float rounding.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let Some(xq) = Rational::from_float(x) else {
            return f64::NAN;
        };
        let mut v = self.base.eval(&xq);
        for h in &self.layers {
            let Some(y) = sqrt_approx(&v, EVAL_BITS) else {
                return f64::NAN;
            };
            v = h.eval(&xq, &y);
        }
        v.to_f64().unwrap_or(f64::NAN)
    }

    /// Exact sign at a rational point, computed in a quadratic tower.
    ///
    /// Fails with a domain error when some square-root argument is negative
    /// at `xi`; for capacity expressions this cannot happen on `[0, 1]`.
    pub fn sign_at(&self, xi: &Rational) -> Result<Sign> {
        let (tower, value) = Tower::evaluate(self, xi)?;
        Ok(tower.sign(&value, self.layers.len()))
    }

    /// The worked example `1 - x - sqrt(2 - sqrt(3 - x^2))`.
    pub fn demo() -> Self {
        RadicalExpr {
            base: IntPolynomial::from_i64s(&[3, 0, -1]),
            layers: vec![
                BiPoly::new(vec![IntPolynomial::from_i64s(&[2]), IntPolynomial::from_i64s(&[-1])]),
                BiPoly::new(vec![IntPolynomial::from_i64s(&[1, -1]), IntPolynomial::from_i64s(&[-1])]),
            ],
        }
    }
}

const EVAL_BITS: u64 = 512;

/// `sqrt(v)` to about `bits` significant bits; `None` for negative `v`.
fn sqrt_approx(v: &Rational, bits: u64) -> Option<Rational> {
    if v.is_negative() {
        return None;
    }
    if v.is_zero() {
        return Some(Rational::zero());
    }
    let (n, d) = (v.numer(), v.denom());
    let t = bits as i64 - (n.bits() as i64 - d.bits() as i64) / 2;
    let m = if t >= 0 { (n << (2 * t as u64)) / d } else { n / (d << (-2 * t) as u64) };
    let root = Rational::from_integer(m.sqrt());
    Some(if t >= 0 {
        root / Rational::from_integer(BigInt::one() << t as u64)
    } else {
        root * Rational::from_integer(BigInt::one() << (-t) as u64)
    })
}

/// `I_w(x)` as a tower. Symbols act left to right: `0` and `1` transform the
/// current level, `2` and `3` open a new layer whose root wraps the current
/// level (after the flip `v -> 1 - v` for `3`).
pub fn capacity_expr(w: &QuaternaryWord) -> RadicalExpr {
    let one = BiPoly::constant(1);
    let two = BiPoly::constant(2);
    let mut finished: Vec<BiPoly> = Vec::new();
    let mut cur = BiPoly::x();
    for &s in w.symbols() {
        cur = match s {
            0 => cur.square(),
            1 => &(&two * &cur) - &cur.square(),
            2 => {
                finished.push(cur);
                BiPoly::y()
            }
            _ => {
                finished.push(&one - &cur);
                &one - &BiPoly::y()
            }
        };
    }
    finished.push(cur);
    let mut levels = finished.into_iter();
    let base = levels.next().unwrap().as_univariate().expect("base level has no root");
    RadicalExpr { base, layers: levels.collect() }
}

/// `I_b(x)` for a word without roots, as an integer polynomial.
pub fn capacity_poly(w: &QuaternaryWord) -> Option<IntPolynomial> {
    if !w.is_binary() {
        return None;
    }
    capacity_expr(w).base.into()
}

/// Floating-point composition of the four maps. Both `v` and `1 - v` are
/// carried so that neither is ever recovered by cancellation.
pub fn word_eval_f64(w: &QuaternaryWord, x: f64) -> f64 {
    let (v, _) = w.symbols().iter().fold((x, 1.0 - x), |(v, u), &s| match s {
        0 => (v * v, u * (1.0 + v)),
        1 => (v * (1.0 + u), u * u),
        2 => {
            let r = v.sqrt();
            (r, u / (1.0 + r))
        }
        _ => {
            let r = u.sqrt();
            (v / (1.0 + r), r)
        }
    });
    v
}

impl fmt::Display for RadicalExpr {
    /// Parenthesized ASCII with `sqrt(...)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut text = BiPoly::from_x(self.base.clone()).render("");
        for h in &self.layers {
            text = h.render(&format!("sqrt({text})"));
        }
        f.write_str(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational;

    fn q(s: &str) -> QuaternaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn capacity_examples() {
        assert_eq!(capacity_expr(&q("0")).to_string(), "x^2");
        assert_eq!(capacity_expr(&q("2")).to_string(), "sqrt(x)");
        assert_eq!(capacity_expr(&q("3")).to_string(), "1 - sqrt(1 - x)");
        // (1 - (1 - x)^2)^2 = 4x^2 - 4x^3 + x^4
        assert_eq!(capacity_poly(&q("10")).unwrap(), IntPolynomial::from_i64s(&[0, 0, 4, -4, 1]));
        assert_eq!(capacity_expr(&QuaternaryWord::epsilon()).to_string(), "x");
    }

    #[test]
    fn demo_prints() {
        assert_eq!(RadicalExpr::demo().to_string(), "1 - x - sqrt(2 - sqrt(3 - x^2))");
    }

    #[test]
    fn exact_signs() {
        let lin = RadicalExpr::polynomial(IntPolynomial::from_i64s(&[-1, 2]));
        assert_eq!(lin.sign_at(&rational(3, 4)).unwrap(), Sign::Positive);
        let e = capacity_expr(&q("2")).minus_x();
        assert_eq!(e.sign_at(&rational(1, 4)).unwrap(), Sign::Positive);
        assert_eq!(RadicalExpr::demo().sign_at(&rational(1, 2)).unwrap(), Sign::Negative);
        assert!((RadicalExpr::demo().eval_f64(0.5) + 0.085).abs() < 0.01);
    }

    #[test]
    fn negative_radicand_is_domain_error() {
        // sqrt(x - 1) at 1/2
        let e = RadicalExpr { base: IntPolynomial::from_i64s(&[-1, 1]), layers: vec![BiPoly::y()] };
        assert!(matches!(e.sign_at(&rational(1, 2)), Err(crate::Error::Domain(_))));
    }
}
