//! Outward-rounded fixed-point interval evaluation of capacity words.
//!
//! Every level value of `I_w(x)` lies in `[0, 1]` for `x` in `[0, 1]`, so
//! intervals are clamped to that range and kept as integer multiples of
//! `2^-prec`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::{Rational, Sign};
use crate::words::QuaternaryWord;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedInterval {
    pub lo: BigInt,
    pub hi: BigInt,
    pub prec: u64,
}

fn ceil_shift(v: &BigInt, bits: u64) -> BigInt {
    -((-v) >> bits)
}

fn ceil_sqrt(v: &BigInt) -> BigInt {
    let s = v.sqrt();
    if &(&s * &s) < v {
        s + 1
    } else {
        s
    }
}

impl FixedInterval {
    pub fn from_rational(q: &Rational, prec: u64) -> Self {
        let scaled = q.numer() << prec;
        let (lo, rem) = scaled.div_mod_floor(q.denom());
        let hi = if rem.is_zero() { lo.clone() } else { &lo + 1 };
        FixedInterval { lo, hi, prec }
    }

    fn one(&self) -> BigInt {
        BigInt::one() << self.prec
    }

    fn clamp_unit(mut self) -> Self {
        let one = self.one();
        if self.lo.is_negative() {
            self.lo = BigInt::zero();
        }
        if self.hi > one {
            self.hi = one;
        }
        self
    }

    fn square(&self) -> Self {
        FixedInterval {
            lo: (&self.lo * &self.lo) >> self.prec,
            hi: ceil_shift(&(&self.hi * &self.hi), self.prec),
            prec: self.prec,
        }
    }

    fn one_minus(&self) -> Self {
        let one = self.one();
        FixedInterval { lo: &one - &self.hi, hi: one - &self.lo, prec: self.prec }
    }

    fn sqrt(&self) -> Self {
        FixedInterval {
            lo: (&self.lo << self.prec).sqrt(),
            hi: ceil_sqrt(&(&self.hi << self.prec)),
            prec: self.prec,
        }
    }

    /// Applies one symbol of a capacity word; the input must enclose a value
    /// in `[0, 1]`.
    fn apply(self, symbol: u8) -> Self {
        let v = self.clamp_unit();
        let out = match symbol {
            0 => v.square(),
            1 => v.one_minus().square().one_minus(),
            2 => v.sqrt(),
            _ => v.one_minus().sqrt().one_minus(),
        };
        out.clamp_unit()
    }

    pub fn sign(&self) -> Option<Sign> {
        if self.hi.is_negative() {
            Some(Sign::Negative)
        } else if self.lo.is_positive() {
            Some(Sign::Positive)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Sign::Zero)
        } else {
            None
        }
    }

    pub fn width_bits(&self) -> u64 {
        (&self.hi - &self.lo).bits()
    }

    pub fn midpoint(&self) -> Rational {
        Rational::new(&self.lo + &self.hi, BigInt::one() << (self.prec + 1))
    }
}

/// Enclosure of `I_w(xi)` at `prec` fractional bits; `xi` in `[0, 1]`.
pub fn word_interval(w: &QuaternaryWord, xi: &Rational, prec: u64) -> FixedInterval {
    let start = FixedInterval::from_rational(xi, prec);
    w.symbols().iter().fold(start, |v, &s| v.apply(s))
}

/// Sign of `I_w(xi) - xi` when an enclosure at `prec` bits decides it.
pub fn word_phi_interval_sign(w: &QuaternaryWord, xi: &Rational, prec: u64) -> Option<Sign> {
    let v = word_interval(w, xi, prec);
    let x = FixedInterval::from_rational(xi, prec);
    let diff = FixedInterval { lo: &v.lo - &x.hi, hi: &v.hi - &x.lo, prec };
    match diff.sign() {
        Some(Sign::Zero) => None,
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational;
    use crate::radical::word_eval_f64;

    fn to_f64(v: &BigInt, prec: u64) -> f64 {
        use num_traits::ToPrimitive;
        v.to_f64().unwrap() / 2f64.powi(prec as i32)
    }

    #[test]
    fn encloses_float_composition() {
        for text in ["0", "1", "2", "3", "1023", "0331201", "2213300"] {
            let w: QuaternaryWord = text.parse().unwrap();
            for k in 1..20 {
                let xi = rational(k, 20);
                let iv = word_interval(&w, &xi, 80);
                let f = word_eval_f64(&w, k as f64 / 20.0);
                assert!(to_f64(&iv.lo, 80) <= f + 1e-12 && f - 1e-12 <= to_f64(&iv.hi, 80), "{text} {k}");
                assert!(iv.width_bits() < 60);
            }
        }
    }

    #[test]
    fn decides_simple_signs() {
        let w: QuaternaryWord = "2".parse().unwrap();
        assert_eq!(word_phi_interval_sign(&w, &rational(1, 4), 64), Some(Sign::Positive));
        let w: QuaternaryWord = "03".parse().unwrap();
        assert_eq!(word_phi_interval_sign(&w, &rational(1, 2), 64), Some(Sign::Negative));
        // identity after reduction: I_{1023} - x vanishes, intervals cannot decide
        let w: QuaternaryWord = "".parse().unwrap();
        assert_eq!(word_phi_interval_sign(&w, &rational(1, 3), 64), None);
    }
}
