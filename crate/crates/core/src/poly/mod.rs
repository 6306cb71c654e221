//! Dense univariate polynomials over the integers, and the exact machinery
//! built on them: gcd, square-free reduction, root counting and isolation,
//! and the nonnegativity decision on `[0, 1]`.

mod decide;
mod gcd;
mod isolate;
mod mul;
mod squarefree;
mod sturm;

pub use decide::{decide_nonneg, gap_samples, Gap, NonnegProof};
#[allow(unused_imports)]
pub(crate) use decide::nudge_negative;
pub use gcd::{gcd, gcd_prs, is_squarefree_mod_p};
pub use isolate::{isolate_roots, refine, IsolatingInterval};
pub use squarefree::{distinct_root_part, squarefree, strip_boundary, Stripped};
pub use sturm::{count_roots, sturm_sequence};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign as BigSign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number; the denominator is kept positive and the fraction
/// reduced.
pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"a"` or `"a/b"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(v: &BigInt) -> Sign {
        match v.sign() {
            BigSign::Minus => Sign::Negative,
            BigSign::NoSign => Sign::Zero,
            BigSign::Plus => Sign::Positive,
        }
    }

    pub fn of_rational(v: &Rational) -> Sign {
        // denominators are positive
        Sign::of(v.numer())
    }

    pub fn from_ordering(o: std::cmp::Ordering) -> Sign {
        match o {
            std::cmp::Ordering::Less => Sign::Negative,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Positive,
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn from_i8(v: i8) -> Sign {
        Sign::from_ordering(v.cmp(&0))
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_i8(self.to_i8() * rhs.to_i8())
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        Sign::from_i8(-self.to_i8())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        })
    }
}

/// A polynomial with arbitrary-precision integer coefficients, lowest degree
/// first. The leading coefficient is nonzero unless the polynomial is zero,
/// in which case the coefficient vector is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c · x^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `num - den·x`, vanishing at `num/den`.
    pub fn linear_root(root: &Rational) -> Self {
        Self::new(vec![-root.numer().clone(), root.denom().clone()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Size of the largest coefficient in bits.
    pub fn max_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPolynomial { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn square(&self) -> Self {
        mul::multiply(&self.coeffs, &self.coeffs).into()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// `self(g(x))`
    pub fn compose(&self, g: &IntPolynomial) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn eval_bigint(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Numerator of `self(num/den)` after multiplying by `den^deg`; it has
    /// the same sign as the value because `den > 0`.
    pub fn eval_scaled(&self, num: &BigInt, den: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        acc
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let Some(d) = self.degree() else {
            return Rational::zero();
        };
        let scaled = self.eval_scaled(x.numer(), x.denom());
        Rational::new(scaled, x.denom().pow(d as u32))
    }

    pub fn sign_at(&self, x: &Rational) -> Sign {
        Sign::of(&self.eval_scaled(x.numer(), x.denom()))
    }

    /// Value at a float, computed exactly at the dyadic `x` and rounded once.
    /// Expanded capacity polynomials cancel too badly for float Horner.
    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        match Rational::from_float(x) {
            Some(q) => self.eval(&q).to_f64().unwrap_or(f64::NAN),
            None => f64::NAN,
        }
    }

    /// Positive gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides by the positive content, so the sign pattern is unchanged.
    pub fn primitive_part(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| c / &g).collect() }
    }

    /// Primitive part normalized to a positive leading coefficient.
    pub fn monic_primitive(&self) -> Self {
        let p = self.primitive_part();
        if p.leading().is_some_and(|c| c.is_negative()) {
            -p
        } else {
            p
        }
    }

    /// `self / x^k`, discarding the `k` lowest coefficients.
    pub fn shift_down(&self, k: usize) -> Self {
        IntPolynomial { coeffs: self.coeffs.iter().skip(k).cloned().collect() }
    }

    /// Number of vanishing low coefficients, i.e. the multiplicity of the root 0.
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Exact quotient `self / divisor`; fails unless `divisor` divides `self`
    /// over the integers.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Result<Self> {
        let (q, r) = self.div_rem_integral(divisor)?;
        if !r.is_zero() {
            return Err(Error::Precondition("polynomial division is not exact".into()));
        }
        Ok(q)
    }

    /// Long division that succeeds whenever every step divides exactly over
    /// the integers. Returns quotient and remainder.
    fn div_rem_integral(&self, divisor: &IntPolynomial) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lc = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lc);
            if !r.is_zero() {
                return Err(Error::Precondition("polynomial division is not exact".into()));
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[k + j] -= &q * dc;
                }
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Remainder of `self` modulo `divisor` after scaling `self` by a
    /// positive power of `|lc(divisor)|`; a positive multiple of the rational
    /// remainder.
    pub fn pseudo_rem(&self, divisor: &IntPolynomial) -> Self {
        let dd = divisor.degree().expect("pseudo-remainder by the zero polynomial");
        let lc = divisor.leading().unwrap();
        let lc_abs = lc.abs();
        let lc_sign = if lc.is_negative() { -BigInt::one() } else { BigInt::one() };
        let mut rem = self.coeffs.clone();
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let top = rem.last().unwrap().clone() * &lc_sign;
            for c in rem.iter_mut() {
                *c *= &lc_abs;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &top * dc;
            }
            debug_assert!(rem.last().unwrap().is_zero());
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        Self::new(rem)
    }

    /// `self(x + 1)`.
    pub fn taylor_shift_one(&self) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n.saturating_sub(1) {
            for j in (i..n - 1).rev() {
                let (lo, hi) = c.split_at_mut(j + 1);
                lo[j] += &hi[0];
            }
        }
        Self::new(c)
    }

    /// `x^n · self(1/x)` for `n = deg(self)`.
    pub fn reversed(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// `2^n · self(x/2)` for `n = deg(self)`.
    pub fn halve_variable(&self) -> Self {
        let n = self.coeffs.len().saturating_sub(1);
        IntPolynomial {
            coeffs: self.coeffs.iter().enumerate().map(|(i, c)| c << (n - i)).collect(),
        }
    }

    /// `den^n · self((a + b·t)/den)` as a polynomial in `t`.
    pub fn affine_substitute(&self, a: &BigInt, b: &BigInt, den: &BigInt) -> Self {
        let lin = IntPolynomial::new(vec![a.clone(), b.clone()]);
        let mut acc = Self::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(c * &den_pow);
            den_pow *= den;
        }
        acc
    }

    /// Number of sign changes in the coefficient sequence, zeros skipped.
    pub fn sign_variations(&self) -> usize {
        let mut last: Option<bool> = None;
        let mut count = 0;
        for c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if last.is_some_and(|l| l != neg) {
                count += 1;
            }
            last = Some(neg);
        }
        count
    }

    /// Human-readable form such as `x^2 - 2*x + 1`.
    pub fn to_pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{k}"),
            };
            if k == 0 || !mag.is_one() {
                out.push_str(&mag.to_string());
                if k > 0 {
                    out.push('*');
                }
            }
            out.push_str(&mono);
        }
        out
    }
}

impl From<Vec<BigInt>> for IntPolynomial {
    fn from(coeffs: Vec<BigInt>) -> Self {
        IntPolynomial::new(coeffs)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial[{self}]")
    }
}

/// Canonical form: coefficients lowest degree first, decimal, comma
/// separated. The zero polynomial prints as `0`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        s.split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {t:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(IntPolynomial::new)
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPolynomial::new(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        IntPolynomial::new(coeffs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        mul::multiply(&self.coeffs, &rhs.coeffs).into()
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -(self.clone())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&IntPolynomial::x() + &IntPolynomial::one(), p(&[1, 1]));
        assert_eq!(p(&[0, 0, 1]).derivative(), p(&[0, 2]));
        assert_eq!(p(&[0, 2, -2]).eval(&rational(1, 2)), rational(1, 2));
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
        assert_eq!(&p(&[1, 1]) - &p(&[1, 1]), IntPolynomial::zero());
    }

    #[test]
    fn canonical_text_round_trip() {
        let q = p(&[-2, 4, 3, -4, 1]);
        assert_eq!(q.to_string(), "-2,4,3,-4,1");
        assert_eq!("-2, 4,3,-4,1".parse::<IntPolynomial>().unwrap(), q);
        assert_eq!("0".parse::<IntPolynomial>().unwrap(), IntPolynomial::zero());
        assert_eq!("1,0,0".parse::<IntPolynomial>().unwrap(), IntPolynomial::one());
        assert!("1,,2".parse::<IntPolynomial>().is_err());
        assert!("".parse::<IntPolynomial>().is_err());
        assert_eq!(q.to_pretty(), "x^4 - 4*x^3 + 3*x^2 + 4*x - 2");
    }

    #[test]
    fn division_and_pseudo_remainder() {
        let a = p(&[-1, 0, 0, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(a.div_exact(&b).unwrap(), p(&[1, 1, 1]));
        assert!(p(&[1, 0, 1]).div_exact(&b).is_err());
        // prem(x^2 + 1, 2x - 1) = 4(x^2+1) mod (2x-1) = 5
        assert_eq!(p(&[1, 0, 1]).pseudo_rem(&p(&[-1, 2])), p(&[5]));
        // negative leading coefficient keeps a positive multiple
        assert_eq!(p(&[1, 0, 1]).pseudo_rem(&p(&[1, -2])), p(&[5]));
    }

    #[test]
    fn shifts_and_substitutions() {
        assert_eq!(p(&[0, 0, 1]).taylor_shift_one(), p(&[1, 2, 1]));
        assert_eq!(p(&[1, 2, 3]).reversed(), p(&[3, 2, 1]));
        assert_eq!(p(&[1, 1, 1]).halve_variable(), p(&[4, 2, 1]));
        // 4 * q((1 + 2t)/2) for q = x^2
        assert_eq!(
            p(&[0, 0, 1]).affine_substitute(&BigInt::from(1), &BigInt::from(2), &BigInt::from(2)),
            p(&[1, 4, 4])
        );
        assert_eq!(p(&[0, 1]).compose(&p(&[1, 1])), p(&[1, 1]));
        assert_eq!(p(&[1, -1]).pow(3), p(&[1, -3, 3, -1]));
    }

    #[test]
    fn signs_and_rationals() {
        assert_eq!(p(&[-1, 2]).sign_at(&rational(3, 4)), Sign::Positive);
        assert_eq!(p(&[-1, 2]).sign_at(&rational(1, 2)), Sign::Zero);
        assert_eq!(parse_rational("6/-4").unwrap(), rational(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert_eq!(p(&[1, -2, 0, 5]).sign_variations(), 2);
        assert_eq!(Sign::Negative * Sign::Negative, Sign::Positive);
    }
}
