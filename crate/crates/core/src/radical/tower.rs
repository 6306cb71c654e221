use num_traits::Zero;

use super::RadicalExpr;
use crate::error::{Error, Result};
use crate::poly::{Rational, Sign};

/// An element of `Q(sqrt(r_1))(sqrt(r_2))...` where each `r_k` is itself an
/// element of the previous field. At depth `d` a `Pair(a, b)` stands for
/// `a + b sqrt(r_d)` with `a`, `b` at depth `d - 1`; a `Rat` is a rational
/// embedded at any depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuadraticTowerValue {
    Rat(Rational),
    Pair(Box<QuadraticTowerValue>, Box<QuadraticTowerValue>),
}

use QuadraticTowerValue::{Pair, Rat};

fn pair(a: QuadraticTowerValue, b: QuadraticTowerValue) -> QuadraticTowerValue {
    match (&a, &b) {
        (Rat(_), Rat(z)) if z.is_zero() => a,
        _ => Pair(Box::new(a), Box::new(b)),
    }
}

impl QuadraticTowerValue {
    pub fn zero() -> Self {
        Rat(Rational::zero())
    }

    /// Embeds a value of depth `d` into depth `d + 1`.
    pub fn lift(self) -> Self {
        pair(self, Self::zero())
    }
}

/// The chain of adjoined square roots, shared by all values built on it.
#[derive(Debug, Clone, Default)]
pub struct Tower {
    radicands: Vec<QuadraticTowerValue>,
    radicand_signs: Vec<Sign>,
}

impl Tower {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn depth(&self) -> usize {
        self.radicands.len()
    }

    /// Adjoins `sqrt(r)` for `r` at the current depth and returns the new root.
    pub fn adjoin_sqrt(&mut self, r: QuadraticTowerValue) -> Result<QuadraticTowerValue> {
        let d = self.depth();
        let s = self.sign(&r, d);
        if s == Sign::Negative {
            return Err(Error::Domain(format!("square root of a negative number at depth {d}")));
        }
        self.radicands.push(r);
        self.radicand_signs.push(s);
        Ok(pair(QuadraticTowerValue::zero(), Rat(Rational::from_integer(1.into()))))
    }

    pub fn add(&self, x: &QuadraticTowerValue, y: &QuadraticTowerValue, d: usize) -> QuadraticTowerValue {
        match (x, y) {
            (Rat(p), Rat(q)) => Rat(p + q),
            (Rat(_), Pair(a, b)) | (Pair(a, b), Rat(_)) => {
                let r = if let Rat(_) = x { x } else { y };
                pair(self.add(r, a, d - 1), (**b).clone())
            }
            (Pair(a1, b1), Pair(a2, b2)) => pair(self.add(a1, a2, d - 1), self.add(b1, b2, d - 1)),
        }
    }

    pub fn neg(&self, x: &QuadraticTowerValue) -> QuadraticTowerValue {
        match x {
            Rat(p) => Rat(-p),
            Pair(a, b) => Pair(Box::new(self.neg(a)), Box::new(self.neg(b))),
        }
    }

    pub fn sub(&self, x: &QuadraticTowerValue, y: &QuadraticTowerValue, d: usize) -> QuadraticTowerValue {
        self.add(x, &self.neg(y), d)
    }

    pub fn mul(&self, x: &QuadraticTowerValue, y: &QuadraticTowerValue, d: usize) -> QuadraticTowerValue {
        match (x, y) {
            (Rat(p), Rat(q)) => Rat(p * q),
            (Rat(p), v) | (v, Rat(p)) => self.scale(v, p),
            (Pair(a1, b1), Pair(a2, b2)) => {
                let e = d - 1;
                let aa = self.mul(a1, a2, e);
                let bb = self.mul(b1, b2, e);
                let cross = self.mul(&self.add(a1, b1, e), &self.add(a2, b2, e), e);
                let mixed = self.sub(&self.sub(&cross, &aa, e), &bb, e);
                let rational_part = self.add(&aa, &self.mul(&bb, &self.radicands[e], e), e);
                pair(rational_part, mixed)
            }
        }
    }

    fn scale(&self, v: &QuadraticTowerValue, p: &Rational) -> QuadraticTowerValue {
        if p.is_zero() {
            return QuadraticTowerValue::zero();
        }
        match v {
            Rat(q) => Rat(q * p),
            Pair(a, b) => Pair(Box::new(self.scale(a, p)), Box::new(self.scale(b, p))),
        }
    }

    /// Exact sign of a value at depth `d`.
    ///
    /// For `a + b sqrt(r)` with `r > 0`: equal signs of `a` and `b` decide
    /// directly; otherwise the sign follows `a` when `a^2 > b^2 r` and `b`
    /// when `a^2 < b^2 r`.
    pub fn sign(&self, x: &QuadraticTowerValue, d: usize) -> Sign {
        match x {
            Rat(p) => Sign::of_rational(p),
            Pair(a, b) => {
                let e = d - 1;
                let sa = self.sign(a, e);
                if self.radicand_signs[e] == Sign::Zero {
                    return sa;
                }
                let sb = self.sign(b, e);
                if sb == Sign::Zero || sa == sb {
                    return sa;
                }
                if sa == Sign::Zero {
                    return sb;
                }
                let a2 = self.mul(a, a, e);
                let b2r = self.mul(&self.mul(b, b, e), &self.radicands[e], e);
                sa * self.sign(&self.sub(&a2, &b2r, e), e)
            }
        }
    }

    /// Evaluates every level of `expr` at `xi`. Returns the tower and the top
    /// value, which lives at depth `expr.layers.len()`.
    pub fn evaluate(expr: &RadicalExpr, xi: &Rational) -> Result<(Tower, QuadraticTowerValue)> {
        let mut tower = Tower::new();
        let mut value = Rat(expr.base.eval(xi));
        for h in &expr.layers {
            let d = tower.depth();
            let radicand = value;
            tower.adjoin_sqrt(radicand.clone())?;
            let coeffs: Vec<Rational> = h.coeffs().iter().map(|c| c.eval(xi)).collect();
            // H(y) = E(y^2) + y O(y^2) with y^2 = radicand
            let horner = |start: usize| {
                let mut acc = QuadraticTowerValue::zero();
                let picked: Vec<&Rational> = coeffs.iter().skip(start).step_by(2).collect();
                for c in picked.into_iter().rev() {
                    acc = tower.add(&tower.mul(&acc, &radicand, d), &Rat(c.clone()), d);
                }
                acc
            };
            value = pair(horner(0), horner(1));
        }
        Ok((tower, value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational;

    fn r(n: i64, d: i64) -> QuadraticTowerValue {
        Rat(rational(n, d))
    }

    #[test]
    fn sqrt2_arithmetic_and_signs() {
        let mut t = Tower::new();
        let s = t.adjoin_sqrt(r(2, 1)).unwrap();
        // s^2 = 2
        assert_eq!(t.mul(&s, &s, 1), r(2, 1));
        // 3/2 - sqrt 2 > 0 and 7/5 - sqrt 2 < 0
        assert_eq!(t.sign(&t.sub(&r(3, 2), &s, 1), 1), Sign::Positive);
        assert_eq!(t.sign(&t.sub(&r(7, 5), &s, 1), 1), Sign::Negative);
        assert_eq!(t.sign(&t.sub(&s, &r(7, 5), 1), 1), Sign::Positive);
    }

    #[test]
    fn nested_roots() {
        // sqrt(2 - sqrt 2) ~ 0.765
        let mut t = Tower::new();
        let s = t.adjoin_sqrt(r(2, 1)).unwrap();
        let u = t.adjoin_sqrt(t.sub(&r(2, 1), &s, 1)).unwrap();
        assert_eq!(t.sign(&t.sub(&u, &r(3, 4), 2), 2), Sign::Positive);
        assert_eq!(t.sign(&t.sub(&u, &r(4, 5), 2), 2), Sign::Negative);
        let inner = t.sub(&r(2, 1), &s, 1).lift();
        assert_eq!(t.sign(&t.sub(&t.mul(&u, &u, 2), &inner, 2), 2), Sign::Zero);
    }

    #[test]
    fn zero_radicand() {
        let mut t = Tower::new();
        let s = t.adjoin_sqrt(r(0, 1)).unwrap();
        assert_eq!(t.sign(&t.add(&s, &r(-1, 3), 1), 1), Sign::Negative);
        assert_eq!(t.sign(&s, 1), Sign::Zero);
    }
}
