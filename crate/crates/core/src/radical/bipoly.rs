use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::poly::{IntPolynomial, Rational};

/// `H(x, y) = sum_j c_j(x) y^j` with integer coefficients, stored by powers
/// of `y`. No trailing zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    coeffs: Vec<IntPolynomial>,
}

impl BiPoly {
    pub fn new(mut coeffs: Vec<IntPolynomial>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    pub fn from_x(p: IntPolynomial) -> Self {
        Self::new(vec![p])
    }

    pub fn constant(c: i64) -> Self {
        Self::from_x(IntPolynomial::from_i64s(&[c]))
    }

    pub fn x() -> Self {
        Self::from_x(IntPolynomial::x())
    }

    pub fn y() -> Self {
        Self::new(vec![IntPolynomial::zero(), IntPolynomial::one()])
    }

    pub fn coeffs(&self) -> &[IntPolynomial] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg_y(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn deg_x(&self) -> usize {
        self.coeffs.iter().filter_map(|c| c.degree()).max().unwrap_or(0)
    }

    /// The polynomial in `x` alone, if `y` does not occur.
    pub fn as_univariate(&self) -> Option<IntPolynomial> {
        match self.coeffs.len() {
            0 => Some(IntPolynomial::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn primitive_part(&self) -> Self {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(&c.content());
            if g.is_one() {
                return self.clone();
            }
        }
        if g.is_zero() {
            return self.clone();
        }
        Self::new(
            self.coeffs
                .iter()
                .map(|c| IntPolynomial::new(c.coeffs().iter().map(|v| v / &g).collect()))
                .collect(),
        )
    }

    /// Splits `H(x, y) = E(x, y^2) + y O(x, y^2)`; both parts are returned as
    /// polynomials in `Y = y^2`.
    pub fn split_even_odd(&self) -> (BiPoly, BiPoly) {
        let even = self.coeffs.iter().step_by(2).cloned().collect();
        let odd = self.coeffs.iter().skip(1).step_by(2).cloned().collect();
        (BiPoly::new(even), BiPoly::new(odd))
    }

    /// `self(x, h(x, y))`.
    pub fn substitute_y(&self, h: &BiPoly) -> BiPoly {
        if h.coeffs.len() == 2 {
            return self.substitute_linear(&h.coeffs[0], &h.coeffs[1]);
        }
        let mut acc = BiPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * h) + &BiPoly::from_x(c.clone());
        }
        acc
    }

    /// `self(x, a + b y)` by Horner's rule on coefficient rows, which avoids
    /// full bivariate products for the linear layers words produce.
    fn substitute_linear(&self, a: &IntPolynomial, b: &IntPolynomial) -> BiPoly {
        if a.is_zero() && *b == IntPolynomial::from_i64s(&[1]) {
            return self.clone();
        }
        let mut acc: Vec<IntPolynomial> = Vec::with_capacity(self.coeffs.len());
        for c in self.coeffs.iter().rev() {
            let mut next = Vec::with_capacity(acc.len() + 1);
            next.push(&(acc.first().map(|r| r * a).unwrap_or_else(IntPolynomial::zero)) + c);
            for j in 1..=acc.len() {
                let mut row = &acc[j - 1] * b;
                if let Some(r) = acc.get(j) {
                    row = &row + &(r * a);
                }
                next.push(row);
            }
            acc = next;
        }
        BiPoly::new(acc)
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * y + c.eval(x))
    }

    /// Value at floats, computed exactly at the dyadic inputs and rounded once.
    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        match (Rational::from_float(x), Rational::from_float(y)) {
            (Some(xq), Some(yq)) => self.eval(&xq, &yq).to_f64().unwrap_or(f64::NAN),
            _ => f64::NAN,
        }
    }

    /// Terms `(i, j, c)` of `c x^i y^j`, ascending in `j` and then `i`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.coeffs.iter().enumerate().flat_map(|(j, p)| {
            p.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (i, j, c))
        })
    }

    /// Ascending ASCII rendering with `y` spelled as `y_name`.
    pub fn render(&self, y_name: &str) -> String {
        let mut out = String::new();
        for (i, j, c) in self.terms() {
            let negative = c.sign() == num_bigint::Sign::Minus;
            let mag = c.magnitude();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            if !mag.is_one() || (i == 0 && j == 0) {
                factors.push(mag.to_string());
            }
            match i {
                0 => {}
                1 => factors.push("x".into()),
                _ => factors.push(format!("x^{i}")),
            }
            match j {
                0 => {}
                1 => factors.push(y_name.into()),
                _ => factors.push(format!("{y_name}^{j}")),
            }
            out.push_str(&factors.join("*"));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Multiplies through one univariate product: `y` is replaced by
/// `x^stride` with `stride` above every product's `x`-degree, so the terms
/// cannot collide.
impl Mul for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        if self.coeffs.len() == 1 || rhs.coeffs.len() == 1 {
            let (single, other) = if self.coeffs.len() == 1 { (self, rhs) } else { (rhs, self) };
            let s = &single.coeffs[0];
            return BiPoly::new(other.coeffs.iter().map(|c| c * s).collect());
        }
        let short = |p: &BiPoly| p.coeffs.len() <= 4 && p.deg_x() == 0;
        if short(self) || short(rhs) {
            let (small, other) = if short(self) { (self, rhs) } else { (rhs, self) };
            let mut rows = vec![IntPolynomial::zero(); small.coeffs.len() + other.coeffs.len() - 1];
            for (i, s) in small.coeffs.iter().enumerate() {
                if s.is_zero() {
                    continue;
                }
                for (j, c) in other.coeffs.iter().enumerate() {
                    rows[i + j] = &rows[i + j] + &(c * s);
                }
            }
            return BiPoly::new(rows);
        }
        let stride = self.deg_x() + rhs.deg_x() + 1;
        let flat = |p: &BiPoly| {
            let mut v = vec![BigInt::zero(); p.coeffs.len() * stride];
            for (j, c) in p.coeffs.iter().enumerate() {
                for (i, a) in c.coeffs().iter().enumerate() {
                    v[j * stride + i] = a.clone();
                }
            }
            IntPolynomial::new(v)
        };
        let product = &flat(self) * &flat(rhs);
        let coeffs = product
            .into_coeffs()
            .chunks(stride)
            .map(|chunk| IntPolynomial::new(chunk.to_vec()))
            .collect();
        BiPoly::new(coeffs)
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = IntPolynomial::zero();
        BiPoly::new(
            (0..n)
                .map(|j| self.coeffs.get(j).unwrap_or(&zero) + rhs.coeffs.get(j).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        BiPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}
