use num_traits::Zero;
use serde::Serialize;

use super::{gcd, is_squarefree_mod_p, IntPolynomial};
use crate::error::{Error, Result};

/// `P / (x^m (1 - x)^n)` together with the removed multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stripped {
    pub poly: IntPolynomial,
    pub zero_multiplicity: usize,
    pub one_multiplicity: usize,
}

/// Divides out the roots at 0 and 1. Both `x` and `1 - x` are nonnegative on
/// `[0, 1]`, so the sign on `(0, 1)` is unchanged.
pub fn strip_boundary(p: &IntPolynomial) -> Result<Stripped> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let zero_multiplicity = p.trailing_zeros();
    let mut poly = p.shift_down(zero_multiplicity);
    let one_minus_x = IntPolynomial::from_i64s(&[1, -1]);
    let mut one_multiplicity = 0;
    while poly.coeffs().iter().sum::<num_bigint::BigInt>().is_zero() {
        poly = poly.div_exact(&one_minus_x)?;
        one_multiplicity += 1;
    }
    Ok(Stripped { poly, zero_multiplicity, one_multiplicity })
}

/// Removes perfect-square factors: divides by `(g / gcd(g, g'))^2` with
/// `g = gcd(P, P')` until no repeated factor remains. Factors of odd
/// multiplicity survive once and factors of even multiplicity vanish, so the
/// sign of `P` is preserved wherever `P` is nonzero. The result is primitive.
pub fn squarefree(p: &IntPolynomial) -> Result<IntPolynomial> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut cur = p.primitive_part();
    loop {
        if is_squarefree_mod_p(&cur) == Some(true) {
            break;
        }
        let g = gcd(&cur, &cur.derivative()).primitive_part();
        if g.is_constant() {
            break;
        }
        let h = g.div_exact(&gcd(&g, &g.derivative()).primitive_part())?.primitive_part();
        cur = cur.div_exact(&h.square())?;
    }
    Ok(cur)
}

/// `P / gcd(P, P')`: one copy of every distinct irreducible factor.
pub fn distinct_root_part(p: &IntPolynomial) -> Result<IntPolynomial> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if is_squarefree_mod_p(p) == Some(true) {
        return Ok(p.primitive_part());
    }
    let g = gcd(p, &p.derivative()).primitive_part();
    Ok(p.div_exact(&g)?.primitive_part())
}
