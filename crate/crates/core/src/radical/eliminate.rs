use super::{BiPoly, RadicalExpr};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// The value of level `k` as a polynomial in `x` and `y_k`.
fn level(expr: &RadicalExpr, k: usize) -> BiPoly {
    if k == 0 {
        BiPoly::from_x(expr.base.clone())
    } else {
        expr.layers[k - 1].clone()
    }
}

/// One conjugate step: for `F(x, y)` with `y^2 = h`, returns
/// `F(x, y) F(x, -y) = E(x, h)^2 - h O(x, h)^2`.
fn conjugate_step(f: &BiPoly, h: &BiPoly) -> BiPoly {
    let (e, o) = f.split_even_odd();
    let e_h = e.substitute_y(h);
    let o_h = o.substitute_y(h);
    (&e_h.square() - &(h * &o_h.square())).primitive_part()
}

/// Upper bound on the degree of `eliminate(expr)`, from the degrees of the
/// layers alone: a step on `(a, b)` over a level of degrees `(a', b')`
/// yields at most `(2a + b a', b b')`.
pub fn degree_bound(expr: &RadicalExpr) -> u128 {
    let top = expr.top();
    let (mut dx, mut dy) = (top.deg_x() as u128, top.deg_y() as u128);
    for k in (0..expr.layers.len()).rev() {
        let h = level(expr, k);
        let (a, b) = (h.deg_x() as u128, h.deg_y() as u128);
        dx = 2 * dx + dy * a;
        dy *= b;
    }
    dx
}

/// Removes the roots from the outermost layer inward, returning the
/// intermediate polynomials: entry `k` is a polynomial in `x` and `y_k`,
/// the last entry is free of roots.
pub fn eliminate_steps(expr: &RadicalExpr) -> Result<Vec<BiPoly>> {
    let mut f = expr.top();
    if f.is_zero() {
        return Err(Error::IdenticallyZero);
    }
    let mut steps = vec![f.clone()];
    for k in (0..expr.layers.len()).rev() {
        f = conjugate_step(&f, &level(expr, k));
        if f.is_zero() {
            return Err(Error::IdenticallyZero);
        }
        steps.push(f.clone());
    }
    Ok(steps)
}

/// A nonzero `f` in `Z[x]` vanishing wherever the expression does, obtained
/// by multiplying conjugates layer by layer.
pub fn eliminate(expr: &RadicalExpr) -> Result<IntPolynomial> {
    let steps = eliminate_steps(expr)?;
    Ok(steps.last().unwrap().as_univariate().expect("all roots eliminated"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radical::capacity_expr;
    use crate::words::QuaternaryWord;

    #[test]
    fn demo_elimination() {
        let f = eliminate(&RadicalExpr::demo()).unwrap();
        // ((1 - x)^2 - 2)^2 - (3 - x^2)
        let one_minus_x = IntPolynomial::from_i64s(&[1, -1]);
        let expected = &(&one_minus_x.square() - &IntPolynomial::from_i64s(&[2])).square()
            - &IntPolynomial::from_i64s(&[3, 0, -1]);
        assert_eq!(f, expected);
        assert_eq!(f, IntPolynomial::from_i64s(&[-2, 4, 3, -4, 1]));
        assert!(degree_bound(&RadicalExpr::demo()) >= 4);
    }

    #[test]
    fn radical_free_is_unchanged() {
        let p = IntPolynomial::from_i64s(&[1, 2, 3]);
        assert_eq!(eliminate(&RadicalExpr::polynomial(p.clone())).unwrap(), p);
    }

    #[test]
    fn sqrt_minus_x() {
        let e = capacity_expr(&"2".parse::<QuaternaryWord>().unwrap()).minus_x();
        // (sqrt x - x)(-sqrt x - x) = x^2 - x
        assert_eq!(eliminate(&e).unwrap(), IntPolynomial::from_i64s(&[0, -1, 1]));
    }

    #[test]
    fn identically_zero() {
        let e = capacity_expr(&QuaternaryWord::epsilon()).minus_x();
        assert_eq!(eliminate(&e), Err(Error::IdenticallyZero));
    }
}
