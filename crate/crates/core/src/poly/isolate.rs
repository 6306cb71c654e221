use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{distinct_root_part, IntPolynomial, Rational, Sign};
use crate::error::{Error, Result};
use crate::serde_util::rational_str;

/// Closed interval `[lo, hi]` holding exactly one real root. `lo == hi` marks
/// an exact rational root; otherwise neither endpoint is a root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolatingInterval {
    #[serde(with = "rational_str")]
    pub lo: Rational,
    #[serde(with = "rational_str")]
    pub hi: Rational,
}

impl IsolatingInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }
}

/// Dyadic subinterval `[c / 2^k, (c + 1) / 2^k]` of `[0, 1]`.
#[derive(Debug, Clone)]
struct Dyadic {
    c: BigInt,
    k: u64,
}

impl Dyadic {
    fn lo(&self) -> Rational {
        Rational::new(self.c.clone(), BigInt::one() << self.k)
    }

    fn hi(&self) -> Rational {
        Rational::new(&self.c + 1, BigInt::one() << self.k)
    }

    fn mid(&self) -> Rational {
        Rational::new(&self.c * 2 + 1, BigInt::one() << (self.k + 1))
    }

    fn children(&self) -> (Dyadic, Dyadic) {
        let c: BigInt = &self.c * 2;
        (Dyadic { c: c.clone(), k: self.k + 1 }, Dyadic { c: c + 1, k: self.k + 1 })
    }
}

/// Upper bound on the number of roots of `q` in `(0, 1)` by Descartes' rule
/// applied to `(1 + t)^n q(1 / (1 + t))`.
fn descartes_bound(q: &IntPolynomial) -> usize {
    q.reversed().taylor_shift_one().sign_variations()
}

fn sum_of_coeffs(q: &IntPolynomial) -> BigInt {
    q.coeffs().iter().sum()
}

/// Isolates the roots of a square-free `q` on `[0, 1]` with bisection.
/// Returns exact dyadic roots and open dyadic intervals with one root each.
fn vca_unit(q: IntPolynomial) -> (Vec<Rational>, Vec<Dyadic>) {
    let mut exact = Vec::new();
    let mut open = Vec::new();
    let mut q = q;
    let root = Dyadic { c: BigInt::zero(), k: 0 };
    if q.coeff(0).is_zero() {
        exact.push(Rational::zero());
        q = q.shift_down(1);
    }
    if sum_of_coeffs(&q).is_zero() {
        exact.push(Rational::one());
        q = q.div_exact(&IntPolynomial::from_i64s(&[-1, 1])).expect("1 is a root");
    }
    let mut stack = vec![(q, root)];
    while let Some((q, iv)) = stack.pop() {
        if q.is_constant() {
            continue;
        }
        match descartes_bound(&q) {
            0 => {}
            1 => open.push(iv),
            _ => {
                let mut left = q.halve_variable().primitive_part();
                let mut right = left.taylor_shift_one();
                let (li, ri) = iv.children();
                if sum_of_coeffs(&left).is_zero() {
                    exact.push(iv.mid());
                    left = left.div_exact(&IntPolynomial::from_i64s(&[-1, 1])).expect("midpoint is a root");
                    right = right.shift_down(1);
                }
                stack.push((right, ri));
                stack.push((left, li));
            }
        }
    }
    (exact, open)
}

/// Shrinks an open interval with one simple root of `d` until neither
/// endpoint is a root of `full`. `d` is nonzero at both ends and changes sign.
fn shrink_off_roots(full: &IntPolynomial, d: &IntPolynomial, mut lo: Rational, mut hi: Rational) -> IsolatingInterval {
    let two = Rational::from_integer(BigInt::from(2));
    let s_lo = d.sign_at(&lo);
    while full.sign_at(&lo) == Sign::Zero || full.sign_at(&hi) == Sign::Zero {
        let m = (&lo + &hi) / &two;
        match d.sign_at(&m) {
            Sign::Zero => return IsolatingInterval { lo: m.clone(), hi: m },
            s if s == s_lo => lo = m,
            _ => hi = m,
        }
    }
    IsolatingInterval { lo, hi }
}

/// Isolating intervals for the distinct real roots of `p` in `[lo, hi]`,
/// sorted and pairwise disjoint.
pub fn isolate_roots(p: &IntPolynomial, lo: &Rational, hi: &Rational) -> Result<Vec<IsolatingInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo > hi {
        return Err(Error::Precondition(format!("empty interval [{lo}, {hi}]")));
    }
    let d = distinct_root_part(p)?;
    if lo == hi {
        return Ok(if d.sign_at(lo) == Sign::Zero {
            vec![IsolatingInterval { lo: lo.clone(), hi: hi.clone() }]
        } else {
            Vec::new()
        });
    }
    // t in [0, 1] maps to x = (a + b t) / den
    let den = lo.denom() * hi.denom();
    let a = lo.numer() * hi.denom();
    let b = hi.numer() * lo.denom() - &a;
    let unit = lo.is_zero() && hi.is_one();
    let q = if unit { d.clone() } else { d.affine_substitute(&a, &b, &den).primitive_part() };
    let to_x = |t: &Rational| -> Rational {
        if unit {
            t.clone()
        } else {
            (Rational::from_integer(a.clone()) + Rational::from_integer(b.clone()) * t)
                / Rational::from_integer(den.clone())
        }
    };

    let (exact, open) = vca_unit(q.clone());
    let mut deflated = q.clone();
    for r in &exact {
        deflated = deflated.div_exact(&IntPolynomial::linear_root(r)).expect("exact root divides");
    }
    let mut ts: Vec<IsolatingInterval> =
        exact.iter().map(|t| IsolatingInterval { lo: t.clone(), hi: t.clone() }).collect();
    for iv in open {
        ts.push(shrink_off_roots(&q, &deflated, iv.lo(), iv.hi()));
    }
    ts.sort_by(|u, v| u.lo.cmp(&v.lo));
    // neighbours from sibling dyadics may share an endpoint
    for i in 1..ts.len() {
        while ts[i - 1].hi >= ts[i].lo {
            if ts[i - 1].is_exact() {
                ts[i] = halve_toward_root(&deflated, &ts[i]);
            } else {
                ts[i - 1] = halve_toward_root(&deflated, &ts[i - 1]);
            }
        }
    }
    Ok(ts
        .into_iter()
        .map(|iv| IsolatingInterval { lo: to_x(&iv.lo), hi: to_x(&iv.hi) })
        .collect())
}

/// One bisection step keeping the half where `d` changes sign.
pub(crate) fn halve_toward_root(d: &IntPolynomial, iv: &IsolatingInterval) -> IsolatingInterval {
    let m = iv.midpoint();
    match d.sign_at(&m) {
        Sign::Zero => IsolatingInterval { lo: m.clone(), hi: m },
        s if s == d.sign_at(&iv.lo) => IsolatingInterval { lo: m, hi: iv.hi.clone() },
        _ => IsolatingInterval { lo: iv.lo.clone(), hi: m },
    }
}

/// Bisects an isolating interval of the square-free `d` until its width is at
/// most `width`. Exact intervals are returned unchanged.
pub fn refine(d: &IntPolynomial, iv: &IsolatingInterval, width: &Rational) -> IsolatingInterval {
    let mut iv = iv.clone();
    while !iv.is_exact() && &(&iv.hi - &iv.lo) > width {
        iv = halve_toward_root(d, &iv);
    }
    iv
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn unit() -> (Rational, Rational) {
        (rational(0, 1), rational(1, 1))
    }

    #[test]
    fn two_rational_roots() {
        let (lo, hi) = unit();
        let q = &p(&[-1, 3]) * &p(&[-2, 3]);
        let ivs = isolate_roots(&q, &lo, &hi).unwrap();
        assert_eq!(ivs.len(), 2);
        assert!(ivs[0].contains(&rational(1, 3)) && !ivs[0].contains(&rational(2, 3)));
        assert!(ivs[1].contains(&rational(2, 3)));
        assert!(ivs[0].hi < ivs[1].lo);
    }

    #[test]
    fn no_roots_in_unit() {
        let (lo, hi) = unit();
        assert!(isolate_roots(&p(&[-2, 0, 1]), &lo, &hi).unwrap().is_empty());
    }

    #[test]
    fn dyadic_and_boundary_roots() {
        let (lo, hi) = unit();
        // x (2x - 1)(4x - 1)(x - 1)(4x - 3)
        let q = &(&(&(&p(&[0, 1]) * &p(&[-1, 2])) * &p(&[-1, 4])) * &p(&[-1, 1])) * &p(&[-3, 4]);
        let ivs = isolate_roots(&q, &lo, &hi).unwrap();
        let exact: Vec<Rational> = ivs.iter().filter(|i| i.is_exact()).map(|i| i.lo.clone()).collect();
        assert_eq!(ivs.len(), 5);
        for r in [rational(0, 1), rational(1, 4), rational(1, 2), rational(3, 4), rational(1, 1)] {
            assert!(ivs.iter().any(|i| i.contains(&r)), "{r}");
        }
        assert!(exact.contains(&rational(1, 2)));
    }

    #[test]
    fn endpoints_avoid_roots() {
        let (lo, hi) = unit();
        // roots 1/2 (exact), 1/3 and 2/3; the open intervals must not end at 1/2
        let q = &(&p(&[-1, 2]) * &p(&[-1, 3])) * &p(&[-2, 3]);
        for iv in isolate_roots(&q, &lo, &hi).unwrap() {
            if !iv.is_exact() {
                assert_ne!(q.sign_at(&iv.lo), Sign::Zero);
                assert_ne!(q.sign_at(&iv.hi), Sign::Zero);
                assert_ne!(q.sign_at(&iv.lo), q.sign_at(&iv.hi));
            }
        }
    }

    #[test]
    fn sub_interval() {
        let q = &p(&[-1, 3]) * &p(&[-2, 3]);
        let ivs = isolate_roots(&q, &rational(1, 2), &rational(2, 1)).unwrap();
        assert_eq!(ivs.len(), 1);
        assert!(ivs[0].contains(&rational(2, 3)));
        let ivs = isolate_roots(&q, &rational(1, 3), &rational(1, 2)).unwrap();
        assert_eq!(ivs, vec![IsolatingInterval { lo: rational(1, 3), hi: rational(1, 3) }]);
    }

    #[test]
    fn demo_eliminant_roots_match_grid_scan() {
        // ((1 - x)^2 - 2)^2 - (3 - x^2)
        let f = p(&[-2, 4, 3, -4, 1]);
        let (lo, hi) = unit();
        let ivs = isolate_roots(&f, &lo, &hi).unwrap();
        let mut changes = 0;
        let mut prev = f.eval_f64(0.0).signum();
        for i in 1..=10_000 {
            let v = f.eval_f64(i as f64 / 10_000.0).signum();
            if v != prev && v != 0.0 {
                changes += 1;
            }
            prev = v;
        }
        assert_eq!(ivs.len(), changes);
        assert_eq!(ivs.len(), 1);
    }

    #[test]
    fn refine_narrows() {
        let q = p(&[-2, 0, 1]);
        let ivs = isolate_roots(&q, &rational(1, 1), &rational(2, 1)).unwrap();
        let r = refine(&q, &ivs[0], &rational(1, 1_000_000));
        assert!(&r.hi - &r.lo <= rational(1, 1_000_000));
        assert!(r.lo < rational(1_414_214, 1_000_000) && r.hi > rational(1_414_213, 1_000_000));
    }
}
