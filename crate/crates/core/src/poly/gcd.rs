use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::IntPolynomial;

/// Primes just below 2^61, 2^62 and 2^63.
const PRIMES: [u64; 3] = [2_305_843_009_213_693_951, 4_611_686_018_427_387_847, 9_223_372_036_854_775_783];

/// Greatest common divisor over `Z[x]`, normalized to a positive leading
/// coefficient. `gcd(0, 0) = 0`.
///
/// Images modulo word-sized primes are combined by Chinese remaindering
/// until the candidate stops changing and divides both inputs. Primes whose
/// image has too large a degree are unlucky and discarded.
pub fn gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    if a.is_zero() {
        return b.monic_primitive().scale(&b.content());
    }
    if b.is_zero() {
        return a.monic_primitive().scale(&a.content());
    }
    let content = a.content().gcd(&b.content());
    if a.is_constant() || b.is_constant() || coprime_mod_p(a, b) {
        return IntPolynomial::constant(content);
    }
    modular_gcd(&a.primitive_part(), &b.primitive_part()).scale(&content)
}

/// Primitive remainder sequence; kept as an independent check on the
/// modular algorithm.
pub fn gcd_prs(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    if a.is_zero() || b.is_zero() {
        return gcd(a, b);
    }
    let content = a.content().gcd(&b.content());
    let (mut r0, mut r1) = if a.degree() >= b.degree() {
        (a.primitive_part(), b.primitive_part())
    } else {
        (b.primitive_part(), a.primitive_part())
    };
    loop {
        if r1.is_constant() {
            return IntPolynomial::constant(content);
        }
        let r = r0.pseudo_rem(&r1);
        if r.is_zero() {
            return r1.monic_primitive().scale(&content);
        }
        r0 = r1;
        r1 = r.primitive_part();
    }
}

fn modular_gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let lca = a.leading().unwrap();
    let lcb = b.leading().unwrap();
    let lc_g = lca.gcd(lcb);
    let mut best_deg = usize::MAX;
    let mut acc: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut previous: Option<IntPolynomial> = None;
    for prime in primes_below(1 << 62) {
        let m = BigInt::from(prime);
        if (lca % &m).is_zero() || (lcb % &m).is_zero() {
            continue;
        }
        let g = gcd_mod(reduce(a, prime, &m), reduce(b, prime, &m), prime);
        let deg = g.len() - 1;
        if deg == 0 {
            return IntPolynomial::one();
        }
        if deg > best_deg {
            continue;
        }
        let scale = (&lc_g % &m).mod_floor(&m).to_u64().unwrap();
        let image: Vec<u64> = g.iter().map(|&c| mulmod(c, scale, prime)).collect();
        if deg < best_deg {
            best_deg = deg;
            acc = image.iter().map(|&c| BigInt::from(c)).collect();
            modulus = m;
            previous = None;
            continue;
        }
        let inv = powmod((&modulus % &m).to_u64().unwrap(), prime - 2, prime);
        for (c, &r) in acc.iter_mut().zip(&image) {
            let cur = c.mod_floor(&m).to_u64().unwrap();
            let t = mulmod((r + prime - cur) % prime, inv, prime);
            *c += &modulus * t;
        }
        modulus *= &m;
        let half = &modulus >> 1;
        let symmetric: Vec<BigInt> = acc.iter().map(|c| if c > &half { c - &modulus } else { c.clone() }).collect();
        let candidate = IntPolynomial::new(symmetric).monic_primitive();
        if previous.as_ref() == Some(&candidate) && a.div_exact(&candidate).is_ok() && b.div_exact(&candidate).is_ok() {
            return candidate;
        }
        previous = Some(candidate);
    }
    unreachable!("prime supply exhausted")
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn primes_below(limit: u64) -> impl Iterator<Item = u64> {
    (1..limit / 2).map(move |k| limit - 2 * k + 1).filter(|&n| is_prime(n))
}

/// `Some(true)` when `p` is certified square-free by a modular computation;
/// `None` when no prime gave a conclusive answer.
pub fn is_squarefree_mod_p(p: &IntPolynomial) -> Option<bool> {
    if p.degree().unwrap_or(0) < 2 {
        return Some(true);
    }
    coprime_mod_p(p, &p.derivative()).then_some(true)
}

fn coprime_mod_p(a: &IntPolynomial, b: &IntPolynomial) -> bool {
    let lca = a.leading().unwrap();
    let lcb = b.leading().unwrap();
    for &prime in &PRIMES {
        let m = BigInt::from(prime);
        if (lca % &m).is_zero() || (lcb % &m).is_zero() {
            continue;
        }
        let pa = reduce(a, prime, &m);
        let pb = reduce(b, prime, &m);
        return gcd_mod(pa, pb, prime).len() == 1;
    }
    false
}

fn reduce(a: &IntPolynomial, prime: u64, m: &BigInt) -> Vec<u64> {
    let mut out: Vec<u64> = a
        .coeffs()
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            debug_assert!(!r.is_negative());
            r.to_u64().unwrap() % prime
        })
        .collect();
    trim(&mut out);
    out
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Euclid over `F_p`; returns a monic gcd (`[1]` for coprime inputs).
fn gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let inv = powmod(*b.last().unwrap(), p - 2, p);
        let db = b.len() - 1;
        while a.len() >= b.len() {
            let k = a.len() - 1 - db;
            let f = mulmod(*a.last().unwrap(), inv, p);
            for (j, &bc) in b.iter().enumerate() {
                let t = mulmod(f, bc, p);
                a[k + j] = (a[k + j] + p - t) % p;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    if let Some(&lead) = a.last() {
        let inv = powmod(lead, p - 2, p);
        for c in a.iter_mut() {
            *c = mulmod(*c, inv, p);
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn gcd_of_products() {
        // (x-1)(x+2) and (x-1)(3x+1)
        let a = &p(&[-1, 1]) * &p(&[2, 1]);
        let b = &p(&[-1, 1]) * &p(&[1, 3]);
        assert_eq!(gcd(&a, &b), p(&[-1, 1]));
        assert_eq!(gcd(&a.scale(&BigInt::from(6)), &b.scale(&BigInt::from(4))), p(&[-2, 2]));
        assert_eq!(gcd(&p(&[1, 1]), &p(&[2, 1])), p(&[1]));
        assert_eq!(gcd(&IntPolynomial::zero(), &p(&[-4, -2])), p(&[4, 2]));
    }

    #[test]
    fn prs_path_handles_repeated_factors() {
        let f = &p(&[1, 0, 1]) * &p(&[-1, 2]);
        let a = &f * &f;
        assert_eq!(gcd(&a, &a.derivative()), f.monic_primitive());
    }

    #[test]
    fn modular_agrees_with_prs() {
        let f = &p(&[3, -7, 0, 5]) * &p(&[-12, 1, 9]);
        for (u, v) in [(p(&[1, 1, -4]), p(&[2, 0, 0, 1])), (p(&[99, -1]), p(&[5, 5, 5])), (f.clone(), p(&[1]))] {
            let a = &(&f * &u) * &f;
            let b = &(&f * &v).scale(&BigInt::from(6)) * &u;
            assert_eq!(gcd(&a, &b), gcd_prs(&a, &b));
        }
        assert!(is_prime((1 << 61) - 1) && !is_prime((1 << 61) + 1));
    }

    #[test]
    fn modular_squarefree_check() {
        assert_eq!(is_squarefree_mod_p(&p(&[-2, 0, 1])), Some(true));
        assert_eq!(is_squarefree_mod_p(&p(&[1, 2, 1])), None);
    }
}
