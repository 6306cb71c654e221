//! Coefficient-vector multiplication.
//!
//! Large products go through Kronecker substitution: both operands are packed
//! into single big integers with fixed-width slots, multiplied once by GMP,
//! and unpacked with balanced digits.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;
use rug::integer::Order;
use rug::Integer;

/// Below this many terms in the shorter operand, schoolbook wins.
const KRONECKER_MIN_TERMS: usize = 12;

pub(crate) fn multiply(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len().min(b.len()) < KRONECKER_MIN_TERMS {
        schoolbook(a, b)
    } else {
        kronecker(a, b)
    }
}

fn schoolbook(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn bits_of(c: &[BigInt]) -> u64 {
    c.iter().map(|v| v.bits()).max().unwrap_or(0)
}

fn kronecker(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let terms = a.len().min(b.len()) as u64;
    // every product coefficient is below 2^(slot - 1) in magnitude
    let slot = bits_of(a) + bits_of(b) + (64 - terms.leading_zeros() as u64) + 2;
    let pa = pack(a, slot);
    let product = if std::ptr::eq(a, b) {
        pa.square()
    } else {
        pa * pack(b, slot)
    };
    let negative = product < 0;
    unpack(negative, &product.as_abs().to_digits::<u32>(Order::Lsf), slot, a.len() + b.len() - 1)
}

fn write_bits(buf: &mut [u32], offset: u64, digits: &[u32]) {
    let word = (offset / 32) as usize;
    let shift = (offset % 32) as u32;
    for (j, &d) in digits.iter().enumerate() {
        if shift == 0 {
            buf[word + j] |= d;
        } else {
            buf[word + j] |= d << shift;
            buf[word + j + 1] |= d >> (32 - shift);
        }
    }
}

fn pack(c: &[BigInt], slot: u64) -> Integer {
    let words = ((c.len() as u64 * slot) / 32 + 2) as usize;
    let mut pos = vec![0u32; words];
    let mut neg = vec![0u32; words];
    let mut any_neg = false;
    for (i, v) in c.iter().enumerate() {
        let target = match v.sign() {
            Sign::NoSign => continue,
            Sign::Plus => &mut pos,
            Sign::Minus => {
                any_neg = true;
                &mut neg
            }
        };
        write_bits(target, i as u64 * slot, &v.magnitude().to_u32_digits());
    }
    let p = Integer::from_digits(&pos, Order::Lsf);
    if any_neg {
        p - Integer::from_digits(&neg, Order::Lsf)
    } else {
        p
    }
}

fn read_bits(digits: &[u32], offset: u64, width: u64) -> BigUint {
    let start = (offset / 32) as usize;
    if start >= digits.len() {
        return BigUint::zero();
    }
    let shift = (offset % 32) as u32;
    let nwords = (width / 32 + 2) as usize;
    let end = (start + nwords).min(digits.len());
    let mut out: Vec<u32> = Vec::with_capacity(nwords);
    for i in start..end {
        let lo = digits[i] >> shift;
        let hi = if shift > 0 && i + 1 < digits.len() {
            digits[i + 1] << (32 - shift)
        } else {
            0
        };
        out.push(lo | hi);
    }
    // mask to width bits
    let full = (width / 32) as usize;
    let rem = (width % 32) as u32;
    if out.len() > full {
        out.truncate(full + usize::from(rem > 0));
        if rem > 0 {
            let last = out.len() - 1;
            out[last] &= (1u32 << rem) - 1;
        }
    }
    BigUint::new(out)
}

fn unpack(negative: bool, digits: &[u32], slot: u64, len: usize) -> Vec<BigInt> {
    let half = BigUint::from(1u32) << (slot - 1);
    let full = BigUint::from(1u32) << slot;
    let mut carry = false;
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        let mut d = read_bits(digits, i as u64 * slot, slot);
        if carry {
            d += 1u32;
        }
        let c = if d >= half {
            carry = true;
            -(BigInt::from(&full - &d))
        } else {
            carry = false;
            BigInt::from(d)
        };
        out.push(if negative { -c } else { c });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn kronecker_matches_schoolbook_on_mixed_signs() {
        let a: Vec<BigInt> = (0..40).map(|i| BigInt::from((i * 7919 % 201) as i64 - 100) << (i % 90)).collect();
        let b: Vec<BigInt> = (0..33).map(|i| BigInt::from(-((i * 104729 % 97) as i64) + 48) << (i * 3 % 70)).collect();
        assert_eq!(kronecker(&a, &b), schoolbook(&a, &b));
        assert_eq!(kronecker(&a, &a), schoolbook(&a, &a));
    }

    proptest! {
        #[test]
        fn kronecker_agrees(a in prop::collection::vec(-1_000_000_000i64..1_000_000_000, 1..30),
                            b in prop::collection::vec(-1_000_000_000i64..1_000_000_000, 1..30)) {
            let (a, b) = (big(&a), big(&b));
            prop_assert_eq!(kronecker(&a, &b), schoolbook(&a, &b));
        }
    }
}
