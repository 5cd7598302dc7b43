//! Exact arithmetic in prime fields GF(p).

use crate::error::{Error, Result};

/// A prime field GF(p), p prime. Elements are canonical residues in `[0, p)`
/// stored as `u8`; the modulus is capped at 251 (the largest prime below 256).
///
/// Copyable value type; all arithmetic is exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u16,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// Builds the field descriptor, verifying primality by trial division.
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) || p > 251 {
            return Err(Error::CompositeModulus(p));
        }
        Ok(PrimeField { p: p as u16 })
    }

    #[inline]
    pub fn modulus(&self) -> u8 {
        self.p as u8
    }

    #[inline]
    pub fn is_binary(&self) -> bool {
        self.p == 2
    }

    #[inline]
    pub fn reduce(&self, x: i64) -> u8 {
        x.rem_euclid(self.p as i64) as u8
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        let s = a as u16 + b as u16;
        (if s >= self.p { s - self.p } else { s }) as u8
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        let s = a as u16 + self.p - b as u16;
        (if s >= self.p { s - self.p } else { s }) as u8
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            (self.p - a as u16) as u8
        }
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        ((a as u32 * b as u32) % self.p as u32) as u8
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(&self, a: u8) -> Result<u8> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        // Extended Euclid on (a, p): find s with s*a = 1 (mod p).
        let (mut r0, mut r1) = (a as i64, self.p as i64);
        let (mut s0, mut s1) = (1i64, 0i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.reduce(s0))
    }

    pub fn pow(&self, a: u8, mut e: u64) -> u8 {
        let mut base = a;
        let mut acc = 1u8;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// All field elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.p as u8
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_field() {
        let f = PrimeField::new(2).unwrap();
        assert_eq!(f.modulus(), 2);
        assert_eq!(f.add(1, 1), 0);
        assert_eq!(f.inv(1).unwrap(), 1);
    }

    #[test]
    fn composite_rejected() {
        assert!(matches!(PrimeField::new(4), Err(Error::CompositeModulus(4))));
        assert!(matches!(PrimeField::new(1), Err(Error::CompositeModulus(1))));
        assert!(matches!(PrimeField::new(0), Err(Error::CompositeModulus(0))));
    }

    #[test]
    fn gf7_product() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.mul(3, 5), 1); // 15 mod 7
    }

    #[test]
    fn inverse_by_brute_force() {
        let f = PrimeField::new(7).unwrap();
        for x in 1..7u8 {
            let y = f.inv(x).unwrap();
            let brute = (1..7u8).find(|&c| f.mul(x, c) == 1).unwrap();
            assert_eq!(y, brute);
            assert_eq!(f.mul(x, y), 1);
        }
    }

    #[test]
    fn zero_has_no_inverse() {
        let f = PrimeField::new(5).unwrap();
        assert!(matches!(f.inv(0), Err(Error::DivisionByZero)));
    }

    #[test]
    fn field_axioms_exhaustive_small_p() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            let f = PrimeField::new(p).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.sub(f.add(a, b), b), a);
                    for c in f.elements() {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                assert_eq!(f.add(a, f.neg(a)), 0);
            }
        }
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let f = PrimeField::new(13).unwrap();
        for a in f.elements() {
            let mut acc = 1u8;
            for e in 0..20u64 {
                assert_eq!(f.pow(a, e), acc);
                acc = f.mul(acc, a);
            }
        }
    }
}
