//! Exact arithmetic in prime fields F_p, 2 <= p <= 251.
//!
//! Field elements are bare `u32` values in `[0, p)`; the [`PrimeField`] value
//! carries the modulus and performs all arithmetic. Keeping elements untyped
//! keeps the linear-algebra kernels allocation-free and simple to vectorize.

use crate::error::{Error, Result};

/// A prime field F_p given by its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u32,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// Construct F_p; the modulus must be a prime in [2, 251].
    pub fn new(p: u32) -> Result<Self> {
        if !(2..=251).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(self) -> u32 {
        self.p
    }

    /// True when `a` is a canonical element value.
    pub fn contains(self, a: u32) -> bool {
        a < self.p
    }

    pub fn add(self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.p && b < self.p);
        let s = a + b;
        if s >= self.p { s - self.p } else { s }
    }

    pub fn sub(self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.p && b < self.p);
        if a >= b { a - b } else { a + self.p - b }
    }

    pub fn neg(self, a: u32) -> u32 {
        debug_assert!(a < self.p);
        if a == 0 { 0 } else { self.p - a }
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.p && b < self.p);
        a * b % self.p
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: u32) -> Option<u32> {
        debug_assert!(a < self.p);
        if a == 0 {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }

    pub fn pow(self, a: u32, mut e: u32) -> u32 {
        debug_assert!(a < self.p);
        let mut base = a as u64;
        let mut acc = 1u64;
        let p = self.p as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc as u32
    }

    /// Canonical representative of an arbitrary signed integer.
    pub fn from_signed(self, v: i64) -> u32 {
        let p = self.p as i64;
        (v.rem_euclid(p)) as u32
    }

    /// All field elements in ascending order.
    pub fn elements(self) -> impl Iterator<Item = u32> {
        0..self.p
    }

    /// All nonzero elements in ascending order.
    pub fn units(self) -> impl Iterator<Item = u32> {
        1..self.p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_primes_in_range() {
        for p in [2u32, 3, 5, 7, 11, 127, 251] {
            assert_eq!(PrimeField::new(p).unwrap().modulus(), p);
        }
    }

    #[test]
    fn rejects_non_primes_and_out_of_range() {
        for p in [0u32, 1, 4, 6, 9, 100, 249, 252, 257] {
            assert!(PrimeField::new(p).is_err(), "p = {p} must be rejected");
        }
    }

    #[test]
    fn arithmetic_mod_5() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.add(3, 4), 2);
        assert_eq!(f.sub(1, 3), 3);
        assert_eq!(f.neg(2), 3);
        assert_eq!(f.mul(3, 4), 2);
        assert_eq!(f.pow(2, 4), 1);
        assert_eq!(f.from_signed(-1), 4);
        assert_eq!(f.from_signed(7), 2);
    }

    #[test]
    fn inverses_are_exact() {
        for p in [2u32, 3, 5, 7, 251] {
            let f = PrimeField::new(p).unwrap();
            assert_eq!(f.inv(0), None);
            for a in f.units() {
                let inv = f.inv(a).unwrap();
                assert_eq!(f.mul(a, inv), 1, "a = {a}, p = {p}");
            }
        }
    }
}
