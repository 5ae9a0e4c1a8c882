use num_bigint::BigUint;

use super::Field;
use crate::error::{Error, Result};
use crate::numtheory::{is_prime, pow_mod};

/// GF(p) for a prime `p` small enough that products fit in `u128`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Reduces an arbitrary integer into `0..p`.
    pub fn elem(&self, k: i64) -> u64 {
        k.rem_euclid(self.p as i64) as u64
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn extension_degree(&self) -> u32 {
        1
    }

    fn order(&self) -> BigUint {
        BigUint::from(self.p)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn reduce_i64(&self, k: i64) -> u64 {
        self.elem(k)
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn inv(&self, a: &u64) -> Result<u64> {
        if (*a).is_multiple_of(self.p) {
            return Err(Error::DivisionByZero);
        }
        Ok(pow_mod(*a, self.p - 2, self.p))
    }

    fn pow_u64(&self, a: &u64, k: u64) -> u64 {
        pow_mod(*a, k, self.p)
    }

    fn elements(&self) -> Vec<u64> {
        (0..self.p).collect()
    }
}
