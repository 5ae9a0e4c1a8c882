//! Finite fields GF(p) and GF(p^m), dense polynomials over them, and the
//! small matrices the rest of the crate needs.

mod extension;
mod matrix;
mod poly;
mod prime;

pub use extension::ExtensionField;
pub use matrix::{row_rank, Mat2, SquareMatrix};
pub use poly::{count_monic_irreducible, Polynomial};
pub use prime::PrimeField;

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigUint;

use crate::error::Result;

/// A finite field. Elements are plain values; the field is the context that
/// knows how to combine them.
pub trait Field: Clone + PartialEq + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn characteristic(&self) -> u64;

    /// Degree over the prime subfield.
    fn extension_degree(&self) -> u32;

    fn order(&self) -> BigUint {
        BigUint::from(self.characteristic()).pow(self.extension_degree())
    }

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;

    /// Image of an integer under the canonical map Z -> F.
    fn reduce_i64(&self, k: i64) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn pow(&self, a: &Self::Elem, k: &BigUint) -> Self::Elem {
        let mut acc = self.one();
        for i in (0..k.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if k.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    fn pow_u64(&self, a: &Self::Elem, k: u64) -> Self::Elem {
        self.pow(a, &BigUint::from(k))
    }

    /// Every element of the field, in a fixed order starting with zero.
    fn elements(&self) -> Vec<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_elem<F: Field>(field: &F, all: &[F::Elem], rng: &mut StdRng) -> F::Elem {
        let _ = field;
        all[rng.gen_range(0..all.len())].clone()
    }

    fn check_axioms<F: Field>(field: F, seed: u64) {
        let mut rng = StdRng::seed_from_u64(seed);
        let all = field.elements();
        let p = BigUint::from(field.characteristic());
        for _ in 0..1000 {
            let a = random_elem(&field, &all, &mut rng);
            let b = random_elem(&field, &all, &mut rng);
            let c = random_elem(&field, &all, &mut rng);
            assert_eq!(
                field.mul(&field.mul(&a, &b), &c),
                field.mul(&a, &field.mul(&b, &c))
            );
            assert_eq!(
                field.add(&field.add(&a, &b), &c),
                field.add(&a, &field.add(&b, &c))
            );
            assert_eq!(
                field.mul(&a, &field.add(&b, &c)),
                field.add(&field.mul(&a, &b), &field.mul(&a, &c))
            );
            assert_eq!(field.add(&a, &field.neg(&a)), field.zero());
            if !field.is_zero(&a) {
                let ai = field.inv(&a).unwrap();
                assert_eq!(field.mul(&a, &ai), field.one());
            }
        }
        for _ in 0..200 {
            let a = random_elem(&field, &all, &mut rng);
            let b = random_elem(&field, &all, &mut rng);
            assert_eq!(
                field.pow(&field.add(&a, &b), &p),
                field.add(&field.pow(&a, &p), &field.pow(&b, &p))
            );
        }
    }

    #[test]
    fn prime_field_axioms() {
        for (i, p) in [2u64, 3, 5, 7].into_iter().enumerate() {
            check_axioms(PrimeField::new(p).unwrap(), i as u64);
        }
    }

    #[test]
    fn extension_field_axioms() {
        for p in [2u64, 3, 5, 7] {
            for m in [2u32, 3] {
                check_axioms(ExtensionField::new(p, m).unwrap(), p * 10 + m as u64);
            }
        }
    }
}
