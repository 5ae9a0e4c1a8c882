use std::fmt;
use std::sync::Arc;

use super::{Field, Polynomial, PrimeField};
use crate::error::{Error, Result};

/// GF(p^m) realized as `GF(p)[u] / (modulus)`. Elements are coefficient
/// vectors of length exactly `m`, lowest degree first.
#[derive(Clone)]
pub struct ExtensionField {
    inner: Arc<Inner>,
}

struct Inner {
    base: PrimeField,
    m: usize,
    /// Monic, ascending, length `m + 1`.
    modulus: Vec<u64>,
}

impl ExtensionField {
    /// GF(p^m) modulo the lexicographically least monic irreducible of
    /// degree `m`, comparing coefficient lists from the constant term up.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        let base = PrimeField::new(p)?;
        if m == 0 {
            return Err(Error::invalid("extension degree must be at least 1"));
        }
        let m = m as usize;
        let total = (p as u128).pow(m as u32);
        for index in 0..total {
            // c_0 is the most significant digit so the scan is lexicographic
            // in (c_0, c_1, ..., c_{m-1}).
            let mut coeffs = vec![0u64; m + 1];
            let mut rest = index;
            for j in (0..m).rev() {
                coeffs[j] = (rest % p as u128) as u64;
                rest /= p as u128;
            }
            coeffs[m] = 1;
            let candidate = Polynomial::new(base, coeffs.clone());
            if candidate.is_irreducible()? {
                return Ok(Self::from_parts(base, coeffs));
            }
        }
        Err(Error::invariant(format!("no irreducible of degree {m} over GF({p})")))
    }

    /// Quotient by an explicit modulus, which must be monic and irreducible.
    pub fn with_modulus(p: u64, modulus: &[u64]) -> Result<Self> {
        let base = PrimeField::new(p)?;
        let poly = Polynomial::new(base, modulus.iter().map(|&c| c % p).collect());
        match poly.degree() {
            Some(d) if d >= 1 => {}
            _ => return Err(Error::invalid("modulus must have degree at least 1")),
        }
        if *poly.leading().unwrap() != 1 {
            return Err(Error::invalid("modulus must be monic"));
        }
        if !poly.is_irreducible()? {
            return Err(Error::invalid("modulus must be irreducible"));
        }
        Ok(Self::from_parts(base, poly.coeffs().to_vec()))
    }

    fn from_parts(base: PrimeField, modulus: Vec<u64>) -> Self {
        ExtensionField {
            inner: Arc::new(Inner {
                base,
                m: modulus.len() - 1,
                modulus,
            }),
        }
    }

    pub fn base(&self) -> PrimeField {
        self.inner.base
    }

    pub fn degree(&self) -> usize {
        self.inner.m
    }

    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    /// Validates and pads a coefficient vector into an element.
    pub fn element(&self, coeffs: &[u64]) -> Result<Vec<u64>> {
        let m = self.inner.m;
        let p = self.inner.base.p();
        if coeffs.len() > m || coeffs.iter().any(|&c| c >= p) {
            return Err(Error::invalid(format!(
                "{coeffs:?} is not a reduced element of GF({p}^{m})"
            )));
        }
        let mut v = coeffs.to_vec();
        v.resize(m, 0);
        Ok(v)
    }

    /// The class of the indeterminate `u`.
    pub fn generator(&self) -> Vec<u64> {
        let mut v = vec![0; self.inner.m];
        if self.inner.m == 1 {
            v[0] = self.inner.base.neg(&self.inner.modulus[0]);
        } else {
            v[1] = 1;
        }
        v
    }

    /// Embeds a base-field residue.
    pub fn embed(&self, a: u64) -> Vec<u64> {
        let mut v = vec![0; self.inner.m];
        v[0] = a % self.inner.base.p();
        v
    }

    /// Returns the residue if `a` lies in the prime subfield.
    pub fn as_base(&self, a: &[u64]) -> Option<u64> {
        if a[1..].iter().all(|&c| c == 0) {
            Some(a[0])
        } else {
            None
        }
    }

    fn element_from_index(&self, mut index: u64) -> Vec<u64> {
        let p = self.inner.base.p();
        (0..self.inner.m)
            .map(|_| {
                let c = index % p;
                index /= p;
                c
            })
            .collect()
    }
}

impl PartialEq for ExtensionField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.base == other.inner.base && self.inner.modulus == other.inner.modulus)
    }
}

impl fmt::Debug for ExtensionField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}^{}) mod {:?}",
            self.inner.base.p(),
            self.inner.m,
            self.inner.modulus
        )
    }
}

impl Field for ExtensionField {
    type Elem = Vec<u64>;

    fn characteristic(&self) -> u64 {
        self.inner.base.p()
    }

    fn extension_degree(&self) -> u32 {
        self.inner.m as u32
    }

    fn zero(&self) -> Vec<u64> {
        vec![0; self.inner.m]
    }

    fn one(&self) -> Vec<u64> {
        self.embed(1)
    }

    fn reduce_i64(&self, k: i64) -> Vec<u64> {
        self.embed(self.inner.base.elem(k))
    }

    fn is_zero(&self, a: &Vec<u64>) -> bool {
        a.iter().all(|&c| c == 0)
    }

    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let f = &self.inner.base;
        a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
    }

    fn sub(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let f = &self.inner.base;
        a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect()
    }

    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        let f = &self.inner.base;
        a.iter().map(|x| f.neg(x)).collect()
    }

    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let m = self.inner.m;
        let p = self.inner.base.p() as u128;
        // Each slot receives at most 2m products below p^2; below 2^56 the
        // sums fit in u128 without intermediate reduction.
        let lazy = p < (1 << 56) && m <= 256;
        let reduce = |v: u128| if lazy { v } else { v % p };
        let mut prod = vec![0u128; 2 * m - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = reduce(prod[i + j] + x as u128 * y as u128);
            }
        }
        // u^m = -(c_0 + ... + c_{m-1} u^{m-1})
        let modulus = &self.inner.modulus;
        for k in (m..prod.len()).rev() {
            let top = prod[k] % p;
            if top == 0 {
                continue;
            }
            prod[k] = 0;
            for (j, &c) in modulus[..m].iter().enumerate() {
                let idx = k - m + j;
                prod[idx] = reduce(prod[idx] + (p - top) * c as u128);
            }
        }
        prod.truncate(m);
        prod.into_iter().map(|c| (c % p) as u64).collect()
    }

    fn inv(&self, a: &Vec<u64>) -> Result<Vec<u64>> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        let q = self.order();
        Ok(self.pow(a, &(q - 2u32)))
    }

    fn elements(&self) -> Vec<Vec<u64>> {
        let q = (self.inner.base.p()).pow(self.inner.m as u32);
        (0..q).map(|i| self.element_from_index(i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf9_default_modulus() {
        let f9 = ExtensionField::new(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
        let u = f9.generator();
        assert_eq!(f9.mul(&u, &u), vec![2, 0]);
    }

    #[test]
    fn degree_one_extension_is_the_prime_field() {
        let f = ExtensionField::new(5, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.elements().len(), 5);
        assert_eq!(f.mul(&vec![3], &vec![4]), vec![2]);
    }

    #[test]
    fn multiplicative_group_is_cyclic_of_order_q_minus_one() {
        let f = ExtensionField::new(2, 4).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 0, 1, 1]);
        let one = f.one();
        for a in f.elements().into_iter().skip(1) {
            assert_eq!(f.pow_u64(&a, 15), one);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(ExtensionField::with_modulus(5, &[1, 0, 1]).is_err());
        assert!(ExtensionField::with_modulus(3, &[1, 0, 2]).is_err());
        let f = ExtensionField::with_modulus(3, &[1, 0, 1]).unwrap();
        assert!(f.element(&[1, 2, 0]).is_err());
        assert!(f.element(&[3]).is_err());
        assert_eq!(f.inv(&f.zero()), Err(Error::DivisionByZero));
    }
}
