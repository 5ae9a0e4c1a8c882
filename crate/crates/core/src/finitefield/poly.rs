use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use super::{Field, PrimeField};
use crate::error::{Error, Result};
use crate::numtheory::{divisors, factorize, mobius, require_prime};

/// Dense univariate polynomial over `F`, coefficients lowest degree first.
/// No trailing zeros are stored; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq)]
pub struct Polynomial<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Polynomial<F> {
    pub fn new(field: F, coeffs: Vec<F::Elem>) -> Self {
        let mut poly = Polynomial { field, coeffs };
        poly.trim();
        poly
    }

    pub fn zero(field: F) -> Self {
        Polynomial {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Self::new(field, vec![c])
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        Self::constant(field, one)
    }

    /// The indeterminate `x`.
    pub fn x(field: F) -> Self {
        Self::monomial(field.clone(), field.one(), 1)
    }

    pub fn monomial(field: F, c: F::Elem, degree: usize) -> Self {
        let mut coeffs = vec![field.zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(field, coeffs)
    }

    fn trim(&mut self) {
        while let Some(last) = self.coeffs.last() {
            if self.field.is_zero(last) {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| *c == self.field.one())
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.field.add(&self.coeff(i), &other.coeff(i)))
            .collect();
        Ok(Self::new(self.field.clone(), coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.field.sub(&self.coeff(i), &other.coeff(i)))
            .collect();
        Ok(Self::new(self.field.clone(), coeffs))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.field.clone()));
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Ok(Self::new(f.clone(), out))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.field.mul(a, c)).collect();
        Self::new(self.field.clone(), coeffs)
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Result<Self> {
        let lead = self.leading().ok_or(Error::DivisionByZero)?;
        Ok(self.scale(&self.field.inv(lead)?))
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check_field(divisor)?;
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.leading().unwrap())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(f.clone()), self.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if f.is_zero(&rem[k]) {
                continue;
            }
            let t = f.mul(&rem[k], &lead_inv);
            for (j, c) in divisor.coeffs.iter().enumerate() {
                let idx = k - dd + j;
                rem[idx] = f.sub(&rem[idx], &f.mul(&t, c));
            }
            quot[k - dd] = t;
        }
        rem.truncate(dd);
        Ok((Self::new(f.clone(), quot), Self::new(f.clone(), rem)))
    }

    pub fn rem(&self, modulus: &Self) -> Result<Self> {
        Ok(self.div_rem(modulus)?.1)
    }

    /// `(self * other) mod modulus`.
    pub fn mul_mod(&self, other: &Self, modulus: &Self) -> Result<Self> {
        if modulus.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.mul(other)?.rem(modulus)
    }

    /// `self^k mod modulus` by square-and-multiply; `k` is unbounded.
    pub fn pow_mod(&self, k: &BigUint, modulus: &Self) -> Result<Self> {
        if modulus.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let base = self.rem(modulus)?;
        let mut acc = Self::one(self.field.clone()).rem(modulus)?;
        for i in (0..k.bits()).rev() {
            acc = acc.mul_mod(&acc, modulus)?;
            if k.bit(i) {
                acc = acc.mul_mod(&base, modulus)?;
            }
        }
        Ok(acc)
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            a.monic()
        }
    }

    pub fn evaluate(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    /// Rabin's test: with `n = deg f` and `q = |F|`, `f` is irreducible iff
    /// `x^(q^n) = x (mod f)` and `gcd(x^(q^(n/r)) - x, f) = 1` for every
    /// prime `r | n`.
    pub fn is_irreducible(&self) -> Result<bool> {
        let n = match self.degree() {
            Some(d) if d >= 1 => d,
            _ => {
                return Err(Error::invalid(
                    "irreducibility is only defined for non-constant polynomials",
                ))
            }
        };
        if n == 1 {
            return Ok(true);
        }
        let f = self.monic()?;
        let q = self.field.order();
        let x = Self::x(self.field.clone()).rem(&f)?;

        // frob[i] = x^(q^i) mod f
        let mut frob = Vec::with_capacity(n + 1);
        frob.push(x.clone());
        for i in 0..n {
            let next = frob[i].pow_mod(&q, &f)?;
            frob.push(next);
        }
        if frob[n] != x {
            return Ok(false);
        }
        for r in factorize(n as u64)?.primes() {
            let h = frob[n / r as usize].sub(&x)?;
            if h.gcd(&f)?.degree() != Some(0) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial{:?}", self.coeffs)
    }
}

impl Polynomial<PrimeField> {
    /// Builds a polynomial over GF(p) from integer coefficients (reduced mod p).
    pub fn from_ints(field: PrimeField, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.elem(c)).collect())
    }
}

/// Number of monic irreducible polynomials of degree `n` over GF(p):
/// `(1/n) * sum_{d | n} mu(d) p^(n/d)`.
pub fn count_monic_irreducible(p: u64, n: u64) -> Result<BigUint> {
    require_prime(p)?;
    let mut total = BigInt::zero();
    for d in divisors(n)? {
        let mu = mobius(d)?;
        if mu != 0 {
            let n_over_d = (n / d)
                .to_u32()
                .ok_or_else(|| Error::invalid("degree too large"))?;
            total += BigInt::from(mu) * BigInt::from(p).pow(n_over_d);
        }
    }
    let n_big = BigInt::from(n);
    if !(&total % &n_big).is_zero() {
        return Err(Error::invariant("necklace count not divisible by n"));
    }
    (total / n_big)
        .to_biguint()
        .ok_or_else(|| Error::invariant("negative irreducible count"))
}
