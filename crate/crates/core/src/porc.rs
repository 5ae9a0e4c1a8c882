//! Orbit counts as polynomials on residue classes.
//!
//! For fixed `n` and a prime `p` coprime to `n`, which semisimple families
//! contribute to the Burnside sum depends only on `p mod n`: `e | p - 1`
//! iff `r = 1 (mod e)` and `e | p + 1` iff `r = -1 (mod e)`. The transvection
//! term vanishes because `p` does not divide `n`. Each residue class therefore
//! gets one polynomial in `p`, obtained by dividing the assembled sum by
//! `|GL(2,p)| = p (p + 1) (p - 1)^2` exactly.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numtheory::{coprime_part, divisors, euler_phi, mobius};

/// Univariate polynomial with exact rational coefficients, lowest degree
/// first, in an indeterminate standing for the prime `p`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        let mut poly = RationalPolynomial { coeffs };
        while poly.coeffs.last().is_some_and(Zero::is_zero) {
            poly.coeffs.pop();
        }
        poly
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `c * p^k`
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigRational::zero();
        Self::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder; the caller decides whether a nonzero
    /// remainder is acceptable.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let t = &rem[k] / &lead;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + j] -= &t * c;
            }
            quot[k - dd] = t;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Horner evaluation at an integer.
    pub fn evaluate(&self, p: &BigInt) -> BigRational {
        let x = BigRational::from_integer(p.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &x + c)
    }

    /// Least common denominator of the coefficients.
    pub fn denominator(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Integer numerator coefficients over [`Self::denominator`].
    pub fn integer_numerator(&self) -> Vec<BigInt> {
        let den = self.denominator();
        self.coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect()
    }
}

fn render_integer_poly(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let show_coeff = k == 0 || !mag.is_one();
        if show_coeff {
            out.push_str(&mag.to_string());
        }
        match k {
            0 => {}
            1 => out.push('p'),
            _ => out.push_str(&format!("p^{k}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for RationalPolynomial {
    /// Factored-denominator form such as `(p^2+9)/5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den = self.denominator();
        let num = render_integer_poly(&self.integer_numerator());
        if den.is_one() {
            f.write_str(&num)
        } else if self.coeffs.iter().filter(|c| !c.is_zero()).count() > 1 {
            write!(f, "({num})/{den}")
        } else {
            write!(f, "{num}/{den}")
        }
    }
}

impl fmt::Debug for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalPolynomial({self})")
    }
}

/// One polynomial per unit residue `r mod n`.
#[derive(Debug, Clone, PartialEq)]
pub struct PorcTable {
    pub n: u64,
    pub classes: BTreeMap<u64, RationalPolynomial>,
}

impl PorcTable {
    /// Polynomial for the class of the prime `p`, if `p` is coprime to `n`.
    pub fn for_prime(&self, p: u64) -> Option<&RationalPolynomial> {
        self.classes.get(&(p % self.n))
    }

    /// Primes outside the table: the prime divisors of `n`.
    pub fn uncovered_primes(&self) -> Vec<u64> {
        crate::numtheory::factorize(self.n)
            .map(|f| f.primes().collect())
            .unwrap_or_default()
    }
}

fn rat(k: i64) -> BigRational {
    BigRational::from_integer(k.into())
}

fn ratio(a: u64, b: u64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn p_power(k: u64) -> RationalPolynomial {
    RationalPolynomial::monomial(BigRational::one(), k as usize)
}

fn linear(c0: i64, c1: i64) -> RationalPolynomial {
    RationalPolynomial::from_ints(&[c0, c1])
}

/// `(1/n) sum_{d|n} mu(d) p^(n/d)`
fn s_poly(n: u64) -> Result<RationalPolynomial> {
    let mut acc = RationalPolynomial::zero();
    for d in divisors(n)? {
        acc = acc.add(&p_power(n / d).scale(&rat(mobius(d)?)));
    }
    Ok(acc.scale(&ratio(1, n)))
}

fn a_poly(n: u64, e: u64) -> Result<RationalPolynomial> {
    let k = coprime_part(n, e)?;
    let r = n / (e * k);
    let mut acc = RationalPolynomial::zero();
    for d in divisors(k)? {
        let term = p_power(k * r / d).sub(&RationalPolynomial::from_ints(&[1]));
        acc = acc.add(&term.scale(&rat(mobius(d)?)));
    }
    Ok(acc.scale(&ratio(euler_phi(e)?, n)))
}

fn c_poly(n: u64, e: u64) -> Result<RationalPolynomial> {
    let k = coprime_part(n, e)?;
    let r = n / (e * k);
    let mut acc = RationalPolynomial::zero();
    for d in divisors(k)? {
        let rd = r * d;
        let shift = -1 + 2 * (rd % 2) as i64;
        let term = p_power(rd).add(&RationalPolynomial::from_ints(&[shift]));
        acc = acc.add(&term.scale(&rat(mobius(k / d)?)));
    }
    Ok(acc.scale(&ratio(euler_phi(e)?, n)))
}

/// The numerator `a + c_r + d_r` of the orbit count for `p = r (mod n)`.
fn burnside_numerator(n: u64, r: u64) -> Result<RationalPolynomial> {
    let pm1 = linear(-1, 1);
    let half_pm1 = pm1.scale(&ratio(1, 2));
    let mut total = pm1.mul(&s_poly(n)?);
    for e in divisors(n)?.into_iter().filter(|&e| e > 1) {
        let weight = half_pm1.scale(&rat(euler_phi(e)? as i64));
        if r % e == 1 % e {
            let size = RationalPolynomial::from_ints(&[0, 1, 1]);
            total = total.add(&weight.mul(&size).mul(&a_poly(n, e)?));
        }
        if (r + 1).is_multiple_of(e) {
            let size = RationalPolynomial::from_ints(&[0, -1, 1]);
            total = total.add(&weight.mul(&size).mul(&c_poly(n, e)?));
        }
    }
    Ok(total)
}

/// `p (p + 1) (p - 1)^2 = p^4 - p^3 - p^2 + p`
pub fn gl2_order_poly() -> RationalPolynomial {
    RationalPolynomial::from_ints(&[0, 1, -1, -1, 1])
}

pub fn porc_table(n: u64) -> Result<PorcTable> {
    if n < 3 {
        return Err(Error::invalid("PORC tables start at n = 3"));
    }
    let order = gl2_order_poly();
    let mut classes = BTreeMap::new();
    for r in (1..n).filter(|r| r.gcd(&n) == 1) {
        let (quot, rem) = burnside_numerator(n, r)?.div_rem(&order)?;
        if !rem.is_zero() {
            return Err(Error::invariant(format!(
                "n={n}, r={r}: remainder {rem} after dividing by |GL(2,p)|"
            )));
        }
        classes.insert(r, quot);
    }
    Ok(PorcTable { n, classes })
}
