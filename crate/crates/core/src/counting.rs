//! Closed-form orbit counts.
//!
//! Burnside's lemma over GL(2,p) reduces to one fixed-point count per class
//! family: `|S|` for scalars, `B(p,n)` for transvections, `A(p,n,e)` for
//! split semisimple classes and `C(p,n,e)` for anisotropic ones. Everything
//! is computed in exact rationals and the final quotient must be integral.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::census::{gl2_order, ClassFamily, ClassKind};
use crate::error::{Error, Result};
use crate::numtheory::{coprime_part, divisors, euler_phi, mobius, require_prime};

/// `n / e = k * r` with `k` the largest divisor of `n` coprime to `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KrSplit {
    pub n: u64,
    pub e: u64,
    pub k: u64,
    pub r: u64,
}

pub fn kr_split(n: u64, e: u64) -> Result<KrSplit> {
    if e == 0 || n == 0 || !n.is_multiple_of(e) {
        return Err(Error::invalid(format!("{e} does not divide {n}")));
    }
    let k = coprime_part(n, e)?;
    let r = n / (e * k);
    debug_assert_eq!(k * r * e, n);
    Ok(KrSplit { n, e, k, r })
}

/// The four Burnside contributions, before dividing by `|GL(2,p)|`.
#[derive(Debug, Clone, PartialEq)]
pub struct BurnsideTerms {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
}

impl BurnsideTerms {
    pub fn total(&self) -> BigRational {
        &self.a + &self.b + &self.c + &self.d
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrbitCountReport {
    pub p: u64,
    pub n: u64,
    /// `None` for `n <= 2`, where the count is 1 without any assembly.
    pub terms: Option<BurnsideTerms>,
    pub group_order: BigInt,
    pub orbit_count: BigInt,
}

impl OrbitCountReport {
    pub fn is_special_case(&self) -> bool {
        self.terms.is_none()
    }
}

fn big_pow(p: u64, k: u64) -> Result<BigInt> {
    let k = k
        .to_u32()
        .ok_or_else(|| Error::invalid("exponent too large"))?;
    Ok(BigInt::from(p).pow(k))
}

fn rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

fn frac(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Number of irreducible forms of degree `n` up to scalars:
/// `(1/n) * sum_{d | n} mu(d) p^(n/d)`.
pub fn count_s(p: u64, n: u64) -> Result<BigInt> {
    require_prime(p)?;
    let mut total = BigInt::zero();
    for d in divisors(n)? {
        total += BigInt::from(mobius(d)?) * big_pow(p, n / d)?;
    }
    let (q, rem) = total.div_rem(&BigInt::from(n));
    if !rem.is_zero() {
        return Err(Error::invariant(format!("|S| not integral at p={p}, n={n}")));
    }
    Ok(q)
}

/// Fixed irreducible forms of the transvection `[[1, 1], [0, 1]]`.
pub fn func_b(p: u64, n: u64) -> Result<BigRational> {
    require_prime(p)?;
    if n == 0 {
        return Err(Error::invalid("degree must be positive"));
    }
    if !n.is_multiple_of(p) {
        return Ok(BigRational::zero());
    }
    let mut sum = BigInt::zero();
    for d in divisors(n)?.into_iter().filter(|d| d % p != 0) {
        sum += BigInt::from(mobius(d)?) * big_pow(p, n / (p * d))?;
    }
    Ok(frac(p - 1, n) * rat(sum))
}

/// Fixed irreducible forms of `diag(nu, 1)` with `nu` of order `e`.
pub fn func_a(p: u64, n: u64, e: u64) -> Result<BigRational> {
    require_prime(p)?;
    if e <= 1 || !n.is_multiple_of(e) || !(p - 1).is_multiple_of(e) {
        return Err(Error::invalid(format!(
            "A({p},{n},{e}) needs e > 1 dividing both n and p - 1"
        )));
    }
    let KrSplit { k, r, .. } = kr_split(n, e)?;
    let mut sum = BigInt::zero();
    for d in divisors(k)? {
        sum += BigInt::from(mobius(d)?) * (big_pow(p, k * r / d)? - 1);
    }
    Ok(frac(euler_phi(e)?, n) * rat(sum))
}

/// Fixed irreducible forms of an anisotropic element of projective order `e`.
pub fn func_c(p: u64, n: u64, e: u64) -> Result<BigRational> {
    require_prime(p)?;
    if e <= 1 || !n.is_multiple_of(e) || !(p + 1).is_multiple_of(e) {
        return Err(Error::invalid(format!(
            "C({p},{n},{e}) needs e > 1 dividing both n and p + 1"
        )));
    }
    let KrSplit { k, r, .. } = kr_split(n, e)?;
    let mut sum = BigInt::zero();
    for d in divisors(k)? {
        let rd = r * d;
        let parity = BigInt::from(2 * (rd % 2));
        sum += BigInt::from(mobius(k / d)?) * (big_pow(p, rd)? - 1 + parity);
    }
    Ok(frac(euler_phi(e)?, n) * rat(sum))
}

/// Burnside terms and orbit count for irreducible degree-`n` forms over GF(p).
pub fn orbit_count(p: u64, n: u64) -> Result<OrbitCountReport> {
    require_prime(p)?;
    if n == 0 {
        return Err(Error::invalid("degree must be positive"));
    }
    let group_order = gl2_order(p)?;
    if n <= 2 {
        return Ok(OrbitCountReport {
            p,
            n,
            terms: None,
            group_order,
            orbit_count: BigInt::from(1),
        });
    }

    let pm1 = frac(p - 1, 1);
    let half_pm1 = frac(p - 1, 2);
    let p2 = p * p;

    let a = &pm1 * rat(count_s(p, n)?);
    let b = &pm1 * frac(p2 - 1, 1) * func_b(p, n)?;

    let mut c = BigRational::zero();
    for e in divisors(n.gcd(&(p - 1)))?.into_iter().filter(|&e| e > 1) {
        c += frac(euler_phi(e)?, 1) * &half_pm1 * frac(p2 + p, 1) * func_a(p, n, e)?;
    }
    let mut d = BigRational::zero();
    for e in divisors(n.gcd(&(p + 1)))?.into_iter().filter(|&e| e > 1) {
        d += frac(euler_phi(e)?, 1) * &half_pm1 * frac(p2 - p, 1) * func_c(p, n, e)?;
    }

    let terms = BurnsideTerms { a, b, c, d };
    for (name, t) in [("a", &terms.a), ("b", &terms.b), ("c", &terms.c), ("d", &terms.d)] {
        if t.is_negative() {
            return Err(Error::invariant(format!("term {name} negative at p={p}, n={n}")));
        }
    }
    let quotient = terms.total() / rat(group_order.clone());
    if !quotient.is_integer() {
        return Err(Error::invariant(format!(
            "orbit count {quotient} not integral at p={p}, n={n}"
        )));
    }
    Ok(OrbitCountReport {
        p,
        n,
        terms: Some(terms),
        group_order,
        orbit_count: quotient.to_integer(),
    })
}

/// Predicted number of irreducible degree-`n` forms fixed by any element of
/// the given family.
pub fn predicted_fix(p: u64, n: u64, family: &ClassFamily) -> Result<BigRational> {
    if family.representative.p() != p {
        return Err(Error::FieldMismatch);
    }
    let e = family.e;
    Ok(match family.kind {
        ClassKind::Central => rat(count_s(p, n)?),
        ClassKind::Transvection => func_b(p, n)?,
        ClassKind::SplitSemisimple if n.is_multiple_of(e) => func_a(p, n, e)?,
        ClassKind::Anisotropic if n.is_multiple_of(e) => func_c(p, n, e)?,
        _ => BigRational::zero(),
    })
}

/// Number of indecomposable class-two exponent-p groups with derived group
/// of order `p^2` on `d` generators.
pub fn indecomposable_group_count(p: u64, d: u64) -> Result<BigInt> {
    require_prime(p)?;
    if d < 3 {
        return Err(Error::invalid("d must be at least 3"));
    }
    if d % 2 == 1 {
        return Ok(BigInt::from(1));
    }
    let n = d / 2;
    let mut total = BigInt::zero();
    for m in divisors(n)? {
        total += orbit_count(p, m)?.orbit_count;
    }
    Ok(total)
}
