//! Elementary arithmetic functions: factorization, divisors, Möbius, Euler phi.

use crate::error::{Error, Result};

/// Prime factorization as `(prime, exponent)` pairs in ascending prime order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization(Vec<(u64, u32)>);

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.0
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().map(|&(q, _)| q)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&(_, k)| k == 1)
    }

    /// Multiplies the factorization back out.
    pub fn value(&self) -> u64 {
        self.0.iter().map(|&(q, k)| q.pow(k)).product()
    }
}

fn require_positive(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("expected a positive integer, got 0"));
    }
    Ok(())
}

/// Trial division. Inputs here are degrees and element orders, never large.
pub fn factorize(n: u64) -> Result<Factorization> {
    require_positive(n)?;
    let mut rest = n;
    let mut out = Vec::new();
    let mut q = 2u64;
    while q * q <= rest {
        if rest.is_multiple_of(q) {
            let mut k = 0;
            while rest.is_multiple_of(q) {
                rest /= q;
                k += 1;
            }
            out.push((q, k));
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        out.push((rest, 1));
    }
    Ok(Factorization(out))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut q = 2u64;
    while q * q <= n {
        if n.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let f = factorize(n)?;
    let mut ds = vec![1u64];
    for &(q, k) in f.pairs() {
        let current = ds.len();
        let mut qk = 1;
        for _ in 0..k {
            qk *= q;
            for i in 0..current {
                ds.push(ds[i] * qk);
            }
        }
    }
    ds.sort_unstable();
    Ok(ds)
}

pub fn mobius(n: u64) -> Result<i64> {
    let f = factorize(n)?;
    if !f.is_squarefree() {
        return Ok(0);
    }
    Ok(if f.pairs().len() % 2 == 0 { 1 } else { -1 })
}

pub fn euler_phi(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(f.pairs()
        .iter()
        .map(|&(q, k)| (q - 1) * q.pow(k - 1))
        .product())
}

/// Largest divisor of `n` sharing no prime with `m`.
pub fn coprime_part(n: u64, m: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(f.pairs()
        .iter()
        .filter(|&&(q, _)| !m.is_multiple_of(q))
        .map(|&(q, k)| q.pow(k))
        .product())
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut acc = 1u128 % m;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Multiplicative order of `a` modulo the prime `p`; `a` must be nonzero mod p.
pub fn multiplicative_order(a: u64, p: u64) -> Result<u64> {
    if a.is_multiple_of(p) {
        return Err(Error::invalid(format!("0 has no multiplicative order mod {p}")));
    }
    for d in divisors(p - 1)? {
        if pow_mod(a, d, p) == 1 {
            return Ok(d);
        }
    }
    Err(Error::invariant(format!("no order found for {a} mod {p}")))
}

/// Least positive primitive root modulo the prime `p` (1 when `p = 2`).
pub fn least_primitive_root(p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Ok(1);
    }
    let qs: Vec<u64> = factorize(p - 1)?.primes().collect();
    (2..p)
        .find(|&w| qs.iter().all(|&q| pow_mod(w, (p - 1) / q, p) != 1))
        .ok_or_else(|| Error::invariant(format!("no primitive root mod {p}")))
}

pub fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Primes in the closed interval `[from, to]`.
pub fn primes_between(from: u64, to: u64) -> Vec<u64> {
    (from..=to).filter(|&q| is_prime(q)).collect()
}
