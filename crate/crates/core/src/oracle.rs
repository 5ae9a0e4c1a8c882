//! Brute-force ground truth for the closed formulas.
//!
//! Two independent orbit counters (closure under generators, and the literal
//! Burnside average over every element of GL(2,p)), per-element fixed-point
//! counts, and direct checks of the eigenspace construction used for
//! anisotropic elements.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;

use crate::census::gl2_order;
use crate::error::{Error, Result};
use crate::finitefield::{row_rank, ExtensionField, Field, Mat2, Polynomial, PrimeField};
use crate::forms::{enumerate_irreducible_forms, BinaryForm, Substitution};
use crate::numtheory::{euler_phi, least_primitive_root, require_prime};

/// Ceiling on `|GL(2,p)| * #forms` for the literal Burnside sum. Admits
/// every `p <= 7` with `n <= 6`.
pub const DEFAULT_BURNSIDE_BUDGET: u64 = 50_000_000;

/// Ceiling on `p^m` for the [`lemma1_count`] scan over GF(p^m).
pub const LEMMA1_SCAN_BOUND: u64 = 10_000;

/// Orbits of GL(2,p) on the irreducible forms of one degree. Each orbit is
/// sorted, so its first member is the lexicographically least; orbits are
/// ordered by that representative.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitPartition {
    pub p: u64,
    pub n: usize,
    pub orbits: Vec<Vec<BinaryForm>>,
}

impl OrbitPartition {
    pub fn count(&self) -> usize {
        self.orbits.len()
    }

    pub fn representatives(&self) -> Vec<&BinaryForm> {
        self.orbits.iter().map(|o| &o[0]).collect()
    }
}

/// Transvection, primitive-root diagonal (omitted for p = 2), and swap.
pub fn gl2_generators(p: u64) -> Result<Vec<Mat2>> {
    let mut gens = vec![Mat2::transvection(p)?];
    if p > 2 {
        gens.push(Mat2::diag(p, least_primitive_root(p)? as i64, 1)?);
    }
    gens.push(Mat2::swap(p)?);
    Ok(gens)
}

/// Orbit partition by breadth-first closure under [`gl2_generators`].
pub fn orbit_count_bfs(p: u64, n: usize, bound: u64) -> Result<OrbitPartition> {
    let forms = enumerate_irreducible_forms(p, n, bound)?;
    let index: HashMap<u64, usize> = forms.iter().enumerate().map(|(i, f)| (f.key(), i)).collect();
    let subs: Vec<Substitution> = gl2_generators(p)?
        .iter()
        .map(|g| Substitution::new(g, n))
        .collect();

    let mut seen = vec![false; forms.len()];
    let mut orbits = Vec::new();
    for start in 0..forms.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut orbit = Vec::new();
        while let Some(i) = queue.pop_front() {
            orbit.push(i);
            for s in &subs {
                let image = s.apply(&forms[i])?;
                let j = *index.get(&image.key()).ok_or_else(|| {
                    Error::invariant(format!("{image} left the set of irreducible forms"))
                })?;
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit.into_iter().map(|i| forms[i].clone()).collect());
    }
    Ok(OrbitPartition { p, n, orbits })
}

/// Number of forms in `forms` that `g` fixes projectively.
pub fn fix_count(forms: &[BinaryForm], g: &Mat2) -> u64 {
    let Some(first) = forms.first() else {
        return 0;
    };
    let sub = Substitution::new(g, first.degree());
    forms.iter().filter(|f| sub.fixes(f)).count() as u64
}

/// Irreducible degree-`n` forms fixed by `g`, by scanning all of them.
pub fn fix_brute(p: u64, n: usize, g: &Mat2, bound: u64) -> Result<u64> {
    if g.p() != p {
        return Err(Error::FieldMismatch);
    }
    let forms = enumerate_irreducible_forms(p, n, bound)?;
    Ok(fix_count(&forms, g))
}

/// `(1/|G|) sum_{g in G} fix(g)` summed over every element of GL(2,p).
pub fn orbit_count_burnside_brute(p: u64, n: usize, bound: u64, budget: u64) -> Result<BigInt> {
    require_prime(p)?;
    let forms = enumerate_irreducible_forms(p, n, bound)?;
    let order = gl2_order(p)?;
    let work = order.clone() * BigInt::from(forms.len());
    if work > BigInt::from(budget) {
        return Err(Error::BoundExceeded {
            what: format!("|GL(2,{p})| * #forms"),
            size: u128::try_from(work).unwrap_or(u128::MAX),
            bound: budget as u128,
        });
    }
    let group = Mat2::all(p)?;
    let total: u64 = group.par_iter().map(|g| fix_count(&forms, g)).sum();
    let (q, r) = BigInt::from(total).div_rem(&order);
    if r != BigInt::from(0) {
        return Err(Error::invariant(format!(
            "Burnside sum {total} not divisible by {order}"
        )));
    }
    Ok(q)
}

fn check_anisotropic(p: u64, e: u64, s: u64, r: u64) -> Result<Mat2> {
    require_prime(p)?;
    if p == 2 {
        return Err(Error::invalid("the a/b construction divides by 2; p must be odd"));
    }
    if e <= 1 || !(p + 1).is_multiple_of(e) {
        return Err(Error::invalid(format!("{e} is not a divisor > 1 of {}", p + 1)));
    }
    let g = Mat2::companion(p, s as i64, r as i64)?;
    if !g.char_poly().is_irreducible()? {
        return Err(Error::invalid(format!("t^2 - {s}t - {r} is reducible mod {p}")));
    }
    if g.projective_order() != e {
        return Err(Error::invalid(format!(
            "[[0,{r}],[1,{s}]] has projective order {}, not {e}",
            g.projective_order()
        )));
    }
    Ok(g)
}

/// The degree-`e` forms
/// `a = ((x + L y)^e + (x + L' y)^e) / 2` and
/// `b = ((x + L y)^e - (x + L' y)^e) / (e (L - L'))`,
/// where `L, L'` are the roots of `t^2 - s t - r` in GF(p^2). Both lie over
/// GF(p); any coefficient with a nonzero `t` component is an error.
pub fn build_ab(p: u64, e: u64, s: u64, r: u64) -> Result<(BinaryForm, BinaryForm)> {
    check_anisotropic(p, e, s, r)?;
    let base = PrimeField::new(p)?;
    let quad = ExtensionField::with_modulus(p, &[base.elem(-(r as i64)), base.elem(-(s as i64)), 1])?;
    let lambda = quad.generator();
    // the conjugate root: L + L' = s
    let conj = quad.sub(&quad.embed(s), &lambda);
    let e_us = e as usize;

    let mut binom = vec![1u64];
    for _ in 0..e_us {
        let mut next = vec![1u64; binom.len() + 1];
        for j in 1..binom.len() {
            next[j] = base.add(&binom[j - 1], &binom[j]);
        }
        binom = next;
    }

    let half = quad.inv(&quad.embed(2))?;
    let b_scale = quad.inv(&quad.mul(&quad.embed(e % p), &quad.sub(&lambda, &conj)))?;
    let to_base = |v: Vec<u64>, what: &str, j: usize| {
        quad.as_base(&v).ok_or_else(|| {
            Error::invariant(format!("coefficient {j} of {what} is not in GF({p}): {v:?}"))
        })
    };

    let mut a = Vec::with_capacity(e_us + 1);
    let mut b = Vec::with_capacity(e_us + 1);
    for (j, &bj) in binom.iter().enumerate() {
        let lj = quad.pow_u64(&lambda, j as u64);
        let cj = quad.pow_u64(&conj, j as u64);
        let c = quad.embed(bj);
        let sum = quad.mul(&c, &quad.add(&lj, &cj));
        let diff = quad.mul(&c, &quad.sub(&lj, &cj));
        a.push(to_base(quad.mul(&sum, &half), "a", j)?);
        b.push(to_base(quad.mul(&diff, &b_scale), "b", j)?);
    }

    let lambda_e = to_base(quad.pow_u64(&lambda, e), "lambda^e", 0)?;
    if a[0] != 1 || a[e_us] != lambda_e {
        return Err(Error::invariant(format!("unexpected end coefficients of a: {a:?}")));
    }
    if b[0] != 0 || b[e_us] != 0 || b[1] != 1 {
        return Err(Error::invariant(format!("unexpected coefficients of b: {b:?}")));
    }
    // Both rows already have leading entry 1, so construction keeps them as is.
    Ok((
        BinaryForm::from_residues(base, a)?,
        BinaryForm::from_residues(base, b)?,
    ))
}

/// Number of `beta` in GF(p^m) with `a(x,1) - beta b(x,1)` irreducible over
/// GF(p^m), found by testing every `beta`.
pub fn lemma1_count(p: u64, e: u64, s: u64, r: u64, m: u32) -> Result<u64> {
    let size = (p as u128).pow(m);
    if size > LEMMA1_SCAN_BOUND as u128 {
        return Err(Error::BoundExceeded {
            what: format!("{p}^{m}"),
            size,
            bound: LEMMA1_SCAN_BOUND as u128,
        });
    }
    let (a, b) = build_ab(p, e, s, r)?;
    let field = ExtensionField::new(p, m)?;
    let lift = |f: &BinaryForm| {
        let d = f.dehomogenize();
        let coeffs = (0..=f.degree()).map(|j| field.embed(d.coeff(j))).collect();
        Polynomial::new(field.clone(), coeffs)
    };
    let a1 = lift(&a);
    let b1 = lift(&b);
    let betas = field.elements();
    let results: Result<Vec<bool>> = betas
        .par_iter()
        .map(|beta| a1.sub(&b1.scale(beta))?.is_irreducible())
        .collect();
    Ok(results?.into_iter().filter(|&ok| ok).count() as u64)
}

/// `(phi(e)/e) (p^m - (-1)^m)`
pub fn lemma1_expected(p: u64, e: u64, m: u32) -> Result<BigInt> {
    let pm = BigInt::from(p).pow(m);
    let shifted = if m.is_multiple_of(2) { pm - 1 } else { pm + 1 };
    let scaled: BigInt = shifted * BigInt::from(euler_phi(e)?);
    let (q, rem) = scaled.div_rem(&BigInt::from(e));
    if rem != BigInt::from(0) {
        return Err(Error::invariant(format!("{e} does not divide phi(e)(p^m -+ 1)")));
    }
    Ok(q)
}

/// Whether every irreducible degree-`n` form fixed by `[[0, r], [1, s]]`
/// lies in the span of `a^(kr-i) b^i`, `i = 0..=n/e`, and those products
/// are linearly independent.
pub fn eigenbasis_check(p: u64, n: usize, e: u64, s: u64, r: u64, bound: u64) -> Result<bool> {
    let g = check_anisotropic(p, e, s, r)?;
    if !(n as u64).is_multiple_of(e) {
        return Err(Error::invalid(format!("{e} does not divide {n}")));
    }
    let field = PrimeField::new(p)?;
    let (a, b) = build_ab(p, e, s, r)?;
    let kr = n / e as usize;
    let mut basis = Vec::with_capacity(kr + 1);
    for i in 0..=kr {
        let mut prod: Option<BinaryForm> = None;
        for _ in 0..kr - i {
            prod = Some(match prod {
                None => a.clone(),
                Some(f) => f.mul(&a)?,
            });
        }
        for _ in 0..i {
            prod = Some(match prod {
                None => b.clone(),
                Some(f) => f.mul(&b)?,
            });
        }
        basis.push(prod.expect("kr >= 1").coeffs().to_vec());
    }
    let rank = row_rank(field, &basis);
    if rank != kr + 1 {
        return Ok(false);
    }
    let forms = enumerate_irreducible_forms(p, n, bound)?;
    let sub = Substitution::new(&g, n);
    for f in forms.iter().filter(|f| sub.fixes(f)) {
        let mut rows = basis.clone();
        rows.push(f.coeffs().to_vec());
        if row_rank(field, &rows) != rank {
            return Ok(false);
        }
    }
    Ok(true)
}
