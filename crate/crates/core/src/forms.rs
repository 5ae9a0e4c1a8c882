//! Binary forms over GF(p) and the right action of GL(2,p) on them.
//!
//! A form of degree `n` is stored as its coefficient row `(a_0, ..., a_n)`,
//! where `a_i` multiplies `x^(n-i) y^i`. Forms are projective objects, so
//! every stored row is scaled to make its first nonzero entry 1.

use std::fmt;

use crate::error::{Error, Result};
use crate::finitefield::{Field, Mat2, Polynomial, PrimeField};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryForm {
    p: u64,
    coeffs: Vec<u64>,
}

impl BinaryForm {
    /// Builds and normalizes a form from integer coefficients `a_0..a_n`.
    pub fn new(p: u64, coeffs: &[i64]) -> Result<Self> {
        let field = PrimeField::new(p)?;
        Self::from_residues(field, coeffs.iter().map(|&c| field.elem(c)).collect())
    }

    pub(crate) fn from_residues(field: PrimeField, mut coeffs: Vec<u64>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::invalid("a binary form needs degree at least 1"));
        }
        if !normalize_row(field, &mut coeffs) {
            return Err(Error::invalid("the zero form is not a projective point"));
        }
        Ok(BinaryForm {
            p: field.p(),
            coeffs,
        })
    }

    /// Homogenizes a polynomial over GF(p): `f(x) -> y^deg f * f(x/y)`.
    pub fn from_polynomial(poly: &Polynomial<PrimeField>) -> Result<Self> {
        let n = poly
            .degree()
            .ok_or_else(|| Error::invalid("cannot homogenize the zero polynomial"))?;
        let coeffs = (0..=n).map(|i| poly.coeff(n - i)).collect();
        Self::from_residues(*poly.field(), coeffs)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.p).expect("validated at construction")
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `(a_0, ..., a_n)` with `a_i` the coefficient of `x^(n-i) y^i`.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// The row read as a base-`p` numeral, `a_0` most significant. Distinct
    /// forms of one degree get distinct keys, ordered lexicographically.
    pub fn key(&self) -> u64 {
        self.coeffs.iter().fold(0, |acc, &c| acc * self.p + c)
    }

    /// `f(x, 1)`
    pub fn dehomogenize(&self) -> Polynomial<PrimeField> {
        let n = self.degree();
        let coeffs = (0..=n).map(|j| self.coeffs[n - j]).collect();
        Polynomial::new(self.field(), coeffs)
    }

    /// Product of two forms, normalized.
    pub fn mul(&self, other: &BinaryForm) -> Result<BinaryForm> {
        if self.p != other.p {
            return Err(Error::FieldMismatch);
        }
        let field = self.field();
        Self::from_residues(field, convolve(field, &self.coeffs, &other.coeffs))
    }

    /// Multiplies by `y^k`, which shifts the coefficient row right.
    pub fn times_y_power(&self, k: usize) -> BinaryForm {
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        BinaryForm { p: self.p, coeffs }
    }

    pub fn is_irreducible(&self) -> bool {
        is_irreducible_form(self)
    }

    pub fn act(&self, g: &Mat2) -> Result<BinaryForm> {
        act(self, g)
    }
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryForm({self} mod {})", self.p)
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c != 1 {
                write!(f, "{c}")?;
            }
            match n - i {
                0 => {}
                1 => write!(f, "x")?,
                e => write!(f, "x^{e}")?,
            }
            match i {
                0 => {}
                1 => write!(f, "y")?,
                e => write!(f, "y^{e}")?,
            }
        }
        Ok(())
    }
}

/// Scales the row so its first nonzero entry is 1. Returns false for the
/// zero row.
fn normalize_row(field: PrimeField, row: &mut [u64]) -> bool {
    let Some(&lead) = row.iter().find(|&&c| c != 0) else {
        return false;
    };
    if lead != 1 {
        let inv = field.inv(&lead).expect("nonzero");
        for c in row.iter_mut() {
            *c = field.mul(c, &inv);
        }
    }
    true
}

/// Product of homogeneous polynomials given as coefficient rows.
fn convolve(field: PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = field.add(&out[i + j], &field.mul(&x, &y));
        }
    }
    out
}

/// The linear map on degree-`n` forms induced by one matrix: row `i` holds
/// the coefficients of `(ax + by)^(n-i) (cx + dy)^i`.
#[derive(Debug, Clone)]
pub struct Substitution {
    field: PrimeField,
    rows: Vec<Vec<u64>>,
}

impl Substitution {
    pub fn new(g: &Mat2, n: usize) -> Self {
        let field = g.field();
        let [a, b, c, d] = g.entries();
        let powers = |lin: [u64; 2]| {
            let mut out = vec![vec![1u64]];
            for k in 0..n {
                let next = convolve(field, &out[k], &lin);
                out.push(next);
            }
            out
        };
        let left = powers([a, b]);
        let right = powers([c, d]);
        let rows = (0..=n)
            .map(|i| convolve(field, &left[n - i], &right[i]))
            .collect();
        Substitution { field, rows }
    }

    pub fn degree(&self) -> usize {
        self.rows.len() - 1
    }

    /// Image of a raw coefficient row, not normalized.
    pub fn apply_row(&self, coeffs: &[u64], out: &mut [u64]) {
        let f = &self.field;
        out.iter_mut().for_each(|c| *c = 0);
        for (alpha, row) in coeffs.iter().zip(&self.rows) {
            if *alpha == 0 {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                *o = f.add(o, &f.mul(alpha, r));
            }
        }
    }

    pub fn apply(&self, form: &BinaryForm) -> Result<BinaryForm> {
        if form.p != self.field.p() {
            return Err(Error::FieldMismatch);
        }
        if form.degree() != self.degree() {
            return Err(Error::invalid("substitution built for a different degree"));
        }
        let mut out = vec![0; form.coeffs.len()];
        self.apply_row(&form.coeffs, &mut out);
        BinaryForm::from_residues(self.field, out)
    }

    /// Whether the image of `form` is a scalar multiple of `form`.
    pub fn fixes(&self, form: &BinaryForm) -> bool {
        let f = &self.field;
        let mut out = vec![0; form.coeffs.len()];
        self.apply_row(&form.coeffs, &mut out);
        // form is normalized, so its leading entry is 1 at index `lead`
        let lead = form.coeffs.iter().position(|&c| c != 0).unwrap();
        let scale = out[lead];
        scale != 0
            && out
                .iter()
                .zip(&form.coeffs)
                .all(|(o, c)| *o == f.mul(&scale, c))
    }
}

/// `f g = f(ax + by, cx + dy)`, renormalized.
pub fn act(form: &BinaryForm, g: &Mat2) -> Result<BinaryForm> {
    if form.p != g.p() {
        return Err(Error::FieldMismatch);
    }
    Substitution::new(g, form.degree()).apply(form)
}

/// Degree-1 forms count as irreducible. For higher degree a form is
/// irreducible iff `a_0 != 0` and `f(x, 1)` is irreducible of full degree.
pub fn is_irreducible_form(form: &BinaryForm) -> bool {
    if form.degree() == 1 {
        return true;
    }
    form.coeffs[0] != 0
        && form
            .dehomogenize()
            .is_irreducible()
            .expect("degree is at least 2")
}

fn index_to_monic(p: u64, n: usize, mut index: u64) -> Vec<u64> {
    let mut c = Vec::with_capacity(n + 1);
    for _ in 0..n {
        c.push(index % p);
        index /= p;
    }
    c.push(1);
    c
}

fn monic_to_index(p: u64, c: &[u64]) -> u64 {
    c[..c.len() - 1].iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Indices (`sum c_j p^j` over the non-leading coefficients) of the monic
/// irreducible polynomials of degree `n`, ascending. Reducible polynomials
/// are sieved out as products of an irreducible factor of degree `<= n/2`
/// with an arbitrary monic cofactor.
fn monic_irreducible_indices(field: PrimeField, n: usize) -> Vec<u64> {
    let p = field.p();
    let total = p.pow(n as u32);
    if n == 1 {
        return (0..total).collect();
    }
    let mut reducible = vec![false; total as usize];
    for d in 1..=n / 2 {
        let cofactors = p.pow((n - d) as u32);
        for g in monic_irreducible_indices(field, d) {
            let gc = index_to_monic(p, d, g);
            for h in 0..cofactors {
                let hc = index_to_monic(p, n - d, h);
                let prod = convolve(field, &gc, &hc);
                reducible[monic_to_index(p, &prod) as usize] = true;
            }
        }
    }
    (0..total).filter(|&i| !reducible[i as usize]).collect()
}

pub(crate) fn check_bound(p: u64, n: usize, bound: u64) -> Result<()> {
    let size = (p as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if size > bound as u128 {
        return Err(Error::BoundExceeded {
            what: format!("{p}^{n}"),
            size,
            bound: bound as u128,
        });
    }
    Ok(())
}

/// All normalized irreducible forms of degree `n >= 2`, in lexicographic
/// order of the coefficient row.
pub fn enumerate_irreducible_forms(p: u64, n: usize, bound: u64) -> Result<Vec<BinaryForm>> {
    let field = PrimeField::new(p)?;
    if n < 2 {
        return Err(Error::invalid("enumeration needs degree at least 2"));
    }
    check_bound(p, n, bound)?;
    Ok(monic_irreducible_indices(field, n)
        .into_iter()
        .map(|idx| {
            let c = index_to_monic(p, n, idx);
            BinaryForm {
                p,
                coeffs: c.into_iter().rev().collect(),
            }
        })
        .collect())
}

/// `g^k`, normalized.
pub fn power_form(g: &BinaryForm, k: u32) -> Result<BinaryForm> {
    if k == 0 {
        return Err(Error::invalid("power must be at least 1"));
    }
    let mut acc = g.clone();
    for _ in 1..k {
        acc = acc.mul(g)?;
    }
    Ok(acc)
}

/// The forms `u^(k-i) y^(ip)`, `i = 0..=k`, where `u = x^p - x y^(p-1)` and
/// `k = n / p`. They span the forms fixed by `[[1, 1], [0, 1]]`.
pub fn transvection_fixed_basis(p: u64, n: usize) -> Result<Vec<BinaryForm>> {
    let field = PrimeField::new(p)?;
    let pu = p as usize;
    if n == 0 || !n.is_multiple_of(pu) {
        return Err(Error::invalid(format!("{p} does not divide {n}")));
    }
    let k = n / pu;
    let mut u = vec![0u64; pu + 1];
    u[0] = 1;
    u[pu - 1] = field.neg(&1);
    let u = BinaryForm::from_residues(field, u)?;
    let mut y = vec![0u64; pu + 1];
    y[pu] = 1;
    let yp = BinaryForm::from_residues(field, y)?;

    (0..=k)
        .map(|i| {
            let upart = if k - i > 0 {
                Some(power_form(&u, (k - i) as u32)?)
            } else {
                None
            };
            let ypart = if i > 0 {
                Some(power_form(&yp, i as u32)?)
            } else {
                None
            };
            match (upart, ypart) {
                (Some(a), Some(b)) => a.mul(&b),
                (Some(a), None) => Ok(a),
                (None, Some(b)) => Ok(b),
                (None, None) => unreachable!("k >= 1"),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn form(p: u64, c: &[i64]) -> BinaryForm {
        BinaryForm::new(p, c).unwrap()
    }

    fn random_mat(p: u64, rng: &mut StdRng) -> Mat2 {
        loop {
            let e: Vec<i64> = (0..4).map(|_| rng.gen_range(0..p as i64)).collect();
            if let Ok(g) = Mat2::new(p, e[0], e[1], e[2], e[3]) {
                return g;
            }
        }
    }

    #[test]
    fn normalization() {
        let f = form(5, &[0, 2, 4]);
        assert_eq!(f.coeffs(), &[0, 1, 2]);
        assert!(BinaryForm::new(5, &[0, 0, 0]).is_err());
        assert!(BinaryForm::new(5, &[1]).is_err());
        let again = BinaryForm::new(5, &f.coeffs().iter().map(|&c| c as i64).collect::<Vec<_>>()).unwrap();
        assert_eq!(again, f);
    }

    #[test]
    fn act_examples() {
        let f = form(3, &[1, 0, 1]);
        assert_eq!(act(&f, &Mat2::swap(3).unwrap()).unwrap(), f);
        assert_eq!(
            act(&f, &Mat2::transvection(3).unwrap()).unwrap(),
            form(3, &[1, 2, 2])
        );
        assert_eq!(act(&f, &Mat2::identity(3).unwrap()).unwrap(), f);
        assert_eq!(
            act(&f, &Mat2::identity(5).unwrap()),
            Err(Error::FieldMismatch)
        );
    }

    #[test]
    fn right_action_law() {
        let mut rng = StdRng::seed_from_u64(11);
        for p in [3u64, 5] {
            for n in [3usize, 4] {
                for _ in 0..500 {
                    let mut c: Vec<i64> = (0..=n).map(|_| rng.gen_range(0..p as i64)).collect();
                    c[0] = 1;
                    let f = form(p, &c);
                    let g = random_mat(p, &mut rng);
                    let h = random_mat(p, &mut rng);
                    assert_eq!(
                        act(&act(&f, &g).unwrap(), &h).unwrap(),
                        act(&f, &g.mul(&h).unwrap()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn scalars_act_trivially() {
        for p in [2u64, 3, 5, 7] {
            for f in enumerate_irreducible_forms(p, 3, 1000).unwrap() {
                for l in 1..p as i64 {
                    assert_eq!(act(&f, &Mat2::scalar(p, l).unwrap()).unwrap(), f);
                }
            }
        }
    }

    #[test]
    fn action_preserves_irreducibility() {
        let mut rng = StdRng::seed_from_u64(3);
        for p in [2u64, 3, 5] {
            for n in [3usize, 4] {
                for f in enumerate_irreducible_forms(p, n, 10_000).unwrap() {
                    let g = random_mat(p, &mut rng);
                    assert!(is_irreducible_form(&act(&f, &g).unwrap()));
                }
            }
        }
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible_form(&form(2, &[1, 1, 1])));
        assert!(!is_irreducible_form(&form(5, &[0, 1, 0, 0])));
        assert!(!is_irreducible_form(&form(5, &[1, 0, 1])));
        assert!(is_irreducible_form(&form(5, &[0, 1])));
    }

    #[test]
    fn enumeration_examples() {
        let rows: Vec<Vec<u64>> = enumerate_irreducible_forms(2, 4, 100)
            .unwrap()
            .iter()
            .map(|f| f.coeffs().to_vec())
            .collect();
        assert_eq!(
            rows,
            vec![vec![1, 0, 0, 1, 1], vec![1, 1, 0, 0, 1], vec![1, 1, 1, 1, 1]]
        );
        assert_eq!(enumerate_irreducible_forms(3, 2, 100).unwrap().len(), 3);
        assert_eq!(
            enumerate_irreducible_forms(2, 2, 100).unwrap(),
            vec![form(2, &[1, 1, 1])]
        );
        assert!(matches!(
            enumerate_irreducible_forms(5, 4, 100),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn sieve_agrees_with_rabin() {
        for p in [2u64, 3, 5, 7] {
            for n in 2..=5usize {
                if p.pow(n as u32) > 20_000 {
                    continue;
                }
                let sieved = enumerate_irreducible_forms(p, n, 20_000).unwrap();
                let mut tested = Vec::new();
                for idx in 0..p.pow(n as u32) {
                    let mut c = index_to_monic(p, n, idx);
                    c.reverse();
                    let f = BinaryForm { p, coeffs: c };
                    if is_irreducible_form(&f) {
                        tested.push(f);
                    }
                }
                tested.sort();
                assert_eq!(sieved, tested, "p={p} n={n}");
                assert!(sieved.windows(2).all(|w| w[0].key() < w[1].key()));
            }
        }
    }

    #[test]
    fn power_examples() {
        let g = form(2, &[1, 1, 1]);
        assert_eq!(power_form(&g, 2).unwrap(), form(2, &[1, 0, 1, 0, 1]));
        assert_eq!(power_form(&g, 1).unwrap(), g);
        assert_eq!(
            power_form(&form(3, &[1, 1]), 2).unwrap(),
            form(3, &[1, 2, 1])
        );
    }

    #[test]
    fn transvection_basis() {
        assert_eq!(
            transvection_fixed_basis(2, 2).unwrap(),
            vec![form(2, &[1, 1, 0]), form(2, &[0, 0, 1])]
        );
        assert_eq!(transvection_fixed_basis(2, 4).unwrap().len(), 3);
        assert_eq!(
            transvection_fixed_basis(3, 3).unwrap(),
            vec![form(3, &[1, 0, -1, 0]), form(3, &[0, 0, 0, 1])]
        );
        assert!(transvection_fixed_basis(3, 4).is_err());
        for (p, n) in [(2u64, 6usize), (3, 6), (5, 5), (5, 10), (7, 7)] {
            let t = Mat2::transvection(p).unwrap();
            let basis = transvection_fixed_basis(p, n).unwrap();
            assert_eq!(basis.len(), 1 + n / p as usize);
            for b in basis {
                assert_eq!(act(&b, &t).unwrap(), b);
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(form(3, &[1, 2, 2]).to_string(), "x^2 + 2xy + 2y^2");
        assert_eq!(form(5, &[0, 1, 0, 0]).to_string(), "x^2y");
    }

    #[test]
    fn substitution_fixes_matches_act() {
        let mut rng = StdRng::seed_from_u64(5);
        let forms = enumerate_irreducible_forms(5, 4, 1000).unwrap();
        for _ in 0..50 {
            let g = random_mat(5, &mut rng);
            let s = Substitution::new(&g, 4);
            for f in &forms {
                assert_eq!(s.fixes(f), act(f, &g).unwrap() == *f);
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn normalization_is_idempotent(p_idx in 0usize..4, c in proptest::collection::vec(0i64..50, 2..7)) {
            let p = [2u64, 3, 5, 7][p_idx];
            if let Ok(f) = BinaryForm::new(p, &c) {
                let again = BinaryForm::new(p, &f.coeffs().iter().map(|&x| x as i64).collect::<Vec<_>>()).unwrap();
                proptest::prop_assert_eq!(again, f);
            }
        }
    }
}
