use std::fmt;

use super::{Field, Polynomial, PrimeField};
use crate::error::{Error, Result};
use crate::numtheory::require_prime;

/// An element of GL(2,p), stored row-major as `[[a, b], [c, d]]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat2 {
    p: u64,
    a: u64,
    b: u64,
    c: u64,
    d: u64,
}

impl Mat2 {
    pub fn new(p: u64, a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let m = Mat2 {
            p,
            a: field.elem(a),
            b: field.elem(b),
            c: field.elem(c),
            d: field.elem(d),
        };
        if m.det() == 0 {
            return Err(Error::SingularMatrix);
        }
        Ok(m)
    }

    pub fn identity(p: u64) -> Result<Self> {
        Self::new(p, 1, 0, 0, 1)
    }

    pub fn scalar(p: u64, lambda: i64) -> Result<Self> {
        Self::new(p, lambda, 0, 0, lambda)
    }

    pub fn diag(p: u64, x: i64, y: i64) -> Result<Self> {
        Self::new(p, x, 0, 0, y)
    }

    /// Companion-style matrix `[[0, r], [1, s]]` with characteristic
    /// polynomial `t^2 - s t - r`.
    pub fn companion(p: u64, s: i64, r: i64) -> Result<Self> {
        Self::new(p, 0, r, 1, s)
    }

    /// `[[1, 1], [0, 1]]`
    pub fn transvection(p: u64) -> Result<Self> {
        Self::new(p, 1, 1, 0, 1)
    }

    /// `[[0, 1], [1, 0]]`
    pub fn swap(p: u64) -> Result<Self> {
        Self::new(p, 0, 1, 1, 0)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.p).expect("Mat2 always carries a prime")
    }

    /// `[a, b, c, d]`
    pub fn entries(&self) -> [u64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn det(&self) -> u64 {
        let f = self.field_unchecked();
        f.sub(&f.mul(&self.a, &self.d), &f.mul(&self.b, &self.c))
    }

    pub fn trace(&self) -> u64 {
        self.field_unchecked().add(&self.a, &self.d)
    }

    fn field_unchecked(&self) -> PrimeField {
        // Mat2 values only come out of `new`, which validated p.
        self.field()
    }

    pub fn mul(&self, other: &Mat2) -> Result<Mat2> {
        if self.p != other.p {
            return Err(Error::FieldMismatch);
        }
        let f = self.field_unchecked();
        let dot = |x: u64, y: u64, z: u64, w: u64| f.add(&f.mul(&x, &y), &f.mul(&z, &w));
        Ok(Mat2 {
            p: self.p,
            a: dot(self.a, other.a, self.b, other.c),
            b: dot(self.a, other.b, self.b, other.d),
            c: dot(self.c, other.a, self.d, other.c),
            d: dot(self.c, other.b, self.d, other.d),
        })
    }

    pub fn pow(&self, mut k: u64) -> Mat2 {
        let mut acc = Mat2::identity(self.p).expect("valid prime");
        let mut base = *self;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            base = base.mul(&base).expect("same field");
            k >>= 1;
        }
        acc
    }

    pub fn inverse(&self) -> Mat2 {
        let f = self.field_unchecked();
        let det_inv = f.inv(&self.det()).expect("invertible by construction");
        Mat2 {
            p: self.p,
            a: f.mul(&self.d, &det_inv),
            b: f.mul(&f.neg(&self.b), &det_inv),
            c: f.mul(&f.neg(&self.c), &det_inv),
            d: f.mul(&self.a, &det_inv),
        }
    }

    /// `lambda * self`; `lambda` must be nonzero.
    pub fn scaled(&self, lambda: u64) -> Result<Mat2> {
        let f = self.field_unchecked();
        let l = lambda % self.p;
        if l == 0 {
            return Err(Error::SingularMatrix);
        }
        Ok(Mat2 {
            p: self.p,
            a: f.mul(&self.a, &l),
            b: f.mul(&self.b, &l),
            c: f.mul(&self.c, &l),
            d: f.mul(&self.d, &l),
        })
    }

    pub fn is_scalar(&self) -> bool {
        self.b == 0 && self.c == 0 && self.a == self.d
    }

    /// Least `s >= 1` with `self^s` scalar: the order of the image in PGL(2,p).
    pub fn projective_order(&self) -> u64 {
        let mut power = *self;
        let mut s = 1;
        while !power.is_scalar() {
            power = power.mul(self).expect("same field");
            s += 1;
        }
        s
    }

    /// `t^2 - trace * t + det`
    pub fn char_poly(&self) -> Polynomial<PrimeField> {
        let f = self.field_unchecked();
        Polynomial::new(f, vec![self.det(), f.neg(&self.trace()), 1])
    }

    /// All `(p^2 - 1)(p^2 - p)` elements of GL(2,p), in lexicographic order
    /// of `(a, b, c, d)`.
    pub fn all(p: u64) -> Result<Vec<Mat2>> {
        require_prime(p)?;
        let f = PrimeField::new(p)?;
        let mut out = Vec::new();
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    for d in 0..p {
                        if f.mul(&a, &d) != f.mul(&b, &c) {
                            out.push(Mat2 { p, a, b, c, d });
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]] mod {}", self.a, self.b, self.c, self.d, self.p)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

/// Dense `n x n` matrix over GF(p), row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    field: PrimeField,
    n: usize,
    entries: Vec<u64>,
}

impl SquareMatrix {
    pub fn zero(field: PrimeField, n: usize) -> Self {
        SquareMatrix {
            field,
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zero(field, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: PrimeField, rows: &[Vec<u64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("matrix rows must all have length n"));
        }
        Ok(SquareMatrix {
            field,
            n,
            entries: rows.iter().flatten().map(|&x| x % field.p()).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.entries[i * self.n + j] = v % self.field.p();
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.entries.chunks(self.n.max(1)).map(|r| r.to_vec()).take(self.n).collect()
    }

    /// Characteristic polynomial `det(xI - M)`, via reduction to Hessenberg
    /// form and the usual determinant recurrence.
    pub fn char_poly(&self) -> Polynomial<PrimeField> {
        let f = self.field;
        let n = self.n;
        let mut h = self.clone();

        for m in 1..n.saturating_sub(1) {
            let Some(piv) = (m..n).find(|&i| h.get(i, m - 1) != 0) else {
                continue;
            };
            if piv != m {
                for j in 0..n {
                    let (x, y) = (h.get(piv, j), h.get(m, j));
                    h.set(piv, j, y);
                    h.set(m, j, x);
                }
                for i in 0..n {
                    let (x, y) = (h.get(i, piv), h.get(i, m));
                    h.set(i, piv, y);
                    h.set(i, m, x);
                }
            }
            let t_inv = f.inv(&h.get(m, m - 1)).expect("pivot is nonzero");
            for i in (m + 1)..n {
                let u = f.mul(&h.get(i, m - 1), &t_inv);
                if u == 0 {
                    continue;
                }
                // row_i -= u * row_m, then col_m += u * col_i (similarity)
                for j in 0..n {
                    let v = f.sub(&h.get(i, j), &f.mul(&u, &h.get(m, j)));
                    h.set(i, j, v);
                }
                for k in 0..n {
                    let v = f.add(&h.get(k, m), &f.mul(&u, &h.get(k, i)));
                    h.set(k, m, v);
                }
            }
        }

        let x = Polynomial::x(f);
        let mut chars: Vec<Polynomial<PrimeField>> = vec![Polynomial::one(f)];
        for m in 1..=n {
            let shift = Polynomial::constant(f, h.get(m - 1, m - 1));
            let mut pm = x.sub(&shift).unwrap().mul(&chars[m - 1]).unwrap();
            let mut t = 1u64;
            for i in (1..m).rev() {
                t = f.mul(&t, &h.get(i, i - 1));
                let c = f.mul(&t, &h.get(i - 1, m - 1));
                pm = pm.sub(&chars[i - 1].scale(&c)).unwrap();
            }
            chars.push(pm);
        }
        chars.pop().unwrap()
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> u64 {
        let f = self.field;
        let n = self.n;
        let mut a = self.clone();
        let mut det = 1u64;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&i| a.get(i, col) != 0) else {
                return 0;
            };
            if piv != col {
                for j in 0..n {
                    let (x, y) = (a.get(piv, j), a.get(col, j));
                    a.set(piv, j, y);
                    a.set(col, j, x);
                }
                det = f.neg(&det);
            }
            let pv = a.get(col, col);
            det = f.mul(&det, &pv);
            let inv = f.inv(&pv).unwrap();
            for i in (col + 1)..n {
                let u = f.mul(&a.get(i, col), &inv);
                if u != 0 {
                    for j in col..n {
                        let v = f.sub(&a.get(i, j), &f.mul(&u, &a.get(col, j)));
                        a.set(i, j, v);
                    }
                }
            }
        }
        det
    }
}

impl fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} mod {}", self.rows(), self.field.p())
    }
}

/// Rank over GF(p) of the given rows (all of equal length).
pub fn row_rank(field: PrimeField, rows: &[Vec<u64>]) -> usize {
    let mut m: Vec<Vec<u64>> = rows.to_vec();
    let width = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..width {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = field.inv(&m[rank][col]).unwrap();
        let pivot = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let u = field.mul(&row[col], &inv);
                for (x, y) in row[col..].iter_mut().zip(&pivot[col..]) {
                    *x = field.sub(x, &field.mul(&u, y));
                }
            }
        }
        rank += 1;
    }
    rank
}
