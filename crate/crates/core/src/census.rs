//! Conjugacy-class inventory of GL(2,p), grouped into the four families the
//! Burnside sum runs over.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::finitefield::Mat2;
use crate::numtheory::{divisors, euler_phi, least_primitive_root, pow_mod, require_prime};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ClassKind {
    /// Scalar matrices.
    Central,
    /// Scalar multiples of `[[1, 1], [0, 1]]`.
    Transvection,
    /// Diagonalizable over GF(p) with distinct eigenvalues.
    SplitSemisimple,
    /// Eigenvalues outside GF(p).
    Anisotropic,
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ClassKind::Central => "central",
            ClassKind::Transvection => "transvection",
            ClassKind::SplitSemisimple => "split",
            ClassKind::Anisotropic => "anisotropic",
        };
        f.write_str(name)
    }
}

/// A batch of conjugacy classes sharing size and fixed-point count.
///
/// `e` is the projective order for the semisimple families, 1 for
/// [`ClassKind::Central`] and `p` for [`ClassKind::Transvection`].
/// `class_count` is rational because `phi(e) (p - 1) / 2` goes through a
/// half-integer factor when `p = 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassFamily {
    pub kind: ClassKind,
    pub e: u64,
    pub class_count: BigRational,
    pub class_size: u64,
    pub representative: Mat2,
}

impl ClassFamily {
    /// `class_count * class_size`
    pub fn element_count(&self) -> BigRational {
        &self.class_count * BigRational::from_integer(BigInt::from(self.class_size))
    }
}

/// `|GL(2,p)| = (p^2 - 1)(p^2 - p)`
pub fn gl2_order(p: u64) -> Result<BigInt> {
    require_prime(p)?;
    let p = BigInt::from(p);
    Ok((&p * &p - 1u32) * (&p * &p - &p))
}

fn ratio(num: u64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn class_families(p: u64) -> Result<Vec<ClassFamily>> {
    require_prime(p)?;
    let half_p_minus_1 = ratio(p - 1, 2);
    let mut out = vec![
        ClassFamily {
            kind: ClassKind::Central,
            e: 1,
            class_count: ratio(p - 1, 1),
            class_size: 1,
            representative: Mat2::identity(p)?,
        },
        ClassFamily {
            kind: ClassKind::Transvection,
            e: p,
            class_count: ratio(p - 1, 1),
            class_size: p * p - 1,
            representative: Mat2::transvection(p)?,
        },
    ];

    let w = least_primitive_root(p)?;
    for e in divisors(p - 1)?.into_iter().filter(|&e| e > 1) {
        let nu = pow_mod(w, (p - 1) / e, p);
        out.push(ClassFamily {
            kind: ClassKind::SplitSemisimple,
            e,
            class_count: &half_p_minus_1 * ratio(euler_phi(e)?, 1),
            class_size: p * p + p,
            representative: Mat2::diag(p, nu as i64, 1)?,
        });
    }
    for e in divisors(p + 1)?.into_iter().filter(|&e| e > 1) {
        out.push(ClassFamily {
            kind: ClassKind::Anisotropic,
            e,
            class_count: &half_p_minus_1 * ratio(euler_phi(e)?, 1),
            class_size: p * p - p,
            representative: representative_anisotropic(p, e)?,
        });
    }
    Ok(out)
}

/// First `[[0, r], [1, s]]` in lexicographic `(s, r)` order whose
/// characteristic polynomial `t^2 - s t - r` is irreducible and whose
/// projective order is exactly `e`.
pub fn representative_anisotropic(p: u64, e: u64) -> Result<Mat2> {
    require_prime(p)?;
    if e <= 1 || !(p + 1).is_multiple_of(e) {
        return Err(Error::invalid(format!("{e} is not a divisor > 1 of p + 1 = {}", p + 1)));
    }
    for s in 0..p {
        for r in 1..p {
            let g = Mat2::companion(p, s as i64, r as i64)?;
            let irreducible = g.char_poly().is_irreducible()?;
            if irreducible && g.projective_order() == e {
                return Ok(g);
            }
        }
    }
    Err(Error::invariant(format!(
        "no anisotropic element of projective order {e} mod {p}"
    )))
}

pub fn projective_order(g: &Mat2) -> u64 {
    g.projective_order()
}

/// Total number of conjugacy classes across the families.
pub fn total_class_count(families: &[ClassFamily]) -> BigRational {
    families
        .iter()
        .fold(BigRational::zero(), |acc, f| acc + &f.class_count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::primes_between;

    fn multiset(p: u64) -> Vec<(ClassKind, u64, BigRational, u64)> {
        let mut v: Vec<_> = class_families(p)
            .unwrap()
            .into_iter()
            .map(|f| (f.kind, f.e, f.class_count, f.class_size))
            .collect();
        v.sort_by_key(|a| (a.0, a.1));
        v
    }

    fn int(k: u64) -> BigRational {
        ratio(k, 1)
    }

    #[test]
    fn gl2_orders() {
        assert_eq!(gl2_order(2).unwrap(), BigInt::from(6));
        assert_eq!(gl2_order(3).unwrap(), BigInt::from(48));
        assert_eq!(gl2_order(5).unwrap(), BigInt::from(480));
        assert!(gl2_order(6).is_err());
    }

    #[test]
    fn families_at_p5() {
        use ClassKind::*;
        assert_eq!(
            multiset(5),
            vec![
                (Central, 1, int(4), 1),
                (Transvection, 5, int(4), 24),
                (SplitSemisimple, 2, int(2), 30),
                (SplitSemisimple, 4, int(4), 30),
                (Anisotropic, 2, int(2), 20),
                (Anisotropic, 3, int(4), 20),
                (Anisotropic, 6, int(4), 20),
            ]
        );
    }

    #[test]
    fn families_at_p3_and_p2() {
        use ClassKind::*;
        assert_eq!(
            multiset(3),
            vec![
                (Central, 1, int(2), 1),
                (Transvection, 3, int(2), 8),
                (SplitSemisimple, 2, int(1), 12),
                (Anisotropic, 2, int(1), 6),
                (Anisotropic, 4, int(2), 6),
            ]
        );
        assert_eq!(
            multiset(2),
            vec![
                (Central, 1, int(1), 1),
                (Transvection, 2, int(1), 3),
                (Anisotropic, 3, int(1), 2),
            ]
        );
    }

    #[test]
    fn anisotropic_representatives() {
        assert_eq!(
            representative_anisotropic(2, 3).unwrap(),
            Mat2::new(2, 0, 1, 1, 1).unwrap()
        );
        // Scan oracle written out independently: smallest (s, r) with
        // t^2 - s t - r having no root mod p and the right projective order.
        for (p, e) in [(3u64, 4u64), (5, 2), (5, 3), (7, 8)] {
            let mut expected = None;
            'scan: for s in 0..p {
                for r in 1..p {
                    let has_root = (0..p).any(|t| (t * t + (p - s) * t + (p - r)) % p == 0);
                    if has_root {
                        continue;
                    }
                    let g = Mat2::new(p, 0, r as i64, 1, s as i64).unwrap();
                    let mut h = g;
                    let mut k = 1;
                    while !h.is_scalar() {
                        h = h.mul(&g).unwrap();
                        k += 1;
                    }
                    if k == e {
                        expected = Some(g);
                        break 'scan;
                    }
                }
            }
            assert_eq!(representative_anisotropic(p, e).unwrap(), expected.unwrap());
        }
        let g = representative_anisotropic(5, 2).unwrap();
        assert_eq!(g.trace(), 0);
        assert!(representative_anisotropic(5, 4).is_err());
    }

    #[test]
    fn census_closure() {
        for p in primes_between(2, 50) {
            let fams = class_families(p).unwrap();
            let weighted = fams
                .iter()
                .fold(BigRational::zero(), |acc, f| acc + f.element_count());
            assert_eq!(weighted, BigRational::from_integer(gl2_order(p).unwrap()));
            assert_eq!(total_class_count(&fams), int(p * p - 1));
            let split: BigRational = fams
                .iter()
                .filter(|f| f.kind == ClassKind::SplitSemisimple)
                .fold(BigRational::zero(), |acc, f| acc + &f.class_count);
            assert_eq!(split, ratio((p - 1) * (p.max(2) - 2), 2));
            let aniso: BigRational = fams
                .iter()
                .filter(|f| f.kind == ClassKind::Anisotropic)
                .fold(BigRational::zero(), |acc, f| acc + &f.class_count);
            assert_eq!(aniso, ratio(p * (p - 1), 2));
            for f in &fams {
                let g = f.representative;
                match f.kind {
                    ClassKind::Anisotropic => {
                        assert_eq!(g.projective_order(), f.e);
                        assert!(g.char_poly().is_irreducible().unwrap());
                    }
                    ClassKind::SplitSemisimple => assert_eq!(g.projective_order(), f.e),
                    ClassKind::Central => assert!(g.is_scalar()),
                    ClassKind::Transvection => assert_eq!(g, Mat2::transvection(p).unwrap()),
                }
            }
        }
    }
}
