//! Presentations of the indecomposable class-two exponent-p groups with
//! derived group of order p^2.
//!
//! A `(d,2)` group has `d` generators modulo its derived group. For odd `d`
//! there is exactly one indecomposable group. For `d = 2n` there is one group
//! `V_f` per orbit representative `f = g^k` of degree `n` with `g`
//! irreducible; its commutator structure is read off the pair of matrices
//! `(I, companion(f(x,1)))`.

use std::fmt;

use serde::Serialize;

use crate::counting::indecomposable_group_count;
use crate::error::{Error, Result};
use crate::finitefield::{Field, Polynomial, PrimeField, SquareMatrix};
use crate::forms::{power_form, BinaryForm};
use crate::numtheory::{divisors, require_prime};
use crate::oracle::orbit_count_bfs;

/// Companion matrix with 1s on the subdiagonal and `-c_i` down the last
/// column, where `f = x^n + c_(n-1) x^(n-1) + ... + c_0`.
pub fn companion_matrix(f: &Polynomial<PrimeField>) -> Result<SquareMatrix> {
    let field = *f.field();
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::invalid("companion matrix needs degree at least 1")),
    };
    if !f.is_monic() {
        return Err(Error::invalid("companion matrix needs a monic polynomial"));
    }
    let mut m = SquareMatrix::zero(field, n);
    for i in 0..n {
        if i + 1 < n {
            m.set(i + 1, i, 1);
        }
        m.set(i, n - 1, field.neg(&f.coeff(i)));
    }
    if m.char_poly() != *f {
        return Err(Error::invariant("companion matrix has the wrong characteristic polynomial"));
    }
    Ok(m)
}

/// One defining relation. Generator indices are zero-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Relation {
    /// `[g_i, g_j] = 1`
    Trivial { i: usize, j: usize },
    /// `[g_i1, g_j1] = [g_i2, g_j2] = ...`
    Chain { pairs: Vec<(usize, usize)> },
    /// `[g_i, g_j] = prod g_k^e_k` over central generators
    Commutator { i: usize, j: usize, word: Vec<(usize, u64)> },
}

/// Where an even-`d` presentation came from: `f = g^k`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SourceForm {
    pub f: String,
    pub g: String,
    pub k: u32,
    pub f_coeffs: Vec<u64>,
    pub g_coeffs: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroupPresentation {
    pub p: u64,
    pub d: u64,
    pub generators: Vec<String>,
    /// Indices of generators that are central by assumption.
    pub central: Vec<usize>,
    pub relations: Vec<Relation>,
    pub source: Option<SourceForm>,
    /// Rows of the pair `(A, B)` for even `d`.
    pub a_matrix: Option<Vec<Vec<u64>>>,
    pub b_matrix: Option<Vec<Vec<u64>>>,
    pub warnings: Vec<String>,
}

fn p2_warning(p: u64) -> Vec<String> {
    if p == 2 {
        vec!["the group correspondence assumes p > 2; emitted for reference only".into()]
    } else {
        Vec::new()
    }
}

/// The unique indecomposable `(d,2)` group for odd `d >= 3`.
pub fn odd_presentation(p: u64, d: u64) -> Result<GroupPresentation> {
    require_prime(p)?;
    if d < 3 || d.is_multiple_of(2) {
        return Err(Error::invalid(format!("d = {d} is not odd and at least 3")));
    }
    let d_us = d as usize;
    // [a1,a2] = [a3,a4] = ... and [a2,a3] = [a4,a5] = ...
    let chain = |start: usize| -> Vec<(usize, usize)> {
        (start..d_us - 1).step_by(2).map(|i| (i, i + 1)).collect()
    };
    let chains = [chain(0), chain(1)];
    let mut relations = Vec::new();
    for c in &chains {
        if c.len() > 1 {
            relations.push(Relation::Chain { pairs: c.clone() });
        }
    }
    for i in 0..d_us {
        for j in i + 1..d_us {
            if j != i + 1 {
                relations.push(Relation::Trivial { i, j });
            }
        }
    }
    Ok(GroupPresentation {
        p,
        d,
        generators: (1..=d).map(|i| format!("a{i}")).collect(),
        central: Vec::new(),
        relations,
        source: None,
        a_matrix: None,
        b_matrix: None,
        warnings: p2_warning(p),
    })
}

/// `V_f` for one form `f = g^k` of degree `n`, with `g` irreducible.
pub fn presentation_for(g: &BinaryForm, k: u32) -> Result<GroupPresentation> {
    let f = power_form(g, k)?;
    let p = f.p();
    let n = f.degree();
    if f.coeffs()[0] == 0 {
        return Err(Error::invalid(format!("{f} is divisible by y; f(x,1) drops degree")));
    }
    let field = f.field();
    let a = SquareMatrix::identity(field, n);
    let b = companion_matrix(&f.dehomogenize())?;

    let mut generators: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    generators.extend((1..=n).map(|i| format!("y{i}")));
    generators.push("z1".into());
    generators.push("z2".into());
    let (z1, z2) = (2 * n, 2 * n + 1);

    let mut relations = Vec::new();
    for offset in [0, n] {
        for i in 0..n {
            for j in i + 1..n {
                relations.push(Relation::Trivial { i: offset + i, j: offset + j });
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            relations.push(Relation::Commutator {
                i,
                j: n + j,
                word: vec![(z1, a.get(i, j)), (z2, b.get(i, j))],
            });
        }
    }

    Ok(GroupPresentation {
        p,
        d: 2 * n as u64,
        generators,
        central: vec![z1, z2],
        relations,
        source: Some(SourceForm {
            f: f.to_string(),
            g: g.to_string(),
            k,
            f_coeffs: f.coeffs().to_vec(),
            g_coeffs: g.coeffs().to_vec(),
        }),
        a_matrix: Some(a.rows()),
        b_matrix: Some(b.rows()),
        warnings: p2_warning(p),
    })
}

/// One presentation per orbit of forms `g^(n/m)`, `m | n`, taking the
/// lexicographically least irreducible `g` of each orbit (and `x` for `m = 1`).
pub fn even_presentations(p: u64, d: u64, bound: u64) -> Result<Vec<GroupPresentation>> {
    require_prime(p)?;
    if d < 4 || d % 2 == 1 {
        return Err(Error::invalid(format!("d = {d} is not even and at least 4")));
    }
    let n = d / 2;
    let mut out = Vec::new();
    for m in divisors(n)? {
        let k = (n / m) as u32;
        let reps = if m == 1 {
            vec![BinaryForm::new(p, &[1, 0])?]
        } else {
            orbit_count_bfs(p, m as usize, bound)?
                .orbits
                .into_iter()
                .map(|o| o[0].clone())
                .collect()
        };
        for g in &reps {
            out.push(presentation_for(g, k)?);
        }
    }
    let expected = indecomposable_group_count(p, d)?;
    if expected != out.len().into() {
        return Err(Error::invariant(format!(
            "{} presentations for ({d},2) at p = {p}, expected {expected}",
            out.len()
        )));
    }
    Ok(out)
}

/// Odd or even `d` dispatch.
pub fn presentations(p: u64, d: u64, bound: u64) -> Result<Vec<GroupPresentation>> {
    if d % 2 == 1 {
        Ok(vec![odd_presentation(p, d)?])
    } else {
        even_presentations(p, d, bound)
    }
}

impl GroupPresentation {
    pub fn commutator_relation_count(&self) -> usize {
        self.relations
            .iter()
            .filter(|r| matches!(r, Relation::Commutator { .. }))
            .count()
    }

    fn comm(&self, i: usize, j: usize) -> String {
        format!("[{},{}]", self.generators[i], self.generators[j])
    }

    fn word_text(&self, word: &[(usize, u64)]) -> String {
        let parts: Vec<String> = word
            .iter()
            .filter(|(_, e)| *e != 0)
            .map(|&(g, e)| match e {
                1 => self.generators[g].clone(),
                _ => format!("{}^{e}", self.generators[g]),
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }

    pub fn relation_text(&self, rel: &Relation) -> String {
        match rel {
            Relation::Trivial { i, j } => format!("{} = 1", self.comm(*i, *j)),
            Relation::Chain { pairs } => pairs
                .iter()
                .map(|&(i, j)| self.comm(i, j))
                .collect::<Vec<_>>()
                .join(" = "),
            Relation::Commutator { i, j, word } => {
                format!("{} = {}", self.comm(*i, *j), self.word_text(word))
            }
        }
    }

    /// A GAP finitely presented group. Power relations and every commutator
    /// among generators are written out; the class-two exponent-p closure on
    /// arbitrary words is left as comments.
    pub fn to_gap(&self) -> String {
        let p = self.p;
        let mut out = String::new();
        match &self.source {
            Some(s) => out.push_str(&format!(
                "# ({},2) group V_f, p = {p}, f = {} = ({})^{}\n",
                self.d, s.f, s.g, s.k
            )),
            None => out.push_str(&format!("# indecomposable ({},2) group, p = {p}\n", self.d)),
        }
        for w in &self.warnings {
            out.push_str(&format!("# warning: {w}\n"));
        }
        out.push_str("# implied: every element has order dividing p\n");
        out.push_str("# implied: every commutator is central (class two)\n");
        let names: Vec<String> = self.generators.iter().map(|g| format!("\"{g}\"")).collect();
        out.push_str(&format!("F := FreeGroup({});;\n", names.join(", ")));
        for (idx, g) in self.generators.iter().enumerate() {
            out.push_str(&format!("{g} := F.{};;\n", idx + 1));
        }

        let comm = |i: usize, j: usize| {
            format!("Comm({}, {})", self.generators[i], self.generators[j])
        };
        let word = |w: &[(usize, u64)]| {
            let parts: Vec<String> = w
                .iter()
                .filter(|(_, e)| *e != 0)
                .map(|&(g, e)| format!("{}^{e}", self.generators[g]))
                .collect();
            if parts.is_empty() {
                None
            } else {
                Some(parts.join("*"))
            }
        };

        let mut rels: Vec<String> = self.generators.iter().map(|g| format!("{g}^{p}")).collect();
        let mut covered = std::collections::BTreeSet::new();
        for rel in &self.relations {
            match rel {
                Relation::Trivial { i, j } => {
                    covered.insert((*i, *j));
                    rels.push(comm(*i, *j));
                }
                Relation::Chain { pairs } => {
                    for w in pairs.windows(2) {
                        rels.push(format!(
                            "{}*{}^-1",
                            comm(w[0].0, w[0].1),
                            comm(w[1].0, w[1].1)
                        ));
                    }
                    covered.extend(pairs.iter().copied());
                }
                Relation::Commutator { i, j, word: w } => {
                    covered.insert((*i, *j));
                    rels.push(match word(w) {
                        Some(rhs) => format!("{}*({rhs})^-1", comm(*i, *j)),
                        None => comm(*i, *j),
                    });
                }
            }
        }
        for &z in &self.central {
            for g in 0..self.generators.len() {
                let pair = (g.min(z), g.max(z));
                if g != z && covered.insert(pair) {
                    rels.push(comm(pair.0, pair.1));
                }
            }
        }
        out.push_str("rels := [\n");
        out.push_str(
            &rels
                .iter()
                .map(|r| format!("  {r}"))
                .collect::<Vec<_>>()
                .join(",\n"),
        );
        out.push_str("\n];;\nG := F / rels;;\n");
        out
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.source {
            Some(s) => writeln!(
                f,
                "({},2) group, p = {}, f = {} = ({})^{}",
                self.d, self.p, s.f, s.g, s.k
            )?,
            None => writeln!(f, "({},2) group, p = {}", self.d, self.p)?,
        }
        for w in &self.warnings {
            writeln!(f, "  warning: {w}")?;
        }
        writeln!(f, "  generators: {}", self.generators.join(", "))?;
        if let Some(b) = &self.b_matrix {
            let rows: Vec<String> = b
                .iter()
                .map(|r| format!("[{}]", r.iter().map(u64::to_string).collect::<Vec<_>>().join(",")))
                .collect();
            writeln!(f, "  B = [{}]", rows.join(","))?;
        }
        for rel in &self.relations {
            writeln!(f, "  {}", self.relation_text(rel))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::primes_between;
    use crate::DEFAULT_ENUMERATION_BOUND as BOUND;
    use num_bigint::BigInt;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn companion_examples() {
        let f5 = PrimeField::new(5).unwrap();
        let m = companion_matrix(&Polynomial::from_ints(f5, &[-3, 1])).unwrap();
        assert_eq!(m.rows(), vec![vec![3]]);
        let f2 = PrimeField::new(2).unwrap();
        let m = companion_matrix(&Polynomial::from_ints(f2, &[1, 1, 1])).unwrap();
        assert_eq!(m.rows(), vec![vec![0, 1], vec![1, 1]]);
        let m = companion_matrix(&Polynomial::from_ints(f5, &[1, 2, 0, 1])).unwrap();
        assert_eq!(m.rows(), vec![vec![0, 0, 4], vec![1, 0, 3], vec![0, 1, 0]]);
        assert!(companion_matrix(&Polynomial::from_ints(f5, &[1, 2])).is_err());
        assert!(companion_matrix(&Polynomial::from_ints(f5, &[1])).is_err());
    }

    #[test]
    fn companion_random() {
        let mut rng = StdRng::seed_from_u64(7);
        for p in [2u64, 3, 5] {
            let field = PrimeField::new(p).unwrap();
            for _ in 0..100 {
                let n = rng.gen_range(1..=8);
                let mut c: Vec<i64> = (0..n).map(|_| rng.gen_range(0..p as i64)).collect();
                c.push(1);
                let f = Polynomial::from_ints(field, &c);
                assert_eq!(companion_matrix(&f).unwrap().char_poly(), f);
            }
        }
    }

    #[test]
    fn odd_examples() {
        let g = odd_presentation(5, 3).unwrap();
        assert_eq!(g.generators.len(), 3);
        assert_eq!(g.relations, vec![Relation::Trivial { i: 0, j: 2 }]);
        assert_eq!(g.relation_text(&g.relations[0]), "[a1,a3] = 1");

        let g = odd_presentation(5, 5).unwrap();
        assert_eq!(g.relation_text(&g.relations[0]), "[a1,a2] = [a3,a4]");
        assert_eq!(g.relation_text(&g.relations[1]), "[a2,a3] = [a4,a5]");

        let g = odd_presentation(3, 7).unwrap();
        match (&g.relations[0], &g.relations[1]) {
            (Relation::Chain { pairs: a }, Relation::Chain { pairs: b }) => {
                assert_eq!((a.len(), b.len()), (3, 3));
            }
            other => panic!("{other:?}"),
        }
        assert!(odd_presentation(5, 4).is_err());
    }

    #[test]
    fn even_examples() {
        assert_eq!(even_presentations(5, 8, BOUND).unwrap().len(), 5);
        assert_eq!(even_presentations(7, 8, BOUND).unwrap().len(), 6);
        let v = even_presentations(3, 4, BOUND).unwrap();
        assert_eq!(v.len(), 2);
        assert_eq!(v[0].source.as_ref().unwrap().k, 2);
        assert_eq!(v[1].source.as_ref().unwrap().k, 1);
        assert!(even_presentations(5, 7, BOUND).is_err());
    }

    #[test]
    fn even_counts_and_shape() {
        for p in [3u64, 5, 7] {
            for d in [4u64, 6, 8, 10] {
                let v = even_presentations(p, d, BOUND).unwrap();
                assert_eq!(BigInt::from(v.len()), indecomposable_group_count(p, d).unwrap());
                let n = (d / 2) as usize;
                for g in &v {
                    assert_eq!(g.generators.len(), d as usize + 2);
                    assert_eq!(g.commutator_relation_count(), n * n);
                    assert_eq!(g.relations.len(), n * n + n * (n - 1));
                    let s = g.source.as_ref().unwrap();
                    let f = BinaryForm::new(p, &s.f_coeffs.iter().map(|&c| c as i64).collect::<Vec<_>>())
                        .unwrap();
                    let b = companion_matrix(&f.dehomogenize()).unwrap();
                    assert_eq!(Some(b.rows()), g.b_matrix);
                }
            }
        }
    }

    #[test]
    fn p2_emits_with_warning() {
        let v = even_presentations(2, 8, BOUND).unwrap();
        assert_eq!(v.len(), 3);
        assert!(v.iter().all(|g| !g.warnings.is_empty()));
        assert!(primes_between(3, 20).iter().all(|&p| odd_presentation(p, 5).unwrap().warnings.is_empty()));
    }

    #[test]
    fn gap_output_lists_all_generator_commutators() {
        let v = even_presentations(5, 4, BOUND).unwrap();
        let gap = v[0].to_gap();
        assert!(gap.contains("F := FreeGroup(\"x1\", \"x2\", \"y1\", \"y2\", \"z1\", \"z2\");;"));
        assert!(gap.contains("Comm(x1, y1)*(z1^1)^-1"));
        assert!(gap.contains("Comm(x1, z1)"));
        assert!(gap.contains("Comm(z1, z2)"));
        assert!(gap.ends_with("G := F / rels;;\n"));
        let rels = gap.lines().filter(|l| l.starts_with("  ")).count();
        // 6 powers + all 15 pairs of generators
        assert_eq!(rels, 6 + 15);

        let odd = odd_presentation(3, 5).unwrap().to_gap();
        assert!(odd.contains("Comm(a1, a2)*Comm(a3, a4)^-1"));
    }
}
