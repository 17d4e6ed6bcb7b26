//! Homomorphisms from the binary polyhedral groups into finite complex
//! reflection groups whose reflection representation restricts to a given
//! irreducible representation, checked by exact matrix arithmetic.
//!
//! Symmetric-group targets are handled as permutations of `n` points with
//! Coxeter generators the adjacent transpositions; their reflection
//! character is the number of fixed points minus one.

mod catalog;
pub mod words;

use std::sync::OnceLock;

use num_integer::Integer as _;
use rayon::prelude::*;
use serde::Serialize;

use crate::binpoly::model::{closure, eval_word, CycloMat, GroupElement};
use crate::binpoly::{group_data, GroupId};
use crate::error::{Error, Result};
use crate::exactalg::{CyclotomicNumber, Matrix};
use crate::report::Report;
pub use words::{parse_word, GenWord, Presentation, Relation};

/// Images of the generators of a presentation.
#[derive(Debug, Clone)]
pub enum Assignment {
    Matrices(Vec<Matrix<CyclotomicNumber>>),
    /// Generator `k` acts as the transposition `(k k+1)` of `points` points.
    Permutations { points: usize },
}

impl Assignment {
    /// Least common multiple of the conductors of all matrix entries.
    pub fn conductor(&self) -> u32 {
        match self {
            Assignment::Matrices(ms) => ms
                .iter()
                .flat_map(|m| m.to_rows().into_iter().flatten())
                .fold(1, |acc, c| acc.lcm(&c.conductor())),
            Assignment::Permutations { .. } => 1,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Assignment::Matrices(ms) => ms.first().map_or(0, Matrix::rows),
            Assignment::Permutations { points } => points - 1,
        }
    }

    pub fn images(&self) -> Vec<TargetElem> {
        match self {
            Assignment::Matrices(ms) => {
                let n = self.conductor();
                ms.iter()
                    .map(|m| TargetElem::Mat(CycloMat::new(n, m.clone())))
                    .collect()
            }
            Assignment::Permutations { points } => (0..points - 1)
                .map(|k| {
                    let mut p: Vec<u8> = (0..*points as u8).collect();
                    p.swap(k, k + 1);
                    TargetElem::Perm(Perm(p))
                })
                .collect(),
        }
    }
}

/// A permutation of `0..n`, composed right to left.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm(pub Vec<u8>);

impl Perm {
    pub fn fixed_points(&self) -> usize {
        self.0.iter().enumerate().filter(|&(i, &x)| i == x as usize).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TargetElem {
    Mat(CycloMat),
    Perm(Perm),
}

impl GroupElement for TargetElem {
    fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (TargetElem::Mat(a), TargetElem::Mat(b)) => TargetElem::Mat(a.mul(b)),
            (TargetElem::Perm(a), TargetElem::Perm(b)) => {
                TargetElem::Perm(Perm(b.0.iter().map(|&x| a.0[x as usize]).collect()))
            }
            _ => panic!("mixed target elements"),
        }
    }

    fn identity_like(&self) -> Self {
        match self {
            TargetElem::Mat(a) => TargetElem::Mat(a.identity_like()),
            TargetElem::Perm(p) => TargetElem::Perm(Perm((0..p.0.len() as u8).collect())),
        }
    }

    fn inverse(&self) -> Self {
        match self {
            TargetElem::Mat(a) => TargetElem::Mat(a.inverse()),
            TargetElem::Perm(p) => {
                let mut inv = vec![0u8; p.0.len()];
                for (i, &x) in p.0.iter().enumerate() {
                    inv[x as usize] = i as u8;
                }
                TargetElem::Perm(Perm(inv))
            }
        }
    }
}

impl TargetElem {
    /// Trace on the reflection representation.
    pub fn trace(&self) -> CyclotomicNumber {
        match self {
            TargetElem::Mat(m) => m.trace(),
            TargetElem::Perm(p) => CyclotomicNumber::from_i64(p.fixed_points() as i64 - 1),
        }
    }

    /// `rank(g - I) = 1`; for permutations, being a transposition.
    pub fn is_pseudo_reflection(&self) -> bool {
        match self {
            TargetElem::Mat(m) => {
                let id = Matrix::identity(m.size());
                m.m.sub(&id).rank() == 1
            }
            TargetElem::Perm(p) => p.0.len() - p.fixed_points() == 2,
        }
    }

    pub fn is_minus_identity(&self) -> bool {
        match self {
            TargetElem::Mat(m) => m.minus_identity(),
            TargetElem::Perm(_) => false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct HomEntry {
    pub group: GroupId,
    pub irrep: String,
    pub presentation: Presentation,
    pub assignment: Assignment,
    pub alpha_text: String,
    pub beta_text: String,
    pub alpha_word: GenWord,
    pub beta_word: GenWord,
    /// Order of the image of the group: `|G|` for embeddings, the order of
    /// the quotient otherwise.
    pub image_order: usize,
}

impl HomEntry {
    pub fn title(&self) -> String {
        format!("({}, {}) -> {}", self.group, self.irrep, self.presentation.name)
    }
}

/// All 24 entries, in group then irrep order.
pub fn catalog() -> Result<&'static [HomEntry]> {
    static CATALOG: OnceLock<std::result::Result<Vec<HomEntry>, String>> = OnceLock::new();
    CATALOG
        .get_or_init(|| catalog::build().map_err(|e| e.to_string()))
        .as_deref()
        .map_err(|e| Error::Consistency(e.clone()))
}

pub fn find_entry(group: GroupId, irrep: &str) -> Result<&'static HomEntry> {
    catalog()?
        .iter()
        .find(|e| e.group == group && e.irrep == irrep)
        .ok_or_else(|| Error::Unsupported(format!("no catalog entry for ({group}, {irrep})")))
}

fn eval(gens: &[TargetElem], w: &GenWord) -> TargetElem {
    w.iter().fold(gens[0].identity_like(), |acc, &(g, e)| {
        acc.mul(&gens[g].pow(i64::from(e)))
    })
}

/// Check each relation and the pseudo-reflection property of each
/// generator image.
pub fn check_relations(p: &Presentation, a: &Assignment) -> Result<Report> {
    let gens = a.images();
    if gens.len() != p.generators.len() {
        return Err(Error::Consistency(format!(
            "{} generators, {} images",
            p.generators.len(),
            gens.len()
        )));
    }
    if let Assignment::Matrices(ms) = a {
        let d = a.dim();
        if ms.iter().any(|m| m.rows() != d || m.cols() != d) {
            return Err(Error::Consistency("generator images of different sizes".into()));
        }
    }
    let mut r = Report::new(format!("relations of {}", p.name));
    for rel in &p.relations {
        r.check(rel.text.clone(), eval(&gens, &rel.lhs) == eval(&gens, &rel.rhs));
    }
    for (name, g) in p.generators.iter().zip(&gens) {
        r.check(format!("{name} is a reflection"), g.is_pseudo_reflection());
    }
    Ok(r)
}

/// `(A, B, C, Z)`: images of `alpha`, `beta`, `gamma = beta^-1 alpha^(p-1)`
/// and `alpha^p`.
pub fn hom_images(e: &HomEntry) -> Result<[TargetElem; 4]> {
    let (p, _, _) = group_data(e.group)?
        .pqr
        .ok_or_else(|| Error::Unsupported(format!("{} has no (p,q,r)", e.group)))?;
    let gens = e.assignment.images();
    let a = eval(&gens, &e.alpha_word);
    let b = eval(&gens, &e.beta_word);
    let c = b.inverse().mul(&a.pow(i64::from(p) - 1));
    let z = a.pow(i64::from(p));
    Ok([a, b, c, z])
}

pub fn verify_entry(e: &HomEntry) -> Result<Report> {
    let g = group_data(e.group)?;
    let (p, q, r) = g.pqr.expect("polyhedral");
    let irrep = g
        .irrep_index(&e.irrep)
        .ok_or_else(|| Error::Unsupported(format!("{} has no irrep {}", e.group, e.irrep)))?;
    let info = &g.irreps[irrep];
    let mut rep = Report::new(format!(
        "{}  alpha -> {}, beta -> {}",
        e.title(),
        e.alpha_text,
        e.beta_text
    ));
    rep.absorb("", check_relations(&e.presentation, &e.assignment)?);
    rep.push(
        "reflection representation dimension",
        e.assignment.dim() == info.dim,
        format!("{}", e.assignment.dim()),
    );

    let [a, b, c, z] = hom_images(e)?;
    rep.check(
        format!("A^{p} = B^{q} = C^{r} = Z"),
        b.pow(i64::from(q)) == z && c.pow(i64::from(r)) == z,
    );
    rep.check(
        "Z central, Z^2 = 1",
        z.mul(&a) == a.mul(&z) && z.mul(&b) == b.mul(&z) && z.mul(&z).is_identity(),
    );
    let spinorial = info.spinorial.unwrap_or(false);
    rep.push(
        "Z = -1 exactly for spinorial irreps",
        if spinorial {
            z.is_minus_identity()
        } else {
            z.is_identity()
        },
        if z.is_identity() { "Z = 1" } else { "Z = -1" },
    );
    let alpha_order = 2 * p as usize;
    let beta_order = 2 * q as usize;
    rep.push(
        "orders of A, B divide those of alpha, beta",
        alpha_order.is_multiple_of(a.order()) && beta_order.is_multiple_of(b.order()),
        format!("|A| = {}, |B| = {}", a.order(), b.order()),
    );
    for (k, class) in g.classes.iter().enumerate() {
        let x = eval_word(&a, &b, &class.word);
        let tr = x.trace();
        let want = &info.values[k];
        rep.push(
            format!("trace on {}", class.name),
            tr == *want,
            if tr == *want {
                tr.to_string()
            } else {
                format!("{tr}, character value {want}")
            },
        );
    }
    let image = closure(&[a, b], g.order).map(|v| v.len());
    rep.push(
        "order of the image",
        image == Some(e.image_order) && g.order % e.image_order == 0,
        match image {
            Some(k) => format!("{k}, expected {}", e.image_order),
            None => format!("more than {} elements", g.order),
        },
    );
    Ok(rep)
}

/// Verify every catalog entry, optionally for one group only.
pub fn verify_catalog(group: Option<GroupId>) -> Result<Vec<Report>> {
    catalog()?
        .par_iter()
        .filter(|e| group.is_none_or(|g| g == e.group))
        .map(verify_entry)
        .collect()
}

/// `Serialize`-friendly summary of one entry.
#[derive(Debug, Clone, Serialize)]
pub struct EntrySummary {
    pub group: GroupId,
    pub irrep: String,
    pub target: String,
    pub alpha: String,
    pub beta: String,
    pub dim: usize,
    pub conductor: u32,
    pub image_order: usize,
}

impl From<&HomEntry> for EntrySummary {
    fn from(e: &HomEntry) -> Self {
        EntrySummary {
            group: e.group,
            irrep: e.irrep.clone(),
            target: e.presentation.name.clone(),
            alpha: e.alpha_text.clone(),
            beta: e.beta_text.clone(),
            dim: e.assignment.dim(),
            conductor: e.assignment.conductor(),
            image_order: e.image_order,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_has_24_entries() {
        let c = catalog().unwrap();
        assert_eq!(c.len(), 24);
        assert_eq!(find_entry(GroupId::Tetrahedral, "2'").unwrap().assignment.conductor(), 24);
        assert_eq!(find_entry(GroupId::Icosahedral, "2").unwrap().assignment.conductor(), 20);
        assert_eq!(find_entry(GroupId::Tetrahedral, "2").unwrap().assignment.conductor(), 8);
    }

    #[test]
    fn every_entry_verifies() {
        for r in verify_catalog(None).unwrap() {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn trivial_entry_images() {
        let e = find_entry(GroupId::Tetrahedral, "1").unwrap();
        let [a, b, _, _] = hom_images(e).unwrap();
        assert!(a.is_identity() && b.is_identity());
    }

    #[test]
    fn mismatched_sizes_rejected() {
        let p = Presentation::parse("X", "rs", "r^2=1").unwrap();
        let a = Assignment::Matrices(vec![
            Matrix::identity(1),
            Matrix::identity(2),
        ]);
        assert!(check_relations(&p, &a).is_err());
    }
}
