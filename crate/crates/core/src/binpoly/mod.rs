//! Finite subgroups of SU(2) as class-function data.
//!
//! The cyclic and binary dihedral tables are generated from explicit
//! irreducible representations (images of the generators `alpha`, `beta`);
//! the tetrahedral, octahedral and icosahedral tables are entered verbatim
//! in [`tables`]. In every case class sizes, element orders and power maps
//! are derived from a concrete matrix model by evaluating the class words.

mod mckay;
mod oracles;
pub mod model;
mod repring;
mod tables;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer as _;
use serde::{Serialize, Serializer};

use crate::diagrams::DiagramType;
use crate::error::{Error, Result};
use crate::exactalg::{CyclotomicNumber, Matrix, Ring};
use model::{eval_word, model_classes, CycloMat, GroupElement, ModMat2, ModelClasses};

pub use mckay::{mckay_adjacency, mckay_graph, McKayVerdict};
pub use model::quaternion;
pub use oracles::{realize_matrix_group, verify_sl2_model};
pub use repring::RepElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupId {
    Cyclic(u32),
    BinaryDihedral(u32),
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

impl GroupId {
    /// The affine diagram attached by the McKay correspondence.
    pub fn diagram(&self) -> DiagramType {
        match *self {
            GroupId::Cyclic(n) => DiagramType::a(n as usize - 1),
            GroupId::BinaryDihedral(p) => DiagramType::d(p as usize + 2),
            GroupId::Tetrahedral => DiagramType::e(6),
            GroupId::Octahedral => DiagramType::e(7),
            GroupId::Icosahedral => DiagramType::e(8),
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            GroupId::Cyclic(n) => n as usize,
            GroupId::BinaryDihedral(p) => 4 * p as usize,
            GroupId::Tetrahedral => 24,
            GroupId::Octahedral => 48,
            GroupId::Icosahedral => 120,
        }
    }

    pub fn polyhedral() -> [GroupId; 3] {
        [GroupId::Tetrahedral, GroupId::Octahedral, GroupId::Icosahedral]
    }

    fn validate(&self) -> Result<()> {
        match *self {
            GroupId::Cyclic(0) => Err(Error::OutOfRange("cyclic group order must be >= 1".into())),
            GroupId::BinaryDihedral(p) if p < 2 => Err(Error::OutOfRange(
                "binary dihedral parameter must be >= 2".into(),
            )),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupId::Cyclic(n) => write!(f, "C{n}"),
            GroupId::BinaryDihedral(p) => write!(f, "BD{p}"),
            GroupId::Tetrahedral => write!(f, "T"),
            GroupId::Octahedral => write!(f, "O"),
            GroupId::Icosahedral => write!(f, "I"),
        }
    }
}

impl Serialize for GroupId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for GroupId {
    type Err = Error;

    /// `T`, `O`, `I`, `C<n>` or `Z<n>`, `BD<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let u = s.trim().to_ascii_uppercase();
        let bad = || Error::Parse(format!("unknown group {s:?}"));
        let id = match u.as_str() {
            "T" => GroupId::Tetrahedral,
            "O" => GroupId::Octahedral,
            "I" => GroupId::Icosahedral,
            _ => {
                if let Some(rest) = u.strip_prefix("BD") {
                    GroupId::BinaryDihedral(rest.parse().map_err(|_| bad())?)
                } else if let Some(rest) = u.strip_prefix('C').or_else(|| u.strip_prefix('Z')) {
                    GroupId::Cyclic(rest.parse().map_err(|_| bad())?)
                } else {
                    return Err(bad());
                }
            }
        };
        id.validate()?;
        Ok(id)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    Alpha,
    Beta,
}

/// Word in the generators as `(generator, exponent)` factors.
pub type Word = Vec<(Gen, i32)>;

pub fn word_to_string(w: &Word) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter()
        .map(|&(g, e)| {
            let s = match g {
                Gen::Alpha => "α",
                Gen::Beta => "β",
            };
            if e == 1 {
                s.to_string()
            } else {
                format!("{s}^{e}")
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjClass {
    pub name: String,
    pub size: usize,
    #[serde(serialize_with = "ser_word")]
    pub word: Word,
    pub order: usize,
}

fn ser_word<S: Serializer>(w: &Word, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&word_to_string(w))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrrepInfo {
    pub name: String,
    pub dim: usize,
    pub values: Vec<CyclotomicNumber>,
    /// Whether the central element `-I` acts by `-1`; `None` when the group
    /// does not contain `-I`.
    pub spinorial: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupData {
    pub id: GroupId,
    pub order: usize,
    /// `(p, q, r)` of the presentation `alpha^p = beta^q = gamma^r =
    /// alpha beta gamma`, for the binary polyhedral groups.
    pub pqr: Option<(u32, u32, u32)>,
    pub classes: Vec<ConjClass>,
    pub irreps: Vec<IrrepInfo>,
    /// `power_map[m][c]`: class of `g^m` for `g` in class `c`, with `m`
    /// taken modulo the exponent.
    #[serde(skip)]
    pub power_map: Vec<Vec<usize>>,
    pub exponent: usize,
    /// The defining two-dimensional representation `C^2`.
    pub standard: RepElement,
    pub st_index: Option<usize>,
    pub trivial_index: usize,
    pub central_index: Option<usize>,
}

fn cache() -> &'static Mutex<HashMap<GroupId, Arc<GroupData>>> {
    static CACHE: OnceLock<Mutex<HashMap<GroupId, Arc<GroupData>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Class-function data of a group (cached).
pub fn group_data(id: GroupId) -> Result<Arc<GroupData>> {
    id.validate()?;
    if let Some(g) = cache().lock().expect("group cache poisoned").get(&id) {
        return Ok(Arc::clone(g));
    }
    let data = Arc::new(build(id)?);
    cache()
        .lock()
        .expect("group cache poisoned")
        .insert(id, Arc::clone(&data));
    Ok(data)
}

fn build(id: GroupId) -> Result<GroupData> {
    match id {
        GroupId::Tetrahedral => build_polyhedral(id, &tables::TETRAHEDRAL),
        GroupId::Octahedral => build_polyhedral(id, &tables::OCTAHEDRAL),
        GroupId::Icosahedral => build_polyhedral(id, &tables::ICOSAHEDRAL),
        GroupId::Cyclic(n) => build_cyclic(n),
        GroupId::BinaryDihedral(p) => build_dihedral(p),
    }
}

fn classes_from_model(names: &[String], words: &[Word], mc: &ModelClasses) -> Vec<ConjClass> {
    names
        .iter()
        .zip(words)
        .enumerate()
        .map(|(c, (name, w))| ConjClass {
            name: name.clone(),
            size: mc.sizes[c],
            word: w.clone(),
            order: mc.orders[c],
        })
        .collect()
}

fn finish(
    id: GroupId,
    pqr: Option<(u32, u32, u32)>,
    classes: Vec<ConjClass>,
    mc: ModelClasses,
    irreps: Vec<(String, Vec<CyclotomicNumber>)>,
    central_index: Option<usize>,
    standard_char: Option<Vec<CyclotomicNumber>>,
) -> Result<GroupData> {
    if mc.group_order != id.order() {
        return Err(Error::Consistency(format!(
            "model of {id} has order {}, expected {}",
            mc.group_order,
            id.order()
        )));
    }
    let irreps: Vec<IrrepInfo> = irreps
        .into_iter()
        .map(|(name, values)| {
            let dim = values[0].to_i64().expect("dimension is an integer") as usize;
            let spinorial = central_index.map(|z| values[z] == CyclotomicNumber::from_i64(-(dim as i64)));
            IrrepInfo {
                name,
                dim,
                values,
                spinorial,
            }
        })
        .collect();
    let trivial_index = irreps
        .iter()
        .position(|r| r.values.iter().all(|v| v.is_one()))
        .ok_or_else(|| Error::Consistency(format!("{id} has no trivial irrep")))?;
    let mut g = GroupData {
        id,
        order: mc.group_order,
        pqr,
        classes,
        irreps,
        power_map: mc.power_map,
        exponent: mc.exponent,
        standard: RepElement::zero(0),
        st_index: None,
        trivial_index,
        central_index,
    };
    let st_char = match standard_char {
        Some(c) => c,
        None => {
            let i = g
                .irrep_index("2")
                .ok_or_else(|| Error::Consistency(format!("{id} has no irrep named 2")))?;
            g.irreps[i].values.clone()
        }
    };
    g.standard = g.decompose(&st_char)?;
    g.st_index = g.standard.as_single_irrep();
    Ok(g)
}

fn build_polyhedral(id: GroupId, t: &tables::PolyhedralTable) -> Result<GroupData> {
    let (prime, a, b) = t.field_model;
    let alpha = ModMat2::new(prime, a);
    let beta = ModMat2::new(prime, b);
    let words: Vec<Word> = t.class_words.iter().map(|w| tables::word(w)).collect();
    let mc = model_classes(&alpha, &beta, &words, id.order())
        .map_err(|e| Error::Consistency(format!("{id}: {e}")))?;
    let names: Vec<String> = t.class_names.iter().map(|s| s.to_string()).collect();
    let classes = classes_from_model(&names, &words, &mc);
    let irreps = t
        .irrep_names
        .iter()
        .zip(t.rows)
        .map(|(name, row)| {
            let values = row
                .iter()
                .map(|e| tables::parse_entry(e))
                .collect::<Result<Vec<_>>>()?;
            Ok((name.to_string(), values))
        })
        .collect::<Result<Vec<_>>>()?;
    let central = names.iter().position(|n| n == "{1̄}");
    finish(id, Some(t.pqr), classes, mc, irreps, central, None)
}

fn cmat(conductor: u32, rows: Vec<Vec<CyclotomicNumber>>) -> CycloMat {
    CycloMat::from_rows(conductor, rows)
}

fn scalar1(conductor: u32, v: CyclotomicNumber) -> CycloMat {
    cmat(conductor, vec![vec![v]])
}

fn diag2(conductor: u32, a: CyclotomicNumber, b: CyclotomicNumber) -> CycloMat {
    let z = CyclotomicNumber::zero();
    cmat(conductor, vec![vec![a, z.clone()], vec![z, b]])
}

/// Character of an explicit representation on the class words.
fn character_of(alpha: &CycloMat, beta: &CycloMat, words: &[Word]) -> Vec<CyclotomicNumber> {
    words
        .iter()
        .map(|w| eval_word(alpha, beta, w).trace())
        .collect()
}

fn power_name(k: u32) -> String {
    if k == 1 {
        "[α]".to_string()
    } else {
        format!("[α^{k}]")
    }
}

fn build_cyclic(n: u32) -> Result<GroupData> {
    let conductor = (2 * n).lcm(&4);
    let z = |k: i64| CyclotomicNumber::zeta(n, k);
    let alpha = diag2(conductor, z(1), z(-1));
    let beta = alpha.inverse();
    let words: Vec<Word> = (0..n)
        .map(|k| {
            if k == 0 {
                vec![]
            } else {
                vec![(Gen::Alpha, k as i32)]
            }
        })
        .collect();
    let names: Vec<String> = (0..n)
        .map(|k| if k == 0 { "{1}".to_string() } else { power_name(k) })
        .collect();
    let mc = model_classes(&alpha, &beta, &words, n as usize)
        .map_err(|e| Error::Consistency(format!("C{n}: {e}")))?;
    let classes = classes_from_model(&names, &words, &mc);
    let st = character_of(&alpha, &beta, &words);
    let irreps = (0..n)
        .map(|j| {
            let a = scalar1(conductor, z(i64::from(j)));
            let b = a.inverse();
            let name = if j == 0 { "1".to_string() } else { format!("x{j}") };
            (name, character_of(&a, &b, &words))
        })
        .collect();
    let central = n.is_multiple_of(2).then_some((n / 2) as usize);
    finish(GroupId::Cyclic(n), None, classes, mc, irreps, central, Some(st))
}

fn build_dihedral(p: u32) -> Result<GroupData> {
    let id = GroupId::BinaryDihedral(p);
    let conductor = (2 * p).lcm(&4);
    let z = |k: i64| CyclotomicNumber::zeta(2 * p, k);
    let c = CyclotomicNumber::from_i64;
    let alpha = diag2(conductor, z(1), z(-1));
    let beta = cmat(conductor, vec![vec![c(0), c(-1)], vec![c(1), c(0)]]);
    let pi = p as i32;
    let mut words: Vec<Word> = vec![vec![], vec![(Gen::Alpha, pi)]];
    let mut names = vec!["{1}".to_string(), "{1̄}".to_string()];
    for j in 1..p {
        words.push(vec![(Gen::Alpha, j as i32)]);
        names.push(power_name(j));
    }
    words.push(vec![(Gen::Beta, 1)]);
    names.push("[β]".to_string());
    words.push(vec![(Gen::Beta, -1), (Gen::Alpha, pi - 1)]);
    names.push("[γ]".to_string());
    let mc = model_classes(&alpha, &beta, &words, id.order())
        .map_err(|e| Error::Consistency(format!("{id}: {e}")))?;
    let classes = classes_from_model(&names, &words, &mc);
    let st = character_of(&alpha, &beta, &words);

    let one_dim = |name: &str, a: CyclotomicNumber, b: CyclotomicNumber| {
        let a = scalar1(conductor, a);
        let b = scalar1(conductor, b);
        (name.to_string(), character_of(&a, &b, &words))
    };
    let b1 = if p.is_multiple_of(2) {
        c(1)
    } else {
        CyclotomicNumber::i()
    };
    let mut irreps = vec![one_dim("1", c(1), c(1)), one_dim("1b", c(1), c(-1))];
    for k in 1..p {
        let ki = i64::from(k);
        let a = diag2(conductor, z(ki), z(-ki));
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let b = cmat(conductor, vec![vec![c(0), c(sign)], vec![c(1), c(0)]]);
        irreps.push((format!("2_{k}"), character_of(&a, &b, &words)));
    }
    irreps.push(one_dim("1c", c(-1), b1.clone()));
    irreps.push(one_dim("1d", c(-1), b1.neg()));
    finish(id, Some((p, 2, 2)), classes, mc, irreps, Some(1), Some(st))
}

impl GroupData {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn num_irreps(&self) -> usize {
        self.irreps.len()
    }

    pub fn irrep_index(&self, name: &str) -> Option<usize> {
        self.irreps.iter().position(|r| r.name == name)
    }

    pub fn irrep_names(&self) -> Vec<String> {
        self.irreps.iter().map(|r| r.name.clone()).collect()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.irreps.iter().map(|r| r.dim).collect()
    }

    pub fn has_central_minus_one(&self) -> bool {
        self.central_index.is_some()
    }

    /// Class of `g^m` for `g` in class `c` (`m` may be negative).
    pub fn power_class(&self, c: usize, m: i64) -> usize {
        let e = m.rem_euclid(self.exponent as i64) as usize;
        self.power_map[e][c]
    }

    /// Character table as a matrix (rows irreps, columns classes).
    pub fn table(&self) -> Matrix<CyclotomicNumber> {
        Matrix::from_rows(self.irreps.iter().map(|r| r.values.clone()).collect())
    }

    /// `sum_c |c| chi(c) conj(psi(c)) = |G| delta` for all irrep pairs.
    pub fn row_orthogonality(&self) -> bool {
        let n = self.num_irreps();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let s = self.inner(&self.irreps[i].values, &self.irreps[j].values);
                s == CyclotomicNumber::from_i64(i64::from(i == j))
            })
        })
    }

    /// `sum_chi chi(c) conj(chi(d)) = delta_cd |G| / |c|`.
    pub fn column_orthogonality(&self) -> bool {
        let k = self.num_classes();
        (0..k).all(|c| {
            (0..k).all(|d| {
                let s = self.irreps.iter().fold(CyclotomicNumber::zero(), |acc, r| {
                    acc.add(&r.values[c].mul(&r.values[d].conj()))
                });
                let want = if c == d {
                    (self.order / self.classes[c].size) as i64
                } else {
                    0
                };
                s == CyclotomicNumber::from_i64(want)
            })
        })
    }

    /// `|G| = 4/(1/p + 1/q + 1/r - 1)` and the non-central class sizes
    /// `|G|/2p`, `|G|/2q`, `|G|/2r`.
    pub fn presentation_facts(&self) -> bool {
        let Some((p, q, r)) = self.pqr else {
            return true;
        };
        let (p, q, r) = (i64::from(p), i64::from(q), i64::from(r));
        let order = crate::exactalg::int(4)
            / (crate::exactalg::rat(1, p) + crate::exactalg::rat(1, q) + crate::exactalg::rat(1, r)
                - crate::exactalg::int(1));
        let g = self.order as i64;
        let size_of = |name: &str| {
            self.classes
                .iter()
                .find(|c| c.name == name)
                .map(|c| c.size as i64)
        };
        order == crate::exactalg::int(g)
            && size_of("[α]") == Some(g / (2 * p))
            && size_of("[β]") == Some(g / (2 * q))
            && size_of("[γ]") == Some(g / (2 * r))
            && self.classes.iter().map(|c| c.size).sum::<usize>() == self.order
    }

    /// Check `alpha^p = beta^q = gamma^r = alpha beta gamma` (central,
    /// squaring to 1) in a concrete 2x2 model given by generator images.
    pub fn relations_hold_in<E: GroupElement>(&self, alpha: &E, beta: &E) -> bool {
        let Some((p, q, r)) = self.pqr else {
            return true;
        };
        let gamma = beta.inverse().mul(&alpha.pow(i64::from(p) - 1));
        let z = alpha.pow(i64::from(p));
        beta.pow(i64::from(q)) == z
            && gamma.pow(i64::from(r)) == z
            && alpha.mul(beta).mul(&gamma) == z
            && z.mul(&z).is_identity()
    }
}

/// The 2x2 models over finite fields from which the polyhedral class data
/// are derived; `(alpha, beta)`.
pub fn finite_field_model(id: GroupId) -> Option<(ModMat2, ModMat2)> {
    let t = match id {
        GroupId::Tetrahedral => &tables::TETRAHEDRAL,
        GroupId::Octahedral => &tables::OCTAHEDRAL,
        GroupId::Icosahedral => &tables::ICOSAHEDRAL,
        _ => return None,
    };
    let (p, a, b) = t.field_model;
    Some((ModMat2::new(p, a), ModMat2::new(p, b)))
}

/// SU(2) generators `(alpha, beta)` as cyclotomic 2x2 matrices.
pub fn su2_generators(id: GroupId) -> Result<(CycloMat, CycloMat)> {
    id.validate()?;
    let c = CyclotomicNumber::from_i64;
    let h = crate::exactalg::rat(1, 2);
    let half = |x: CyclotomicNumber| x.scale(&h);
    Ok(match id {
        GroupId::Cyclic(n) => {
            let conductor = (2 * n).lcm(&4);
            let a = diag2(
                conductor,
                CyclotomicNumber::zeta(n, 1),
                CyclotomicNumber::zeta(n, -1),
            );
            let b = a.inverse();
            (a, b)
        }
        GroupId::BinaryDihedral(p) => {
            let conductor = (2 * p).lcm(&4);
            let a = diag2(
                conductor,
                CyclotomicNumber::zeta(2 * p, 1),
                CyclotomicNumber::zeta(2 * p, -1),
            );
            let b = cmat(conductor, vec![vec![c(0), c(-1)], vec![c(1), c(0)]]);
            (a, b)
        }
        GroupId::Tetrahedral => (
            quaternion(4, &half(c(1)), &half(c(1)), &half(c(1)), &half(c(1))),
            quaternion(4, &half(c(1)), &half(c(1)), &half(c(1)), &half(c(-1))),
        ),
        GroupId::Octahedral => {
            let s = CyclotomicNumber::sqrt2().scale(&h);
            (
                quaternion(8, &s, &s, &c(0), &c(0)),
                quaternion(8, &half(c(1)), &half(c(1)), &half(c(1)), &half(c(1))),
            )
        }
        GroupId::Icosahedral => {
            let tau = CyclotomicNumber::golden();
            (
                quaternion(
                    20,
                    &half(tau.clone()),
                    &half(tau.sub(&c(1))),
                    &half(c(1)),
                    &c(0),
                ),
                quaternion(20, &half(c(1)), &half(c(1)), &half(c(1)), &half(c(1))),
            )
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_group_ids() {
        assert_eq!("I".parse::<GroupId>().unwrap(), GroupId::Icosahedral);
        assert_eq!("c12".parse::<GroupId>().unwrap(), GroupId::Cyclic(12));
        assert_eq!("BD5".parse::<GroupId>().unwrap(), GroupId::BinaryDihedral(5));
        assert!("BD1".parse::<GroupId>().is_err());
        assert!("X".parse::<GroupId>().is_err());
    }

    #[test]
    fn tetrahedral_classes() {
        let g = group_data(GroupId::Tetrahedral).unwrap();
        let sizes: Vec<usize> = g.classes.iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 6, 1, 4, 4, 4, 4]);
        let orders: Vec<usize> = g.classes.iter().map(|c| c.order).collect();
        assert_eq!(orders, vec![1, 4, 2, 3, 3, 6, 6]);
        assert_eq!(g.st_index, g.irrep_index("2"));
        assert!(g.row_orthogonality() && g.column_orthogonality());
    }

    #[test]
    fn dihedral_and_cyclic_tables_are_orthogonal() {
        for p in 2..=8 {
            let g = group_data(GroupId::BinaryDihedral(p)).unwrap();
            assert!(g.row_orthogonality(), "BD{p}");
            assert!(g.column_orthogonality(), "BD{p}");
            assert_eq!(g.st_index, g.irrep_index("2_1"));
            assert!(g.presentation_facts(), "BD{p}");
        }
        for n in 1..=12 {
            let g = group_data(GroupId::Cyclic(n)).unwrap();
            assert!(g.row_orthogonality() && g.column_orthogonality(), "C{n}");
            assert_eq!(g.num_classes(), n as usize);
        }
    }

    #[test]
    fn su2_generators_satisfy_relations() {
        for id in GroupId::polyhedral() {
            let g = group_data(id).unwrap();
            let (a, b) = su2_generators(id).unwrap();
            assert!(g.relations_hold_in(&a, &b), "{id}");
            let (fa, fb) = finite_field_model(id).unwrap();
            assert!(g.relations_hold_in(&fa, &fb), "{id}");
        }
    }
}
