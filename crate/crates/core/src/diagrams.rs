//! Catalog of Coxeter-Dynkin types.
//!
//! Affine diagrams are built first; the finite diagram is the affine one with
//! the affine vertex (always index 0) deleted. Conventions per family:
//!
//! * `A_l`: affine vertices `0..=l` on a cycle. Affine `A_1` is a double
//!   edge (off-diagonal `-2`), affine `A_0` is the `1x1` matrix `(0)`, so
//!   that quantization yields `(1-t)^2`.
//! * `D_l`: vertices `0` and `1` hang off `2`, a chain `2..=l-2`, and
//!   `l-1`, `l` hang off `l-2`.
//! * `B_l`: like `D_l` at the start, a chain `2..=l`, double bond `(l-1, l)`.
//! * `C_l`: a chain `0..=l` with double bonds `(0,1)` and `(l-1, l)`.
//! * `F4`: `0 - 1 - 2 => 3 - 4`; `G2`: `0 - 1 =>> 2`.
//!
//! For a multiple bond `(i, j)` listed in the order above, `C[i][j] = -1`
//! and `C[j][i]` is `-2` or `-3`. All folded diagrams are trees, so the
//! determinant identities do not see this orientation.
//!
//! Simply-laced types are labeled by McKay irrep names: `E6`, `E7`, `E8`
//! by the names used for the binary tetrahedral, octahedral and icosahedral
//! groups, `A_l` by the characters `1, x1, ..., xl` of the cyclic group of
//! order `l+1`, `D_l` by the irreps of the binary dihedral group of order
//! `4(l-2)`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E6,
    E7,
    E8,
    C,
    B,
    F4,
    G2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramType {
    family: Family,
    rank: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Affine,
    Finite,
}

impl DiagramType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => true,
            Family::D => rank >= 4,
            Family::C => rank >= 2,
            Family::B => rank >= 3,
            Family::E6 => rank == 6,
            Family::E7 => rank == 7,
            Family::E8 => rank == 8,
            Family::F4 => rank == 4,
            Family::G2 => rank == 2,
        };
        if ok {
            Ok(DiagramType { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: format!("{family:?}"),
                rank,
            })
        }
    }

    pub fn a(l: usize) -> Self {
        Self::new(Family::A, l).expect("valid rank")
    }

    pub fn d(l: usize) -> Self {
        Self::new(Family::D, l).expect("valid rank")
    }

    pub fn e(l: usize) -> Self {
        let family = match l {
            6 => Family::E6,
            7 => Family::E7,
            8 => Family::E8,
            _ => panic!("no exceptional type E{l}"),
        };
        DiagramType { family, rank: l }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(
            self.family,
            Family::A | Family::D | Family::E6 | Family::E7 | Family::E8
        )
    }

    /// Every catalog type up to the given rank for the infinite families.
    pub fn catalog(max_rank: usize) -> Vec<DiagramType> {
        let mut out = Vec::new();
        for l in 0..=max_rank {
            out.push(DiagramType::a(l));
        }
        for l in 4..=max_rank {
            out.push(DiagramType::d(l));
        }
        for l in [6, 7, 8] {
            out.push(DiagramType::e(l));
        }
        for l in 2..=max_rank {
            out.push(DiagramType::new(Family::C, l).expect("valid"));
        }
        for l in 3..=max_rank {
            out.push(DiagramType::new(Family::B, l).expect("valid"));
        }
        out.push(DiagramType::new(Family::F4, 4).expect("valid"));
        out.push(DiagramType::new(Family::G2, 2).expect("valid"));
        out
    }

    /// Simply-laced catalog types (the McKay side) up to the given rank.
    pub fn simply_laced_catalog(max_rank: usize) -> Vec<DiagramType> {
        Self::catalog(max_rank)
            .into_iter()
            .filter(|d| d.is_simply_laced())
            .collect()
    }
}

impl fmt::Display for DiagramType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.rank),
            Family::D => write!(f, "D{}", self.rank),
            Family::C => write!(f, "C{}", self.rank),
            Family::B => write!(f, "B{}", self.rank),
            Family::E6 => write!(f, "E6"),
            Family::E7 => write!(f, "E7"),
            Family::E8 => write!(f, "E8"),
            Family::F4 => write!(f, "F4"),
            Family::G2 => write!(f, "G2"),
        }
    }
}

impl Serialize for DiagramType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for DiagramType {
    type Err = Error;

    /// Accepts `E8`, `e8`, `A_3`, `D4`, ...
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("unknown diagram type {s:?}"));
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let rest: String = chars.collect();
        let rest = rest.strip_prefix('_').unwrap_or(&rest);
        if rest.is_empty() || !rest.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let rank: usize = rest.parse().map_err(|_| bad())?;
        let family = match (letter, rank) {
            ('A', _) => Family::A,
            ('D', _) => Family::D,
            ('C', _) => Family::C,
            ('B', _) => Family::B,
            ('E', 6) => Family::E6,
            ('E', 7) => Family::E7,
            ('E', 8) => Family::E8,
            ('F', 4) => Family::F4,
            ('G', 2) => Family::G2,
            _ => return Err(bad()),
        };
        DiagramType::new(family, rank)
    }
}

/// Integer Cartan matrix together with its vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    pub diagram: DiagramType,
    pub kind: Kind,
    pub entries: Matrix<i64>,
    /// Index of the affine vertex (always 0) for affine matrices.
    pub affine_vertex: Option<usize>,
    pub labels: Vec<String>,
}

/// An edge `(i, j, m)`: `C[i][j] = -1`, `C[j][i] = -m`; `m = 1` is simple.
type Edge = (usize, usize, i64);

fn affine_edges(dt: DiagramType) -> Vec<Edge> {
    let l = dt.rank;
    let chain = |from: usize, to: usize| (from..to).map(|i| (i, i + 1, 1)).collect::<Vec<_>>();
    match dt.family {
        Family::A => match l {
            0 => vec![],
            1 => vec![(0, 1, 2)],
            _ => {
                let mut e = chain(0, l);
                e.push((l, 0, 1));
                e
            }
        },
        Family::D => {
            let mut e = vec![(0, 2, 1), (1, 2, 1)];
            e.extend(chain(2, l - 2));
            e.push((l - 2, l - 1, 1));
            e.push((l - 2, l, 1));
            e
        }
        Family::B => {
            let mut e = vec![(0, 2, 1), (1, 2, 1)];
            e.extend(chain(2, l - 1));
            e.push((l - 1, l, 2));
            e
        }
        Family::C => {
            let mut e = vec![(0, 1, 2)];
            e.extend(chain(1, l - 1));
            e.push((l - 1, l, 2));
            e
        }
        Family::E6 => vec![(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 5, 1), (2, 4, 1), (4, 6, 1)],
        Family::E7 => vec![
            (0, 1, 1),
            (1, 2, 1),
            (2, 3, 1),
            (3, 4, 1),
            (4, 6, 1),
            (6, 7, 1),
            (3, 5, 1),
        ],
        Family::E8 => vec![
            (0, 1, 1),
            (1, 2, 1),
            (2, 3, 1),
            (3, 4, 1),
            (4, 5, 1),
            (5, 6, 1),
            (6, 8, 1),
            (5, 7, 1),
        ],
        Family::F4 => vec![(0, 1, 1), (1, 2, 1), (2, 3, 2), (3, 4, 1)],
        Family::G2 => vec![(0, 1, 1), (1, 2, 3)],
    }
}

fn affine_labels(dt: DiagramType) -> Vec<String> {
    let l = dt.rank;
    let owned = |v: &[&str]| v.iter().map(|s| s.to_string()).collect();
    match dt.family {
        Family::A => std::iter::once("1".to_string())
            .chain((1..=l).map(|k| format!("x{k}")))
            .collect(),
        Family::D => {
            let mut v = vec!["1".to_string(), "1b".to_string()];
            v.extend((2..=l - 2).map(|k| format!("2_{}", k - 1)));
            v.push("1c".to_string());
            v.push("1d".to_string());
            v
        }
        Family::E6 => owned(&["1", "2", "3", "2'", "2''", "1'", "1''"]),
        Family::E7 => owned(&["1", "2", "3", "4", "3'", "2''", "2'", "1'"]),
        Family::E8 => owned(&["1", "2", "3", "4", "5", "6", "4'", "3'", "2'"]),
        _ => (0..=l).map(|k| k.to_string()).collect(),
    }
}

/// Cartan matrix of the given type.
pub fn cartan(dt: DiagramType, kind: Kind) -> CartanMatrix {
    let n = dt.rank + 1;
    let mut m = Matrix::from_fn(n, n, |i, j| if i == j { 2i64 } else { 0 });
    if dt.family == Family::A && dt.rank == 0 {
        m.set(0, 0, 0);
    }
    for (i, j, mult) in affine_edges(dt) {
        if dt.family == Family::A && dt.rank == 1 {
            m.set(i, j, -2);
            m.set(j, i, -2);
        } else {
            m.set(i, j, -1);
            m.set(j, i, -mult);
        }
    }
    let labels = affine_labels(dt);
    match kind {
        Kind::Affine => CartanMatrix {
            diagram: dt,
            kind,
            entries: m,
            affine_vertex: Some(0),
            labels,
        },
        Kind::Finite => {
            let keep: Vec<usize> = (1..n).collect();
            CartanMatrix {
                diagram: dt,
                kind,
                entries: m.submatrix(&keep),
                affine_vertex: None,
                labels: labels[1..].to_vec(),
            }
        }
    }
}

impl CartanMatrix {
    pub fn size(&self) -> usize {
        self.entries.rows()
    }

    pub fn to_rational(&self) -> Matrix<Rational> {
        self.entries.map(|&v| crate::exactalg::int(v))
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Positive primitive integer vector `d` with `C d = 0` (affine only).
    pub fn null_vector(&self) -> Option<Vec<i64>> {
        let ns = self.to_rational().nullspace();
        if ns.len() != 1 {
            return None;
        }
        let v = &ns[0];
        let lcm = v
            .iter()
            .fold(num_bigint::BigInt::from(1), |acc, c| {
                num_integer::Integer::lcm(&acc, c.denom())
            });
        let mut ints: Vec<i64> = v
            .iter()
            .map(|c| i64::try_from(c.numer() * (&lcm / c.denom())).ok())
            .collect::<Option<_>>()?;
        let g = ints.iter().fold(0i64, |acc, &x| num_integer::Integer::gcd(&acc, &x));
        if g == 0 {
            return None;
        }
        let sign = if ints[0] < 0 { -1 } else { 1 };
        for x in ints.iter_mut() {
            *x = *x / g * sign;
        }
        ints.iter().all(|&x| x > 0).then_some(ints)
    }

    /// Whether the underlying undirected graph (ignoring loops) is a tree.
    pub fn is_tree(&self) -> bool {
        let n = self.size();
        if n == 0 {
            return true;
        }
        let mut edges = 0usize;
        for i in 0..n {
            for j in i + 1..n {
                if *self.entries.get(i, j) != 0 {
                    edges += 1;
                }
            }
        }
        if edges != n - 1 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in 0..n {
                if w != v && !seen[w] && *self.entries.get(v, w) != 0 {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// The numerological row `(a, b, h, 2p, 2q, 2r)` of a type. The last three
/// are stored doubled because `p` and `q` are half-integers for `A_l`
/// with `l` even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TypeParameters {
    pub a: u32,
    pub b: u32,
    pub h: u32,
    pub p2: u32,
    pub q2: u32,
    pub r2: u32,
}

pub fn parameters(dt: DiagramType) -> TypeParameters {
    let l = dt.rank as u32;
    let (a, b, h, p2, q2, r2) = match dt.family {
        Family::A => (2, l + 1, l + 1, l + 1, l + 1, 2),
        Family::D => (4, 2 * l - 4, 2 * l - 2, 2 * (l - 2), 4, 4),
        Family::E6 => (6, 8, 12, 6, 6, 4),
        Family::E7 => (8, 12, 18, 8, 6, 4),
        Family::E8 => (12, 20, 30, 10, 6, 4),
        Family::C => (2, 2 * l, 2 * l, 2 * l, 2, 2),
        Family::B => (4, 2 * l - 2, 2 * l, 2 * (l - 1), 4, 2),
        Family::F4 => (6, 8, 12, 6, 4, 2),
        Family::G2 => (4, 4, 6, 4, 2, 2),
    };
    TypeParameters {
        a,
        b,
        h,
        p2,
        q2,
        r2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_types() {
        assert_eq!("E8".parse::<DiagramType>().unwrap(), DiagramType::e(8));
        assert_eq!("a_3".parse::<DiagramType>().unwrap(), DiagramType::a(3));
        assert!("Z9".parse::<DiagramType>().is_err());
        assert!("D3".parse::<DiagramType>().is_err());
        assert!("E9".parse::<DiagramType>().is_err());
    }

    #[test]
    fn affine_a1_is_double_edge() {
        let c = cartan(DiagramType::a(1), Kind::Affine);
        assert_eq!(c.entries, Matrix::from_rows(vec![vec![2, -2], vec![-2, 2]]));
    }

    #[test]
    fn g2_finite() {
        let c = cartan(DiagramType::new(Family::G2, 2).unwrap(), Kind::Finite);
        assert_eq!(c.entries, Matrix::from_rows(vec![vec![2, -1], vec![-3, 2]]));
    }

    #[test]
    fn e8_null_vector_is_dimensions() {
        let c = cartan(DiagramType::e(8), Kind::Affine);
        assert_eq!(c.null_vector().unwrap(), vec![1, 2, 3, 4, 5, 6, 4, 3, 2]);
        assert!(c.is_tree());
    }

    #[test]
    fn parameter_rows() {
        let p = parameters(DiagramType::e(7));
        assert_eq!((p.a, p.b, p.h, p.p2, p.q2, p.r2), (8, 12, 18, 8, 6, 4));
        let p = parameters(DiagramType::new(Family::C, 5).unwrap());
        assert_eq!((p.a, p.b, p.h, p.p2, p.q2, p.r2), (2, 10, 10, 10, 2, 2));
        let p = parameters(DiagramType::a(0));
        assert_eq!((p.a, p.b, p.h, p.p2, p.q2, p.r2), (2, 1, 1, 1, 1, 2));
    }
}
