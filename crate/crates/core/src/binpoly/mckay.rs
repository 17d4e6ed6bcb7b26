//! McKay graphs: adjacency `A_ij = <st (x) i, j>` compared with `2I - C_aff`.

use serde::Serialize;

use super::GroupData;
use crate::diagrams::{cartan, DiagramType, Kind};
use crate::exactalg::{CyclotomicNumber, Matrix, Ring};

pub fn mckay_adjacency(g: &GroupData) -> Matrix<i64> {
    let n = g.num_irreps();
    let st = g.character(&g.standard);
    let mut a = Matrix::zeros(n, n);
    for i in 0..n {
        let prod: Vec<CyclotomicNumber> = st
            .iter()
            .zip(&g.irreps[i].values)
            .map(|(x, y)| x.mul(y))
            .collect();
        let dec = g.decompose(&prod).expect("tensor products are integral");
        for (j, &m) in dec.0.iter().enumerate() {
            a.set(i, j, m);
        }
    }
    a
}

#[derive(Debug, Clone, Serialize)]
pub struct McKayVerdict {
    pub diagram: DiagramType,
    #[serde(serialize_with = "ser_matrix")]
    pub adjacency: Matrix<i64>,
    /// Adjacency equals `2I - C_aff` with irreps and vertices aligned by
    /// label.
    pub labeled_match: bool,
    /// A bijection irrep index -> vertex index realizing the isomorphism
    /// with the trivial irrep on the affine vertex, if one exists.
    pub matching: Option<Vec<usize>>,
    /// `A v = chi_st(c) v` for `v = (chi_i(c))_i`, every class `c`.
    pub eigenvectors: bool,
}

fn ser_matrix<S: serde::Serializer>(m: &Matrix<i64>, s: S) -> Result<S::Ok, S::Error> {
    use serde::Serialize as _;
    m.to_rows().serialize(s)
}

impl McKayVerdict {
    pub fn passed(&self) -> bool {
        self.labeled_match && self.matching.is_some() && self.eigenvectors
    }
}

pub fn mckay_graph(g: &GroupData) -> McKayVerdict {
    let adjacency = mckay_adjacency(g);
    let dt = g.id.diagram();
    let c = cartan(dt, Kind::Affine);
    let n = c.size();
    let expected = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            2 - c.entries.get(i, j)
        } else {
            -c.entries.get(i, j)
        }
    });
    let labeled_match = n == g.num_irreps()
        && c.labels
            .iter()
            .map(|l| g.irrep_index(l))
            .collect::<Option<Vec<_>>>()
            .is_some_and(|perm| {
                (0..n).all(|i| {
                    (0..n).all(|j| adjacency.get(perm[i], perm[j]) == expected.get(i, j))
                })
            });
    let matching = if n == g.num_irreps() {
        find_isomorphism(&adjacency, &expected, g.trivial_index, 0)
    } else {
        None
    };
    let st = g.character(&g.standard);
    let eigenvectors = (0..g.num_classes()).all(|cl| {
        let v: Vec<CyclotomicNumber> = g.irreps.iter().map(|r| r.values[cl].clone()).collect();
        (0..n).all(|i| {
            let lhs = (0..n).fold(CyclotomicNumber::zero(), |acc, j| {
                acc.add(&v[j].scale(&crate::exactalg::int(*adjacency.get(i, j))))
            });
            lhs == st[cl].mul(&v[i])
        })
    });
    McKayVerdict {
        diagram: dt,
        adjacency,
        labeled_match,
        matching,
        eigenvectors,
    }
}

/// Backtracking search for `perm` with `a[i][j] = b[perm i][perm j]` and
/// `perm[fixed_from] = fixed_to`.
fn find_isomorphism(
    a: &Matrix<i64>,
    b: &Matrix<i64>,
    fixed_from: usize,
    fixed_to: usize,
) -> Option<Vec<usize>> {
    let n = a.rows();
    let sig = |m: &Matrix<i64>, i: usize| {
        let mut row: Vec<i64> = m.row(i).to_vec();
        row.sort_unstable();
        (*m.get(i, i), row)
    };
    let sa: Vec<_> = (0..n).map(|i| sig(a, i)).collect();
    let sb: Vec<_> = (0..n).map(|i| sig(b, i)).collect();
    if sa[fixed_from] != sb[fixed_to] {
        return None;
    }
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    perm[fixed_from] = fixed_to;
    used[fixed_to] = true;
    let order: Vec<usize> = std::iter::once(fixed_from)
        .chain((0..n).filter(|&i| i != fixed_from))
        .collect();

    fn extend(
        k: usize,
        order: &[usize],
        a: &Matrix<i64>,
        b: &Matrix<i64>,
        sa: &[(i64, Vec<i64>)],
        sb: &[(i64, Vec<i64>)],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let i = order[k];
        for v in 0..b.rows() {
            if used[v] || sa[i] != sb[v] {
                continue;
            }
            let consistent = order[..k]
                .iter()
                .all(|&j| a.get(i, j) == b.get(v, perm[j]) && a.get(j, i) == b.get(perm[j], v));
            if !consistent {
                continue;
            }
            perm[i] = v;
            used[v] = true;
            if extend(k + 1, order, a, b, sa, sb, perm, used) {
                return true;
            }
            used[v] = false;
            perm[i] = usize::MAX;
        }
        false
    }

    extend(1, &order, a, b, &sa, &sb, &mut perm, &mut used).then_some(perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binpoly::{group_data, GroupId};

    #[test]
    fn polyhedral_graphs_are_affine_e() {
        for id in GroupId::polyhedral() {
            let v = mckay_graph(&group_data(id).unwrap());
            assert!(v.passed(), "{id}: {v:?}");
        }
    }

    #[test]
    fn trivial_group_self_loop() {
        let v = mckay_graph(&group_data(GroupId::Cyclic(1)).unwrap());
        assert_eq!(v.adjacency, Matrix::from_rows(vec![vec![2]]));
        assert!(v.passed());
    }

    #[test]
    fn cyclic_and_dihedral_graphs() {
        for n in 1..=12 {
            assert!(mckay_graph(&group_data(GroupId::Cyclic(n)).unwrap()).passed(), "C{n}");
        }
        for p in 2..=8 {
            let v = mckay_graph(&group_data(GroupId::BinaryDihedral(p)).unwrap());
            assert!(v.passed(), "BD{p}: {v:?}");
        }
    }
}
