//! Invariant counts computed straight from explicit SU(2) matrices,
//! bypassing character tables and Cartan matrices.

use mckay_core::binpoly::model::closure;
use mckay_core::binpoly::{su2_generators, GroupId};
use mckay_core::diagrams::{cartan, Kind};
use mckay_core::exactalg::{series_expand, CyclotomicNumber, Rational, Ring};
use mckay_core::poincare::poincare_vector;

const ORDER: usize = 40;

/// `dim S^n(C^2)^G` for `n < ORDER`, from the recurrence
/// `chi_{n+1} = tr(g) chi_n - chi_{n-1}` averaged over all elements.
fn invariant_counts(id: GroupId) -> Vec<Rational> {
    let (a, b) = su2_generators(id).unwrap();
    let elements = closure(&[a, b], id.order()).unwrap();
    assert_eq!(elements.len(), id.order());
    let mut sums = vec![CyclotomicNumber::zero(); ORDER];
    for g in &elements {
        let tr = g.trace();
        let (mut prev, mut cur) = (CyclotomicNumber::zero(), CyclotomicNumber::one());
        for s in sums.iter_mut() {
            *s = s.add(&cur);
            let next = tr.mul(&cur).sub(&prev);
            prev = cur;
            cur = next;
        }
    }
    let n = Rational::from_integer((id.order() as i64).into());
    sums.iter()
        .map(|s| s.to_rational().expect("invariant counts are rational") / &n)
        .collect()
}

fn groups() -> Vec<GroupId> {
    let mut out: Vec<GroupId> = (1..=8).map(GroupId::Cyclic).collect();
    out.extend((2..=6).map(GroupId::BinaryDihedral));
    out.extend(GroupId::polyhedral());
    out
}

#[test]
fn invariant_series_matches_matrix_average() {
    for id in groups() {
        let pv = poincare_vector(id.diagram()).unwrap();
        let v0 = cartan(id.diagram(), Kind::Affine).affine_vertex.unwrap();
        let expansion = series_expand(&pv.entries[v0], ORDER).unwrap();
        assert_eq!(expansion, invariant_counts(id), "{id}");
    }
}
