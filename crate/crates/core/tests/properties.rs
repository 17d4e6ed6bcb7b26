use mckay_core::binpoly::{group_data, GroupId, RepElement};
use mckay_core::exactalg::{
    int, CyclotomicNumber, Field, Matrix, Polynomial, Rational, RationalFunction, Ring,
    TruncatedSeries,
};
use proptest::prelude::*;

const CONDUCTORS: [u32; 8] = [3, 4, 5, 8, 12, 20, 24, 120];

/// `sum_k c_k zeta_n^k` with small integer coefficients.
fn cyclo(n: u32) -> impl Strategy<Value = CyclotomicNumber> {
    prop::collection::vec((0..n as i64, -3i64..=3), 0..5).prop_map(move |terms| {
        terms.into_iter().fold(CyclotomicNumber::zero(), |acc, (k, c)| {
            acc.add(&CyclotomicNumber::zeta(n, k).mul(&CyclotomicNumber::from_int(c)))
        })
    })
}

fn triple() -> impl Strategy<Value = (CyclotomicNumber, CyclotomicNumber, CyclotomicNumber)> {
    prop::sample::select(CONDUCTORS.to_vec()).prop_flat_map(|n| (cyclo(n), cyclo(n), cyclo(n)))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-4i64..=4, 1..=max_deg + 1).prop_map(|c| Polynomial::from_ints(&c))
}

/// Laplace expansion along the first row.
fn cofactor_det<T: Ring>(m: &Matrix<T>) -> T {
    let n = m.rows();
    if n == 0 {
        return T::one();
    }
    let mut acc = T::zero();
    for j in 0..n {
        let term = m.get(0, j).mul(&cofactor_det(&m.minor(0, j)));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

fn int_matrix() -> impl Strategy<Value = Matrix<Rational>> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(-5i64..=5, n * n)
            .prop_map(move |v| Matrix::new(n, n, v.into_iter().map(int).collect()))
    })
}

fn poly_matrix() -> impl Strategy<Value = Matrix<Polynomial>> {
    (1usize..=3).prop_flat_map(|n| {
        prop::collection::vec(poly(2), n * n).prop_map(move |v| Matrix::new(n, n, v))
    })
}

fn polyhedral() -> impl Strategy<Value = GroupId> {
    prop::sample::select(GroupId::polyhedral().to_vec())
}

/// A group together with an honest element with small multiplicities.
fn honest_pair() -> impl Strategy<Value = (GroupId, RepElement, RepElement)> {
    polyhedral().prop_flat_map(|id| {
        let n = group_data(id).unwrap().num_irreps();
        let elem = prop::collection::vec(0i64..=1, n).prop_map(RepElement);
        (Just(id), elem.clone(), elem)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_field_axioms((a, b, c) in triple()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        if !a.is_zero() {
            let inv = a.inv().expect("nonzero elements are invertible");
            prop_assert!(a.mul(&inv).is_one());
        }
    }

    #[test]
    fn series_inverse(p in poly(8), order in 1usize..24) {
        prop_assume!(!p.coeff(0).is_zero());
        let s = TruncatedSeries::from_poly(&p, order);
        let inv = s.inverse().expect("unit constant term");
        prop_assert_eq!(s.mul(&inv), TruncatedSeries::one(order));
    }

    #[test]
    fn rational_function_round_trips(n in poly(6), d in poly(4)) {
        prop_assume!(!d.is_zero());
        let f = RationalFunction::new(n, d).unwrap();
        let text = f.to_string();
        prop_assert_eq!(RationalFunction::parse(&text).unwrap(), f.clone());
        let json = serde_json::to_string(&f).unwrap();
        let back: RationalFunction = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn bareiss_matches_cofactor_expansion(m in int_matrix()) {
        prop_assert_eq!(m.det().unwrap(), cofactor_det(&m));
    }

    #[test]
    fn polynomial_determinant_matches_cofactor_expansion(m in poly_matrix()) {
        prop_assert_eq!(m.det().unwrap(), cofactor_det(&m));
    }

    /// `Rep_m * Rep_n = Rep_{|m-n|+1} + Rep_{|m-n|+3} + ... + Rep_{m+n-1}`.
    #[test]
    fn clebsch_gordan(id in polyhedral(), m in 1usize..=7, n in 1usize..=7) {
        let g = group_data(id).unwrap();
        let lhs = g.tensor(&g.restrict_su2(m).unwrap(), &g.restrict_su2(n).unwrap());
        let mut rhs = RepElement::zero(g.num_irreps());
        let mut k = m.abs_diff(n) + 1;
        while k < m + n {
            rhs = rhs.add(&g.restrict_su2(k).unwrap());
            k += 2;
        }
        prop_assert_eq!(lhs, rhs);
    }

    /// `L^2(x + y) = L^2 x + x y + L^2 y` and `psi^2 x = x^2 - 2 L^2 x`.
    #[test]
    fn exterior_square_identities((id, x, y) in honest_pair()) {
        let g = group_data(id).unwrap();
        let l2 = |v: &RepElement| g.exterior_power(2, v).unwrap();
        prop_assert_eq!(
            l2(&x.add(&y)),
            l2(&x).add(&g.tensor(&x, &y)).add(&l2(&y))
        );
        prop_assert_eq!(g.adams(2, &x), g.tensor(&x, &x).sub(&l2(&x).scale(2)));
    }

    /// `lambda_{-t}(x) sigma_t(x) = 1`, degree by degree.
    #[test]
    fn lambda_sigma_inverse(id in polyhedral(), pick in 0usize..16, degree in 1usize..=6) {
        let g = group_data(id).unwrap();
        let x = RepElement::basis(g.num_irreps(), pick % g.num_irreps());
        let mut acc = RepElement::zero(g.num_irreps());
        for k in 0..=degree {
            let term = g.tensor(
                &g.exterior_power(k, &x).unwrap(),
                &g.symmetric_power(degree - k, &x).unwrap(),
            );
            acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        prop_assert!(acc.is_zero());
    }
}
