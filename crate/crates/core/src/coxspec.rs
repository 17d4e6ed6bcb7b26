//! Reflection representations built from Cartan matrices, Coxeter elements
//! and their spectra.
//!
//! Convention: `s_i(alpha_j) = alpha_j - C_ij alpha_i`, matrices acting on
//! coordinate columns in the basis of simple roots, so
//! `s_i = I - e_i (row i of C)`.

use itertools::Itertools;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;

use crate::diagrams::{cartan, parameters, CartanMatrix, DiagramType, Family, Kind};
use crate::error::{Error, Result};
use crate::exactalg::{
    int, polymat_det, CycloPoly, CyclotomicNumber, Matrix, Poly, Polynomial, Rational,
    RationalFunction, Ring,
};
use crate::qcartan::det_quantum;
use crate::report::Report;

#[derive(Debug, Clone)]
pub struct ReflectionRep {
    pub cartan: CartanMatrix,
    pub generators: Vec<Matrix<Rational>>,
}

pub fn reflection_rep(c: &CartanMatrix) -> ReflectionRep {
    let n = c.size();
    let generators = (0..n)
        .map(|i| {
            Matrix::from_fn(n, n, |r, col| {
                let id = if r == col { int(1) } else { int(0) };
                if r == i {
                    id - int(*c.entries.get(i, col))
                } else {
                    id
                }
            })
        })
        .collect();
    ReflectionRep {
        cartan: c.clone(),
        generators,
    }
}

impl ReflectionRep {
    pub fn size(&self) -> usize {
        self.generators.len()
    }

    /// `s_i^2 = I` and `rank(s_i - I) = 1` for every generator.
    pub fn generators_are_reflections(&self) -> bool {
        let n = self.size();
        let id = Matrix::<Rational>::identity(n);
        self.generators
            .iter()
            .all(|s| s.mul(s) == id && s.sub(&id).rank() == 1)
    }
}

/// Product of the generators in the given order (a permutation of
/// `0..n`).
pub fn coxeter_element(r: &ReflectionRep, order: &[usize]) -> Result<Matrix<Rational>> {
    let n = r.size();
    let mut seen = vec![false; n];
    if order.len() != n || order.iter().any(|&i| i >= n || std::mem::replace(&mut seen[i], true))
    {
        return Err(Error::OutOfRange(format!(
            "{order:?} is not a permutation of 0..{n}"
        )));
    }
    Ok(order
        .iter()
        .fold(Matrix::identity(n), |acc, &i| acc.mul(&r.generators[i])))
}

/// `det(t^2 I - c)` as a polynomial in `t`.
pub fn charpoly_t2(c: &Matrix<Rational>) -> Polynomial {
    let n = c.rows();
    let m = Matrix::from_fn(n, n, |i, j| {
        let diag = if i == j {
            Polynomial::monomial(int(1), 2)
        } else {
            Polynomial::zero()
        };
        diag.sub(&Polynomial::constant(c.get(i, j).clone()))
    });
    polymat_det(&m).expect("square")
}

/// `det(T I - c)` as a polynomial in `T`.
pub fn charpoly(c: &Matrix<Rational>) -> Polynomial {
    let n = c.rows();
    let m = Matrix::from_fn(n, n, |i, j| {
        let diag = if i == j { Polynomial::t() } else { Polynomial::zero() };
        diag.sub(&Polynomial::constant(c.get(i, j).clone()))
    });
    polymat_det(&m).expect("square")
}

/// Smallest `k <= bound` with `c^k = I`.
pub fn multiplicative_order(c: &Matrix<Rational>, bound: usize) -> Option<usize> {
    let id = Matrix::identity(c.rows());
    let mut x = c.clone();
    for k in 1..=bound {
        if x == id {
            return Some(k);
        }
        x = x.mul(c);
    }
    None
}

/// Exponents `m` (with multiplicity) such that `zeta_h^m` is an eigenvalue,
/// by trial division of `det(u I - c)` by `u - zeta_h^m` over `Q(zeta_h)`.
/// `None` if the characteristic polynomial does not split this way.
pub fn exponents(c: &Matrix<Rational>, h: u32) -> Option<Vec<u32>> {
    let mut f: CycloPoly = charpoly(c).to_cyclotomic();
    let mut out = Vec::new();
    for m in 0..h {
        let root = CyclotomicNumber::zeta(h, i64::from(m));
        let linear = Poly::from_terms([(0, root.neg()), (1, CyclotomicNumber::one())]);
        loop {
            let (q, r) = f.div_rem(&linear)?;
            if !r.is_zero() {
                break;
            }
            f = q;
            out.push(m);
        }
    }
    (f.degree() == Some(0)).then_some(out)
}

/// Spectral data of the finite (and, when applicable, affine) Coxeter
/// elements of one type.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub diagram: DiagramType,
    pub charpoly_t2: Polynomial,
    pub affine_charpoly_t2: Polynomial,
    pub exponents: Vec<u32>,
    pub coxeter_number: u32,
    pub coxeter_order: Option<usize>,
}

fn product_one_minus(exps: &[u32]) -> Polynomial {
    exps.iter()
        .fold(Polynomial::one(), |acc, &k| acc.mul(&Polynomial::one_minus_t_pow(k)))
}

const RANDOM_ORDERINGS: usize = 3;
const ORDERING_SEED: u64 = 0x5eed_c0de;

pub fn verify_spectrum(dt: DiagramType) -> Result<(SpectrumReport, Report)> {
    let par = parameters(dt);
    let h = par.h;
    let fin = reflection_rep(&cartan(dt, Kind::Finite));
    let aff = reflection_rep(&cartan(dt, Kind::Affine));
    let mut r = Report::new(format!("spectrum {dt}"));
    r.check(
        "simple reflections",
        fin.generators_are_reflections() && aff.generators_are_reflections(),
    );

    let l = fin.size();
    let natural: Vec<usize> = (0..l).collect();
    let c_fin = coxeter_element(&fin, &natural)?;
    let char_fin = charpoly_t2(&c_fin);
    let det_fin = det_quantum(dt, Kind::Finite);
    let mut rng = StdRng::seed_from_u64(ORDERING_SEED);
    let mut all_orderings_agree = char_fin == det_fin;
    for _ in 0..RANDOM_ORDERINGS {
        let mut order = natural.clone();
        order.shuffle(&mut rng);
        all_orderings_agree &= charpoly_t2(&coxeter_element(&fin, &order)?) == det_fin;
    }
    r.push(
        "(i) det(t^2 I - c_fin) = det C_fin(t)",
        all_orderings_agree,
        format!("{char_fin}, {} random orderings", RANDOM_ORDERINGS),
    );

    let n_aff = aff.size();
    let mut aff_order: Vec<usize> = (0..n_aff).collect();
    let c_aff = coxeter_element(&aff, &aff_order)?;
    let char_aff = charpoly_t2(&c_aff);
    let det_aff = det_quantum(dt, Kind::Affine);
    let cycle = dt.family() == Family::A && dt.rank() >= 2;
    if cycle {
        r.push(
            "(ii) affine identity",
            true,
            format!("not applicable: affine {dt} is a cycle"),
        );
    } else {
        aff_order.shuffle(&mut rng);
        let shuffled = charpoly_t2(&coxeter_element(&aff, &aff_order)?);
        r.push(
            "(ii) det(t^2 I - c_aff) = det C_aff(t)",
            char_aff == det_aff && shuffled == det_aff,
            format!("{char_aff}"),
        );
    }

    let order = multiplicative_order(&c_fin, 2 * h as usize + 1);
    r.push(
        "(iii) c_fin has order h",
        order == Some(h as usize),
        format!("h = {h}, order {order:?}"),
    );
    let singular = c_aff.sub(&Matrix::identity(n_aff)).det()?.is_zero();
    let infinite = multiplicative_order(&c_aff, 4 * h as usize).is_none();
    r.push(
        "c_aff has infinite order",
        singular && infinite,
        "c_aff - I singular, no power up to 4h is I",
    );

    let exps = exponents(&c_fin, h).unwrap_or_default();
    let symmetric = exps.len() == l
        && exps.iter().all(|&m| 1 <= m && m < h)
        && (0..l).all(|j| exps[j] + exps[l - 1 - j] == h);
    r.push(
        "exponents",
        symmetric,
        format!("{exps:?}"),
    );
    let lhs = exps.iter().fold(CycloPoly::one(), |acc, &m| {
        let root = CyclotomicNumber::zeta(h, i64::from(m));
        acc.mul(&Poly::from_terms([
            (0, root.neg()),
            (2, CyclotomicNumber::one()),
        ]))
    });
    let rhs = RationalFunction::new(
        product_one_minus(&[2 * h, par.p2, par.q2, par.r2]),
        product_one_minus(&[2, par.a, par.b, h]),
    )?;
    let ok = lhs
        .to_rational()
        .and_then(|p| RationalFunction::from_poly(p).eq(&rhs).then_some(()))
        .is_some();
    r.push(
        "(iv) prod (t^2 - zeta^m) = (1-t^2h)(1-t^2p)(1-t^2q)(1-t^2r)/((1-t^2)(1-t^a)(1-t^b)(1-t^h))",
        ok,
        "",
    );
    Ok((
        SpectrumReport {
            diagram: dt,
            charpoly_t2: char_fin,
            affine_charpoly_t2: char_aff,
            exponents: exps,
            coxeter_number: h,
            coxeter_order: order,
        },
        r,
    ))
}

/// `A(l, k) = sum_j (-1)^j C(l+1, j) (k - j)^l`, `1 <= k <= l`.
pub fn eulerian(l: u32, k: u32) -> Result<i64> {
    if k < 1 || k > l {
        return Err(Error::OutOfRange(format!("A({l}, {k}) needs 1 <= k <= l")));
    }
    let mut total = num_bigint::BigInt::from(0);
    let mut binom = num_bigint::BigInt::from(1);
    for j in 0..=k {
        let term = &binom * num_bigint::BigInt::from(k - j).pow(l);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
        binom = binom * (l + 1 - j) / (j + 1);
    }
    i64::try_from(total).map_err(|_| Error::OutOfRange(format!("A({l}, {k}) overflows")))
}

pub const AFFINE_A_PRODUCT_MAX: u32 = 4;

#[derive(Debug, Clone, Serialize)]
pub struct AffineAProduct {
    pub l: u32,
    pub orderings: usize,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
    pub holds: bool,
    /// Distinct characteristic polynomials among all orderings.
    pub spectral_classes: usize,
    pub spectral_bound: usize,
}

/// `prod_sigma det(T - s_sigma(1) ... s_sigma(l+1)) = prod_k (1-T^k)^(2(l+1)A(l,k))`
/// over all orderings of the affine `A_l` reflections.
pub fn affine_a_product(l: u32) -> Result<AffineAProduct> {
    if !(1..=AFFINE_A_PRODUCT_MAX).contains(&l) {
        return Err(Error::OutOfRange(format!(
            "affine A product is enumerated for 1 <= l <= {AFFINE_A_PRODUCT_MAX}"
        )));
    }
    let rep = reflection_rep(&cartan(DiagramType::a(l as usize), Kind::Affine));
    let n = rep.size();
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let polys: Vec<Polynomial> = perms
        .par_iter()
        .map(|p| coxeter_element(&rep, p).map(|c| charpoly(&c)))
        .collect::<Result<_>>()?;
    let lhs = polys.iter().fold(Polynomial::one(), |acc, p| acc.mul(p));
    let mut rhs = Polynomial::one();
    for k in 1..=l {
        let e = 2 * (l + 1) as i64 * eulerian(l, k)?;
        rhs = rhs.mul(&Polynomial::one_minus_t_pow(k).pow(e as u32));
    }
    let spectral_classes = polys.iter().unique().count();
    Ok(AffineAProduct {
        l,
        orderings: perms.len(),
        holds: lhs == rhs,
        lhs,
        rhs,
        spectral_classes,
        spectral_bound: (l as usize).div_ceil(2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_a1_reflections() {
        let r = reflection_rep(&cartan(DiagramType::a(1), Kind::Affine));
        let m = |rows: Vec<Vec<i64>>| Matrix::from_rows(rows).map(|&x| int(x));
        assert_eq!(r.generators[0], m(vec![vec![-1, 2], vec![0, 1]]));
        assert_eq!(r.generators[1], m(vec![vec![1, 0], vec![2, -1]]));
        let f = reflection_rep(&cartan(DiagramType::a(1), Kind::Finite));
        assert_eq!(f.generators[0], m(vec![vec![-1]]));
    }

    #[test]
    fn g2_coxeter_order() {
        let r = reflection_rep(&cartan(DiagramType::new(Family::G2, 2).unwrap(), Kind::Finite));
        let c = coxeter_element(&r, &[0, 1]).unwrap();
        assert_eq!(multiplicative_order(&c, 20), Some(6));
        assert!(coxeter_element(&r, &[0, 0]).is_err());
    }

    #[test]
    fn e8_spectrum() {
        let (s, r) = verify_spectrum(DiagramType::e(8)).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(s.exponents, vec![1, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(
            s.charpoly_t2,
            Polynomial::from_ints(&[1, 0, 1, 0, 0, 0, -1, 0, -1, 0, -1, 0, 0, 0, 1, 0, 1])
        );
    }

    #[test]
    fn affine_a1_is_reported_equal() {
        let (s, _) = verify_spectrum(DiagramType::a(1)).unwrap();
        assert_eq!(s.affine_charpoly_t2, Polynomial::one_minus_t_pow(2).pow(2));
        assert_eq!(det_quantum(DiagramType::a(1), Kind::Affine), s.affine_charpoly_t2);
    }

    #[test]
    fn eulerian_values() {
        assert_eq!(eulerian(1, 1).unwrap(), 1);
        assert_eq!(eulerian(2, 1).unwrap(), 1);
        assert_eq!(eulerian(2, 2).unwrap(), 1);
        assert_eq!(eulerian(3, 2).unwrap(), 4);
        assert!(eulerian(3, 4).is_err());
    }

    #[test]
    fn eulerian_counts_descents() {
        for l in 1..=5u32 {
            let n = l as usize;
            let mut counts = vec![0i64; n + 1];
            for p in (0..n).permutations(n) {
                let d = p.windows(2).filter(|w| w[0] > w[1]).count();
                counts[d + 1] += 1;
            }
            for k in 1..=l {
                assert_eq!(eulerian(l, k).unwrap(), counts[k as usize], "A({l},{k})");
            }
        }
    }

    #[test]
    fn small_affine_products() {
        let p1 = affine_a_product(1).unwrap();
        assert!(p1.holds);
        assert_eq!(p1.lhs, Polynomial::one_minus_t_pow(1).pow(4));
        let p2 = affine_a_product(2).unwrap();
        assert!(p2.holds);
        assert_eq!(
            p2.rhs,
            Polynomial::one_minus_t_pow(1)
                .pow(6)
                .mul(&Polynomial::one_minus_t_pow(2).pow(6))
        );
        assert!(p2.spectral_classes <= p2.spectral_bound);
        assert!(affine_a_product(5).is_err());
    }
}
