//! Poincaré series of isotypic components `P_{i,j}(t) = sum_n <S^n j, i> t^n`
//! by the Molien formula, by inverting multiplication by `lambda_{-t}(j)` in
//! the representation ring, and the half-substitution relation for the
//! adjoint-type representation `S^2(C^2)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::binpoly::{GroupData, GroupId, RepElement};
use crate::error::{Error, Result};
use crate::exactalg::{
    int, rat, series_expand, CycloPoly, Matrix, Poly, Polynomial, RationalFunction, Ring,
};
use crate::poincare::poincare_vector;
use crate::report::Report;

/// Coefficients `S^n(j)`, `n < order`, of `sigma_t(j)` as representations.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RepSeries {
    pub order: usize,
    pub coeffs: Vec<RepElement>,
}

impl RepSeries {
    pub fn coeff(&self, n: usize) -> Option<&RepElement> {
        self.coeffs.get(n)
    }

    /// Multiplicity of irrep `i` in each coefficient.
    pub fn multiplicities(&self, i: usize) -> Vec<i64> {
        self.coeffs.iter().map(|c| c.0[i]).collect()
    }
}

/// `det(1 - t g)` on `j` for `g` in each class, from the characters of the
/// exterior powers.
pub fn class_denominators(g: &GroupData, j: &RepElement) -> Vec<CycloPoly> {
    let d = g.dim(j) as usize;
    let ext = g.exterior_characters(j, d);
    (0..g.num_classes())
        .map(|c| {
            Poly::from_terms((0..=d).map(|k| {
                let v = &ext[k][c];
                (k as u32, if k % 2 == 1 { v.neg() } else { v.clone() })
            }))
        })
        .collect()
}

/// `P_{i,j}(t) = (1/|G|) sum_c |c| conj(chi_i(c)) / det(1 - t g_c)`.
///
/// Every class denominator divides `(1 - t^e)^d` with `e` the group
/// exponent and `d = dim j`, so the sum is assembled over that common
/// denominator and the numerator must descend to rational coefficients.
pub fn molien_series(g: &GroupData, i: usize, j: &RepElement) -> Result<RationalFunction> {
    if !j.is_honest() {
        return Err(Error::Unsupported("Molien series of a virtual representation".into()));
    }
    if i >= g.num_irreps() {
        return Err(Error::OutOfRange(format!("irrep index {i} for {}", g.id)));
    }
    let d = g.dim(j) as u32;
    let common = Polynomial::one_minus_t_pow(g.exponent as u32).pow(d);
    let common_c = common.to_cyclotomic();
    let denoms = class_denominators(g, j);
    let mut num = CycloPoly::zero();
    for (c, den) in denoms.iter().enumerate() {
        let (q, r) = common_c
            .div_rem(den)
            .ok_or_else(|| Error::Consistency("zero class denominator".into()))?;
        if !r.is_zero() {
            return Err(Error::Consistency(format!(
                "class {} denominator does not divide (1 - t^{})^{d}",
                g.classes[c].name, g.exponent
            )));
        }
        let w = g.irreps[i].values[c]
            .conj()
            .scale(&int(g.classes[c].size as i64));
        num = num.add(&q.scale(&w));
    }
    let num = num.to_rational().ok_or_else(|| {
        Error::Consistency(format!(
            "Molien numerator for ({}, {}) has irrational coefficients",
            g.id, g.irreps[i].name
        ))
    })?;
    RationalFunction::new(num.scale(&rat(1, g.order as i64)), common)
}

/// `P_{i,j}` for every irrep `i`, in irrep order.
pub fn molien_vector(g: &GroupData, j: &RepElement) -> Result<Vec<RationalFunction>> {
    (0..g.num_irreps())
        .into_par_iter()
        .map(|i| molien_series(g, i, j))
        .collect()
}

/// `M[a][b]` = multiplicity of irrep `a` in `x (x) b`.
pub fn multiplication_matrix(g: &GroupData, x: &RepElement) -> Matrix<i64> {
    let n = g.num_irreps();
    let mut m = Matrix::zeros(n, n);
    for b in 0..n {
        let prod = g.tensor(x, &RepElement::basis(n, b));
        for a in 0..n {
            m.set(a, b, prod.0[a]);
        }
    }
    m
}

/// `sigma_t(j)` to `order` terms: invert `L(t) = sum_k L_k t^k`, `L_k` the
/// multiplication by the `t^k` coefficient of `lambda_{-t}(j)`, through
/// `X_0 = I`, `X_m = -sum_k L_k X_{m-k}`, and read the trivial column.
pub fn sigma_series(g: &GroupData, j: &RepElement, order: usize) -> Result<RepSeries> {
    if order < 1 {
        return Err(Error::OutOfRange("series order must be at least 1".into()));
    }
    let lambda = g.lambda_series(j)?;
    let ops: Vec<Matrix<i64>> = lambda.iter().map(|x| multiplication_matrix(g, x)).collect();
    let n = g.num_irreps();
    let mut xs: Vec<Matrix<i64>> = vec![Matrix::identity(n)];
    for m in 1..order {
        let mut acc = Matrix::zeros(n, n);
        for (k, op) in ops.iter().enumerate().take(m + 1).skip(1) {
            acc = acc.sub(&op.mul(&xs[m - k]));
        }
        xs.push(acc);
    }
    let t = g.trivial_index;
    Ok(RepSeries {
        order,
        coeffs: xs
            .iter()
            .map(|x| RepElement((0..n).map(|a| *x.get(a, t)).collect()))
            .collect(),
    })
}

/// Outcome of comparing `P_{i,S^2}(t) (1 - t^2)` with `P_i(t^(1/2))`.
#[derive(Debug, Clone, Serialize)]
pub struct HalfSubstitution {
    pub group: GroupId,
    pub irrep: String,
    pub spinorial: bool,
    /// `P_{i,S^2}`.
    pub series: RationalFunction,
    /// `P_i(t^(1/2)) / (1 - t^2)` for non-spinorial `i`.
    pub expected: Option<RationalFunction>,
    pub holds: bool,
}

/// `f(-t)` for a polynomial.
fn negate_variable(p: &Polynomial) -> Polynomial {
    Poly::from_terms(
        p.terms()
            .map(|(e, c)| (e, if e % 2 == 1 { c.neg() } else { c.clone() })),
    )
}

/// `f(t^(1/2))` for an even rational function. When the normal form has odd
/// support, numerator and denominator are multiplied by `den(-t)` first.
pub fn substitute_half(f: &RationalFunction) -> Result<RationalFunction> {
    let (mut n, mut d) = (f.num().clone(), f.den().clone());
    if !(n.has_even_support() && d.has_even_support()) {
        let m = negate_variable(&d);
        n = n.mul(&m);
        d = d.mul(&m);
    }
    match (n.halve_exponents(), d.halve_exponents()) {
        (Some(n), Some(d)) => RationalFunction::new(n, d),
        _ => Err(Error::Consistency(format!(
            "{f} is not a function of t^2"
        ))),
    }
}

pub fn half_substitution_check(g: &GroupData, i: usize) -> Result<HalfSubstitution> {
    if !g.has_central_minus_one() {
        return Err(Error::Unsupported(format!("{} does not contain -1", g.id)));
    }
    let info = &g.irreps[i];
    let spinorial = info.spinorial.unwrap_or(false);
    let adjoint = g.restrict_su2(3)?;
    let series = molien_series(g, i, &adjoint)?;
    if spinorial {
        return Ok(HalfSubstitution {
            group: g.id,
            irrep: info.name.clone(),
            spinorial,
            holds: series.is_zero(),
            series,
            expected: None,
        });
    }
    let pv = poincare_vector(g.id.diagram())?;
    let p = pv
        .get(&info.name)
        .ok_or_else(|| Error::Consistency(format!("no vertex labelled {}", info.name)))?;
    let expected = substitute_half(p)?
        .mul(&RationalFunction::inverse_product(&[2]));
    Ok(HalfSubstitution {
        group: g.id,
        irrep: info.name.clone(),
        spinorial,
        holds: series == expected,
        series,
        expected: Some(expected),
    })
}

/// `sum_i dim(i) P_{i,j} = 1/(1-t)^(dim j)`.
pub fn dimension_sum_holds(g: &GroupData, j: &RepElement) -> Result<bool> {
    let v = molien_vector(g, j)?;
    let total = v
        .iter()
        .zip(&g.irreps)
        .fold(RationalFunction::zero(), |acc, (p, r)| {
            acc.add(&p.mul(&RationalFunction::from_rational(int(r.dim as i64))))
        });
    let d = g.dim(j) as usize;
    Ok(total == RationalFunction::inverse_product(&vec![1; d]))
}

/// One row of the degree comparison `dim j` against `-deg P_{1,j}`.
#[derive(Debug, Clone, Serialize)]
pub struct DegreeRow {
    pub irrep: String,
    pub dim: usize,
    pub neg_degree: i64,
    pub matches: bool,
}

pub fn degree_rows(g: &GroupData) -> Result<Vec<DegreeRow>> {
    let n = g.num_irreps();
    (0..n)
        .into_par_iter()
        .map(|j| {
            let p = molien_series(g, g.trivial_index, &RepElement::basis(n, j))?;
            let neg_degree = -p
                .degree()
                .ok_or_else(|| Error::Consistency("invariant series vanishes".into()))?;
            let dim = g.irreps[j].dim;
            Ok(DegreeRow {
                irrep: g.irreps[j].name.clone(),
                dim,
                neg_degree,
                matches: neg_degree == dim as i64,
            })
        })
        .collect()
}

/// Molien against the Cartan-matrix Poincaré vector, irrep by irrep.
pub fn crosscheck_cartan(g: &GroupData) -> Result<Report> {
    let mut r = Report::new(format!("{} Molien vs Cartan", g.id));
    let pv = poincare_vector(g.id.diagram())?;
    let mv = molien_vector(g, &g.standard)?;
    for (info, m) in g.irreps.iter().zip(&mv) {
        match pv.get(&info.name) {
            Some(p) => r.push(
                format!("P_{}", info.name),
                p == m,
                if p == m {
                    m.to_string()
                } else {
                    format!("Molien {m}, Cartan {p}")
                },
            ),
            None => r.push(format!("P_{}", info.name), false, "no matching vertex"),
        }
    }
    Ok(r)
}

/// Molien expansions against `sigma_series` for every pair of irreps.
pub fn crosscheck_sigma(g: &GroupData, order: usize) -> Result<Report> {
    let n = g.num_irreps();
    let rows: Vec<Result<(String, bool, String)>> = (0..n)
        .into_par_iter()
        .map(|j| {
            let jr = RepElement::basis(n, j);
            let sigma = sigma_series(g, &jr, order)?;
            let mut bad = Vec::new();
            for i in 0..n {
                let m = molien_series(g, i, &jr)?;
                let expansion = series_expand(&m, order)?;
                let want: Vec<_> = sigma.multiplicities(i).into_iter().map(int).collect();
                if expansion != want {
                    bad.push(g.irreps[i].name.clone());
                }
            }
            let ok = bad.is_empty();
            let detail = if ok {
                format!("{n} components agree to order {order}")
            } else {
                format!("mismatch at i = {}", bad.join(", "))
            };
            Ok((format!("j = {}", g.irreps[j].name), ok, detail))
        })
        .collect();
    let mut r = Report::new(format!("{} Molien vs sigma series", g.id));
    for row in rows {
        let (name, ok, detail) = row?;
        r.push(name, ok, detail);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binpoly::group_data;

    #[test]
    fn cyclic_two_invariants() {
        let g = group_data(GroupId::Cyclic(2)).unwrap();
        let p = molien_series(&g, 0, &g.standard).unwrap();
        assert_eq!(p, "(1+t^2)/(1-t^2)^2".parse().unwrap());
    }

    #[test]
    fn tetrahedral_rep3() {
        let g = group_data(GroupId::Tetrahedral).unwrap();
        let j = g.irrep("3").unwrap();
        let p = molien_series(&g, 0, &j).unwrap();
        let want: RationalFunction = "(1+t^6)/((1-t^2)*(1-t^3)*(1-t^4))".parse().unwrap();
        assert_eq!(p, want);
    }

    #[test]
    fn sigma_constant_term_is_trivial() {
        let g = group_data(GroupId::Octahedral).unwrap();
        let s = sigma_series(&g, &g.irrep("4").unwrap(), 5).unwrap();
        assert_eq!(s.coeffs[0], g.trivial());
        assert!(sigma_series(&g, &g.trivial(), 0).is_err());
    }

    #[test]
    fn sigma_of_standard_is_restriction() {
        let g = group_data(GroupId::Tetrahedral).unwrap();
        let s = sigma_series(&g, &g.standard, 12).unwrap();
        for n in 0..12 {
            assert_eq!(s.coeffs[n], g.restrict_su2(n + 1).unwrap());
        }
    }

    #[test]
    fn half_substitution_icosahedral() {
        let g = group_data(GroupId::Icosahedral).unwrap();
        let h = half_substitution_check(&g, 0).unwrap();
        assert!(h.holds, "{h:?}");
        let want: RationalFunction = "(1+t^15)/((1-t^2)*(1-t^6)*(1-t^10))".parse().unwrap();
        assert_eq!(h.series, want);
        let spin = half_substitution_check(&g, g.irrep_index("2").unwrap()).unwrap();
        assert!(spin.spinorial && spin.holds && spin.series.is_zero());
    }

    #[test]
    fn odd_cyclic_has_no_half_substitution() {
        let g = group_data(GroupId::Cyclic(3)).unwrap();
        assert!(half_substitution_check(&g, 0).is_err());
    }
}
