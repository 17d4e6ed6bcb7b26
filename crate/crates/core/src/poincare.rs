//! Poincare series of symmetric-power multiplicities, obtained by solving
//! the quantum affine Cartan system `C_aff(t) P(t) = delta`, and the
//! numerators `z_i(t) = P_i(t) (1 - t^a)(1 - t^b)`.

use serde::Serialize;

use crate::diagrams::{cartan, parameters, DiagramType, Kind};
use crate::error::{Error, Result};
use crate::exactalg::{int, Polynomial, RationalFunction, Ring};
use crate::qcartan::{det_quantum, quantize};

/// `P_i(t)` for every vertex `i` of an affine simply-laced diagram, in
/// catalog vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PoincareVector {
    pub diagram: DiagramType,
    pub labels: Vec<String>,
    pub dims: Vec<i64>,
    pub entries: Vec<RationalFunction>,
}

impl PoincareVector {
    pub fn get(&self, label: &str) -> Option<&RationalFunction> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| &self.entries[i])
    }
}

/// Unit vector at the affine (trivial) vertex.
pub fn delta(size: usize, affine_vertex: usize) -> Vec<Polynomial> {
    (0..size)
        .map(|i| {
            if i == affine_vertex {
                Polynomial::one()
            } else {
                Polynomial::zero()
            }
        })
        .collect()
}

/// Solve `C_aff(t) P = delta` by Cramer's rule (adjugate column over the
/// determinant) and verify the system exactly.
pub fn poincare_vector(dt: DiagramType) -> Result<PoincareVector> {
    if !dt.is_simply_laced() {
        return Err(Error::NotSimplyLaced(dt.to_string()));
    }
    let c = cartan(dt, Kind::Affine);
    let q = quantize(&c);
    let n = c.size();
    let v0 = c.affine_vertex.expect("affine matrix");
    let det = q.det();
    let mut entries = Vec::with_capacity(n);
    for i in 0..n {
        let cof = if n == 1 {
            Polynomial::one()
        } else {
            q.entries.minor(v0, i).det()?
        };
        let cof = if (i + v0) % 2 == 1 { cof.neg() } else { cof };
        entries.push(RationalFunction::new(cof, det.clone())?);
    }
    let lifted = q.entries.map(|p| RationalFunction::from_poly(p.clone()));
    let lhs = lifted.mul_vec(&entries);
    let want = delta(n, v0);
    for (i, (got, w)) in lhs.iter().zip(&want).enumerate() {
        if *got != RationalFunction::from_poly(w.clone()) {
            return Err(Error::Consistency(format!(
                "C_aff(t) P != delta at vertex {} of {dt}",
                c.labels[i]
            )));
        }
    }
    let dims = c
        .null_vector()
        .ok_or_else(|| Error::Consistency(format!("{dt} has no positive null vector")))?;
    Ok(PoincareVector {
        diagram: dt,
        labels: c.labels,
        dims,
        entries,
    })
}

/// `det C_fin(t) / det C_aff(t)`; for folded types a formal quotient.
pub fn invariant_series(dt: DiagramType) -> RationalFunction {
    RationalFunction::new(det_quantum(dt, Kind::Finite), det_quantum(dt, Kind::Affine))
        .expect("affine quantum determinant is nonzero")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZPolynomials {
    pub diagram: DiagramType,
    pub a: u32,
    pub b: u32,
    pub labels: Vec<String>,
    pub entries: Vec<Polynomial>,
}

impl ZPolynomials {
    pub fn get(&self, label: &str) -> Option<&Polynomial> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| &self.entries[i])
    }
}

/// Multiply each `P_i` by `(1-t^a)(1-t^b)`; the result must be a polynomial
/// with nonnegative integer coefficients.
pub fn z_polynomials(dt: DiagramType) -> Result<ZPolynomials> {
    let pv = poincare_vector(dt)?;
    let par = parameters(dt);
    let frame = Polynomial::one_minus_t_pow(par.a).mul(&Polynomial::one_minus_t_pow(par.b));
    let mut entries = Vec::with_capacity(pv.entries.len());
    for (label, p) in pv.labels.iter().zip(&pv.entries) {
        let z = p.mul_poly(&frame).as_polynomial().ok_or_else(|| {
            Error::Consistency(format!("z at vertex {label} of {dt} is not a polynomial"))
        })?;
        if !z.is_integral() || !z.is_nonnegative() {
            return Err(Error::Consistency(format!(
                "z at vertex {label} of {dt} has a negative or fractional coefficient"
            )));
        }
        entries.push(z);
    }
    Ok(ZPolynomials {
        diagram: dt,
        a: par.a,
        b: par.b,
        labels: pv.labels,
        entries,
    })
}

/// `sum_i dim(i) P_i(t) = 1/(1-t)^2`.
pub fn dimension_sum_holds(pv: &PoincareVector) -> bool {
    let sum = pv
        .dims
        .iter()
        .zip(&pv.entries)
        .fold(RationalFunction::zero(), |acc, (&d, p)| {
            acc.add(&p.mul(&RationalFunction::from_rational(int(d))))
        });
    sum == RationalFunction::inverse_product(&[1, 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_a1() {
        let pv = poincare_vector(DiagramType::a(1)).unwrap();
        let den = Polynomial::one_minus_t_pow(2).pow(2);
        let p1 = RationalFunction::new(Polynomial::from_ints(&[1, 0, 1]), den.clone()).unwrap();
        let p2 = RationalFunction::new(Polynomial::from_ints(&[0, 2]), den).unwrap();
        assert_eq!(pv.entries, vec![p1, p2]);
        let z = z_polynomials(DiagramType::a(1)).unwrap();
        assert_eq!(z.entries[1], Polynomial::from_ints(&[0, 2]));
    }

    #[test]
    fn affine_a0() {
        let pv = poincare_vector(DiagramType::a(0)).unwrap();
        assert_eq!(pv.entries, vec![RationalFunction::inverse_product(&[1, 1])]);
    }

    #[test]
    fn folded_rejected() {
        let f4 = "F4".parse().unwrap();
        assert!(matches!(poincare_vector(f4), Err(Error::NotSimplyLaced(_))));
        let want = RationalFunction::parse("(1+t^12)/((1-t^6)(1-t^8))").unwrap();
        assert_eq!(invariant_series(f4), want);
    }
}
