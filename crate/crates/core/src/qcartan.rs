//! Quantum Cartan matrices `(1-t)^2 I + t C` and the determinant identities
//! tying them to the numerological table.

use crate::diagrams::{cartan, parameters, CartanMatrix, DiagramType, Kind};
use crate::exactalg::{int, rat, Matrix, Polynomial, Rational, RationalFunction};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumCartanMatrix {
    pub base: CartanMatrix,
    pub entries: Matrix<Polynomial>,
}

/// Diagonal `2 -> 1 + t^2`, off-diagonal `c -> c t`. The affine `A_0`
/// matrix `(0)` becomes `((1-t)^2)`.
pub fn quantize(c: &CartanMatrix) -> QuantumCartanMatrix {
    let one_minus_t_sq = Polynomial::one_minus_t_pow(1).pow(2);
    let entries = Matrix::from_fn(c.size(), c.size(), |i, j| {
        let lin = Polynomial::monomial(int(*c.entries.get(i, j)), 1);
        if i == j {
            one_minus_t_sq.add(&lin)
        } else {
            lin
        }
    });
    QuantumCartanMatrix {
        base: c.clone(),
        entries,
    }
}

impl QuantumCartanMatrix {
    pub fn det(&self) -> Polynomial {
        self.entries.det().expect("quantum Cartan matrices are square")
    }

    pub fn eval(&self, t: &Rational) -> Matrix<Rational> {
        self.entries.map(|p| p.eval(t))
    }
}

pub fn det_quantum(dt: DiagramType, kind: Kind) -> Polynomial {
    quantize(&cartan(dt, kind)).det()
}

fn product_one_minus(exps: &[u32]) -> Polynomial {
    exps.iter()
        .fold(Polynomial::one(), |acc, &k| acc.mul(&Polynomial::one_minus_t_pow(k)))
}

/// Check the five determinant identities for one type.
pub fn verify_identities(dt: DiagramType) -> Report {
    let par = parameters(dt);
    let l = dt.rank() as u32;
    let det_aff = det_quantum(dt, Kind::Affine);
    let det_fin = det_quantum(dt, Kind::Finite);
    let mut report = Report::new(format!("identities {dt}"));

    let lhs = det_aff.mul(&Polynomial::one_minus_t_pow(2));
    let rhs = product_one_minus(&[par.p2, par.q2, par.r2]);
    report.push(
        "(i) det C_aff(t) (1-t^2) = (1-t^2p)(1-t^2q)(1-t^2r)",
        lhs == rhs,
        format!("det C_aff(t) = {det_aff}"),
    );

    let quotient = RationalFunction::new(det_fin.clone(), det_aff.clone());
    let expected = RationalFunction::new(
        Polynomial::one().add(&Polynomial::monomial(int(1), par.h)),
        product_one_minus(&[par.a, par.b]),
    )
    .expect("nonzero denominator");
    let ok = quotient.as_ref().is_ok_and(|q| *q == expected);
    report.push(
        "(ii) det C_fin / det C_aff = (1+t^h)/((1-t^a)(1-t^b))",
        ok,
        expected.to_string_over(&[par.a, par.b]).unwrap_or_default(),
    );

    let det_fin_1 = det_fin.eval(&int(1));
    let (p2, q2, r2) = (
        i64::from(par.p2),
        i64::from(par.q2),
        i64::from(par.r2),
    );
    let ab = int(i64::from(par.a * par.b));
    report.push(
        "(iii) det C_fin(1) = 8pqr/(ab)",
        &det_fin_1 * &ab == int(p2 * q2 * r2),
        format!("det C_fin(1) = {det_fin_1}"),
    );

    report.push(
        "(iv) p + q + r = l + 2",
        par.p2 + par.q2 + par.r2 == 2 * (l + 2),
        format!("2p+2q+2r = {}", par.p2 + par.q2 + par.r2),
    );

    let sym: Rational = rat(p2 * q2 + q2 * r2 + p2 * r2, 4) - rat(p2 * q2 * r2, 8);
    let target = if dt.is_simply_laced() {
        det_fin_1.clone()
    } else {
        int(i64::from(l) + 1)
    };
    report.push(
        if dt.is_simply_laced() {
            "(v) pq + qr + pr - pqr = det C_fin(1)"
        } else {
            "(v) pq + qr + pr - pqr = l + 1"
        },
        sym == target,
        format!("pq + qr + pr - pqr = {sym}"),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::Family;

    #[test]
    fn quantized_affine_a1() {
        let q = quantize(&cartan(DiagramType::a(1), Kind::Affine));
        let d = Polynomial::one_minus_t_pow(2).pow(2);
        assert_eq!(q.det(), d);
        assert_eq!(*q.entries.get(0, 1), Polynomial::from_ints(&[0, -2]));
    }

    #[test]
    fn quantized_affine_a0() {
        let q = quantize(&cartan(DiagramType::a(0), Kind::Affine));
        assert_eq!(q.det(), Polynomial::from_ints(&[1, -2, 1]));
    }

    #[test]
    fn g2_affine_determinant() {
        let g2 = DiagramType::new(Family::G2, 2).unwrap();
        let want = Polynomial::one_minus_t_pow(4).mul(&Polynomial::one_minus_t_pow(2));
        assert_eq!(det_quantum(g2, Kind::Affine), want);
    }

    #[test]
    fn specialization_at_zero_and_one() {
        for dt in DiagramType::catalog(6) {
            let c = cartan(dt, Kind::Affine);
            let q = quantize(&c);
            assert!(q.eval(&int(0)).is_identity(), "{dt}");
            assert_eq!(q.eval(&int(1)), c.to_rational(), "{dt}");
            assert_eq!(q.det().eval(&int(1)), int(0), "{dt}");
        }
    }
}
