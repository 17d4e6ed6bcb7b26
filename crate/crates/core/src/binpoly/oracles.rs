//! Independent checks of the class-function data against concrete matrix
//! groups.

use super::model::{closure, conjugacy_orbit, eval_word, CycloMat, GroupElement};
use super::{finite_field_model, group_data, su2_generators, GroupId};
use crate::error::{Error, Result};
use crate::exactalg::{CyclotomicNumber, Ring};
use crate::report::Report;

/// Close the SU(2) generators and compare with the abstract group data.
pub fn realize_matrix_group(id: GroupId) -> Result<Report> {
    let g = group_data(id)?;
    let (alpha, beta) = su2_generators(id)?;
    let gens = [alpha.clone(), beta.clone()];
    let elements = closure(&gens, g.order).ok_or_else(|| {
        Error::Consistency(format!("generators of {id} close to more than {} elements", g.order))
    })?;
    let mut r = Report::new(format!("{id} in SU(2)"));
    r.push(
        "closure order",
        elements.len() == g.order,
        format!("{} elements, expected {}", elements.len(), g.order),
    );
    let one = CyclotomicNumber::one();
    r.check(
        "determinant 1",
        elements.iter().all(|m| m.det() == one),
    );
    let has_minus = elements.iter().any(CycloMat::minus_identity);
    r.push(
        "-I present iff expected",
        has_minus == g.has_central_minus_one(),
        format!("-I {}", if has_minus { "present" } else { "absent" }),
    );
    let st = g.character(&g.standard);
    let mut sizes_ok = true;
    let mut traces_ok = true;
    let mut covered = 0;
    for (c, class) in g.classes.iter().enumerate() {
        let x = eval_word(&alpha, &beta, &class.word);
        let orbit = conjugacy_orbit(&x, &gens);
        covered += orbit.len();
        sizes_ok &= orbit.len() == class.size;
        traces_ok &= orbit.iter().all(|y| y.trace() == st[c]);
        traces_ok &= x.order() == class.order;
    }
    r.check("class sizes", sizes_ok && covered == g.order);
    r.check("traces equal the standard character", traces_ok);
    if g.pqr.is_some() {
        r.check("presentation relations", g.relations_hold_in(&alpha, &beta));
    }
    Ok(r)
}

/// The finite-field models `SL2(F_3)`, `SL2(F_5)` and the octahedral
/// subgroup of `SL2(F_7)`.
pub fn verify_sl2_model(id: GroupId) -> Result<Report> {
    let (alpha, beta) = finite_field_model(id)
        .ok_or_else(|| Error::Unsupported(format!("no finite-field model for {id}")))?;
    let g = group_data(id)?;
    let p = alpha.p;
    let mut r = Report::new(format!("{id} in SL2(F_{p})"));
    let elements = closure(&[alpha, beta], 10_000).unwrap_or_default();
    r.push(
        "group order",
        elements.len() == g.order,
        format!("{} elements, expected {}", elements.len(), g.order),
    );
    r.check(
        "determinant 1",
        alpha.det() == 1 && beta.det() == 1 && elements.iter().all(|m| m.det() == 1),
    );
    r.check("presentation relations", g.relations_hold_in(&alpha, &beta));
    if let Some((pp, _, _)) = g.pqr {
        let z = alpha.pow(i64::from(pp));
        r.check("alpha^p = -1", z == super::model::ModMat2::scalar(p, -1));
    }
    if id == GroupId::Octahedral {
        let tr = alpha.trace();
        r.push(
            "trace of alpha squares to 2",
            tr == 4 && (tr * tr) % p == 2,
            format!("tr alpha = {tr}, tr^2 = {} mod {p}", (tr * tr) % p),
        );
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn su2_models_close() {
        for id in [
            GroupId::Cyclic(1),
            GroupId::Cyclic(2),
            GroupId::Cyclic(5),
            GroupId::BinaryDihedral(3),
            GroupId::Tetrahedral,
            GroupId::Octahedral,
            GroupId::Icosahedral,
        ] {
            let r = realize_matrix_group(id).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn finite_field_models() {
        for id in GroupId::polyhedral() {
            let r = verify_sl2_model(id).unwrap();
            assert!(r.passed(), "{r}");
        }
        assert!(verify_sl2_model(GroupId::Cyclic(3)).is_err());
    }
}
