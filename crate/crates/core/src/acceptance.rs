//! The fifteen acceptance criteria as runnable checks.
//!
//! Each criterion produces a [`Report`]; internal errors become failing
//! checks rather than aborting the run, so a report is always complete.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::binpoly::{
    group_data, mckay_graph, realize_matrix_group, verify_sl2_model, GroupData, GroupId,
    RepElement,
};
use crate::coxspec::{
    affine_a_product, coxeter_element, multiplicative_order, reflection_rep, verify_spectrum,
};
use crate::diagrams::{cartan, parameters, DiagramType, Kind};
use crate::error::{Error, Result};
use crate::exactalg::{CyclotomicNumber, Polynomial, RationalFunction, Ring};
use crate::fixtures;
use crate::molien::{
    crosscheck_cartan, crosscheck_sigma, degree_rows, half_substitution_check, molien_series,
};
use crate::poincare::{self, poincare_vector, z_polynomials};
use crate::qcartan::{det_quantum, verify_identities};
use crate::reflhom::{catalog, find_entry, verify_catalog};
use crate::report::Report;

pub const CRITERIA: usize = 15;

/// Largest rank of the infinite families covered by the table checks.
pub const MAX_RANK: usize = 12;

/// Series order used by the operator-inversion cross-check.
pub const SIGMA_ORDER: usize = 64;

#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    /// Include the `l = 4` affine `A` enumeration.
    pub slow: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub number: usize,
    pub title: &'static str,
    pub passed: bool,
    pub report: Report,
    #[serde(skip)]
    pub elapsed: Duration,
}

pub fn title(number: usize) -> &'static str {
    match number {
        1 => "E8 quantum Cartan determinants",
        2 => "E8 invariant series and z-polynomials",
        3 => "numerological table and determinant identities",
        4 => "character tables and McKay graphs",
        5 => "lambda-polynomial lists",
        6 => "invariant-ring diagrams",
        7 => "Molien series equal Cartan Poincare series",
        8 => "operator inversion agrees with Molien",
        9 => "half substitution relation",
        10 => "degree remark for the icosahedral group",
        11 => "Coxeter spectrum identities",
        12 => "affine A Eulerian product",
        13 => "reflection group homomorphisms",
        14 => "dimension sum rules",
        15 => "matrix-group oracles",
        _ => "unknown criterion",
    }
}

/// Run one criterion (numbered from 1).
pub fn run(number: usize, opts: Options) -> Result<Outcome> {
    let start = Instant::now();
    let mut report = Report::new(format!("{number}. {}", title(number)));
    let body = match number {
        1 => e8_determinants(&mut report),
        2 => e8_invariants(&mut report),
        3 => table(&mut report),
        4 => character_tables(&mut report),
        5 => lambda_lists(&mut report),
        6 => invariant_diagrams(&mut report),
        7 => molien_vs_cartan(&mut report),
        8 => sigma(&mut report),
        9 => half_substitution(&mut report),
        10 => degree_remark(&mut report),
        11 => spectrum(&mut report),
        12 => eulerian_product(&mut report, opts),
        13 => homomorphisms(&mut report),
        14 => dimension_sums(&mut report),
        15 => matrix_oracles(&mut report),
        _ => {
            return Err(Error::OutOfRange(format!(
                "criteria are numbered 1..={CRITERIA}"
            )))
        }
    };
    if let Err(e) = body {
        report.push("internal error", false, e.to_string());
    }
    if report.checks.is_empty() {
        report.push("nothing checked", false, "");
    }
    Ok(Outcome {
        number,
        title: title(number),
        passed: report.passed(),
        report,
        elapsed: start.elapsed(),
    })
}

/// All criteria in order.
pub fn run_all(opts: Options) -> Vec<Outcome> {
    (1..=CRITERIA)
        .map(|n| run(n, opts).expect("criterion number in range"))
        .collect()
}

fn parse_poly(s: &str) -> Result<Polynomial> {
    RationalFunction::parse(s)?
        .as_polynomial()
        .ok_or_else(|| Error::Parse(format!("{s:?} is not a polynomial")))
}

fn polyhedral() -> Result<Vec<std::sync::Arc<GroupData>>> {
    GroupId::polyhedral().into_iter().map(group_data).collect()
}

fn e8_determinants(r: &mut Report) -> Result<()> {
    let e8 = DiagramType::e(8);
    for (kind, text) in [
        (Kind::Finite, fixtures::E8_DET_FINITE),
        (Kind::Affine, fixtures::E8_DET_AFFINE),
    ] {
        let got = det_quantum(e8, kind);
        let want = parse_poly(text)?;
        r.push(format!("det C_{kind:?}(t)").to_lowercase(), got == want, got.to_string());
    }
    Ok(())
}

fn e8_invariants(r: &mut Report) -> Result<()> {
    let e8 = DiagramType::e(8);
    let pv = poincare_vector(e8)?;
    let p1 = pv.get("1").cloned().unwrap_or_else(RationalFunction::zero);
    let want = RationalFunction::parse(fixtures::E8_INVARIANTS)?;
    r.push("P_1", p1 == want, p1.to_factored_string());
    let z = z_polynomials(e8)?;
    for (label, text) in fixtures::E8_Z {
        let want = parse_poly(text)?;
        let got = z.get(label);
        r.push(
            format!("z at {label}"),
            got == Some(&want),
            got.map(ToString::to_string).unwrap_or_default(),
        );
    }
    let middle = z.get("6").map(|p| p.coeff(15));
    r.push(
        "coefficient 2 at t^15 of z at 6",
        middle.as_ref().is_some_and(|c| *c == crate::exactalg::int(2)),
        "",
    );
    Ok(())
}

fn table_types() -> Vec<DiagramType> {
    DiagramType::catalog(MAX_RANK)
        .into_iter()
        .filter(|d| d.rank() >= 1)
        .collect()
}

fn table(r: &mut Report) -> Result<()> {
    let rows: Vec<Result<Report>> = table_types()
        .into_par_iter()
        .map(|dt| {
            let mut sub = verify_identities(dt);
            let par = parameters(dt);
            let row = fixtures::table_row(dt);
            sub.check(
                "parameters match the table",
                (par.a, par.b, par.h, par.p2, par.q2, par.r2)
                    == (row.a, row.b, row.h, row.p2, row.q2, row.r2),
            );
            if dt.is_simply_laced() {
                let null = cartan(dt, Kind::Affine)
                    .null_vector()
                    .ok_or_else(|| Error::Consistency(format!("{dt} has no null vector")))?;
                let h: i64 = null.iter().sum();
                let a = 2 * null.iter().copied().max().unwrap_or(0);
                sub.push(
                    "h, a, b from dimensions",
                    h == i64::from(row.h) && a == i64::from(row.a) && h + 2 - a == i64::from(row.b),
                    format!("h = {h}, a = {a}"),
                );
            }
            let fin = reflection_rep(&cartan(dt, Kind::Finite));
            let order = multiplicative_order(
                &coxeter_element(&fin, &(0..fin.size()).collect::<Vec<_>>())?,
                2 * row.h as usize + 1,
            );
            sub.push(
                "h is the Coxeter order",
                order == Some(row.h as usize),
                format!("{order:?}"),
            );
            Ok(sub)
        })
        .collect();
    absorb_all(r, rows)
}

fn absorb_all(r: &mut Report, parts: Vec<Result<Report>>) -> Result<()> {
    for part in parts {
        let part = part?;
        let prefix = format!("{}: ", part.subject);
        r.absorb(&prefix, part);
    }
    Ok(())
}

fn character_tables(r: &mut Report) -> Result<()> {
    for g in polyhedral()? {
        let id = g.id;
        r.check(format!("{id} row orthogonality"), g.row_orthogonality());
        r.check(format!("{id} column orthogonality"), g.column_orthogonality());
        let mut dotted: Vec<&str> = g
            .irreps
            .iter()
            .filter(|i| i.spinorial == Some(true))
            .map(|i| i.name.as_str())
            .collect();
        let mut want = fixtures::spinorial(id).to_vec();
        dotted.sort_unstable();
        want.sort_unstable();
        r.push(format!("{id} spinorial irreps"), dotted == want, dotted.join(", "));
        let v = mckay_graph(&g);
        let affine = cartan(id.diagram(), Kind::Affine).affine_vertex;
        let trivial_at_affine = v
            .matching
            .as_ref()
            .is_some_and(|m| Some(m[g.trivial_index]) == affine);
        r.check(
            format!("{id} McKay graph is affine {}", id.diagram()),
            v.labeled_match && v.matching.is_some() && trivial_at_affine,
        );
        r.check(format!("{id} eigenvector property"), v.eigenvectors);
    }
    for (id, x, y, want) in fixtures::TENSOR_PRODUCTS {
        let g = group_data(id)?;
        let got = g.tensor(&g.parse_rep(x)?, &g.parse_rep(y)?);
        r.push(
            format!("{id} {x} * {y}"),
            got == g.parse_rep(want)?,
            g.format_rep(&got),
        );
    }
    Ok(())
}

fn signed(g: &GroupData, k: usize, s: &str) -> Result<RepElement> {
    let x = g.parse_rep(s)?;
    Ok(if k % 2 == 1 { x.neg() } else { x })
}

fn lambda_lists(r: &mut Report) -> Result<()> {
    let mut total = 0;
    for g in polyhedral()? {
        let id = g.id;
        for (name, list) in fixtures::lambda_lists(id) {
            let x = g
                .irrep(name)
                .ok_or_else(|| Error::Consistency(format!("{id} has no irrep {name}")))?;
            let got = g.lambda_series(&x)?;
            let want: Vec<RepElement> = list
                .iter()
                .enumerate()
                .map(|(k, s)| signed(&g, k, s))
                .collect::<Result<_>>()?;
            let shown: Vec<String> = got.iter().map(|c| g.format_rep(c)).collect();
            r.push(format!("{id} lambda_-t {name}"), got == want, shown.join(" | "));
            total += 1;
        }
        for (k, want) in fixtures::restrictions(id).iter().enumerate() {
            let got = g.restrict_su2(k + 1)?;
            r.push(
                format!("{id} Rep{} restricts", k + 1),
                got == g.parse_rep(want)?,
                g.format_rep(&got),
            );
        }
        for (k, list) in fixtures::SU2_LAMBDA.iter().enumerate() {
            let x = g.restrict_su2(k + 1)?;
            let got = g.lambda_series(&x)?;
            let mut want = Vec::new();
            for (m, dims) in list.iter().enumerate() {
                let mut sum = RepElement::zero(g.num_irreps());
                for &d in *dims {
                    sum = sum.add(&g.restrict_su2(d as usize)?);
                }
                want.push(if m % 2 == 1 { sum.neg() } else { sum });
            }
            r.check(format!("{id} lambda_-t Rep{} restricted", k + 1), got == want);
        }
    }
    r.push("number of irreducible lists", total == 24, format!("{total}"));
    Ok(())
}

fn invariant_diagrams(r: &mut Report) -> Result<()> {
    let mut jobs = Vec::new();
    for id in GroupId::polyhedral() {
        for (name, text) in fixtures::invariant_diagram(id) {
            jobs.push((id, *name, *text));
        }
    }
    let rows: Vec<Result<(String, bool, String)>> = jobs
        .into_par_iter()
        .map(|(id, name, text)| {
            let g = group_data(id)?;
            let j = g
                .irrep(name)
                .ok_or_else(|| Error::Consistency(format!("{id} has no irrep {name}")))?;
            let got = molien_series(&g, g.trivial_index, &j)?;
            let want = RationalFunction::parse(text)?;
            Ok((
                format!("{id} P_1,{name}"),
                got == want,
                got.to_factored_string(),
            ))
        })
        .collect();
    let mut count = 0;
    for row in rows {
        let (name, ok, detail) = row?;
        r.push(name, ok, detail);
        count += 1;
    }
    r.push("number of diagram entries", count == 24, format!("{count}"));
    Ok(())
}

fn oracle_groups() -> Vec<GroupId> {
    let mut out: Vec<GroupId> = (1..=12).map(GroupId::Cyclic).collect();
    out.extend((2..=8).map(GroupId::BinaryDihedral));
    out.extend(GroupId::polyhedral());
    out
}

fn molien_vs_cartan(r: &mut Report) -> Result<()> {
    let parts: Vec<Result<Report>> = oracle_groups()
        .into_par_iter()
        .map(|id| crosscheck_cartan(&*group_data(id)?))
        .collect();
    absorb_all(r, parts)
}

fn sigma(r: &mut Report) -> Result<()> {
    for g in polyhedral()? {
        let sub = crosscheck_sigma(&g, SIGMA_ORDER)?;
        let prefix = format!("{} ", g.id);
        r.absorb(&prefix, sub);
    }
    Ok(())
}

fn half_substitution(r: &mut Report) -> Result<()> {
    for g in polyhedral()? {
        let rows: Vec<_> = (0..g.num_irreps())
            .into_par_iter()
            .map(|i| half_substitution_check(&g, i))
            .collect::<Result<_>>()?;
        for h in rows {
            let what = if h.spinorial {
                "P_i,rep3 = 0"
            } else {
                "P_i,rep3 (1-t^2) = P_i(t^1/2)"
            };
            r.push(
                format!("{} {}: {what}", h.group, h.irrep),
                h.holds,
                h.series.to_factored_string(),
            );
        }
    }
    Ok(())
}

fn degree_remark(r: &mut Report) -> Result<()> {
    let g = group_data(GroupId::Icosahedral)?;
    let rows = degree_rows(&g)?;
    for row in &rows {
        r.push(
            format!("dim {} = -deg P_1,{}", row.irrep, row.irrep),
            row.matches,
            format!("{} vs {}", row.dim, row.neg_degree),
        );
    }
    r.check("all nine irreps", rows.len() == 9);
    Ok(())
}

fn spectrum(r: &mut Report) -> Result<()> {
    let parts: Vec<Result<Report>> = table_types()
        .into_par_iter()
        .map(|dt| verify_spectrum(dt).map(|(_, rep)| rep))
        .collect();
    absorb_all(r, parts)
}

fn eulerian_product(r: &mut Report, opts: Options) -> Result<()> {
    let top = if opts.slow { 4 } else { 3 };
    for l in 1..=top {
        let p = affine_a_product(l)?;
        r.push(
            format!("l = {l}"),
            p.holds,
            format!("{} orderings, product {}", p.orderings, p.rhs),
        );
    }
    Ok(())
}

fn homomorphisms(r: &mut Report) -> Result<()> {
    let n = catalog()?.len();
    r.push("catalog size", n == 24, format!("{n} entries"));
    for rep in verify_catalog(None)? {
        let failures: Vec<String> = rep.failures().map(|c| c.name.clone()).collect();
        r.push(
            rep.subject.clone(),
            rep.passed(),
            if failures.is_empty() {
                format!("{} checks", rep.checks.len())
            } else {
                failures.join("; ")
            },
        );
    }
    for (id, irrep, want) in fixtures::REFLECTION_TRACES {
        let g = group_data(id)?;
        find_entry(id, irrep)?;
        let x = g
            .irrep(irrep)
            .ok_or_else(|| Error::Consistency(format!("{id} has no irrep {irrep}")))?;
        let got = g.character(&x);
        let want: Vec<CyclotomicNumber> = want.iter().map(|&v| CyclotomicNumber::from_int(v)).collect();
        r.check(format!("{id} {irrep} character row"), got == want);
    }
    Ok(())
}

fn dimension_sums(r: &mut Report) -> Result<()> {
    let types: Vec<DiagramType> = DiagramType::simply_laced_catalog(MAX_RANK);
    for dt in types {
        let pv = poincare_vector(dt)?;
        r.check(
            format!("affine {dt}: sum dim(i) P_i = 1/(1-t)^2"),
            poincare::dimension_sum_holds(&pv),
        );
    }
    for g in polyhedral()? {
        let rows: Vec<(String, bool)> = (0..g.num_irreps())
            .into_par_iter()
            .map(|j| {
                let jr = RepElement::basis(g.num_irreps(), j);
                crate::molien::dimension_sum_holds(&g, &jr).map(|ok| (g.irreps[j].name.clone(), ok))
            })
            .collect::<Result<_>>()?;
        for (name, ok) in rows {
            r.check(format!("{} j = {name}: sum dim(i) P_i,j = 1/(1-t)^dim j", g.id), ok);
        }
    }
    Ok(())
}

fn matrix_oracles(r: &mut Report) -> Result<()> {
    for id in GroupId::polyhedral() {
        r.absorb(&format!("{id} SU(2): "), realize_matrix_group(id)?);
        r.absorb(&format!("{id} SL2: "), verify_sl2_model(id)?);
    }
    Ok(())
}

