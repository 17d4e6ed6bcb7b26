//! Homomorphisms from T, O, I into complex reflection groups, one per
//! irreducible representation, with generator matrices entered verbatim.

use super::words::Presentation;
use super::{Assignment, HomEntry};
use crate::binpoly::GroupId;
use crate::error::Result;
use crate::exactalg::{rat, CyclotomicNumber as Cy, Matrix, Ring};

fn n(k: i64) -> Cy {
    Cy::from_i64(k)
}

fn i() -> Cy {
    Cy::i()
}

fn mat(rows: Vec<Vec<Cy>>) -> Matrix<Cy> {
    Matrix::from_rows(rows)
}

fn int_mat(rows: &[&[i64]]) -> Matrix<Cy> {
    mat(rows.iter().map(|r| r.iter().map(|&x| n(x)).collect()).collect())
}

/// Permutation matrix swapping coordinates `a` and `b` (1-based).
fn swap(dim: usize, a: usize, b: usize) -> Matrix<Cy> {
    let (a, b) = (a - 1, b - 1);
    Matrix::from_fn(dim, dim, |r, c| {
        let src = if c == a {
            b
        } else if c == b {
            a
        } else {
            c
        };
        if r == src {
            n(1)
        } else {
            n(0)
        }
    })
}

fn diag_sign(dim: usize, k: usize) -> Matrix<Cy> {
    Matrix::from_fn(dim, dim, |r, c| match (r == c, r == k - 1) {
        (true, true) => n(-1),
        (true, false) => n(1),
        _ => n(0),
    })
}

/// Embed a 2x2 block in the top-left corner of the identity.
fn block(dim: usize, b: [[Cy; 2]; 2]) -> Matrix<Cy> {
    Matrix::from_fn(dim, dim, |r, c| {
        if r < 2 && c < 2 {
            b[r][c].clone()
        } else if r == c {
            n(1)
        } else {
            n(0)
        }
    })
}

fn sym(name: &str, generators: &str, relations: &str) -> Result<(Presentation, Assignment)> {
    Ok((
        Presentation::parse(name, generators, relations)?,
        Assignment::Permutations {
            points: generators.len() + 1,
        },
    ))
}

fn w_a1() -> Result<(Presentation, Assignment)> {
    sym("Sym2 = W(A1)", "r", "r^2=1")
}

fn w_a2() -> Result<(Presentation, Assignment)> {
    sym("Sym3 = W(A2)", "rs", "r^2=s^2=(rs)^3=1")
}

fn w_a3() -> Result<(Presentation, Assignment)> {
    sym("Sym4 = W(A3)", "rst", "r^2=s^2=t^2=(rs)^3=(st)^3=(rt)^2=1")
}

fn w_a4() -> Result<(Presentation, Assignment)> {
    sym(
        "Sym5 = W(A4)",
        "rstu",
        "r^2=s^2=t^2=u^2=(rs)^3=(st)^3=(tu)^3=1, (rt)^2=(ru)^2=(su)^2=1",
    )
}

fn w_a5() -> Result<(Presentation, Assignment)> {
    sym(
        "Sym6 = W(A5)",
        "rstuv",
        "r^2=s^2=t^2=u^2=v^2=1, (rs)^3=(st)^3=(tu)^3=(uv)^3=1, \
         (rt)^2=(ru)^2=(rv)^2=(su)^2=(sv)^2=(tv)^2=1",
    )
}

fn g3_3() -> Result<(Presentation, Assignment)> {
    Ok((
        Presentation::parse("G3(3)", "r", "r^3=1")?,
        Assignment::Matrices(vec![mat(vec![vec![Cy::zeta(3, 1)]])]),
    ))
}

fn g4() -> Result<(Presentation, Assignment)> {
    let rho = Cy::zeta(3, 1);
    let rho2 = Cy::zeta(3, 2);
    let i_over_sqrt3 = Cy::sqrt_neg3().scale(&rat(1, 3));
    let m = Cy::sqrt2().mul(&rho2).neg();
    let r = mat(vec![vec![n(1), n(0)], vec![n(0), rho.clone()]]);
    let s = mat(vec![vec![n(1), m.clone()], vec![m, rho.neg()]]).scale(&i_over_sqrt3);
    Ok((
        Presentation::parse("G4", "rs", "r^3=s^3=1, rsr=srs")?,
        Assignment::Matrices(vec![r, s]),
    ))
}

fn g12() -> Result<(Presentation, Assignment)> {
    let eps = Cy::zeta(8, 1);
    let eps3 = Cy::zeta(8, 3);
    let h = Cy::sqrt2().scale(&rat(1, 2));
    let r = mat(vec![vec![n(0), eps], vec![eps3.neg(), n(0)]]);
    let s = mat(vec![vec![n(1), i()], vec![i().neg(), n(-1)]]).scale(&h);
    let t = int_mat(&[&[1, 1], &[1, -1]]).scale(&h);
    Ok((
        Presentation::parse("G12", "rst", "r^2=s^2=t^2=1, rstr=strs=trst")?,
        Assignment::Matrices(vec![r, s, t]),
    ))
}

fn g13() -> Result<(Presentation, Assignment)> {
    let h = Cy::sqrt2().scale(&rat(1, 2));
    let r = int_mat(&[&[-1, 0], &[0, 1]]);
    let s = mat(vec![vec![n(-1), i().neg()], vec![i(), n(1)]]).scale(&h);
    let t = int_mat(&[&[-1, 1], &[1, 1]]).scale(&h);
    Ok((
        Presentation::parse("G13", "rst", "r^2=s^2=t^2=1, rstrs=trstr, strs=trst")?,
        Assignment::Matrices(vec![r, s, t]),
    ))
}

fn w_b3() -> Result<(Presentation, Assignment)> {
    Ok((
        Presentation::parse("W(B3)", "rst", "r^2=s^2=t^2=(rs)^4=(st)^3=(rt)^2=1")?,
        Assignment::Matrices(vec![diag_sign(3, 1), swap(3, 1, 2), swap(3, 2, 3)]),
    ))
}

fn g_4_2_4() -> Result<(Presentation, Assignment)> {
    let s = block(4, [[n(0), i().neg()], [i(), n(0)]]);
    Ok((
        Presentation::parse(
            "G(4,2,4)",
            "rstuv",
            "r^2=s^2=t^2=u^2=v^2=1, rst=str=trs, (ru)^2=(rv)^2=1, \
             (su)^3=(tu)^3=(uv)^3=(sv)^2=(tv)^2=1",
        )?,
        Assignment::Matrices(vec![
            diag_sign(4, 1),
            s,
            swap(4, 1, 2),
            swap(4, 2, 3),
            swap(4, 3, 4),
        ]),
    ))
}

fn g22() -> Result<(Presentation, Assignment)> {
    let eta = |k| Cy::zeta(5, k);
    let i_over_sqrt5 = i().mul(&Cy::sqrt5()).scale(&rat(1, 5));
    let r = mat(vec![vec![n(0), i().neg()], vec![i(), n(0)]]);
    let s = mat(vec![
        vec![n(0), i().mul(&eta(3))],
        vec![i().mul(&eta(2)).neg(), n(0)],
    ]);
    let t = mat(vec![
        vec![eta(2).sub(&eta(3)), n(-1).add(&eta(2))],
        vec![n(1).sub(&eta(3)), eta(2).neg().add(&eta(3))],
    ])
    .scale(&i_over_sqrt5);
    Ok((
        Presentation::parse("G22", "rst", "r^2=s^2=t^2=1, rstrsr=(trs)^2, strs=trst")?,
        Assignment::Matrices(vec![r, s, t]),
    ))
}

fn h3() -> Result<(Presentation, Assignment)> {
    let tau = Cy::golden();
    let tau_c = Cy::golden_conj();
    let half = Cy::from_rational(rat(1, 2));
    let r = mat(vec![
        vec![tau_c.clone(), tau.clone(), n(1)],
        vec![tau.clone(), n(1), tau_c.clone()],
        vec![n(1), tau_c.clone(), tau.clone()],
    ])
    .scale(&half);
    let t = mat(vec![
        vec![n(1), tau_c.clone(), tau.neg()],
        vec![tau_c.clone(), tau.clone(), n(-1)],
        vec![tau.neg(), n(-1), tau_c],
    ])
    .scale(&half);
    Ok((
        Presentation::parse("G23 = W(H3)", "rst", "r^2=s^2=t^2=(rs)^5=(st)^3=(rt)^2=1")?,
        Assignment::Matrices(vec![r, diag_sign(3, 1), t]),
    ))
}

fn g29() -> Result<(Presentation, Assignment)> {
    let s = mat(vec![
        vec![n(1), n(-1), i(), i()],
        vec![n(-1), n(1), i(), i()],
        vec![i().neg(), i().neg(), n(1), n(-1)],
        vec![i().neg(), i().neg(), n(-1), n(1)],
    ])
    .scale(&Cy::from_rational(rat(1, 2)));
    let t = int_mat(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, -1], &[0, 0, -1, 0]]);
    Ok((
        Presentation::parse(
            "G29",
            "rstu",
            "r^2=s^2=t^2=u^2=(rs)^3=(rt)^2=(ru)^2=1, (st)^4=(su)^3=(tu)^3=1, \
             (ust)^2=(stu)^2",
        )?,
        Assignment::Matrices(vec![diag_sign(4, 1), s, t, swap(4, 2, 3)]),
    ))
}

/// `u`, `v` are the permutation matrices of the transpositions `(3 4)`,
/// `(4 5)`, as the displayed entry instructs.
fn g_4_4_6() -> Result<(Presentation, Assignment)> {
    let r = block(6, [[n(0), i()], [i().neg(), n(0)]]);
    Ok((
        Presentation::parse(
            "G(4,4,6)",
            "rstuvw",
            "r^2=s^2=t^2=u^2=v^2=w^2=1, (rs)^4=(rt)^3=(ru)^2=(rv)^2=(rw)^2=1, \
             (st)^3=1, (trs)^2=(rst)^2, \
             (su)^2=(sv)^2=(sw)^2=(tv)^2=(tw)^2=(uw)^2=1, (tu)^3=(uv)^3=(vw)^3=1",
        )?,
        Assignment::Matrices(vec![
            r,
            swap(6, 1, 2),
            swap(6, 2, 3),
            swap(6, 3, 4),
            swap(6, 4, 5),
            swap(6, 5, 6),
        ]),
    ))
}

type Target = fn() -> Result<(Presentation, Assignment)>;

/// `(group, irrep, target, alpha word, beta word, order of the image)`.
const ROWS: &[(GroupId, &str, Target, &str, &str, usize)] = &[
    (GroupId::Tetrahedral, "1", w_a1, "1", "1", 1),
    (GroupId::Tetrahedral, "2", g12, "rs", "ts", 24),
    (GroupId::Tetrahedral, "3", w_a3, "rs", "st", 12),
    (GroupId::Tetrahedral, "2'", g4, "r^2s^2", "rs", 24),
    (GroupId::Tetrahedral, "2''", g4, "rs", "r^2s^2", 24),
    (GroupId::Tetrahedral, "1'", g3_3, "r^2", "r", 3),
    (GroupId::Tetrahedral, "1''", g3_3, "r", "r^2", 3),
    (GroupId::Octahedral, "1", w_a1, "1", "1", 1),
    (GroupId::Octahedral, "2", g13, "rs", "ts", 48),
    (GroupId::Octahedral, "3", w_b3, "rs", "st", 24),
    (GroupId::Octahedral, "4", g_4_2_4, "tusrsv", "(rstuv)^2", 48),
    (GroupId::Octahedral, "3'", w_a3, "rst", "ts", 24),
    (GroupId::Octahedral, "2''", w_a2, "r", "rs", 6),
    (GroupId::Octahedral, "2'", g13, "(rs)^3", "st", 48),
    (GroupId::Octahedral, "1'", w_a1, "r", "1", 2),
    (GroupId::Icosahedral, "1", w_a1, "1", "1", 1),
    (GroupId::Icosahedral, "2", g22, "rs", "ts", 120),
    (GroupId::Icosahedral, "3", h3, "rs", "st", 60),
    (GroupId::Icosahedral, "4", g29, "(rstu)^2", "rstsrustst", 120),
    (GroupId::Icosahedral, "5", w_a5, "rstu", "sruv", 60),
    (GroupId::Icosahedral, "6", g_4_4_6, "(rstuvw)^2", "srtsrutsrtuvutrwvu", 120),
    (GroupId::Icosahedral, "4'", w_a4, "rstu", "stsr", 60),
    (GroupId::Icosahedral, "3'", h3, "(rs)^3", "rtsrsrts", 60),
    (GroupId::Icosahedral, "2'", g22, "(rs)^3", "(sr)^2(tr)^2", 120),
];

pub(super) fn build() -> Result<Vec<HomEntry>> {
    ROWS.iter()
        .map(|&(group, irrep, target, alpha, beta, image_order)| {
            let (presentation, assignment) = target()?;
            let alpha_word = presentation.word(alpha)?;
            let beta_word = presentation.word(beta)?;
            Ok(HomEntry {
                group,
                irrep: irrep.to_string(),
                presentation,
                assignment,
                alpha_text: alpha.to_string(),
                beta_text: beta.to_string(),
                alpha_word,
                beta_word,
                image_order,
            })
        })
        .collect()
}
