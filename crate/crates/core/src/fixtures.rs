//! Published reference values, transcribed verbatim. Everything here is
//! data; the checks that consume it live in [`crate::acceptance`].

use crate::binpoly::GroupId;
use crate::diagrams::{DiagramType, Family};

/// `det C_fin(t)` for `E8`.
pub const E8_DET_FINITE: &str = "1 + t^2 - t^6 - t^8 - t^10 + t^14 + t^16";
/// `det C_aff(t)` for `E8`.
pub const E8_DET_AFFINE: &str = "1 + t^2 - t^6 - t^8 - t^10 - t^12 + t^16 + t^18";
/// Invariant series of the binary icosahedral group.
pub const E8_INVARIANTS: &str = "(1 + t^30)/((1 - t^12)*(1 - t^20))";

/// `z_i(t)` for the nine `E8` vertices, keyed by irrep label.
pub const E8_Z: [(&str, &str); 9] = [
    ("1", "1 + t^30"),
    ("2", "t + t^11 + t^19 + t^29"),
    ("3", "t^2 + t^10 + t^12 + t^18 + t^20 + t^28"),
    ("4", "t^3 + t^9 + t^11 + t^13 + t^17 + t^19 + t^21 + t^27"),
    (
        "5",
        "t^4 + t^8 + t^10 + t^12 + t^14 + t^16 + t^18 + t^20 + t^22 + t^26",
    ),
    (
        "6",
        "t^5 + t^7 + t^9 + t^11 + t^13 + 2t^15 + t^17 + t^19 + t^21 + t^23 + t^25",
    ),
    ("4'", "t^6 + t^8 + t^12 + t^14 + t^16 + t^18 + t^22 + t^24"),
    ("3'", "t^6 + t^10 + t^14 + t^16 + t^20 + t^24"),
    ("2'", "t^7 + t^13 + t^17 + t^23"),
];

/// A row `(a, b, h, p, q, r)` of the numerological table; `p`, `q`, `r`
/// doubled to stay integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub a: u32,
    pub b: u32,
    pub h: u32,
    pub p2: u32,
    pub q2: u32,
    pub r2: u32,
}

/// The table row for a type, as printed (the infinite families as
/// formulas in `l`).
pub fn table_row(dt: DiagramType) -> TableRow {
    let l = dt.rank() as u32;
    let row = |a, b, h, p2, q2, r2| TableRow { a, b, h, p2, q2, r2 };
    match dt.family() {
        Family::A => row(2, l + 1, l + 1, l + 1, l + 1, 2),
        Family::D => row(4, 2 * l - 4, 2 * l - 2, 2 * (l - 2), 4, 4),
        Family::E6 => row(6, 8, 12, 6, 6, 4),
        Family::E7 => row(8, 12, 18, 8, 6, 4),
        Family::E8 => row(12, 20, 30, 10, 6, 4),
        Family::C => row(2, 2 * l, 2 * l, 2 * l, 2, 2),
        Family::B => row(4, 2 * l - 2, 2 * l, 2 * (l - 1), 4, 2),
        Family::F4 => row(6, 8, 12, 6, 4, 2),
        Family::G2 => row(4, 4, 6, 4, 2, 2),
    }
}

/// Irreps drawn as dotted (spinorial) vertices.
pub fn spinorial(id: GroupId) -> &'static [&'static str] {
    match id {
        GroupId::Tetrahedral => &["2", "2'", "2''"],
        GroupId::Octahedral => &["2", "4", "2'"],
        GroupId::Icosahedral => &["2", "4", "6", "2'"],
        _ => &[],
    }
}

/// Unsigned coefficients of `lambda_{-t}` of each irrep, lowest degree
/// first; the sign of degree `k` is `(-1)^k`.
pub fn lambda_lists(id: GroupId) -> &'static [(&'static str, &'static [&'static str])] {
    match id {
        GroupId::Tetrahedral => &[
            ("1", &["1", "1"]),
            ("2", &["1", "2", "1"]),
            ("3", &["1", "3", "3", "1"]),
            ("2'", &["1", "2'", "1''"]),
            ("2''", &["1", "2''", "1'"]),
            ("1'", &["1", "1'"]),
            ("1''", &["1", "1''"]),
        ],
        GroupId::Octahedral => &[
            ("1", &["1", "1"]),
            ("2", &["1", "2", "1"]),
            ("3", &["1", "3", "3", "1"]),
            ("4", &["1", "4", "1 + 3' + 2''", "4", "1"]),
            ("3'", &["1", "3'", "3", "1'"]),
            ("2''", &["1", "2''", "1'"]),
            ("2'", &["1", "2'", "1"]),
            ("1'", &["1", "1'"]),
        ],
        GroupId::Icosahedral => &[
            ("1", &["1", "1"]),
            ("2", &["1", "2", "1"]),
            ("3", &["1", "3", "3", "1"]),
            ("4", &["1", "4", "1 + 5", "4", "1"]),
            ("5", &["1", "5", "3 + 4' + 3'", "3 + 4' + 3'", "5", "1"]),
            (
                "6",
                &[
                    "1",
                    "6",
                    "1 + 2*5 + 4'",
                    "2*4 + 2*6",
                    "1 + 2*5 + 4'",
                    "6",
                    "1",
                ],
            ),
            ("4'", &["1", "4'", "3 + 3'", "4'", "1"]),
            ("3'", &["1", "3'", "3'", "1"]),
            ("2'", &["1", "2'", "1"]),
        ],
        _ => &[],
    }
}

/// Unsigned `lambda_{-t}` coefficients of the SU(2) irreps `Rep_k`, as sums
/// of SU(2) irreps written by dimension.
pub const SU2_LAMBDA: [&[&[u32]]; 7] = [
    &[&[1], &[1]],
    &[&[1], &[2], &[1]],
    &[&[1], &[3], &[3], &[1]],
    &[&[1], &[4], &[1, 5], &[4], &[1]],
    &[&[1], &[5], &[3, 7], &[3, 7], &[5], &[1]],
    &[&[1], &[6], &[1, 5, 9], &[4, 6, 10], &[1, 5, 9], &[6], &[1]],
    &[
        &[1],
        &[7],
        &[3, 7, 11],
        &[1, 5, 7, 9, 13],
        &[1, 5, 7, 9, 13],
        &[3, 7, 11],
        &[7],
        &[1],
    ],
];

/// Restrictions of `Rep_1, Rep_2, ...` to the group.
pub fn restrictions(id: GroupId) -> &'static [&'static str] {
    match id {
        GroupId::Tetrahedral => &["1", "2", "3", "2' + 2''", "3 + 1' + 1''"],
        GroupId::Octahedral => &["1", "2", "3", "4", "3' + 2''", "4 + 2'", "3 + 3' + 1'"],
        GroupId::Icosahedral => &[
            "1", "2", "3", "4", "5", "6", "4' + 3'", "6 + 2'", "5 + 4'", "4 + 6",
        ],
        _ => &[],
    }
}

/// Sample tensor products `(group, x, y, x*y)`.
pub const TENSOR_PRODUCTS: [(GroupId, &str, &str, &str); 4] = [
    (GroupId::Tetrahedral, "2'", "2'", "3 + 1''"),
    (GroupId::Octahedral, "2'", "2'", "3 + 1"),
    (GroupId::Octahedral, "2''", "2''", "1 + 2'' + 1'"),
    (GroupId::Octahedral, "3'", "2''", "3 + 3'"),
];

/// `P_{1,j}(t)` for every irrep `j`, as drawn on the diagrams.
pub fn invariant_diagram(id: GroupId) -> &'static [(&'static str, &'static str)] {
    match id {
        GroupId::Tetrahedral => &[
            ("1", "1/(1-t)"),
            ("2", "(1+t^12)/((1-t^6)*(1-t^8))"),
            ("3", "(1+t^6)/((1-t^2)*(1-t^3)*(1-t^4))"),
            ("2'", "1/((1-t^4)*(1-t^6))"),
            ("2''", "1/((1-t^4)*(1-t^6))"),
            ("1'", "1/(1-t^3)"),
            ("1''", "1/(1-t^3)"),
        ],
        GroupId::Octahedral => &[
            ("1", "1/(1-t)"),
            ("2", "(1+t^18)/((1-t^8)*(1-t^12))"),
            ("3", "(1+t^9)/((1-t^2)*(1-t^4)*(1-t^6))"),
            (
                "4",
                "(1+t^4+2t^6+4t^8+4t^10+2t^12+t^14+t^18)/((1-t^4)^2*(1-t^6)*(1-t^8))",
            ),
            ("3'", "1/((1-t^2)*(1-t^3)*(1-t^4))"),
            ("2''", "1/((1-t^2)*(1-t^3))"),
            ("2'", "(1+t^18)/((1-t^8)*(1-t^12))"),
            ("1'", "1/(1-t^2)"),
        ],
        GroupId::Icosahedral => &[
            ("1", "1/(1-t)"),
            ("2", "(1+t^30)/((1-t^12)*(1-t^20))"),
            ("3", "(1+t^15)/((1-t^2)*(1-t^6)*(1-t^10))"),
            (
                "4",
                "(1+2t^8+2t^10+2t^12+t^20)/((1-t^4)^2*(1-t^6)*(1-t^10))",
            ),
            (
                "5",
                "(1+t^5+2t^6+t^7+t^12)/((1-t^2)*(1-t^3)^2*(1-t^4)*(1-t^5))",
            ),
            (
                "6",
                "(1+t^4)*(1+5t^6+17t^8+17t^10+16t^12+17t^14+17t^16+5t^18+t^24)/((1-t^4)^3*(1-t^6)^2*(1-t^10))",
            ),
            ("4'", "(1+t^10)/((1-t^2)*(1-t^3)*(1-t^4)*(1-t^5))"),
            ("3'", "(1+t^15)/((1-t^2)*(1-t^6)*(1-t^10))"),
            ("2'", "(1+t^30)/((1-t^12)*(1-t^20))"),
        ],
        _ => &[],
    }
}

/// Characters of two reflection representations, per conjugacy class in
/// table order.
pub const REFLECTION_TRACES: [(GroupId, &str, &[i64]); 2] = [
    (GroupId::Octahedral, "4", &[4, -1, 1, -4, 0, 0, 0, 0]),
    (GroupId::Icosahedral, "5", &[5, 0, 0, 0, 0, 5, -1, 1, -1]),
];
