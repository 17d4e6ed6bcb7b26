//! Character tables of the binary tetrahedral, octahedral and icosahedral
//! groups, entered verbatim. Symbols: `rho = exp(2 pi i/3)`, `rho2 = rho^2`,
//! `sigma = sqrt 2`, `tau = (1+sqrt 5)/2`, `tau' = (1-sqrt 5)/2`.

use super::{Gen, Word};
use crate::error::{Error, Result};
use crate::exactalg::{CyclotomicNumber, Ring};

pub(crate) struct PolyhedralTable {
    /// `(p, q, r)` of the presentation `alpha^p = beta^q = gamma^r`.
    pub pqr: (u32, u32, u32),
    pub class_names: &'static [&'static str],
    pub class_words: &'static [&'static [(Gen, i32)]],
    pub irrep_names: &'static [&'static str],
    pub rows: &'static [&'static [&'static str]],
    /// Prime and generator matrices of the finite-field model.
    pub field_model: (u32, [i64; 4], [i64; 4]),
}

use Gen::{Alpha as A, Beta as B};

pub(crate) const TETRAHEDRAL: PolyhedralTable = PolyhedralTable {
    pqr: (3, 3, 2),
    class_names: &["{1}", "[γ]", "{1̄}", "[α^2]", "[β^2]", "[α]", "[β]"],
    class_words: &[
        &[],
        &[(B, -1), (A, 2)],
        &[(A, 3)],
        &[(A, 2)],
        &[(B, 2)],
        &[(A, 1)],
        &[(B, 1)],
    ],
    irrep_names: &["1", "2", "3", "2'", "2''", "1'", "1''"],
    rows: &[
        &["1", "1", "1", "1", "1", "1", "1"],
        &["2", "0", "-2", "-1", "-1", "1", "1"],
        &["3", "-1", "3", "0", "0", "0", "0"],
        &["2", "0", "-2", "-rho", "-rho2", "rho2", "rho"],
        &["2", "0", "-2", "-rho2", "-rho", "rho", "rho2"],
        &["1", "1", "1", "rho", "rho2", "rho2", "rho"],
        &["1", "1", "1", "rho2", "rho", "rho", "rho2"],
    ],
    field_model: (3, [-1, -1, 0, -1], [1, 1, -1, 0]),
};

pub(crate) const OCTAHEDRAL: PolyhedralTable = PolyhedralTable {
    pqr: (4, 3, 2),
    class_names: &["{1}", "[β]", "[β^2]", "{1̄}", "[α^3]", "[γ]", "[α^2]", "[α]"],
    class_words: &[
        &[],
        &[(B, 1)],
        &[(B, 2)],
        &[(A, 4)],
        &[(A, 3)],
        &[(B, -1), (A, 3)],
        &[(A, 2)],
        &[(A, 1)],
    ],
    irrep_names: &["1", "2", "3", "4", "3'", "2''", "2'", "1'"],
    rows: &[
        &["1", "1", "1", "1", "1", "1", "1", "1"],
        &["2", "1", "-1", "-2", "-sigma", "0", "0", "sigma"],
        &["3", "0", "0", "3", "1", "-1", "-1", "1"],
        &["4", "-1", "1", "-4", "0", "0", "0", "0"],
        &["3", "0", "0", "3", "-1", "1", "-1", "-1"],
        &["2", "-1", "-1", "2", "0", "0", "2", "0"],
        &["2", "1", "-1", "-2", "sigma", "0", "0", "-sigma"],
        &["1", "1", "1", "1", "-1", "-1", "1", "-1"],
    ],
    field_model: (7, [1, 1, 2, 3], [-1, -3, 1, 2]),
};

pub(crate) const ICOSAHEDRAL: PolyhedralTable = PolyhedralTable {
    pqr: (5, 3, 2),
    class_names: &[
        "{1}", "[α]", "[α^2]", "[α^3]", "[α^4]", "{1̄}", "[β^2]", "[γ]", "[β]",
    ],
    class_words: &[
        &[],
        &[(A, 1)],
        &[(A, 2)],
        &[(A, 3)],
        &[(A, 4)],
        &[(A, 5)],
        &[(B, 2)],
        &[(B, -1), (A, 4)],
        &[(B, 1)],
    ],
    irrep_names: &["1", "2", "3", "4", "5", "6", "4'", "3'", "2'"],
    rows: &[
        &["1", "1", "1", "1", "1", "1", "1", "1", "1"],
        &["2", "tau", "-tau'", "tau'", "-tau", "-2", "-1", "0", "1"],
        &["3", "tau", "tau'", "tau'", "tau", "3", "0", "-1", "0"],
        &["4", "1", "-1", "1", "-1", "-4", "1", "0", "-1"],
        &["5", "0", "0", "0", "0", "5", "-1", "1", "-1"],
        &["6", "-1", "1", "-1", "1", "-6", "0", "0", "0"],
        &["4", "-1", "-1", "-1", "-1", "4", "1", "0", "1"],
        &["3", "tau'", "tau", "tau", "tau'", "3", "0", "-1", "0"],
        &["2", "tau'", "-tau", "tau", "-tau'", "-2", "-1", "0", "1"],
    ],
    field_model: (5, [-1, -1, 0, -1], [1, 1, -1, 0]),
};

/// Parse a table entry: an optional sign and an integer or named constant.
pub(crate) fn parse_entry(s: &str) -> Result<CyclotomicNumber> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let v = match body {
        "rho" => CyclotomicNumber::zeta(3, 1),
        "rho2" => CyclotomicNumber::zeta(3, 2),
        "sigma" => CyclotomicNumber::sqrt2(),
        "tau" => CyclotomicNumber::golden(),
        "tau'" => CyclotomicNumber::golden_conj(),
        n => CyclotomicNumber::from_i64(
            n.parse()
                .map_err(|_| Error::Parse(format!("bad table entry {s:?}")))?,
        ),
    };
    Ok(if neg { v.neg() } else { v })
}

pub(crate) fn word(w: &[(Gen, i32)]) -> Word {
    w.to_vec()
}
