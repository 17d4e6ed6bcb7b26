//! The representation ring: virtual characters as integer vectors over the
//! irreducibles, with tensor products, Adams operations and lambda/sigma
//! operations computed through power sums (Newton identities).

use std::fmt;

use serde::Serialize;

use super::GroupData;
use crate::error::{Error, Result};
use crate::exactalg::{rat, CyclotomicNumber, Ring};

/// Element of `R(G)`: multiplicities over the irreps, in table order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RepElement(pub Vec<i64>);

pub type ClassFunction = Vec<CyclotomicNumber>;

impl RepElement {
    pub fn zero(n: usize) -> Self {
        RepElement(vec![0; n])
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        RepElement(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&m| m == 0)
    }

    pub fn is_honest(&self) -> bool {
        self.0.iter().all(|&m| m >= 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        RepElement(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        RepElement(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        RepElement(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    /// Index of the irrep if this is exactly one irreducible.
    pub fn as_single_irrep(&self) -> Option<usize> {
        let mut found = None;
        for (i, &m) in self.0.iter().enumerate() {
            match (m, found) {
                (0, _) => {}
                (1, None) => found = Some(i),
                _ => return None,
            }
        }
        found
    }
}

impl GroupData {
    pub fn character(&self, x: &RepElement) -> ClassFunction {
        (0..self.num_classes())
            .map(|c| {
                x.0.iter()
                    .zip(&self.irreps)
                    .filter(|(&m, _)| m != 0)
                    .fold(CyclotomicNumber::zero(), |acc, (&m, r)| {
                        acc.add(&r.values[c].scale(&crate::exactalg::int(m)))
                    })
            })
            .collect()
    }

    /// `(1/|G|) sum_c |c| a(c) conj(b(c))`.
    pub fn inner(&self, a: &[CyclotomicNumber], b: &[CyclotomicNumber]) -> CyclotomicNumber {
        let s = self
            .classes
            .iter()
            .zip(a.iter().zip(b))
            .fold(CyclotomicNumber::zero(), |acc, (c, (x, y))| {
                acc.add(&x.mul(&y.conj()).scale(&crate::exactalg::int(c.size as i64)))
            });
        s.scale(&rat(1, self.order as i64))
    }

    /// Coordinates of a virtual character; fails if a multiplicity is not
    /// an integer.
    pub fn decompose(&self, chi: &[CyclotomicNumber]) -> Result<RepElement> {
        self.irreps
            .iter()
            .map(|r| {
                let m = self.inner(chi, &r.values);
                m.to_i64().ok_or_else(|| {
                    Error::Consistency(format!(
                        "multiplicity of {} in a class function of {} is {}",
                        r.name, self.id, m
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(RepElement)
    }

    pub fn dim(&self, x: &RepElement) -> i64 {
        x.0.iter()
            .zip(&self.irreps)
            .map(|(&m, r)| m * r.dim as i64)
            .sum()
    }

    pub fn trivial(&self) -> RepElement {
        RepElement::basis(self.num_irreps(), self.trivial_index)
    }

    pub fn irrep(&self, name: &str) -> Option<RepElement> {
        self.irrep_index(name)
            .map(|i| RepElement::basis(self.num_irreps(), i))
    }

    pub fn tensor(&self, x: &RepElement, y: &RepElement) -> RepElement {
        let cx = self.character(x);
        let cy = self.character(y);
        let prod: ClassFunction = cx.iter().zip(&cy).map(|(a, b)| a.mul(b)).collect();
        self.decompose(&prod)
            .expect("products of characters decompose integrally")
    }

    /// `x(c^m)` as a class function.
    fn adams_character(&self, m: i64, chi: &[CyclotomicNumber]) -> ClassFunction {
        (0..self.num_classes())
            .map(|c| chi[self.power_class(c, m)].clone())
            .collect()
    }

    /// Adams operation `psi^m`.
    pub fn adams(&self, m: i64, x: &RepElement) -> RepElement {
        let chi = self.character(x);
        self.decompose(&self.adams_character(m, &chi))
            .expect("Adams operations are integral")
    }

    /// Characters of `Lambda^k x`, `k = 0..=max_k`, from the Newton identity
    /// `k e_k = sum_{m=1}^k (-1)^(m-1) e_{k-m} p_m`.
    pub fn exterior_characters(&self, x: &RepElement, max_k: usize) -> Vec<ClassFunction> {
        let chi = self.character(x);
        let power_sums: Vec<ClassFunction> = (0..=max_k as i64)
            .map(|m| self.adams_character(m, &chi))
            .collect();
        let mut e: Vec<ClassFunction> = vec![vec![CyclotomicNumber::one(); self.num_classes()]];
        for k in 1..=max_k {
            let mut acc = vec![CyclotomicNumber::zero(); self.num_classes()];
            for m in 1..=k {
                let sign = if m % 2 == 1 { 1 } else { -1 };
                for c in 0..self.num_classes() {
                    let term = e[k - m][c].mul(&power_sums[m][c]);
                    acc[c] = if sign > 0 {
                        acc[c].add(&term)
                    } else {
                        acc[c].sub(&term)
                    };
                }
            }
            let inv_k = rat(1, k as i64);
            e.push(acc.iter().map(|v| v.scale(&inv_k)).collect());
        }
        e
    }

    /// Characters of `S^n x`, `n = 0..=max_n`, from
    /// `n h_n = sum_{m=1}^n p_m h_{n-m}`.
    pub fn symmetric_characters(&self, x: &RepElement, max_n: usize) -> Vec<ClassFunction> {
        let chi = self.character(x);
        let power_sums: Vec<ClassFunction> = (0..=max_n as i64)
            .map(|m| self.adams_character(m, &chi))
            .collect();
        let mut h: Vec<ClassFunction> = vec![vec![CyclotomicNumber::one(); self.num_classes()]];
        for n in 1..=max_n {
            let mut acc = vec![CyclotomicNumber::zero(); self.num_classes()];
            for m in 1..=n {
                for c in 0..self.num_classes() {
                    acc[c] = acc[c].add(&h[n - m][c].mul(&power_sums[m][c]));
                }
            }
            let inv_n = rat(1, n as i64);
            h.push(acc.iter().map(|v| v.scale(&inv_n)).collect());
        }
        h
    }

    pub fn exterior_power(&self, k: usize, x: &RepElement) -> Result<RepElement> {
        if !x.is_honest() {
            return Err(Error::Unsupported("exterior power of a virtual representation".into()));
        }
        let chars = self.exterior_characters(x, k);
        self.decompose(&chars[k])
    }

    pub fn symmetric_power(&self, n: usize, x: &RepElement) -> Result<RepElement> {
        let chars = self.symmetric_characters(x, n);
        self.decompose(&chars[n])
    }

    /// Coefficients of `lambda_{-t}(x) = sum_k (-1)^k Lambda^k(x) t^k`, of
    /// length `dim x + 1`.
    pub fn lambda_series(&self, x: &RepElement) -> Result<Vec<RepElement>> {
        if !x.is_honest() {
            return Err(Error::Unsupported("lambda series of a virtual representation".into()));
        }
        let d = self.dim(x) as usize;
        self.exterior_characters(x, d)
            .iter()
            .enumerate()
            .map(|(k, chi)| {
                let r = self.decompose(chi)?;
                Ok(if k % 2 == 1 { r.neg() } else { r })
            })
            .collect()
    }

    /// `S^(k-1)(C^2)` restricted to the group.
    pub fn restrict_su2(&self, k: usize) -> Result<RepElement> {
        if k == 0 {
            return Err(Error::OutOfRange("SU(2) irreps are numbered from 1".into()));
        }
        self.symmetric_power(k - 1, &self.standard)
    }

    /// Parse `1 + 2*5 + 4'` or `3 - 1` into a (virtual) element.
    pub fn parse_rep(&self, s: &str) -> Result<RepElement> {
        let mut out = RepElement::zero(self.num_irreps());
        let s = s.trim();
        if s == "0" && self.irrep_index("0").is_none() {
            return Ok(out);
        }
        let mut sign = 1i64;
        let mut current = String::new();
        let mut terms = Vec::new();
        for ch in s.chars() {
            match ch {
                '+' | '-' if !current.trim().is_empty() => {
                    terms.push((sign, std::mem::take(&mut current)));
                    sign = if ch == '-' { -1 } else { 1 };
                }
                '+' => {}
                '-' => sign = -sign,
                c => current.push(c),
            }
        }
        terms.push((sign, current));
        for (sign, term) in terms {
            let term = term.trim();
            let (coef, name) = match term.split_once('*') {
                Some((c, n)) => (
                    c.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad coefficient in {term:?}")))?,
                    n.trim(),
                ),
                None => (1, term),
            };
            let i = self
                .irrep_index(name)
                .ok_or_else(|| Error::Parse(format!("{} has no irrep {name:?}", self.id)))?;
            out.0[i] += sign * coef;
        }
        Ok(out)
    }

    /// Render as `1 + 2*5 + 4'`; `0` for the zero element.
    pub fn format_rep(&self, x: &RepElement) -> String {
        let mut s = String::new();
        for (i, &m) in x.0.iter().enumerate() {
            if m == 0 {
                continue;
            }
            let name = &self.irreps[i].name;
            let mag = m.abs();
            let body = if mag == 1 {
                name.clone()
            } else {
                format!("{mag}*{name}")
            };
            if s.is_empty() {
                if m < 0 {
                    s.push('-');
                }
            } else {
                s.push_str(if m < 0 { " - " } else { " + " });
            }
            s.push_str(&body);
        }
        if s.is_empty() {
            "0".into()
        } else {
            s
        }
    }
}

impl fmt::Display for RepElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use crate::binpoly::{group_data, GroupId};

    #[test]
    fn tensor_examples() {
        let t = group_data(GroupId::Tetrahedral).unwrap();
        let x = t.irrep("2'").unwrap();
        assert_eq!(t.tensor(&x, &x), t.parse_rep("3 + 1''").unwrap());
        let o = group_data(GroupId::Octahedral).unwrap();
        let y = o.irrep("2''").unwrap();
        assert_eq!(o.tensor(&y, &y), o.parse_rep("1 + 2'' + 1'").unwrap());
    }

    #[test]
    fn adams_examples() {
        let i = group_data(GroupId::Icosahedral).unwrap();
        let two = i.irrep("2").unwrap();
        assert_eq!(i.adams(2, &two), i.parse_rep("3 - 1").unwrap());
        assert_eq!(i.adams(1, &two), two);
        let t = group_data(GroupId::Tetrahedral).unwrap();
        assert_eq!(t.adams(2, &t.irrep("1'").unwrap()), t.irrep("1''").unwrap());
    }

    #[test]
    fn lambda_examples() {
        let o = group_data(GroupId::Octahedral).unwrap();
        let l = o.lambda_series(&o.irrep("4").unwrap()).unwrap();
        assert_eq!(l[2], o.parse_rep("1 + 3' + 2''").unwrap());
        assert_eq!(l[1], o.irrep("4").unwrap().neg());
        assert!(o.lambda_series(&o.parse_rep("1 - 2").unwrap()).is_err());
    }

    #[test]
    fn restriction_examples() {
        let i = group_data(GroupId::Icosahedral).unwrap();
        assert_eq!(i.restrict_su2(7).unwrap(), i.parse_rep("4' + 3'").unwrap());
        let o = group_data(GroupId::Octahedral).unwrap();
        assert_eq!(o.restrict_su2(6).unwrap(), o.parse_rep("4 + 2'").unwrap());
        assert_eq!(o.restrict_su2(1).unwrap(), o.trivial());
    }

    #[test]
    fn format_and_parse_round_trip() {
        let i = group_data(GroupId::Icosahedral).unwrap();
        let x = i.parse_rep("1 + 2*5 + 4'").unwrap();
        assert_eq!(i.format_rep(&x), "1 + 2*5 + 4'");
        assert_eq!(i.parse_rep(&i.format_rep(&x)).unwrap(), x);
        assert_eq!(i.format_rep(&i.parse_rep("3 - 1").unwrap()), "-1 + 3");
    }
}
