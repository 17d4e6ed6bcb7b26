use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use super::{CyclotomicNumber, ExactDiv, Field, Rational, Ring};

/// Sparse univariate polynomial in `t`.
///
/// Only nonzero coefficients are stored, so structural equality is value
/// equality. The zero polynomial has no degree (`degree()` is `None`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    terms: BTreeMap<u32, C>,
}

pub type Polynomial = Poly<Rational>;
pub type CycloPoly = Poly<CyclotomicNumber>;

impl<C: Ring> Poly<C> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: C, exp: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Poly { terms }
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// Dense integer coefficients, index = exponent.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (e, &c) in coeffs.iter().enumerate() {
            p.add_term(e as u32, &C::from_int(c));
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    /// `1 - t^k`, the building block of every denominator in this crate.
    pub fn one_minus_t_pow(k: u32) -> Self {
        let mut p = Self::one();
        p.add_term(k, &C::from_int(-1));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.terms.values().next_back()
    }

    pub fn coeff(&self, exp: u32) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &C)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, exp: u32, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(existing) => {
                let sum = existing.add(c);
                if sum.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(exp, c.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, &c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(&e, c)| (e, c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                out.add_term(e1 + e2, &c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (&e, x) in &self.terms {
            out.add_term(e, &x.mul(c));
        }
        out
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: u32) -> Self {
        Poly {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &C) -> C {
        // Horner over the sparse exponents, highest first.
        let mut acc = C::zero();
        let mut last: Option<u32> = None;
        for (&e, c) in self.terms.iter().rev() {
            if let Some(prev) = last {
                acc = acc.mul(&x.pow(u64::from(prev - e)));
            }
            acc = acc.add(c);
            last = Some(e);
        }
        if let Some(low) = last {
            acc = acc.mul(&x.pow(u64::from(low)));
        }
        acc
    }

    /// Substitute `t -> t^k`.
    pub fn compose_power(&self, k: u32) -> Self {
        Poly {
            terms: self.terms.iter().map(|(&e, c)| (e * k, c.clone())).collect(),
        }
    }

    /// Substitute `t -> -t`.
    pub fn reflect(&self) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e, if e % 2 == 1 { c.neg() } else { c.clone() }))
                .collect(),
        }
    }

    pub fn has_even_support(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    pub fn has_odd_support(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 1)
    }

    /// Substitute `t -> t^(1/2)`; only defined on even support.
    pub fn halve_exponents(&self) -> Option<Self> {
        if !self.has_even_support() {
            return None;
        }
        Some(Poly {
            terms: self.terms.iter().map(|(&e, c)| (e / 2, c.clone())).collect(),
        })
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        let mut out = Poly::zero();
        for (&e, c) in &self.terms {
            out.add_term(e, &f(c));
        }
        out
    }

    pub fn try_map<D: Ring>(&self, f: impl Fn(&C) -> Option<D>) -> Option<Poly<D>> {
        let mut out = Poly::zero();
        for (&e, c) in &self.terms {
            out.add_term(e, &f(c)?);
        }
        Some(out)
    }
}

impl<F: Field> Poly<F> {
    /// Euclidean division; `None` when dividing by zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lead_inv = divisor.leading_coeff()?.inv()?;
        let mut quot = Self::zero();
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading_coeff().expect("nonzero").mul(&lead_inv);
            let shift = rd - dd;
            for (&e, dc) in &divisor.terms {
                rem.add_term(e + shift, &dc.mul(&c).neg());
            }
            quot.add_term(shift, &c);
        }
        Some((quot, rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }
}

impl Poly<Rational> {
    /// Positive rational `c` with `self / c` integral and primitive.
    pub fn content(&self) -> Rational {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            return <Rational as Ring>::one();
        }
        Rational::new(num_gcd, den_lcm)
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Integer coefficients as `i64`, if they all fit.
    pub fn to_i64_terms(&self) -> Option<Vec<(u32, i64)>> {
        self.terms
            .iter()
            .map(|(&e, c)| {
                if !c.is_integer() {
                    return None;
                }
                i64::try_from(c.numer()).ok().map(|v| (e, v))
            })
            .collect()
    }

    pub fn to_cyclotomic(&self) -> CycloPoly {
        self.map(|c| CyclotomicNumber::from_rational(c.clone()))
    }
}

impl Poly<CyclotomicNumber> {
    /// Descend to rational coefficients; `None` if any coefficient is
    /// irrational.
    pub fn to_rational(&self) -> Option<Polynomial> {
        self.try_map(|c| c.to_rational())
    }
}

/// JSON form: an object from exponent to exact coefficient string, e.g.
/// `{"0":"1","30":"1"}`, keys in increasing exponent order.
impl Serialize for Poly<Rational> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Poly<Rational> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = BTreeMap::<String, String>::deserialize(deserializer)?;
        let mut p = Poly::zero();
        for (e, c) in raw {
            let e: u32 = e
                .parse()
                .map_err(|_| de::Error::custom(format!("bad exponent {e:?}")))?;
            let c: Rational = c
                .parse()
                .map_err(|_| de::Error::custom(format!("bad coefficient {c:?}")))?;
            p.add_term(e, &c);
        }
        Ok(p)
    }
}

impl<C: Ring> Ring for Poly<C> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        Poly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Poly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Poly::mul(self, other)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn from_int(n: i64) -> Self {
        Poly::constant(C::from_int(n))
    }
}

impl<F: Field> ExactDiv for Poly<F> {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }
}

impl<C: Ring> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let s = c.to_string();
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if !rest.contains(['+', '-']) => (true, rest.to_string()),
                _ => (false, s.clone()),
            };
            let compound = body.contains(['+', '-']);
            let body = if compound && e > 0 {
                format!("({body})")
            } else {
                body
            };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            match e {
                0 => write!(f, "{body}")?,
                _ => {
                    if body != "1" {
                        write!(f, "{body}*")?;
                    }
                    if e == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<C: Ring> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(p(&[0, 0, 3]).degree(), Some(2));
        assert_eq!(p(&[1, 0, -1]).sub(&p(&[1, 0, -1])).degree(), None);
    }

    #[test]
    fn division_and_gcd() {
        // (t^2 - 1) = (t - 1)(t + 1)
        let a = p(&[-1, 0, 1]);
        let b = p(&[-1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&p(&[1, 1]).mul(&p(&[2, 1]))), p(&[1, 1]));
        assert_eq!(p(&[1, 0, 1]).exact_div(&p(&[1, 1])), None);
    }

    #[test]
    fn content_and_eval() {
        let q = Polynomial::from_terms([(0, rat(2, 3)), (3, rat(4, 9))]);
        assert_eq!(q.content(), rat(2, 9));
        assert_eq!(p(&[1, 2, 3]).eval(&int(2)), int(17));
        assert_eq!(p(&[0, 0, 0, 5]).eval(&int(-1)), int(-5));
    }

    #[test]
    fn display_is_ascending() {
        assert_eq!(p(&[1, 0, -1, 0, 2]).to_string(), "1 - t^2 + 2*t^4");
        assert_eq!(Polynomial::from_terms([(1, rat(-1, 2))]).to_string(), "-1/2*t");
    }

    #[test]
    fn halving_requires_even_support() {
        assert_eq!(p(&[1, 0, 1]).halve_exponents(), Some(p(&[1, 1])));
        assert_eq!(p(&[1, 1]).halve_exponents(), None);
        assert_eq!(p(&[1, 1]).compose_power(3), p(&[1, 0, 0, 1]));
    }
}
