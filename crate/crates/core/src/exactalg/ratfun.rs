use std::fmt;
use std::str::FromStr;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::{ExactDiv, Field, Polynomial, Rational, Ring};
use crate::error::{Error, Result};

/// Quotient of two rational polynomials in normal form.
///
/// Normal form: numerator and denominator are coprime; the denominator is
/// `v * D` and the numerator `u * N` with `D`, `N` primitive integer
/// polynomials, the leading coefficient of `D` positive, and `u / v` the
/// remaining rational factor in lowest terms (sign carried by `u`). Two
/// equal functions therefore have identical fields.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn from_poly(p: Polynomial) -> Self {
        Self::normalize(p, Polynomial::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_poly(Polynomial::constant(r))
    }

    /// `1 / prod (1 - t^k)` over the given exponents.
    pub fn inverse_product(exps: &[u32]) -> Self {
        let den = exps
            .iter()
            .fold(Polynomial::one(), |acc, &k| acc.mul(&Polynomial::one_minus_t_pow(k)));
        Self::normalize(Polynomial::one(), den)
    }

    fn normalize(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return RationalFunction {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        let cn = num.content();
        let cd = den.content();
        let mut n_prim = num.scale(&cn.recip());
        let mut d_prim = den.scale(&cd.recip());
        if d_prim.leading_coeff().is_some_and(|c| c.is_negative()) {
            n_prim = n_prim.neg();
            d_prim = d_prim.neg();
        }
        let ratio = cn / cd;
        let u = Rational::from_integer(ratio.numer().clone());
        let v = Rational::from_integer(ratio.denom().clone());
        RationalFunction {
            num: n_prim.scale(&u),
            den: d_prim.scale(&v),
        }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `deg num - deg den`; `None` for the zero function.
    pub fn degree(&self) -> Option<i64> {
        let dn = self.num.degree()?;
        let dd = self.den.degree().expect("nonzero denominator");
        Some(i64::from(dn) - i64::from(dd))
    }

    /// The polynomial this function equals, if any.
    pub fn as_polynomial(&self) -> Option<Polynomial> {
        if self.den.degree() == Some(0) {
            let c = self.den.coeff(0);
            Some(self.num.scale(&c.recip()))
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::normalize(self.num.add(&other.num), self.den.clone());
        }
        Self::normalize(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::normalize(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn mul_poly(&self, p: &Polynomial) -> Self {
        Self::normalize(self.num.mul(p), self.den.clone())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.recip()?))
    }

    /// Value at a rational point; `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if Ring::is_zero(&d) {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    /// Substitute `t -> t^k`.
    pub fn compose_power(&self, k: u32) -> Self {
        Self::normalize(self.num.compose_power(k), self.den.compose_power(k))
    }

    /// Substitute `t -> t^(1/2)`; defined when both numerator and
    /// denominator have even support after normalization.
    pub fn halve_exponents(&self) -> Option<Self> {
        let n = self.num.halve_exponents()?;
        let d = self.den.halve_exponents()?;
        Some(Self::normalize(n, d))
    }

    /// Exponents `k_i` (ascending) of a short product `prod (1 - t^k_i)`
    /// that the denominator divides, if the denominator is a product of
    /// cyclotomic polynomials. Larger factors are chosen first.
    pub fn denominator_cover(&self) -> Option<Vec<u32>> {
        let mut mult = cyclotomic_multiplicities(&self.den)?;
        let mut exps = Vec::new();
        while let Some((&n, _)) = mult.iter().next_back() {
            exps.push(n);
            for d in 1..=n {
                if n % d == 0 {
                    if let Some(m) = mult.get_mut(&d) {
                        *m -= 1;
                        if *m == 0 {
                            mult.remove(&d);
                        }
                    }
                }
            }
        }
        exps.sort_unstable();
        Some(exps)
    }

    /// Render as `num / prod (1 - t^k)` over the given exponents, if the
    /// numerator comes out polynomial.
    pub fn to_string_over(&self, exps: &[u32]) -> Option<String> {
        let den = exps
            .iter()
            .fold(Polynomial::one(), |acc, &k| acc.mul(&Polynomial::one_minus_t_pow(k)));
        let num = self.mul_poly(&den).as_polynomial()?;
        let mut grouped: Vec<(u32, usize)> = Vec::new();
        let mut sorted = exps.to_vec();
        sorted.sort_unstable();
        for k in sorted {
            match grouped.last_mut() {
                Some((kk, m)) if *kk == k => *m += 1,
                _ => grouped.push((k, 1)),
            }
        }
        let parts: Vec<String> = grouped
            .iter()
            .map(|&(k, m)| {
                let base = if k == 1 {
                    "(1 - t)".to_string()
                } else {
                    format!("(1 - t^{k})")
                };
                if m == 1 {
                    base
                } else {
                    format!("{base}^{m}")
                }
            })
            .collect();
        let num_s = if num.num_terms() > 1 {
            format!("({num})")
        } else {
            num.to_string()
        };
        Some(match parts.len() {
            0 => num.to_string(),
            1 => format!("{num_s}/{}", parts[0]),
            _ => format!("{num_s}/({})", parts.join("*")),
        })
    }

    /// Human-oriented rendering with a denominator of the form
    /// `prod (1 - t^k)` when one exists.
    pub fn to_factored_string(&self) -> String {
        if let Some(p) = self.as_polynomial() {
            return p.to_string();
        }
        self.denominator_cover()
            .and_then(|exps| self.to_string_over(&exps))
            .unwrap_or_else(|| self.to_string())
    }

    pub fn parse(s: &str) -> Result<Self> {
        super::parse::parse_rational_function(s)
    }
}

/// Multiplicities `n -> m` with `p = c * prod Phi_n^m`, if `p` has that
/// shape.
fn cyclotomic_multiplicities(p: &Polynomial) -> Option<std::collections::BTreeMap<u32, u32>> {
    let mut rest = p.clone();
    let mut out = std::collections::BTreeMap::new();
    let mut n = 1u32;
    while rest.degree()? > 0 {
        let deg = rest.degree()? as usize;
        // phi(n) >= sqrt(n/2), so no cyclotomic factor beyond this bound fits.
        if (n as usize) > 2 * deg * deg + 2 {
            return None;
        }
        if super::euler_phi(n) <= deg {
            let phi = super::cyclotomic_polynomial(n);
            while let Some(q) = rest.exact_div(&phi) {
                rest = q;
                *out.entry(n).or_insert(0) += 1;
            }
        }
        n += 1;
    }
    Some(out)
}

impl FromStr for RationalFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ring for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }
    fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        RationalFunction::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RationalFunction::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RationalFunction::mul(self, other)
    }
    fn neg(&self) -> Self {
        RationalFunction::neg(self)
    }
    fn from_int(n: i64) -> Self {
        Self::from_rational(super::int(n))
    }
}

impl Field for RationalFunction {
    fn inv(&self) -> Option<Self> {
        self.recip().ok()
    }
}

impl ExactDiv for RationalFunction {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        Field::div(self, divisor)
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
    fn normal_form_is_unique() {
        let a = RationalFunction::new(p(&[2, 2]), p(&[4])).unwrap();
        assert_eq!(a.num(), &p(&[1, 1]));
        assert_eq!(a.den(), &p(&[2]));
        let b = RationalFunction::new(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(b, RationalFunction::from_poly(p(&[1, 1])));
        let c = RationalFunction::new(p(&[1]), p(&[1, -1])).unwrap();
        assert_eq!(c.num(), &p(&[-1]));
        assert_eq!(c.den(), &p(&[-1, 1]));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(p(&[1]), Polynomial::zero()),
            Err(Error::ZeroDenominator)
        );
        assert_eq!(RationalFunction::zero().recip(), Err(Error::DivisionByZero));
    }

    #[test]
    fn degree_and_eval() {
        let f = RationalFunction::new(p(&[1, 0, 0, 1]), p(&[1, 0, -1])).unwrap();
        assert_eq!(f.degree(), Some(1));
        assert_eq!(f.eval(&int(2)), Some(rat(-3, 1)));
        assert_eq!(f.eval(&int(1)), None);
        assert_eq!(RationalFunction::zero().degree(), None);
    }

    #[test]
    fn factored_rendering() {
        let f = RationalFunction::new(
            Polynomial::one().add(&Polynomial::monomial(int(1), 30)),
            Polynomial::one_minus_t_pow(12).mul(&Polynomial::one_minus_t_pow(20)),
        )
        .unwrap();
        assert_eq!(
            f.to_string_over(&[12, 20]).unwrap(),
            "(1 + t^30)/((1 - t^12)*(1 - t^20))"
        );
        assert_eq!(f.denominator_cover().unwrap(), vec![4, 6, 10]);
        assert_eq!(
            RationalFunction::inverse_product(&[1]).to_factored_string(),
            "1/(1 - t)"
        );
        let g = RationalFunction::inverse_product(&[4, 4, 6]);
        assert_eq!(g.to_factored_string(), "1/((1 - t^4)^2*(1 - t^6))");
    }

    #[test]
    fn json_round_trip() {
        let f = RationalFunction::new(p(&[1, 0, 3]), p(&[2, -1])).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        let back: RationalFunction = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }
}
