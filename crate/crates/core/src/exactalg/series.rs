use super::{Field, Poly, Rational, RationalFunction, Ring};
use crate::error::{Error, Result};

/// Number of series coefficients computed when no order is requested.
pub const DEFAULT_SERIES_ORDER: usize = 64;

/// Power series known modulo `t^order`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Ring> TruncatedSeries<C> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![C::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::from_poly(&Poly::one(), order)
    }

    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        TruncatedSeries { coeffs }
    }

    pub fn from_poly(p: &Poly<C>, order: usize) -> Self {
        let mut coeffs = vec![C::zero(); order];
        for (e, c) in p.terms() {
            if (e as usize) < order {
                coeffs[e as usize] = c.clone();
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().take(order).cloned().collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..n).map(|k| self.coeffs[k].add(&other.coeffs[k])).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..n).map(|k| self.coeffs[k].sub(&other.coeffs[k])).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut coeffs = vec![C::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn to_poly(&self) -> Poly<C> {
        Poly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (k as u32, c.clone())),
        )
    }
}

impl<F: Field> TruncatedSeries<F> {
    /// Multiplicative inverse; `None` when the constant term vanishes.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.order();
        if n == 0 {
            return Some(self.clone());
        }
        let c0 = self.coeffs[0].inv()?;
        let mut out: Vec<F> = Vec::with_capacity(n);
        out.push(c0.clone());
        for k in 1..n {
            let mut acc = F::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = acc.add(&self.coeffs[j].mul(&out[k - j]));
                }
            }
            out.push(acc.mul(&c0).neg());
        }
        Some(TruncatedSeries { coeffs: out })
    }
}

impl<C: Ring> std::fmt::Debug for TruncatedSeries<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

/// First `order` Taylor coefficients at `t = 0`.
pub fn series_expand(f: &RationalFunction, order: usize) -> Result<Vec<Rational>> {
    let den = f.den();
    let d0 = den.coeff(0);
    if Ring::is_zero(&d0) {
        return Err(Error::PoleAtZero);
    }
    let d0_inv = d0.recip();
    let den_terms: Vec<(usize, Rational)> = den
        .terms()
        .filter(|&(e, _)| e > 0)
        .map(|(e, c)| (e as usize, c.clone()))
        .collect();
    let mut out: Vec<Rational> = Vec::with_capacity(order);
    for k in 0..order {
        let mut acc = f.num().coeff(k as u32);
        for (e, c) in &den_terms {
            if *e > k {
                break;
            }
            acc -= c * &out[k - e];
        }
        out.push(acc * &d0_inv);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, Polynomial};

    #[test]
    fn geometric_series() {
        let f = RationalFunction::inverse_product(&[1]);
        assert_eq!(series_expand(&f, 5).unwrap(), vec![int(1); 5]);
    }

    #[test]
    fn partitions_into_two_and_three() {
        let f = RationalFunction::inverse_product(&[2, 3]);
        let got: Vec<Rational> = series_expand(&f, 10).unwrap();
        let want: Vec<Rational> = [1, 0, 1, 1, 1, 1, 2, 1, 2, 2].iter().map(|&v| int(v)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn pole_at_zero() {
        let f = RationalFunction::new(Polynomial::one(), Polynomial::t()).unwrap();
        assert_eq!(series_expand(&f, 3), Err(Error::PoleAtZero));
    }

    #[test]
    fn inverse_of_series() {
        let s = TruncatedSeries::from_poly(&Polynomial::one_minus_t_pow(1), 6);
        let inv = s.inverse().unwrap();
        assert_eq!(inv.coeffs(), &vec![int(1); 6][..]);
        assert_eq!(s.mul(&inv), TruncatedSeries::one(6));
    }
}
