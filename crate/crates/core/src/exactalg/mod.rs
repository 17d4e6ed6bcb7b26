//! Exact arithmetic substrate.
//!
//! Everything downstream is computed without floating point: rationals are
//! arbitrary precision, polynomials are sparse in a single variable `t`,
//! rational functions carry a unique normal form, and the character values
//! of the binary polyhedral groups live in cyclotomic fields.

mod cyclotomic;
mod matrix;
mod parse;
mod poly;
mod ratfun;
mod rational;
mod series;

use std::fmt::{Debug, Display};

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, CyclotomicNumber};
pub use matrix::{polymat_det, polymat_inverse, Matrix};
pub use poly::{CycloPoly, Poly, Polynomial};
pub use ratfun::RationalFunction;
pub use rational::{int, rat, Integer, Rational};
pub use series::{series_expand, TruncatedSeries, DEFAULT_SERIES_ORDER};

/// Commutative ring with identity.
///
/// Methods take references so that generic code never has to clone
/// big-integer coefficients just to combine them.
pub trait Ring: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_int(n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }
}

/// Division that is only defined when the quotient is exact.
///
/// This is what fraction-free elimination needs: for fields it is ordinary
/// division, for polynomials it is long division with a zero remainder.
pub trait ExactDiv: Ring {
    fn exact_div(&self, divisor: &Self) -> Option<Self>;
}

impl Ring for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_int(n: i64) -> Self {
        n
    }
}

impl ExactDiv for i64 {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if *divisor == 0 || self % divisor != 0 {
            None
        } else {
            Some(self / divisor)
        }
    }
}
