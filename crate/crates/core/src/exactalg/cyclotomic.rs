use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer as _;
use num_traits::Signed;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{int, ExactDiv, Field, Poly, Polynomial, Rational, Ring};

/// Element of the cyclotomic field `Q(zeta_N)`.
///
/// Stored as the residue modulo the `N`-th cyclotomic polynomial in the
/// power basis `1, zeta, ..., zeta^(phi(N)-1)`. Mixed-conductor arithmetic
/// promotes both operands to the lcm of the conductors, so the result is
/// canonical in that field. Equality compares after the same promotion.
#[derive(Clone)]
pub struct CyclotomicNumber {
    conductor: u32,
    coeffs: Vec<Rational>,
}

fn phi_cache() -> &'static RwLock<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Dense ascending coefficients of the monic `n`-th cyclotomic polynomial.
fn phi_coeffs(n: u32) -> Arc<Vec<i64>> {
    assert!(n >= 1, "conductor must be positive");
    if let Some(c) = phi_cache().read().expect("phi cache poisoned").get(&n) {
        return Arc::clone(c);
    }
    // x^n - 1 divided by every Phi_d with d | n, d < n.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let div = phi_coeffs(d);
            num = divide_monic(&num, &div);
        }
    }
    let out = Arc::new(num);
    phi_cache()
        .write()
        .expect("phi cache poisoned")
        .insert(n, Arc::clone(&out));
    out
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for k in (dd..num.len()).rev() {
        let c = rem[k];
        if c != 0 {
            for (j, &dc) in den.iter().enumerate() {
                rem[k - dd + j] -= c * dc;
            }
        }
        quot[k - dd] = c;
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

pub fn euler_phi(n: u32) -> usize {
    let mut m = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out as usize
}

/// The `n`-th cyclotomic polynomial as a rational polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Polynomial {
    let c = phi_coeffs(n);
    Polynomial::from_ints(&c[..])
}

/// Reduce a dense coefficient vector modulo `Phi_n`.
fn reduce(n: u32, mut dense: Vec<Rational>) -> Vec<Rational> {
    let phi = phi_coeffs(n);
    let deg = phi.len() - 1;
    if dense.len() > deg {
        for k in (deg..dense.len()).rev() {
            if dense[k].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut dense[k], Rational::zero());
            for (j, &pc) in phi.iter().enumerate().take(deg) {
                if pc != 0 {
                    dense[k - deg + j] -= &c * Rational::from_integer(pc.into());
                }
            }
        }
        dense.truncate(deg);
    }
    dense.resize(deg, Rational::zero());
    dense
}

fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

impl CyclotomicNumber {
    /// Build from power-basis coefficients of any length; reduced modulo
    /// `Phi_conductor`.
    pub fn new(conductor: u32, coeffs: Vec<Rational>) -> Self {
        CyclotomicNumber {
            conductor,
            coeffs: reduce(conductor, coeffs),
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        CyclotomicNumber {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    /// `zeta_n^k` for any integer `k`.
    pub fn zeta(n: u32, k: i64) -> Self {
        let k = k.rem_euclid(i64::from(n)) as usize;
        let mut dense = vec![Rational::zero(); k + 1];
        dense[k] = Rational::one();
        Self::new(n, dense)
    }

    pub fn i() -> Self {
        Self::zeta(4, 1)
    }

    /// `sqrt(2) = zeta_8 + zeta_8^7`.
    pub fn sqrt2() -> Self {
        Self::zeta(8, 1).add(&Self::zeta(8, 7))
    }

    /// `sqrt(5) = 1 + 2 (zeta_5 + zeta_5^4)`.
    pub fn sqrt5() -> Self {
        let s = Self::zeta(5, 1).add(&Self::zeta(5, 4));
        Self::from_i64(1).add(&s.add(&s))
    }

    /// `sqrt(-3) = 1 + 2 zeta_3`.
    pub fn sqrt_neg3() -> Self {
        let z = Self::zeta(3, 1);
        Self::from_i64(1).add(&z.add(&z))
    }

    /// The golden ratio `(1 + sqrt5) / 2`.
    pub fn golden() -> Self {
        Self::from_i64(1)
            .add(&Self::sqrt5())
            .scale(&super::rat(1, 2))
    }

    /// Its Galois conjugate `(1 - sqrt5) / 2`.
    pub fn golden_conj() -> Self {
        Self::from_i64(1).sub(&Self::golden())
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Re-express in `Q(zeta_n)`; `n` must be a multiple of the conductor.
    pub fn promote(&self, n: u32) -> Self {
        assert!(
            n.is_multiple_of(self.conductor),
            "cannot promote conductor {} to {}",
            self.conductor,
            n
        );
        if n == self.conductor {
            return self.clone();
        }
        let step = (n / self.conductor) as usize;
        let mut dense = vec![Rational::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            dense[k * step] = c.clone();
        }
        Self::new(n, dense)
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let n = lcm(self.conductor, other.conductor);
        (self.promote(n), other.promote(n))
    }

    /// Coefficient vector in `Q(zeta_n)`, for hashing elements of a fixed
    /// field.
    pub fn key_at(&self, n: u32) -> Vec<Rational> {
        self.promote(n).coeffs
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CyclotomicNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Apply the Galois automorphism `zeta -> zeta^k` (`k` coprime to the
    /// conductor).
    pub fn galois(&self, k: i64) -> Self {
        let n = i64::from(self.conductor);
        let mut dense = vec![Rational::zero(); self.conductor as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            let e = (j as i64 * k).rem_euclid(n) as usize;
            dense[e] += c;
        }
        Self::new(self.conductor, dense)
    }

    /// Complex conjugation, `zeta -> zeta^(N-1)`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational()
            .then(|| self.coeffs.first().cloned().unwrap_or_else(Rational::zero))
    }

    /// Integer value, if this number is a rational integer fitting `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        let r = self.to_rational()?;
        if !r.is_integer() {
            return None;
        }
        i64::try_from(r.numer()).ok()
    }

    fn as_poly(&self) -> Polynomial {
        Polynomial::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (k as u32, c.clone())),
        )
    }

    fn from_poly(n: u32, p: &Polynomial) -> Self {
        let len = p.degree().map_or(1, |d| d as usize + 1);
        let mut dense = vec![Rational::zero(); len];
        for (e, c) in p.terms() {
            dense[e as usize] = c.clone();
        }
        Self::new(n, dense)
    }

    /// Readable rendering: rationals, then `a + b*sqrt(d)` forms, then a
    /// power-basis sum in `zN`.
    pub fn to_readable(&self) -> String {
        if let Some(r) = self.to_rational() {
            return r.to_string();
        }
        for (d, root) in quadratic_roots() {
            if let Some((a, b)) = self.split_quadratic(root) {
                return format_quadratic(&a, &b, *d);
            }
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mon = match k {
                0 => String::new(),
                1 => format!("z{}", self.conductor),
                _ => format!("z{}^{}", self.conductor, k),
            };
            let mag = c.abs();
            let sign = if c.is_negative() {
                "-"
            } else if out.is_empty() {
                ""
            } else {
                "+"
            };
            let body = match (mon.is_empty(), num_traits::One::is_one(&mag)) {
                (true, _) => mag.to_string(),
                (false, true) => mon,
                (false, false) => format!("{mag}*{mon}"),
            };
            out.push_str(sign);
            out.push_str(&body);
        }
        out
    }

    /// Solve `self = a + b*root` over the rationals.
    fn split_quadratic(&self, root: &CyclotomicNumber) -> Option<(Rational, Rational)> {
        let (v, s) = self.aligned(root);
        let k = (1..s.coeffs.len()).find(|&k| !s.coeffs[k].is_zero())?;
        let b = &v.coeffs[k] / &s.coeffs[k];
        let a = &v.coeffs[0] - &b * &s.coeffs[0];
        let candidate = CyclotomicNumber::from_rational(a.clone()).add(&root.scale(&b));
        (candidate == *self).then_some((a, b))
    }
}

fn quadratic_roots() -> &'static [(i64, CyclotomicNumber)] {
    static ROOTS: OnceLock<Vec<(i64, CyclotomicNumber)>> = OnceLock::new();
    ROOTS.get_or_init(|| {
        let i = CyclotomicNumber::i();
        let s2 = CyclotomicNumber::sqrt2();
        let s5 = CyclotomicNumber::sqrt5();
        let sm3 = CyclotomicNumber::sqrt_neg3();
        let s3 = sm3.mul(&i).neg();
        vec![
            (-1, i.clone()),
            (2, s2.clone()),
            (-2, s2.mul(&i)),
            (3, s3.clone()),
            (-3, sm3.clone()),
            (5, s5.clone()),
            (-5, s5.mul(&i)),
            (6, s2.mul(&s3)),
            (-6, s2.mul(&sm3)),
            (10, s2.mul(&s5)),
            (-10, s2.mul(&s5).mul(&i)),
            (15, s3.mul(&s5)),
            (-15, sm3.mul(&s5)),
        ]
    })
}

fn format_quadratic(a: &Rational, b: &Rational, d: i64) -> String {
    let den = a.denom().lcm(b.denom());
    let an = a.numer() * (&den / a.denom());
    let bn = b.numer() * (&den / b.denom());
    let radical = match d {
        -1 => "i".to_string(),
        d if d < 0 => format!("i*sqrt{}", -d),
        d => format!("sqrt{d}"),
    };
    let mag = bn.abs();
    let bterm = if num_traits::One::is_one(&mag) {
        radical
    } else {
        format!("{mag}*{radical}")
    };
    let mut s = String::new();
    if !num_traits::Zero::is_zero(&an) {
        s.push_str(&an.to_string());
        s.push(if bn.is_negative() { '-' } else { '+' });
    } else if bn.is_negative() {
        s.push('-');
    }
    s.push_str(&bterm);
    if num_traits::One::is_one(&den) {
        s
    } else if num_traits::Zero::is_zero(&an) {
        format!("{s}/{den}")
    } else {
        format!("({s})/{den}")
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.aligned(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl Ring for CyclotomicNumber {
    fn zero() -> Self {
        Self::from_i64(0)
    }
    fn one() -> Self {
        Self::from_i64(1)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn add(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        CyclotomicNumber {
            conductor: a.conductor,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
    fn sub(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        CyclotomicNumber {
            conductor: a.conductor,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        if let Some(r) = other.to_rational_fast() {
            return self.scale(&r);
        }
        if let Some(r) = self.to_rational_fast() {
            return other.scale(&r);
        }
        let (a, b) = self.aligned(other);
        let mut dense = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    dense[i + j] += x * y;
                }
            }
        }
        Self::new(a.conductor, dense)
    }
    fn neg(&self) -> Self {
        CyclotomicNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn from_int(n: i64) -> Self {
        Self::from_i64(n)
    }
}

impl CyclotomicNumber {
    fn to_rational_fast(&self) -> Option<Rational> {
        if self.conductor <= 2 {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }
}

impl Field for CyclotomicNumber {
    fn inv(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            return None;
        }
        if let Some(r) = self.to_rational() {
            return Some(Self::from_rational(r.recip()));
        }
        // Extended Euclid in Q[x]: s*a + u*Phi = 1.
        let n = self.conductor;
        let modulus = cyclotomic_polynomial(n);
        let (mut r0, mut r1) = (modulus, self.as_poly());
        let (mut s0, mut s1) = (Polynomial::zero(), Polynomial::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r0 is a nonzero constant because Phi_n is irreducible.
        let c = r0.coeff(0);
        if r0.degree() != Some(0) {
            return None;
        }
        let inv = s0.scale(&c.recip());
        Some(Self::from_poly(n, &inv))
    }
}

impl ExactDiv for CyclotomicNumber {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        self.div(divisor)
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_readable())
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [Q(z{})]", self.to_readable(), self.conductor)
    }
}

impl Serialize for CyclotomicNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("CyclotomicNumber", 3)?;
        st.serialize_field("conductor", &self.conductor)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.serialize_field("text", &self.to_readable())?;
        st.end()
    }
}

/// Polynomials with cyclotomic coefficients print their coefficients in
/// readable form.
impl Poly<CyclotomicNumber> {
    pub fn conductor(&self) -> u32 {
        self.terms().fold(1, |acc, (_, c)| lcm(acc, c.conductor()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    type C = CyclotomicNumber;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), Polynomial::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(8), Polynomial::from_ints(&[1, 0, 0, 0, 1]));
        assert_eq!(
            cyclotomic_polynomial(12),
            Polynomial::from_ints(&[1, 0, -1, 0, 1])
        );
        assert_eq!(euler_phi(120), 32);
        assert_eq!(euler_phi(30), 8);
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(C::zeta(4, 1).mul(&C::zeta(4, 1)), C::from_i64(-1));
    }

    #[test]
    fn primitive_cube_roots_sum_to_minus_one() {
        assert_eq!(C::zeta(3, 1).add(&C::zeta(3, 2)), C::from_i64(-1));
    }

    #[test]
    fn sqrt2_squared() {
        let s = C::zeta(8, 1).add(&C::zeta(8, 7));
        assert_eq!(s.mul(&s), C::from_i64(2));
        assert_eq!(C::sqrt5().mul(&C::sqrt5()), C::from_i64(5));
        assert_eq!(C::sqrt_neg3().mul(&C::sqrt_neg3()), C::from_i64(-3));
    }

    #[test]
    fn golden_ratio_identities() {
        let tau = C::golden();
        let taup = C::golden_conj();
        assert_eq!(tau.mul(&tau), tau.add(&C::one()));
        assert_eq!(tau.mul(&taup), C::from_i64(-1));
        assert_eq!(tau.to_readable(), "(1+sqrt5)/2");
        assert_eq!(taup.to_readable(), "(1-sqrt5)/2");
    }

    #[test]
    fn mixed_conductors_promote() {
        let a = C::zeta(3, 1);
        let b = C::zeta(4, 1);
        let prod = a.mul(&b);
        assert_eq!(prod.conductor(), 12);
        assert_eq!(prod, C::zeta(12, 7));
        assert_eq!(C::zeta(6, 2), C::zeta(3, 1));
    }

    #[test]
    fn division_by_zero_is_none() {
        assert!(C::zero().inv().is_none());
        let x = C::zeta(5, 1).add(&C::from_rational(rat(1, 3)));
        let y = x.inv().unwrap();
        assert_eq!(x.mul(&y), C::one());
    }

    #[test]
    fn conjugation() {
        assert_eq!(C::i().conj(), C::i().neg());
        assert_eq!(C::sqrt2().conj(), C::sqrt2());
        let rho = C::zeta(3, 1);
        assert_eq!(rho.conj(), rho.mul(&rho));
    }

    #[test]
    fn readable_forms() {
        assert_eq!(C::zeta(3, 1).to_readable(), "(-1+i*sqrt3)/2");
        assert_eq!(C::sqrt2().neg().to_readable(), "-sqrt2");
        assert_eq!(C::from_rational(rat(-3, 4)).to_readable(), "-3/4");
    }
}
