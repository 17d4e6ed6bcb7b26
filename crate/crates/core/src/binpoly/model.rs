//! Concrete matrix models of the groups: 2x2 matrices over `F_p` and over
//! cyclotomic fields. Used to derive class sizes, element orders and power
//! maps from generator words, and as independent oracles for the tables.

use std::collections::{HashMap, VecDeque};
use std::hash::{Hash, Hasher};

use super::{Gen, Word};
use crate::exactalg::{CyclotomicNumber, Matrix, Rational, Ring};

pub trait GroupElement: Clone + Eq + Hash {
    fn mul(&self, other: &Self) -> Self;
    fn identity_like(&self) -> Self;

    fn is_identity(&self) -> bool {
        *self == self.identity_like()
    }

    fn order(&self) -> usize {
        let mut x = self.clone();
        let mut n = 1;
        while !x.is_identity() {
            x = x.mul(self);
            n += 1;
        }
        n
    }

    fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = self.identity_like();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Inverse as `g^(order - 1)`; fine for the small finite groups here.
    fn inverse(&self) -> Self {
        let mut prev = self.identity_like();
        let mut x = self.clone();
        while !x.is_identity() {
            prev = x.clone();
            x = x.mul(self);
        }
        prev
    }
}

/// Evaluate a word in the two generators.
pub fn eval_word<E: GroupElement>(alpha: &E, beta: &E, word: &Word) -> E {
    let mut acc = alpha.identity_like();
    for &(g, e) in word {
        let base = match g {
            Gen::Alpha => alpha,
            Gen::Beta => beta,
        };
        acc = acc.mul(&base.pow(i64::from(e)));
    }
    acc
}

/// All products of the generators, or `None` if more than `limit` appear.
pub fn closure<E: GroupElement>(gens: &[E], limit: usize) -> Option<Vec<E>> {
    let id = gens.first()?.identity_like();
    let mut seen: HashMap<E, ()> = HashMap::new();
    let mut order = vec![id.clone()];
    seen.insert(id.clone(), ());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul(g);
            if !seen.contains_key(&y) {
                if seen.len() >= limit {
                    return None;
                }
                seen.insert(y.clone(), ());
                order.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Some(order)
}

/// Conjugacy class of `x` in the group generated by `gens`.
pub fn conjugacy_orbit<E: GroupElement>(x: &E, gens: &[E]) -> Vec<E> {
    let conj: Vec<(E, E)> = gens.iter().map(|g| (g.clone(), g.inverse())).collect();
    let mut seen: HashMap<E, ()> = HashMap::from([(x.clone(), ())]);
    let mut out = vec![x.clone()];
    let mut queue = VecDeque::from([x.clone()]);
    while let Some(y) = queue.pop_front() {
        for (g, gi) in &conj {
            let z = g.mul(&y).mul(gi);
            if !seen.contains_key(&z) {
                seen.insert(z.clone(), ());
                out.push(z.clone());
                queue.push_back(z);
            }
        }
    }
    out
}

/// Class data derived from a model and one word per class.
#[derive(Debug, Clone)]
pub struct ModelClasses {
    pub sizes: Vec<usize>,
    pub orders: Vec<usize>,
    pub group_order: usize,
    pub exponent: usize,
    /// `power_map[m][c]` = class of `g^m` for `g` in class `c`,
    /// `0 <= m < exponent`.
    pub power_map: Vec<Vec<usize>>,
}

/// Derive class sizes, orders and the power map. Fails if the class words
/// do not hit pairwise distinct classes covering the whole group.
pub fn model_classes<E: GroupElement>(
    alpha: &E,
    beta: &E,
    words: &[Word],
    limit: usize,
) -> Result<ModelClasses, String> {
    let gens = [alpha.clone(), beta.clone()];
    let elements = closure(&gens, limit).ok_or("closure exceeds the expected order")?;
    let mut class_of: HashMap<E, usize> = HashMap::new();
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    for (c, w) in words.iter().enumerate() {
        let g = eval_word(alpha, beta, w);
        if let Some(&other) = class_of.get(&g) {
            return Err(format!("class words {other} and {c} are conjugate"));
        }
        let orbit = conjugacy_orbit(&g, &gens);
        sizes.push(orbit.len());
        for x in orbit {
            class_of.insert(x, c);
        }
        reps.push(g);
    }
    if class_of.len() != elements.len() {
        return Err(format!(
            "classes cover {} of {} elements",
            class_of.len(),
            elements.len()
        ));
    }
    let orders: Vec<usize> = reps.iter().map(GroupElement::order).collect();
    let exponent = orders
        .iter()
        .fold(1usize, |acc, &o| num_integer::Integer::lcm(&acc, &o));
    let mut power_map = Vec::with_capacity(exponent);
    for m in 0..exponent {
        power_map.push(
            reps.iter()
                .map(|g| class_of[&g.pow(m as i64)])
                .collect(),
        );
    }
    Ok(ModelClasses {
        sizes,
        orders,
        group_order: elements.len(),
        exponent,
        power_map,
    })
}

/// 2x2 matrix over the prime field `F_p`, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModMat2 {
    pub p: u32,
    pub m: [u32; 4],
}

impl ModMat2 {
    pub fn new(p: u32, m: [i64; 4]) -> Self {
        let r = |x: i64| x.rem_euclid(i64::from(p)) as u32;
        ModMat2 {
            p,
            m: [r(m[0]), r(m[1]), r(m[2]), r(m[3])],
        }
    }

    pub fn det(&self) -> u32 {
        let p = u64::from(self.p);
        let [a, b, c, d] = self.m.map(u64::from);
        ((a * d % p + p * p - b * c % p) % p) as u32
    }

    pub fn trace(&self) -> u32 {
        (self.m[0] + self.m[3]) % self.p
    }

    pub fn scalar(p: u32, s: i64) -> Self {
        ModMat2::new(p, [s, 0, 0, s])
    }
}

impl GroupElement for ModMat2 {
    fn mul(&self, o: &Self) -> Self {
        let p = u64::from(self.p);
        let [a, b, c, d] = self.m.map(u64::from);
        let [e, f, g, h] = o.m.map(u64::from);
        ModMat2 {
            p: self.p,
            m: [
                ((a * e + b * g) % p) as u32,
                ((a * f + b * h) % p) as u32,
                ((c * e + d * g) % p) as u32,
                ((c * f + d * h) % p) as u32,
            ],
        }
    }

    fn identity_like(&self) -> Self {
        ModMat2::scalar(self.p, 1)
    }
}

/// Square matrix over a cyclotomic field, hashed through its coefficient
/// vectors in one fixed field `Q(zeta_N)`.
#[derive(Clone, Debug)]
pub struct CycloMat {
    pub conductor: u32,
    pub m: Matrix<CyclotomicNumber>,
    key: Vec<Rational>,
}

impl CycloMat {
    pub fn new(conductor: u32, m: Matrix<CyclotomicNumber>) -> Self {
        let key = (0..m.rows())
            .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
            .flat_map(|(i, j)| m.get(i, j).key_at(conductor))
            .collect();
        CycloMat { conductor, m, key }
    }

    pub fn from_rows(conductor: u32, rows: Vec<Vec<CyclotomicNumber>>) -> Self {
        Self::new(conductor, Matrix::from_rows(rows))
    }

    pub fn trace(&self) -> CyclotomicNumber {
        self.m.trace()
    }

    pub fn det(&self) -> CyclotomicNumber {
        self.m.det().expect("square")
    }

    pub fn size(&self) -> usize {
        self.m.rows()
    }

    pub fn minus_identity(&self) -> bool {
        self.m == Matrix::identity(self.size()).scale(&CyclotomicNumber::from_i64(-1))
    }

    /// Exact inverse by elimination.
    pub fn inverse_exact(&self) -> Option<Self> {
        self.m
            .inverse()
            .ok()
            .map(|m| CycloMat::new(self.conductor, m))
    }
}

impl PartialEq for CycloMat {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}

impl Eq for CycloMat {}

impl Hash for CycloMat {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key.hash(state);
    }
}

impl GroupElement for CycloMat {
    fn mul(&self, o: &Self) -> Self {
        CycloMat::new(self.conductor, self.m.mul(&o.m))
    }

    fn identity_like(&self) -> Self {
        CycloMat::new(self.conductor, Matrix::identity(self.size()))
    }

    fn inverse(&self) -> Self {
        self.inverse_exact().expect("group elements are invertible")
    }
}

/// The SU(2) matrix of the quaternion `a + b i + c j + d k`.
pub fn quaternion(
    conductor: u32,
    a: &CyclotomicNumber,
    b: &CyclotomicNumber,
    c: &CyclotomicNumber,
    d: &CyclotomicNumber,
) -> CycloMat {
    let i = CyclotomicNumber::i();
    CycloMat::from_rows(
        conductor,
        vec![
            vec![a.add(&b.mul(&i)), c.add(&d.mul(&i))],
            vec![c.neg().add(&d.mul(&i)), a.sub(&b.mul(&i))],
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_f3_has_order_24() {
        let a = ModMat2::new(3, [-1, -1, 0, -1]);
        let b = ModMat2::new(3, [1, 1, -1, 0]);
        let g = closure(&[a, b], 100).unwrap();
        assert_eq!(g.len(), 24);
        assert_eq!(a.order(), 6);
    }

    #[test]
    fn closure_limit() {
        let a = ModMat2::new(5, [1, 1, 0, 1]);
        let b = ModMat2::new(5, [1, 0, 1, 1]);
        assert!(closure(&[a, b], 50).is_none());
        assert_eq!(closure(&[a, b], 200).unwrap().len(), 120);
    }
}
