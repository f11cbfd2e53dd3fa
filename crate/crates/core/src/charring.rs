//! Laurent polynomials in `z_1..z_n, q` with exact rational coefficients, and
//! the Weyl character and dimension formulas used as oracles.
//!
//! `z_i` stands for `e^{eps_i}`, so exponent vectors are epsilon-coordinates.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polytope::GradedCharacter;
use crate::rational::{self, Rational};
use crate::rootsys::{positive_roots, root_weight, DominantWeight, RootSystem, Weight};

/// `q^q z^z`. Ordered by `q` first so that serialized terms come out sorted
/// by `(q, weight)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub q: i64,
    pub z: Vec<i64>,
}

impl Monomial {
    pub fn new(z: Vec<i64>, q: i64) -> Self {
        Monomial { q, z }
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            q: self.q + other.q,
            z: self.z.iter().zip(&other.z).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn evaluate(&self, pt: &RationalPoint) -> Rational {
        let mut v = rational::pow(&pt.q, self.q);
        for (zi, &e) in pt.z.iter().zip(&self.z) {
            if e != 0 {
                v *= rational::pow(zi, e);
            }
        }
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], 0, Rational::one())
    }

    pub fn monomial(z: Vec<i64>, q: i64, coeff: Rational) -> Self {
        let mut p = LaurentPoly::zero(z.len());
        p.add_term(Monomial::new(z, q), coeff);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, z: &[i64], q: i64) -> Rational {
        self.terms
            .get(&Monomial::new(z.to_vec(), q))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        assert_eq!(m.z.len(), self.nvars, "monomial arity");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = LaurentPoly::zero(self.nvars);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    /// Multiplies by `z^z q^q`.
    pub fn shift(&self, z: &[i64], q: i64) -> Self {
        let s = Monomial::new(z.to_vec(), q);
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.mul(&s), c.clone())).collect(),
        }
    }

    pub fn evaluate(&self, pt: &RationalPoint) -> Rational {
        self.terms.iter().map(|(m, c)| c * m.evaluate(pt)).sum()
    }

    /// Sets `q = 1`.
    pub fn specialize_q1(&self) -> Self {
        let mut out = LaurentPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(Monomial::new(m.z.clone(), 0), c.clone());
        }
        out
    }

    /// Applies an integer-linear change of the `z`-exponents.
    pub fn map_exponents(&self, f: impl Fn(&[i64]) -> Vec<i64>) -> Self {
        let mut it = self.terms.iter().map(|(m, c)| (Monomial::new(f(&m.z), m.q), c.clone()));
        let first = it.next();
        let nvars = first.as_ref().map_or(self.nvars, |(m, _)| m.z.len());
        let mut out = LaurentPoly::zero(nvars);
        for (m, c) in first.into_iter().chain(it) {
            out.add_term(m, c);
        }
        out
    }

    /// `z -> z^{-1}`, `q -> q^{-1}`.
    pub fn invert_variables(&self) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.z.iter().map(|e| -e).collect(), -m.q), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient by `1 - z^{-beta}`; fails if the division leaves a remainder.
    ///
    /// Writing `P = Q (1 - z^{-beta})` coefficientwise gives
    /// `P(m) = Q(m) - Q(m + beta)`, so along each chain `m + t beta` the
    /// quotient is a tail sum and the whole chain must sum to zero.
    pub fn div_one_minus(&self, beta: &[i64]) -> Result<Self> {
        let p = beta
            .iter()
            .position(|&b| b != 0)
            .expect("division by 1 - 1");
        let bp = beta[p];
        let mut chains: BTreeMap<(i64, Vec<i64>), Vec<(i64, Rational)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let t = m.z[p].div_euclid(bp);
            let base: Vec<i64> = m.z.iter().zip(beta).map(|(a, b)| a - t * b).collect();
            chains.entry((m.q, base)).or_default().push((t, c.clone()));
        }
        let mut out = LaurentPoly::zero(self.nvars);
        for ((q, base), mut chain) in chains {
            chain.sort_by_key(|c| std::cmp::Reverse(c.0));
            let total: Rational = chain.iter().map(|(_, c)| c).sum();
            if !total.is_zero() {
                return Err(Error::NonzeroRemainder);
            }
            // walk t downwards accumulating the tail sum
            let mut acc = Rational::zero();
            let top = chain[0].0;
            let bottom = chain.last().unwrap().0;
            let mut it = chain.into_iter().peekable();
            let mut t = top;
            while t >= bottom {
                if let Some((tt, c)) = it.peek() {
                    if *tt == t {
                        acc += c;
                        it.next();
                    }
                }
                if !acc.is_zero() {
                    let z: Vec<i64> = base.iter().zip(beta).map(|(a, b)| a + t * b).collect();
                    out.add_term(Monomial::new(z, q), acc.clone());
                }
                t -= 1;
            }
        }
        Ok(out)
    }

    /// JSON-ready terms sorted by `(q, weight)`.
    pub fn to_terms(&self) -> Vec<Term> {
        self.terms
            .iter()
            .map(|(m, c)| Term {
                q: m.q,
                weight: m.z.clone(),
                mult: Mult::from_rational(c),
            })
            .collect()
    }

    pub fn from_terms(nvars: usize, terms: &[Term]) -> Result<Self> {
        let mut p = LaurentPoly::zero(nvars);
        for t in terms {
            if t.weight.len() != nvars {
                return Err(Error::WeightLength {
                    expected: nvars,
                    got: t.weight.len(),
                });
            }
            p.add_term(Monomial::new(t.weight.clone(), t.q), t.mult.to_rational()?);
        }
        Ok(p)
    }
}

impl From<&GradedCharacter> for LaurentPoly {
    fn from(ch: &GradedCharacter) -> Self {
        let nvars = ch.terms.keys().next().map_or(0, |(_, w)| w.len());
        let mut p = LaurentPoly::zero(nvars);
        for ((q, w), &c) in &ch.terms {
            p.add_term(Monomial::new(w.0.clone(), *q as i64), rational::int(c as i64));
        }
        p
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentPoly {
            nvars: self.nvars.max(rhs.nvars),
            terms: acc,
        }
    }
}

/// Serialized coefficient: a plain integer when integral, otherwise `"p/q"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Mult {
    Int(i64),
    Frac(String),
}

impl Mult {
    pub fn from_rational(c: &Rational) -> Self {
        match rational::to_i64(c) {
            Some(v) => Mult::Int(v),
            None => Mult::Frac(rational::format(c)),
        }
    }

    pub fn to_rational(&self) -> Result<Rational> {
        match self {
            Mult::Int(v) => Ok(rational::int(*v)),
            Mult::Frac(s) => rational::parse(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub q: i64,
    pub weight: Vec<i64>,
    pub mult: Mult,
}

/// Evaluation point with nonzero coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoint {
    pub z: Vec<Rational>,
    pub q: Rational,
}

impl RationalPoint {
    pub fn new(z: Vec<Rational>, q: Rational) -> Result<Self> {
        if q.is_zero() || z.iter().any(Zero::is_zero) {
            return Err(Error::Parse("evaluation point has a zero coordinate".into()));
        }
        Ok(RationalPoint { z, q })
    }

    pub fn inverted(&self) -> Self {
        RationalPoint {
            z: self.z.iter().map(|x| x.recip()).collect(),
            q: self.q.recip(),
        }
    }
}

fn rho(system: RootSystem) -> Vec<i64> {
    let len = system.eps_len() as i64;
    match system {
        RootSystem::TypeC(_) => (0..len).map(|k| len - k).collect(),
        RootSystem::TypeA(_) => (0..len).map(|k| len - 1 - k).collect(),
    }
}

/// Heap's algorithm; yields every permutation with its sign.
fn permutations(len: usize) -> Vec<(Vec<usize>, i64)> {
    let mut a: Vec<usize> = (0..len).collect();
    let mut out = vec![(a.clone(), 1)];
    let mut c = vec![0usize; len];
    let mut sign = 1;
    let mut k = 1;
    while k < len {
        if c[k] < k {
            if k % 2 == 0 {
                a.swap(0, k);
            } else {
                a.swap(c[k], k);
            }
            sign = -sign;
            out.push((a.clone(), sign));
            c[k] += 1;
            k = 1;
        } else {
            c[k] = 0;
            k += 1;
        }
    }
    out
}

/// Every Weyl group element applied to `v`, with its sign.
fn weyl_orbit_signed(system: RootSystem, v: &[i64]) -> Vec<(Vec<i64>, i64)> {
    let len = v.len();
    let mut out = Vec::new();
    for (perm, sgn) in permutations(len) {
        let permuted: Vec<i64> = perm.iter().map(|&k| v[k]).collect();
        match system {
            RootSystem::TypeA(_) => out.push((permuted, sgn)),
            RootSystem::TypeC(_) => {
                for mask in 0u32..(1 << len) {
                    let mut w = permuted.clone();
                    let mut s = sgn;
                    for (k, x) in w.iter_mut().enumerate() {
                        if mask & (1 << k) != 0 {
                            *x = -*x;
                            s = -s;
                        }
                    }
                    out.push((w, s));
                }
            }
        }
    }
    out
}

/// The Weyl character of the irreducible module with highest weight `lambda`
/// (gl-coordinates in type A).
pub fn weyl_character(lambda: &DominantWeight, system: RootSystem) -> Result<LaurentPoly> {
    lambda.check(system)?;
    let len = system.eps_len();
    let rho = rho(system);
    let lr: Vec<i64> = lambda
        .to_weight(system)
        .0
        .iter()
        .zip(&rho)
        .map(|(a, b)| a + b)
        .collect();
    let mut num = LaurentPoly::zero(len);
    for (w, s) in weyl_orbit_signed(system, &lr) {
        num.add_term(Monomial::new(w, 0), rational::int(s));
    }
    for r in positive_roots(system) {
        num = num.div_one_minus(&root_weight(system, r).0)?;
    }
    let neg_rho: Vec<i64> = rho.iter().map(|x| -x).collect();
    Ok(num.shift(&neg_rho, 0))
}

/// `prod (lambda + rho, alpha) / (rho, alpha)` over positive roots.
pub fn weyl_dimension(lambda: &DominantWeight, system: RootSystem) -> Result<u64> {
    lambda.check(system)?;
    let rho = Weight(rho(system));
    let lr = &lambda.to_weight(system) + &rho;
    let mut acc = Rational::one();
    for r in positive_roots(system) {
        let a = root_weight(system, r);
        acc *= Rational::new(lr.dot(&a).into(), rho.dot(&a).into());
    }
    debug_assert!(acc.is_integer() && acc.is_positive());
    Ok(rational::to_i64(&acc).expect("dimension fits in i64") as u64)
}
