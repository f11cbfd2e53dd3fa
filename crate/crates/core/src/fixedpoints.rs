//! Torus fixed points of the resolution and the localization formula for the
//! q-character.
//!
//! A fixed point is a collection of index sets `S_{i,j} subset {1..2n}`, one
//! per positive root, with `V_{i,j} = span(w_l : l in S_{i,j})`. Sets are stored
//! as bitmasks (bit `l - 1` for `w_l`).

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::charring::{LaurentPoly, Monomial, RationalPoint};
use crate::error::{Error, Result};
use crate::geometry::{ResolutionPoint, Subspace};
use crate::polytope::graded_character;
use crate::rational::{self, Rational};
use crate::rootsys::{positive_roots, DominantWeight, FlagType, Root, RootSystem};

/// Position table: roots in enumeration order and their slots.
#[derive(Debug, Clone)]
pub struct Layout {
    n: u32,
    roots: Vec<Root>,
    slot: BTreeMap<Root, usize>,
}

impl Layout {
    pub fn new(n: u32) -> Self {
        let roots = positive_roots(RootSystem::TypeC(n));
        let slot = roots.iter().enumerate().map(|(k, &r)| (r, k)).collect();
        Layout { n, roots, slot }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn slot(&self, i: u32, j: u32) -> Option<usize> {
        self.slot.get(&Root::new(i, j)).copied()
    }
}

fn bits(mask: u32) -> Vec<u32> {
    (1..=32).filter(|l| mask & (1 << (l - 1)) != 0).collect()
}

fn mask_of(set: &[u32]) -> u32 {
    set.iter().fold(0, |m, &l| m | (1 << (l - 1)))
}

fn range_mask(lo: u32, hi: u32) -> u32 {
    (lo..=hi).fold(0, |m, l| m | (1 << (l - 1)))
}

/// `l -> 2n + 1 - l` applied to every element.
fn mirror(mask: u32, n: u32) -> u32 {
    bits(mask).iter().fold(0, |m, &l| m | (1 << (2 * n - l)))
}

/// Index sets `S_{i,j}`, aligned with [`Layout::roots`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissibleCollection {
    n: u32,
    masks: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct CollectionEntry {
    i: u32,
    j: u32,
    set: Vec<u32>,
}

impl Serialize for AdmissibleCollection {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let layout = Layout::new(self.n);
        let v: Vec<CollectionEntry> = layout
            .roots
            .iter()
            .zip(&self.masks)
            .map(|(r, &m)| CollectionEntry {
                i: r.i,
                j: r.j,
                set: bits(m),
            })
            .collect();
        v.serialize(s)
    }
}

impl AdmissibleCollection {
    /// Builds a collection from explicit sets; no admissibility check.
    pub fn from_sets(n: u32, sets: &BTreeMap<Root, Vec<u32>>) -> Result<Self> {
        let layout = Layout::new(n);
        let masks = layout
            .roots
            .iter()
            .map(|r| {
                sets.get(r)
                    .map(|s| mask_of(s))
                    .ok_or_else(|| Error::Inadmissible(format!("missing S for {r}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        if sets.len() != masks.len() {
            return Err(Error::Inadmissible("sets given for non-roots".into()));
        }
        Ok(AdmissibleCollection { n, masks })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    fn mask(&self, layout: &Layout, i: u32, j: u32) -> Option<u32> {
        layout.slot(i, j).map(|k| self.masks[k])
    }

    /// `S_{i,j}` as a sorted list; `S_{0,j}` is empty.
    pub fn set(&self, i: u32, j: u32) -> Option<Vec<u32>> {
        if i == 0 {
            return Some(Vec::new());
        }
        self.mask(&Layout::new(self.n), i, j).map(bits)
    }

    pub fn sets(&self) -> BTreeMap<Root, Vec<u32>> {
        Layout::new(self.n)
            .roots
            .iter()
            .zip(&self.masks)
            .map(|(&r, &m)| (r, bits(m)))
            .collect()
    }

    /// The collection with `S_{i,j} = {1..i}` everywhere.
    pub fn highest_weight(n: u32) -> Self {
        let layout = Layout::new(n);
        AdmissibleCollection {
            n,
            masks: layout.roots.iter().map(|r| range_mask(1, r.i)).collect(),
        }
    }

    /// `V_{i,j} = span(w_l : l in S_{i,j})` as a point of the complete resolution.
    pub fn realize(&self) -> ResolutionPoint {
        let amb = 2 * self.n as usize;
        ResolutionPoint {
            flag: FlagType::complete(self.n),
            spaces: self
                .sets()
                .into_iter()
                .map(|(r, s)| (r, Subspace::coordinate(amb, s)))
                .collect(),
        }
    }
}

/// The two candidates for `S_{i,j}` given `S_{i-1,j}` (and `S_{i,j+1}` off the
/// anti-diagonal), as a mask.
fn candidate_mask(n: u32, prev: u32, right: Option<u32>, i: u32, j: u32) -> u32 {
    if i + j == 2 * n {
        let ambient = range_mask(1, i) | range_mask(2 * n - i + 1, 2 * n);
        ambient & !prev & !mirror(prev, n)
    } else {
        (right.expect("right neighbour exists off the anti-diagonal") | (1 << j)) & !prev
    }
}

/// Every admissible collection, `2^{n^2}` of them, in enumeration order.
pub fn enumerate_fixed_points(n: u32) -> Vec<AdmissibleCollection> {
    let layout = Layout::new(n);
    let total = layout.roots.len();
    let mut out = Vec::with_capacity(1usize << total.min(24));
    let mut masks = vec![0u32; total];
    fn rec(layout: &Layout, k: usize, masks: &mut Vec<u32>, out: &mut Vec<AdmissibleCollection>) {
        if k == masks.len() {
            out.push(AdmissibleCollection {
                n: layout.n,
                masks: masks.clone(),
            });
            return;
        }
        let Root { i, j } = layout.roots[k];
        let prev = if i == 1 { 0 } else { masks[layout.slot(i - 1, j).unwrap()] };
        let right = layout.slot(i, j + 1).map(|s| masks[s]);
        let cand = candidate_mask(layout.n, prev, right, i, j);
        for a in bits(cand) {
            masks[k] = prev | (1 << (a - 1));
            rec(layout, k + 1, masks, out);
        }
    }
    rec(&layout, 0, &mut masks, &mut out);
    out
}

/// `(a, b)` with `S_{i,j} = S_{i-1,j} + {a}` and `b` the other candidate.
pub fn ab_pair(coll: &AdmissibleCollection, i: u32, j: u32) -> Result<(u32, u32)> {
    let n = coll.n;
    let layout = Layout::new(n);
    ab_pair_in(&layout, coll, i, j)
}

fn ab_pair_in(layout: &Layout, coll: &AdmissibleCollection, i: u32, j: u32) -> Result<(u32, u32)> {
    let n = coll.n;
    let here = coll
        .mask(layout, i, j)
        .ok_or(Error::InvalidRoot { i, j, system: format!("sp_{}", 2 * n) })?;
    let prev = if i == 1 { 0 } else { coll.mask(layout, i - 1, j).unwrap() };
    let right = coll.mask(layout, i, j + 1);
    let cand = candidate_mask(n, prev, right, i, j);
    if cand.count_ones() != 2 {
        return Err(Error::Inadmissible(format!(
            "candidate set {:?} at ({i},{j}) does not have two elements",
            bits(cand)
        )));
    }
    let added = here & !prev;
    if added.count_ones() != 1 || here & prev != prev || added & cand == 0 {
        return Err(Error::Inadmissible(format!(
            "S({i},{j}) = {:?} is not S({},{j}) plus a candidate",
            bits(here),
            i - 1
        )));
    }
    let a = added.trailing_zeros() + 1;
    let b = (cand & !added).trailing_zeros() + 1;
    Ok((a, b))
}

/// Checks the three admissibility conditions directly.
pub fn check_admissible(coll: &AdmissibleCollection) -> Result<()> {
    let n = coll.n;
    let layout = Layout::new(n);
    let err = |msg: String| Err(Error::Inadmissible(msg));
    for (k, &r) in layout.roots.iter().enumerate() {
        let Root { i, j } = r;
        let m = coll.masks[k];
        let ambient = range_mask(1, i) | range_mask(j + 1, 2 * n);
        if m.count_ones() != i || m & !ambient != 0 {
            return err(format!("S{r} = {:?} is not an {i}-subset of {{1..{i}, {}..{}}}", bits(m), j + 1, 2 * n));
        }
        if let Some(up) = coll.mask(&layout, i + 1, j) {
            if m & !up != 0 {
                return err(format!("S{r} not contained in S({},{j})", i + 1));
            }
        }
        if let Some(right) = coll.mask(&layout, i, j + 1) {
            if m & !(right | (1 << j)) != 0 {
                return err(format!("S{r} not contained in S({i},{}) + {{{}}}", j + 1, j + 1));
            }
        }
        if i + j == 2 * n && m & mirror(m, n) != 0 {
            return err(format!("S{r} = {:?} is not isotropic", bits(m)));
        }
    }
    Ok(())
}

/// Torus weight and PBW degree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ExtendedWeight {
    pub weight: Vec<i64>,
    pub qdeg: i64,
}

impl ExtendedWeight {
    fn zero(n: u32) -> Self {
        ExtendedWeight {
            weight: vec![0; n as usize],
            qdeg: 0,
        }
    }

    fn add_scaled(&mut self, other: &ExtendedWeight, c: i64) {
        for (a, b) in self.weight.iter_mut().zip(&other.weight) {
            *a += c * b;
        }
        self.qdeg += c * other.qdeg;
    }

    fn minus(&self, other: &ExtendedWeight) -> ExtendedWeight {
        let mut d = self.clone();
        d.add_scaled(other, -1);
        d
    }

    pub fn monomial(&self) -> Monomial {
        Monomial::new(self.weight.clone(), self.qdeg)
    }
}

/// Weight of `wedge_{l in S} w_l` in the `i`-th component: `w_l` has weight
/// `eps_l` (`l <= n`) or `-eps_{2n+1-l}` (`l > n`), and degree 1 when `l > i`.
pub fn wtq_component(set: &[u32], i: u32, n: u32) -> ExtendedWeight {
    let mut w = ExtendedWeight::zero(n);
    for &l in set {
        if l <= n {
            w.weight[l as usize - 1] += 1;
        } else {
            w.weight[(2 * n - l) as usize] -= 1;
        }
        if l > i {
            w.qdeg += 1;
        }
    }
    w
}

/// `sum_i m_i wtq(S_{i,i})`.
pub fn abl_numerator_weight(coll: &AdmissibleCollection, lambda: &DominantWeight) -> Result<ExtendedWeight> {
    let n = coll.n;
    lambda.check(RootSystem::TypeC(n))?;
    let mut w = ExtendedWeight::zero(n);
    for i in 1..=n {
        let s = coll.set(i, i).expect("diagonal root");
        w.add_scaled(&wtq_component(&s, i, n), lambda.0[i as usize - 1] as i64);
    }
    Ok(w)
}

/// Point-independent data of one summand: diagonal weights and the exponents
/// `Delta_{i,j} = wtq(S'_{i,j}) - wtq(S_{i,j})` of the denominator.
#[derive(Debug, Clone)]
pub struct LocalTerm {
    pub diagonal: Vec<ExtendedWeight>,
    pub deltas: Vec<ExtendedWeight>,
}

pub fn local_term(coll: &AdmissibleCollection) -> Result<LocalTerm> {
    let n = coll.n;
    let layout = Layout::new(n);
    let diagonal = (1..=n)
        .map(|i| wtq_component(&bits(coll.mask(&layout, i, i).unwrap()), i, n))
        .collect();
    let mut deltas = Vec::with_capacity(layout.roots.len());
    for (k, r) in layout.roots.iter().enumerate() {
        let (a, b) = ab_pair_in(&layout, coll, r.i, r.j)?;
        let here = coll.masks[k];
        let swapped = (here & !(1 << (a - 1))) | (1 << (b - 1));
        let w0 = wtq_component(&bits(here), r.i, n);
        let w1 = wtq_component(&bits(swapped), r.i, n);
        deltas.push(w1.minus(&w0));
    }
    Ok(LocalTerm { diagonal, deltas })
}

/// Precomputed localization data for a given `n`.
#[derive(Debug, Clone)]
pub struct AblData {
    n: u32,
    terms: Vec<LocalTerm>,
}

impl AblData {
    pub fn new(n: u32) -> Result<Self> {
        let terms = enumerate_fixed_points(n)
            .par_iter()
            .map(local_term)
            .collect::<Result<Vec<_>>>()?;
        Ok(AblData { n, terms })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `sum_S e^{num(S)} / prod (1 - e^{Delta})` at `pt`.
    pub fn evaluate(&self, lambda: &DominantWeight, pt: &RationalPoint) -> Result<Rational> {
        lambda.check(RootSystem::TypeC(self.n))?;
        if pt.z.len() != self.n as usize {
            return Err(Error::WeightLength {
                expected: self.n as usize,
                got: pt.z.len(),
            });
        }
        let parts = self
            .terms
            .par_iter()
            .map(|t| {
                let mut num = ExtendedWeight::zero(self.n);
                for (w, &m) in t.diagonal.iter().zip(lambda.coeffs()) {
                    num.add_scaled(w, m as i64);
                }
                let mut den = Rational::one();
                for d in &t.deltas {
                    let f = Rational::one() - d.monomial().evaluate(pt);
                    if f.is_zero() {
                        return Err(Error::DenominatorZero);
                    }
                    den *= f;
                }
                Ok(num.monomial().evaluate(pt) / den)
            })
            .collect::<Result<Vec<Rational>>>()?;
        Ok(parts.into_iter().sum())
    }

    /// The whole sum as a Laurent polynomial for `n = 1`.
    ///
    /// The two fixed points have opposite exponents `x` and `x^{-1}`, so
    /// `e^A/(1-x) + e^B/(1-x^{-1}) = (e^A - x e^B)/(1-x)`, and the division is exact.
    pub fn symbolic_n1(&self, m: u32) -> Result<LaurentPoly> {
        if self.n != 1 {
            return Err(Error::DimensionMismatch("symbolic sum is implemented for n = 1".into()));
        }
        let (t0, t1) = (&self.terms[0], &self.terms[1]);
        let x = &t0.deltas[0];
        if t1.deltas[0].minus(&ExtendedWeight::zero(1)) != ExtendedWeight::zero(1).minus(x) {
            return Err(Error::Inadmissible("rank-one exponents are not opposite".into()));
        }
        let scaled = |t: &LocalTerm| {
            let mut w = ExtendedWeight::zero(1);
            w.add_scaled(&t.diagonal[0], m as i64);
            w
        };
        let a = scaled(t0);
        let mut xb = scaled(t1);
        xb.add_scaled(x, 1);
        let mut top = LaurentPoly::monomial(a.weight, a.qdeg, Rational::one());
        top.add_term(xb.monomial(), -Rational::one());
        divide_one_minus_mixed(&top, x)
    }
}

/// Exact division by `1 - z^w q^c`, allowing a `q` component.
fn divide_one_minus_mixed(p: &LaurentPoly, x: &ExtendedWeight) -> Result<LaurentPoly> {
    // fold q into an extra z-coordinate so the chain division applies
    let lifted = p.terms().fold(LaurentPoly::zero(p.nvars() + 1), |mut acc, (m, c)| {
        let mut z = m.z.clone();
        z.push(m.q);
        acc.add_term(Monomial::new(z, 0), c.clone());
        acc
    });
    let mut beta: Vec<i64> = x.weight.iter().map(|v| -v).collect();
    beta.push(-x.qdeg);
    let quotient = lifted.div_one_minus(&beta)?;
    Ok(quotient.terms().fold(LaurentPoly::zero(p.nvars()), |mut acc, (m, c)| {
        let (q, z) = m.z.split_last().unwrap();
        acc.add_term(Monomial::new(z.to_vec(), *q), c.clone());
        acc
    }))
}

pub fn abl_evaluate(lambda: &DominantWeight, pt: &RationalPoint) -> Result<Rational> {
    AblData::new(lambda.0.len() as u32)?.evaluate(lambda, pt)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Direct,
    Inverted,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PointReport {
    pub z: Vec<String>,
    pub q: String,
    pub localization: String,
    pub polytope: String,
    pub equal: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AblReport {
    pub n: u32,
    pub lambda: Vec<u32>,
    pub fixed_points: usize,
    pub points: Vec<PointReport>,
    pub matched: bool,
    pub convention: Convention,
}

/// A random point with coordinates `p/q`, `p, q` in `[2, 17]`.
pub fn random_point<R: Rng>(n: u32, rng: &mut R) -> RationalPoint {
    let mut coord = || rational::frac(rng.gen_range(2..=17), rng.gen_range(2..=17));
    let z = (0..n).map(|_| coord()).collect();
    let q = coord();
    RationalPoint { z, q }
}

/// Compares the localization sum with the polytope q-character at `trials`
/// random points. If the direct convention fails, the same points are tried
/// again with `z -> z^{-1}, q -> q^{-1}` applied to the localization side.
pub fn abl_verify(lambda: &DominantWeight, trials: usize, seed: u64) -> Result<AblReport> {
    let n = lambda.0.len() as u32;
    let data = AblData::new(n)?;
    abl_verify_with(&data, lambda, trials, seed)
}

pub fn abl_verify_with(data: &AblData, lambda: &DominantWeight, trials: usize, seed: u64) -> Result<AblReport> {
    let n = data.n;
    let system = RootSystem::type_c(n)?;
    let ch = LaurentPoly::from(&graded_character(lambda, system)?);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_attempts = 50 * trials.max(1);
    let mut attempts = 0;
    let mut samples: Vec<(RationalPoint, Rational)> = Vec::with_capacity(trials);
    while samples.len() < trials {
        if attempts == max_attempts {
            return Err(Error::NoValidPoint { attempts });
        }
        attempts += 1;
        let pt = random_point(n, &mut rng);
        match data.evaluate(lambda, &pt) {
            Ok(v) => samples.push((pt, v)),
            Err(Error::DenominatorZero) => continue,
            Err(e) => return Err(e),
        }
    }
    let report = |conv: Convention, values: Vec<Rational>| -> AblReport {
        let points: Vec<PointReport> = samples
            .iter()
            .zip(values)
            .map(|((pt, _), loc)| {
                let poly = ch.evaluate(pt);
                PointReport {
                    z: pt.z.iter().map(rational::format).collect(),
                    q: rational::format(&pt.q),
                    localization: rational::format(&loc),
                    polytope: rational::format(&poly),
                    equal: loc == poly,
                }
            })
            .collect();
        AblReport {
            n,
            lambda: lambda.0.clone(),
            fixed_points: data.len(),
            matched: points.iter().all(|p| p.equal),
            points,
            convention: conv,
        }
    };
    let direct = report(Convention::Direct, samples.iter().map(|(_, v)| v.clone()).collect());
    if direct.matched {
        return Ok(direct);
    }
    let inverted_values = samples
        .iter()
        .map(|(pt, _)| data.evaluate(lambda, &pt.inverted()))
        .collect::<Result<Vec<_>>>()?;
    let inverted = report(Convention::Inverted, inverted_values);
    Ok(if inverted.matched { inverted } else { direct })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::in_resolution;
    use crate::rational::{frac, int};
    use std::collections::BTreeSet;

    #[test]
    fn census() {
        assert_eq!(enumerate_fixed_points(1).len(), 2);
        assert_eq!(enumerate_fixed_points(2).len(), 16);
        assert_eq!(enumerate_fixed_points(3).len(), 512);
        let n1: BTreeSet<Vec<u32>> = enumerate_fixed_points(1)
            .iter()
            .map(|c| c.set(1, 1).unwrap())
            .collect();
        assert_eq!(n1, [vec![1], vec![2]].into_iter().collect());
    }

    #[test]
    fn enumerated_collections_are_admissible() {
        for n in 1..=3 {
            let all = enumerate_fixed_points(n);
            let distinct: BTreeSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            for c in &all {
                check_admissible(c).unwrap();
                assert!(in_resolution(&c.realize()).unwrap());
            }
        }
    }

    #[test]
    fn ab_pairs() {
        let hw = AdmissibleCollection::highest_weight(1);
        assert_eq!(ab_pair(&hw, 1, 1).unwrap(), (1, 2));
        let sets: BTreeMap<Root, Vec<u32>> = [
            (Root::new(1, 3), vec![4]),
            (Root::new(1, 2), vec![3]),
            (Root::new(2, 2), vec![3, 1]),
            (Root::new(1, 1), vec![3]),
        ]
        .into_iter()
        .collect();
        let c = AdmissibleCollection::from_sets(2, &sets).unwrap();
        assert_eq!(ab_pair(&c, 1, 2).unwrap(), (3, 4));
        // S_{1,2} = {1} is not a candidate, so the (2,2) position cannot be read
        let mut bad = sets.clone();
        bad.insert(Root::new(1, 2), vec![1]);
        let c = AdmissibleCollection::from_sets(2, &bad).unwrap();
        assert!(matches!(ab_pair(&c, 1, 2), Err(Error::Inadmissible(_))));
        assert!(check_admissible(&c).is_err());
    }

    #[test]
    fn swapping_a_for_b_gives_a_sibling() {
        for n in 1..=3 {
            let layout = Layout::new(n);
            let all: BTreeSet<AdmissibleCollection> = enumerate_fixed_points(n).into_iter().collect();
            for c in &all {
                for (k, r) in layout.roots().iter().enumerate() {
                    let (a, b) = ab_pair(c, r.i, r.j).unwrap();
                    let s = c.masks[k];
                    assert!(s & (1 << (a - 1)) != 0 && s & (1 << (b - 1)) == 0);
                    // some collection agrees before slot k and takes b at slot k
                    let swapped = (s & !(1 << (a - 1))) | (1 << (b - 1));
                    assert!(all.iter().any(|o| o.masks[..k] == c.masks[..k] && o.masks[k] == swapped));
                }
            }
        }
    }

    #[test]
    fn component_weights() {
        assert_eq!(wtq_component(&[1, 2], 2, 3), ExtendedWeight { weight: vec![1, 1, 0], qdeg: 0 });
        assert_eq!(wtq_component(&[2], 1, 1), ExtendedWeight { weight: vec![-1], qdeg: 1 });
        assert_eq!(wtq_component(&[3], 1, 2), ExtendedWeight { weight: vec![0, -1], qdeg: 1 });
    }

    #[test]
    fn numerators() {
        let hw = AdmissibleCollection::highest_weight(3);
        let lam = DominantWeight(vec![2, 0, 1]);
        let w = abl_numerator_weight(&hw, &lam).unwrap();
        assert_eq!(w, ExtendedWeight { weight: vec![3, 1, 1], qdeg: 0 });
        let low = enumerate_fixed_points(1).into_iter().find(|c| c.set(1, 1).unwrap() == vec![2]).unwrap();
        let w = abl_numerator_weight(&low, &DominantWeight(vec![1])).unwrap();
        assert_eq!(w, ExtendedWeight { weight: vec![-1], qdeg: 1 });
        for c in enumerate_fixed_points(2) {
            assert_eq!(abl_numerator_weight(&c, &DominantWeight(vec![0, 0])).unwrap(), ExtendedWeight::zero(2));
        }
    }

    #[test]
    fn unique_degree_zero_point() {
        for n in 1..=3 {
            let lam = DominantWeight(vec![1; n as usize]);
            let zero: Vec<_> = enumerate_fixed_points(n)
                .into_iter()
                .filter(|c| abl_numerator_weight(c, &lam).unwrap().qdeg == 0)
                .collect();
            assert_eq!(zero, vec![AdmissibleCollection::highest_weight(n)]);
        }
    }

    #[test]
    fn rank_one_values() {
        let pt = RationalPoint::new(vec![int(2)], int(3)).unwrap();
        assert_eq!(abl_evaluate(&DominantWeight(vec![1]), &pt).unwrap(), frac(7, 2));
        let data = AblData::new(1).unwrap();
        for m in 0..5u32 {
            let expected: LaurentPoly = (0..=m).fold(LaurentPoly::zero(1), |acc, k| {
                &acc + &LaurentPoly::monomial(vec![m as i64 - 2 * k as i64], k as i64, int(1))
            });
            assert_eq!(data.symbolic_n1(m).unwrap(), expected);
        }
    }

    #[test]
    fn trivial_weight_gives_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 1..=2 {
            let data = AblData::new(n).unwrap();
            let lam = DominantWeight::zero(n as usize);
            for _ in 0..10 {
                let pt = random_point(n, &mut rng);
                if let Ok(v) = data.evaluate(&lam, &pt) {
                    assert_eq!(v, int(1));
                }
            }
        }
    }

    #[test]
    fn vanishing_denominator_is_reported() {
        // n = 1: Delta = (-2, 1), so z = 1, q = 1 kills the denominator
        let pt = RationalPoint::new(vec![int(1)], int(1)).unwrap();
        assert!(matches!(abl_evaluate(&DominantWeight(vec![1]), &pt), Err(Error::DenominatorZero)));
    }

    #[test]
    fn verification_small() {
        let r = abl_verify(&DominantWeight(vec![3]), 20, 1).unwrap();
        assert!(r.matched);
        assert_eq!(r.convention, Convention::Direct);
        let r = abl_verify(&DominantWeight(vec![0, 1]), 5, 2).unwrap();
        assert!(r.matched);
        assert_eq!(r.points.len(), 5);
    }
}
