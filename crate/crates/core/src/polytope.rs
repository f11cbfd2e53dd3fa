//! Dyck paths, the inequalities cutting out `P(lambda)`, its lattice points and
//! the PBW-graded character they index.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{positive_roots, root_weight, DominantWeight, Root, RootSystem, Weight};

/// A monotone chain of roots from a simple root to a diagonal or anti-diagonal root.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DyckPath {
    pub roots: Vec<Root>,
}

impl DyckPath {
    pub fn start(&self) -> Root {
        self.roots[0]
    }

    pub fn end(&self) -> Root {
        *self.roots.last().unwrap()
    }
}

fn is_terminal(system: RootSystem, r: Root) -> bool {
    match system {
        RootSystem::TypeA(_) => r.i == r.j,
        RootSystem::TypeC(n) => (r.i == r.j && r.j <= n) || r.i + r.j == 2 * n,
    }
}

/// Every Dyck path of the system. Paths start at `alpha_{i,i}` (including
/// `alpha_{n,n}` in type C), move right `(p,q) -> (p,q+1)` or down
/// `(p,q) -> (p+1,q)`, and are recorded whenever they reach a terminal root.
pub fn dyck_paths(system: RootSystem) -> Vec<DyckPath> {
    fn extend(system: RootSystem, path: &mut Vec<Root>, out: &mut BTreeSet<DyckPath>) {
        let last = *path.last().unwrap();
        if is_terminal(system, last) {
            out.insert(DyckPath {
                roots: path.clone(),
            });
        }
        for next in [Root::new(last.i, last.j + 1), Root::new(last.i + 1, last.j)] {
            if system.contains(next) {
                path.push(next);
                extend(system, path, out);
                path.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    for i in 1..=system.rank() as u32 {
        extend(system, &mut vec![Root::new(i, i)], &mut out);
    }
    out.into_iter().collect()
}

fn path_bound(system: RootSystem, lambda: &DominantWeight, path: &DyckPath) -> u32 {
    let i = path.start().i;
    let end = path.end();
    match system {
        RootSystem::TypeC(n) if end.i + end.j == 2 * n => lambda.partial_sum(i, n),
        _ => lambda.partial_sum(i, end.j),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Inequality {
    /// Roots whose exponents are summed; sorted.
    pub support: Vec<Root>,
    pub bound: u32,
}

/// The inequalities of `P(lambda)` together with the root order used for points.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolytopeSpec {
    pub system: RootSystem,
    pub lambda: DominantWeight,
    /// Coordinate order of every [`LatticePoint`] built from this spec.
    pub roots: Vec<Root>,
    pub inequalities: Vec<Inequality>,
}

/// An exponent vector `s`, aligned with [`PolytopeSpec::roots`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint(pub Vec<u32>);

impl LatticePoint {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

pub fn polytope_spec(lambda: &DominantWeight, system: RootSystem) -> Result<PolytopeSpec> {
    lambda.check(system)?;
    let ineqs: BTreeSet<Inequality> = dyck_paths(system)
        .iter()
        .map(|p| {
            let mut support = p.roots.clone();
            support.sort();
            Inequality {
                support,
                bound: path_bound(system, lambda, p),
            }
        })
        .collect();
    Ok(PolytopeSpec {
        system,
        lambda: lambda.clone(),
        roots: positive_roots(system),
        inequalities: ineqs.into_iter().collect(),
    })
}

impl PolytopeSpec {
    fn index_of(&self) -> BTreeMap<Root, usize> {
        self.roots.iter().enumerate().map(|(k, &r)| (r, k)).collect()
    }

    /// For each root, the inequalities it participates in.
    fn memberships(&self) -> Vec<Vec<usize>> {
        let idx = self.index_of();
        let mut m = vec![Vec::new(); self.roots.len()];
        for (q, ineq) in self.inequalities.iter().enumerate() {
            for r in &ineq.support {
                m[idx[r]].push(q);
            }
        }
        m
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        let idx = self.index_of();
        p.0.len() == self.roots.len()
            && self
                .inequalities
                .iter()
                .all(|q| q.support.iter().map(|r| p.0[idx[r]]).sum::<u32>() <= q.bound)
    }

    /// Returns the first violated inequality, if any.
    pub fn violation(&self, p: &LatticePoint) -> Option<&Inequality> {
        let idx = self.index_of();
        self.inequalities
            .iter()
            .find(|q| q.support.iter().map(|r| p.0[idx[r]]).sum::<u32>() > q.bound)
    }
}

struct Search<'a> {
    members: &'a [Vec<usize>],
}

impl Search<'_> {
    // Each value is capped by the smallest remaining slack, so every branch
    // reaches a valid leaf.
    fn run(&self, k: usize, slack: &mut [u32], cur: &mut Vec<u32>, out: &mut Vec<LatticePoint>) {
        if k == self.members.len() {
            out.push(LatticePoint(cur.clone()));
            return;
        }
        let cap = self.members[k].iter().map(|&q| slack[q]).min().unwrap_or(0);
        for v in 0..=cap {
            for &q in &self.members[k] {
                slack[q] -= v;
            }
            cur.push(v);
            self.run(k + 1, slack, cur, out);
            cur.pop();
            for &q in &self.members[k] {
                slack[q] += v;
            }
        }
    }
}

/// All integer points of the polytope, sorted.
pub fn lattice_points(spec: &PolytopeSpec) -> Vec<LatticePoint> {
    let members = spec.memberships();
    let slack0: Vec<u32> = spec.inequalities.iter().map(|q| q.bound).collect();
    let search = Search { members: &members };
    if members.is_empty() {
        return vec![LatticePoint(Vec::new())];
    }
    let cap0 = members[0].iter().map(|&q| slack0[q]).min().unwrap_or(0);
    let mut pts: Vec<LatticePoint> = (0..=cap0)
        .into_par_iter()
        .flat_map_iter(|v| {
            let mut slack = slack0.clone();
            for &q in &members[0] {
                slack[q] -= v;
            }
            let mut out = Vec::new();
            search.run(1, &mut slack, &mut vec![v], &mut out);
            out
        })
        .collect();
    pts.sort();
    pts
}

/// Weight and PBW degree of the monomial `f^s v_lambda`.
pub fn point_weight(spec: &PolytopeSpec, p: &LatticePoint) -> (u32, Weight) {
    let mut w = spec.lambda.to_weight(spec.system);
    for (r, &s) in spec.roots.iter().zip(&p.0) {
        if s > 0 {
            w -= &(&root_weight(spec.system, *r) * s as i64);
        }
    }
    (p.degree(), w)
}

/// A finitely supported map `(q-degree, weight) -> multiplicity`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedCharacter {
    pub terms: BTreeMap<(u32, Weight), u64>,
}

impl GradedCharacter {
    pub fn dimension(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(|(q, _)| *q).max().unwrap_or(0)
    }

    /// Ungraded multiplicities.
    pub fn weight_multiplicities(&self) -> BTreeMap<Weight, u64> {
        let mut out = BTreeMap::new();
        for ((_, w), &c) in &self.terms {
            *out.entry(w.clone()).or_insert(0) += c;
        }
        out
    }
}

pub fn character_of_points(spec: &PolytopeSpec, pts: &[LatticePoint]) -> GradedCharacter {
    let mut ch = GradedCharacter::default();
    for p in pts {
        *ch.terms.entry(point_weight(spec, p)).or_insert(0) += 1;
    }
    ch
}

pub fn graded_character(lambda: &DominantWeight, system: RootSystem) -> Result<GradedCharacter> {
    let spec = polytope_spec(lambda, system)?;
    Ok(character_of_points(&spec, &lattice_points(&spec)))
}

pub fn dimension(lambda: &DominantWeight, system: RootSystem) -> Result<u64> {
    let spec = polytope_spec(lambda, system)?;
    Ok(lattice_points(&spec).len() as u64)
}

/// `lambda` for `sp_2n` reread as an `sl_2n` weight (`m_{n+1} = ... = 0`).
pub fn sl_weight_of(lambda: &DominantWeight, n: u32) -> DominantWeight {
    let mut m = lambda.0.clone();
    m.resize(2 * n as usize - 1, 0);
    DominantWeight(m)
}

/// Moves a point of the symplectic polytope into the `sl_2n` polytope along
/// the identity on root indices and checks every `sl_2n` inequality.
pub fn phi_point_embed(
    p: &LatticePoint,
    lambda: &DominantWeight,
    n: u32,
) -> Result<(PolytopeSpec, LatticePoint)> {
    let c_spec = polytope_spec(lambda, RootSystem::type_c(n)?)?;
    if p.0.len() != c_spec.roots.len() {
        return Err(Error::DimensionMismatch(format!(
            "point has {} coordinates, sp_{} has {} roots",
            p.0.len(),
            2 * n,
            c_spec.roots.len()
        )));
    }
    let a_spec = polytope_spec(&sl_weight_of(lambda, n), RootSystem::type_a(2 * n)?)?;
    let a_idx = a_spec.index_of();
    let mut image = vec![0u32; a_spec.roots.len()];
    for (r, &s) in c_spec.roots.iter().zip(&p.0) {
        let target = crate::rootsys::phi_embed(*r, n)?;
        image[a_idx[&target]] = s;
    }
    let image = LatticePoint(image);
    if let Some(q) = a_spec.violation(&image) {
        let support: Vec<String> = q.support.iter().map(|r| r.to_string()).collect();
        return Err(Error::EmbeddingViolation(format!(
            "image of {:?} exceeds bound {} on [{}]",
            p.0,
            q.bound,
            support.join(" ")
        )));
    }
    Ok((a_spec, image))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(i: u32, j: u32) -> Root {
        Root::new(i, j)
    }

    fn path_set(system: RootSystem) -> BTreeSet<Vec<Root>> {
        dyck_paths(system).into_iter().map(|p| p.roots).collect()
    }

    #[test]
    fn dyck_paths_small() {
        assert_eq!(path_set(RootSystem::TypeC(1)), [vec![r(1, 1)]].into_iter().collect());
        let expected: BTreeSet<Vec<Root>> = [
            vec![r(1, 1)],
            vec![r(2, 2)],
            vec![r(1, 1), r(1, 2), r(1, 3)],
            vec![r(1, 1), r(1, 2), r(2, 2)],
        ]
        .into_iter()
        .collect();
        assert_eq!(path_set(RootSystem::TypeC(2)), expected);
        let expected: BTreeSet<Vec<Root>> =
            [vec![r(1, 1)], vec![r(2, 2)], vec![r(1, 1), r(1, 2), r(2, 2)]]
                .into_iter()
                .collect();
        assert_eq!(path_set(RootSystem::TypeA(3)), expected);
    }

    #[test]
    fn spec_bounds() {
        let spec = polytope_spec(&DominantWeight(vec![1, 0]), RootSystem::TypeC(2)).unwrap();
        let got: BTreeSet<(Vec<Root>, u32)> = spec
            .inequalities
            .iter()
            .map(|q| (q.support.clone(), q.bound))
            .collect();
        let expected: BTreeSet<(Vec<Root>, u32)> = [
            (vec![r(1, 1)], 1),
            (vec![r(2, 2)], 0),
            (vec![r(1, 1), r(1, 2), r(1, 3)], 1),
            (vec![r(1, 1), r(1, 2), r(2, 2)], 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expected);
        let spec = polytope_spec(&DominantWeight(vec![5]), RootSystem::TypeC(1)).unwrap();
        assert_eq!(spec.inequalities, vec![Inequality { support: vec![r(1, 1)], bound: 5 }]);
    }

    fn points_as_maps(lambda: Vec<u32>, n: u32) -> BTreeSet<BTreeMap<Root, u32>> {
        let spec = polytope_spec(&DominantWeight(lambda), RootSystem::TypeC(n)).unwrap();
        lattice_points(&spec)
            .iter()
            .map(|p| {
                spec.roots
                    .iter()
                    .zip(&p.0)
                    .filter(|(_, &s)| s > 0)
                    .map(|(&r, &s)| (r, s))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn points_of_fundamental_weights() {
        let e = |pairs: &[(u32, u32)]| -> BTreeMap<Root, u32> {
            pairs.iter().map(|&(i, j)| (r(i, j), 1)).collect()
        };
        let expected: BTreeSet<_> =
            [e(&[]), e(&[(1, 1)]), e(&[(1, 2)]), e(&[(1, 3)])].into_iter().collect();
        assert_eq!(points_as_maps(vec![1, 0], 2), expected);
        let expected: BTreeSet<_> = [e(&[]), e(&[(2, 2)]), e(&[(1, 2)]), e(&[(1, 3)]), e(&[(1, 3), (2, 2)])]
            .into_iter()
            .collect();
        assert_eq!(points_as_maps(vec![0, 1], 2), expected);
        assert_eq!(points_as_maps(vec![0, 0, 0], 3).len(), 1);
    }

    #[test]
    fn points_match_brute_force() {
        // every coordinate of a point is bounded by the total of lambda
        for (lambda, n) in [(vec![1, 1], 2), (vec![2, 0], 2), (vec![0, 1, 1], 3)] {
            let lam = DominantWeight(lambda);
            let spec = polytope_spec(&lam, RootSystem::TypeC(n)).unwrap();
            let top = lam.total();
            let len = spec.roots.len();
            let mut count = 0;
            let mut cur = vec![0u32; len];
            loop {
                if spec.contains(&LatticePoint(cur.clone())) {
                    count += 1;
                }
                let mut k = 0;
                while k < len && cur[k] == top {
                    cur[k] = 0;
                    k += 1;
                }
                if k == len {
                    break;
                }
                cur[k] += 1;
            }
            assert_eq!(lattice_points(&spec).len(), count);
        }
    }

    #[test]
    fn graded_character_of_standard_rep() {
        let ch = graded_character(&DominantWeight(vec![1, 0]), RootSystem::TypeC(2)).unwrap();
        let expected: BTreeMap<(u32, Weight), u64> = [
            ((0, Weight(vec![1, 0])), 1),
            ((1, Weight(vec![0, 1])), 1),
            ((1, Weight(vec![0, -1])), 1),
            ((1, Weight(vec![-1, 0])), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(ch.terms, expected);
        for m in 0..6u32 {
            let ch = graded_character(&DominantWeight(vec![m]), RootSystem::TypeC(1)).unwrap();
            let expected: BTreeMap<(u32, Weight), u64> =
                (0..=m).map(|k| ((k, Weight(vec![m as i64 - 2 * k as i64])), 1)).collect();
            assert_eq!(ch.terms, expected);
        }
    }

    #[test]
    fn dimensions() {
        let c = |m: Vec<u32>, n| dimension(&DominantWeight(m), RootSystem::TypeC(n)).unwrap();
        assert_eq!(c(vec![1, 0], 2), 4);
        assert_eq!(c(vec![0, 1], 2), 5);
        assert_eq!(c(vec![1, 1], 2), 16);
        assert_eq!(c(vec![0, 1, 0], 3), 14);
        let a = |m: Vec<u32>, k| dimension(&DominantWeight(m), RootSystem::TypeA(k)).unwrap();
        assert_eq!(a(vec![1, 1], 3), 8);
        assert_eq!(a(vec![0, 1, 0], 4), 6);
    }

    #[test]
    fn embedding_example() {
        let lam = DominantWeight(vec![0, 1]);
        let spec = polytope_spec(&lam, RootSystem::TypeC(2)).unwrap();
        let mut p = vec![0u32; 4];
        for (k, root) in spec.roots.iter().enumerate() {
            if *root == r(1, 3) || *root == r(2, 2) {
                p[k] = 1;
            }
        }
        let (a_spec, img) = phi_point_embed(&LatticePoint(p), &lam, 2).unwrap();
        for (root, &s) in a_spec.roots.iter().zip(&img.0) {
            let expected = u32::from(*root == r(1, 3) || *root == r(2, 2));
            assert_eq!(s, expected);
        }
        let images: BTreeSet<LatticePoint> = lattice_points(&spec)
            .iter()
            .map(|p| phi_point_embed(p, &lam, 2).unwrap().1)
            .collect();
        assert_eq!(images.len(), 5);
    }
}
