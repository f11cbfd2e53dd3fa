//! Positive roots of `sl_m` and `sp_2n`, epsilon-coordinates and parabolic radicals.
//!
//! Roots are indexed by pairs `(i, j)`. In type A, `alpha_{i,j}` is the sum of
//! the simple roots `alpha_i + ... + alpha_j`. In type C the pairs with `j <= n`
//! follow the same rule, and pairs with `n < j`, `i + j <= 2n` denote
//! `alpha_i + ... + alpha_n + alpha_{n-1} + ... + alpha_{2n-j}`, so that the
//! anti-diagonal `alpha_{i,2n-i}` is the long root `2 eps_i`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootSystem {
    /// `sl_m`, simple roots `alpha_1..alpha_{m-1}`.
    TypeA(u32),
    /// `sp_2n`, simple roots `alpha_1..alpha_n`.
    TypeC(u32),
}

impl RootSystem {
    pub fn type_a(m: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidSystem(format!("sl_{m} needs m >= 2")));
        }
        Ok(RootSystem::TypeA(m))
    }

    pub fn type_c(n: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidSystem("sp_0 is not a root system".into()));
        }
        Ok(RootSystem::TypeC(n))
    }

    /// Number of simple roots, i.e. the length of a [`DominantWeight`].
    pub fn rank(self) -> usize {
        match self {
            RootSystem::TypeA(m) => m as usize - 1,
            RootSystem::TypeC(n) => n as usize,
        }
    }

    /// Length of an epsilon-coordinate vector.
    pub fn eps_len(self) -> usize {
        match self {
            RootSystem::TypeA(m) => m as usize,
            RootSystem::TypeC(n) => n as usize,
        }
    }

    pub fn contains(self, r: Root) -> bool {
        let Root { i, j } = r;
        match self {
            RootSystem::TypeA(m) => 1 <= i && i <= j && j < m,
            RootSystem::TypeC(n) => 1 <= i && i <= j && (j <= n || i + j <= 2 * n),
        }
    }

    pub fn check(self, r: Root) -> Result<Root> {
        if self.contains(r) {
            Ok(r)
        } else {
            Err(Error::InvalidRoot {
                i: r.i,
                j: r.j,
                system: self.to_string(),
            })
        }
    }

    /// The number of positive roots.
    pub fn num_positive_roots(self) -> usize {
        match self {
            RootSystem::TypeA(m) => (m * (m - 1) / 2) as usize,
            RootSystem::TypeC(n) => (n * n) as usize,
        }
    }

    /// Largest column index `j` occurring in a root.
    fn max_j(self) -> u32 {
        match self {
            RootSystem::TypeA(m) => m - 1,
            RootSystem::TypeC(n) => 2 * n - 1,
        }
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootSystem::TypeA(m) => write!(f, "sl_{m}"),
            RootSystem::TypeC(n) => write!(f, "sp_{}", 2 * n),
        }
    }
}

/// Index pair of a positive root `alpha_{i,j}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Root {
    pub i: u32,
    pub j: u32,
}

impl Root {
    pub const fn new(i: u32, j: u32) -> Self {
        Root { i, j }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a({},{})", self.i, self.j)
    }
}

/// Integer vector in epsilon-coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(len: usize) -> Self {
        Weight(vec![0; len])
    }

    pub fn unit(len: usize, k: usize) -> Self {
        let mut w = Weight::zero(len);
        w.0[k] = 1;
        w
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    /// Standard inner product in epsilon-coordinates.
    pub fn dot(&self, other: &Weight) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Coordinates in the fundamental-weight basis (`omega_i = eps_1 + ... + eps_i`).
    ///
    /// For type A only the `sl` part (`m - 1` coordinates) is returned.
    pub fn to_omega(&self, system: RootSystem) -> Vec<i64> {
        let e = &self.0;
        let len = e.len();
        let mut c: Vec<i64> = (0..len)
            .map(|k| if k + 1 < len { e[k] - e[k + 1] } else { e[k] })
            .collect();
        if let RootSystem::TypeA(_) = system {
            c.pop();
        }
        c
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&Weight> for Weight {
    fn sub_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl Mul<i64> for &Weight {
    type Output = Weight;
    fn mul(self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// `lambda = sum m_i omega_i` with `m_i >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DominantWeight(pub Vec<u32>);

impl DominantWeight {
    pub fn new(m: Vec<u32>) -> Self {
        DominantWeight(m)
    }

    pub fn zero(rank: usize) -> Self {
        DominantWeight(vec![0; rank])
    }

    /// `omega_k`, 1-based.
    pub fn fundamental(rank: usize, k: usize) -> Self {
        let mut m = vec![0; rank];
        m[k - 1] = 1;
        DominantWeight(m)
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `m_i + ... + m_j`, 1-based and inclusive.
    pub fn partial_sum(&self, i: u32, j: u32) -> u32 {
        self.0[(i - 1) as usize..j as usize].iter().sum()
    }

    pub fn check(&self, system: RootSystem) -> Result<()> {
        if self.0.len() != system.rank() {
            return Err(Error::WeightLength {
                expected: system.rank(),
                got: self.0.len(),
            });
        }
        Ok(())
    }

    /// Epsilon-coordinates: entry `k` is `m_k + ... + m_rank`.
    pub fn to_weight(&self, system: RootSystem) -> Weight {
        let mut w = Weight::zero(system.eps_len());
        let mut acc = 0i64;
        for k in (0..self.0.len()).rev() {
            acc += self.0[k] as i64;
            w.0[k] = acc;
        }
        w
    }

    /// Every dominant weight of the given rank with `sum m_i <= total`, in
    /// lexicographic order.
    pub fn all_up_to(rank: usize, total: u32) -> Vec<DominantWeight> {
        fn rec(rank: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<DominantWeight>) {
            if cur.len() == rank {
                out.push(DominantWeight(cur.clone()));
                return;
            }
            for v in 0..=left {
                cur.push(v);
                rec(rank, left - v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(rank, total, &mut Vec::with_capacity(rank), &mut out);
        out
    }
}

/// All positive roots, ordered by `j` descending then `i` ascending.
///
/// Every root `(i, j)` appears after `(i - 1, j)` and `(i, j + 1)`.
pub fn positive_roots(system: RootSystem) -> Vec<Root> {
    let mut out = Vec::with_capacity(system.num_positive_roots());
    for j in (1..=system.max_j()).rev() {
        for i in 1..=j {
            let r = Root::new(i, j);
            if system.contains(r) {
                out.push(r);
            }
        }
    }
    out
}

/// Epsilon-coordinates of a positive root.
pub fn root_weight(system: RootSystem, r: Root) -> Weight {
    let mut w = Weight::zero(system.eps_len());
    let (i, j) = (r.i as usize, r.j as usize);
    match system {
        RootSystem::TypeA(_) => {
            w.0[i - 1] += 1;
            w.0[j] -= 1;
        }
        RootSystem::TypeC(n) => {
            let n = n as usize;
            if j < n {
                w.0[i - 1] += 1;
                w.0[j] -= 1;
            } else {
                // eps_i + eps_{2n-j}; the anti-diagonal gives 2 eps_i
                w.0[i - 1] += 1;
                w.0[2 * n - j - 1] += 1;
            }
        }
    }
    w
}

/// `omega_k` in epsilon-coordinates.
pub fn fundamental_weight(system: RootSystem, k: usize) -> Weight {
    let mut w = Weight::zero(system.eps_len());
    for c in w.0.iter_mut().take(k) {
        *c = 1;
    }
    w
}

pub type IntMatrix = Vec<Vec<i64>>;

/// The lowering operator `f_{i,j}` of `sp_2n` as a `2n x 2n` matrix.
pub fn root_vector_matrix(r: Root, n: u32) -> Result<IntMatrix> {
    let system = RootSystem::type_c(n)?;
    system.check(r)?;
    let dim = 2 * n as usize;
    let mut f = vec![vec![0i64; dim]; dim];
    // 1-based (row, col) setter
    let mut set = |row: u32, col: u32, v: i64| f[row as usize - 1][col as usize - 1] += v;
    let (i, j) = (r.i, r.j);
    if i + j == 2 * n {
        set(2 * n + 1 - i, i, 1);
    } else if j < n {
        set(j + 1, i, 1);
        set(2 * n + 1 - i, 2 * n - j, -1);
    } else {
        set(j + 1, i, 1);
        set(2 * n + 1 - i, 2 * n - j, 1);
    }
    Ok(f)
}

/// The inclusion of `sp_2n` roots into `sl_2n` roots, identity on index pairs.
pub fn phi_embed(r: Root, n: u32) -> Result<Root> {
    RootSystem::type_c(n)?.check(r)?;
    let image = Root::new(r.i, r.j);
    debug_assert!(RootSystem::TypeA(2 * n).contains(image));
    Ok(image)
}

/// A parabolic type `d = (d_1 < ... < d_k)` inside `{1..n}` for `sp_2n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FlagTypeRepr")]
pub struct FlagType {
    n: u32,
    d: Vec<u32>,
}

#[derive(Deserialize)]
struct FlagTypeRepr {
    n: u32,
    d: Vec<u32>,
}

impl TryFrom<FlagTypeRepr> for FlagType {
    type Error = Error;
    fn try_from(r: FlagTypeRepr) -> Result<Self> {
        FlagType::new(r.n, r.d)
    }
}

impl FlagType {
    pub fn new(n: u32, d: Vec<u32>) -> Result<Self> {
        if d.is_empty() {
            return Err(Error::EmptyIndexList);
        }
        let increasing = d.windows(2).all(|w| w[0] < w[1]);
        if !increasing || d[0] < 1 || *d.last().unwrap() > n {
            return Err(Error::InvalidIndexList { list: d, n });
        }
        Ok(FlagType { n, d })
    }

    pub fn complete(n: u32) -> Self {
        FlagType {
            n,
            d: (1..=n).collect(),
        }
    }

    /// All `2^n - 1` nonempty types for a given `n`.
    pub fn all(n: u32) -> Vec<FlagType> {
        (1u32..(1 << n))
            .map(|mask| FlagType {
                n,
                d: (1..=n).filter(|k| mask & (1 << (k - 1)) != 0).collect(),
            })
            .collect()
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> &[u32] {
        &self.d
    }

    pub fn k(&self) -> usize {
        self.d.len()
    }

    pub fn is_complete(&self) -> bool {
        self.d.len() == self.n as usize
    }

    /// `d_s` with the convention `d_0 = 0`.
    pub fn d_at(&self, s: usize) -> u32 {
        if s == 0 {
            0
        } else {
            self.d[s - 1]
        }
    }
}

impl fmt::Display for FlagType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.d.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The radical `P_d`: roots pairing positively with some `omega_{d_l}`.
///
/// Membership is decided by the epsilon-pairing and stored for repeated lookups.
#[derive(Debug, Clone)]
pub struct Radical {
    flag: FlagType,
    roots: Vec<Root>,
    set: BTreeSet<Root>,
}

impl Radical {
    pub fn new(flag: &FlagType) -> Self {
        let system = RootSystem::TypeC(flag.n);
        let omegas: Vec<Weight> = flag
            .d
            .iter()
            .map(|&dl| fundamental_weight(system, dl as usize))
            .collect();
        let roots: Vec<Root> = positive_roots(system)
            .into_iter()
            .filter(|&r| {
                let w = root_weight(system, r);
                omegas.iter().any(|om| w.dot(om) > 0)
            })
            .collect();
        let set = roots.iter().copied().collect();
        Radical {
            flag: flag.clone(),
            roots,
            set,
        }
    }

    pub fn flag(&self) -> &FlagType {
        &self.flag
    }

    pub fn n(&self) -> u32 {
        self.flag.n
    }

    /// Roots in iteration order (`j` descending, `i` ascending).
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn contains(&self, i: u32, j: u32) -> bool {
        i >= 1 && self.set.contains(&Root::new(i, j))
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

pub fn radical_roots(flag: &FlagType) -> Vec<Root> {
    Radical::new(flag).roots
}

/// The subset `B_d` of `P_d` listed row by row: `(1,d_1)..(d_1,d_1)`,
/// `(d_1,d_1+1)..(d_1,d_2)`, `(d_1+1,d_2)..(d_2,d_2)`, ..., `(d_k,d_k+1)..(d_k,2n-d_k)`.
pub fn boundary_set(flag: &FlagType) -> Vec<Root> {
    let n = flag.n;
    let d = &flag.d;
    let mut out: Vec<Root> = Vec::new();
    let mut push = |r: Root| {
        if !out.contains(&r) {
            out.push(r);
        }
    };
    for i in 1..=d[0] {
        push(Root::new(i, d[0]));
    }
    for w in d.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        for j in lo + 1..=hi {
            push(Root::new(lo, j));
        }
        for i in lo + 1..=hi {
            push(Root::new(i, hi));
        }
    }
    let last = *d.last().unwrap();
    for j in last + 1..=2 * n - last {
        push(Root::new(last, j));
    }
    out
}
