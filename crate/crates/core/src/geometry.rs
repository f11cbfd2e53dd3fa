//! Exact linear algebra on `W = Q^{2n}` with basis `w_1..w_2n` and the
//! symplectic form `<w_i, w_{2n+1-i}> = 1` for `i <= n`.
//!
//! Subspaces are row spaces kept in reduced row echelon form, so equality is
//! structural. Indices of basis vectors and projections are 1-based like the
//! `w_l`; matrix storage is 0-based.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::rootsys::{positive_roots, root_vector_matrix, FlagType, Radical, Root, RootSystem};

pub type Matrix = Vec<Vec<Rational>>;

pub fn int_matrix(m: &[Vec<i64>]) -> Matrix {
    m.iter().map(|row| row.iter().map(|&x| rational::int(x)).collect()).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|c| (0..inner).map(|k| &row[k] * &b[k][c]).sum())
                .collect()
        })
        .collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    let cols = a.first().map_or(0, |r| r.len());
    (0..cols).map(|c| a.iter().map(|row| row[c].clone()).collect()).collect()
}

/// Determinant by fraction-exact elimination.
pub fn determinant(a: &Matrix) -> Rational {
    let mut m = a.clone();
    let size = m.len();
    let mut det = Rational::one();
    for c in 0..size {
        let Some(p) = (c..size).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        let pivot = m[c][c].clone();
        for r in c + 1..size {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &pivot;
            for k in c..size {
                let delta = &f * &m[c][k];
                m[r][k] -= delta;
            }
        }
    }
    det
}

/// Reduces `rows` in place to RREF, drops zero rows, returns pivot columns.
fn rref(rows: &mut Matrix) -> Vec<usize> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut top = 0;
    for c in 0..cols {
        let Some(p) = (top..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(top, p);
        let inv = rows[top][c].recip();
        for x in rows[top].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[top].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == top || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
        pivots.push(c);
        top += 1;
        if top == rows.len() {
            break;
        }
    }
    rows.truncate(top);
    pivots
}

/// Basis of `{x : M x = 0}`.
fn nullspace(m: &Matrix, cols: usize) -> Matrix {
    let mut r = m.clone();
    let pivots = rref(&mut r);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &pc) in r.iter().zip(&pivots) {
                v[pc] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// `J` with `J[i][2n+1-i] = 1` for `i <= n` and `-1` for `i > n` (1-based).
pub fn symplectic_form(n: u32) -> Vec<Vec<i64>> {
    let dim = 2 * n as usize;
    let mut j = vec![vec![0i64; dim]; dim];
    for r in 0..dim {
        j[r][dim - 1 - r] = if r < n as usize { 1 } else { -1 };
    }
    j
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn new(ambient: usize, rows: Matrix) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != ambient) {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in a space of dimension {ambient}",
                bad.len()
            )));
        }
        Ok(Self::from_rows(ambient, rows))
    }

    fn from_rows(ambient: usize, mut rows: Matrix) -> Self {
        rref(&mut rows);
        Subspace {
            ambient,
            basis: rows,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::coordinate(ambient, 1..=ambient as u32)
    }

    /// `span(w_l : l in idx)`.
    pub fn coordinate(ambient: usize, idx: impl IntoIterator<Item = u32>) -> Self {
        let rows = idx
            .into_iter()
            .map(|l| {
                let mut v = vec![Rational::zero(); ambient];
                v[l as usize - 1] = Rational::one();
                v
            })
            .collect();
        Self::from_rows(ambient, rows)
    }

    pub fn from_int_rows(ambient: usize, rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(ambient, int_matrix(rows))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// RREF basis rows.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        rref(&mut rows);
        rows.len() == self.dim()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains_vector(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Self::from_rows(self.ambient, rows)
    }

    pub fn with_vector(&self, v: Vec<Rational>) -> Subspace {
        let mut rows = self.basis.clone();
        rows.push(v);
        Self::from_rows(self.ambient, rows)
    }

    /// `{x : <b, x>_std = 0 for all basis rows b}`.
    pub fn annihilator(&self) -> Subspace {
        Self::from_rows(self.ambient, nullspace(&self.basis, self.ambient))
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    /// Orthogonal complement for the bilinear form `x^t F y`.
    pub fn perp_for(&self, form: &Matrix) -> Subspace {
        Self::from_rows(self.ambient, nullspace(&mat_mul(&self.basis, form), self.ambient))
    }

    pub fn perp(&self) -> Subspace {
        self.perp_for(&int_matrix(&symplectic_form(self.ambient as u32 / 2)))
    }

    pub fn is_isotropic_for(&self, form: &Matrix) -> bool {
        let g = mat_mul(&mat_mul(&self.basis, form), &transpose(&self.basis));
        g.iter().flatten().all(Zero::is_zero)
    }

    pub fn is_isotropic(&self) -> bool {
        self.is_isotropic_for(&int_matrix(&symplectic_form(self.ambient as u32 / 2)))
    }

    /// Sets the listed coordinates (1-based) to zero in every vector.
    pub fn kill(&self, coords: impl IntoIterator<Item = u32>) -> Subspace {
        let mut rows = self.basis.clone();
        for c in coords {
            for row in rows.iter_mut() {
                row[c as usize - 1] = Rational::zero();
            }
        }
        Self::from_rows(self.ambient, rows)
    }

    /// Keeps only the listed coordinates (1-based).
    pub fn keep(&self, coords: &[u32]) -> Subspace {
        let killed: Vec<u32> = (1..=self.ambient as u32).filter(|c| !coords.contains(c)).collect();
        self.kill(killed)
    }

    /// Image under a square matrix acting on column vectors.
    pub fn apply(&self, m: &Matrix) -> Subspace {
        Self::from_rows(self.ambient, transpose(&mat_mul(m, &transpose(&self.basis))))
    }

    /// The Pluecker coordinate `p_{1..i}` (`i = dim`) of the RREF basis.
    pub fn leading_plucker(&self) -> Rational {
        let i = self.dim();
        let minor: Matrix = self.basis.iter().map(|r| r[..i].to_vec()).collect();
        determinant(&minor)
    }
}

#[derive(Serialize, Deserialize)]
struct SubspaceRepr {
    ambient: usize,
    basis: Vec<Vec<String>>,
}

impl Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SubspaceRepr {
            ambient: self.ambient,
            basis: self
                .basis
                .iter()
                .map(|r| r.iter().map(rational::format).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Subspace {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = SubspaceRepr::deserialize(d)?;
        let rows = repr
            .basis
            .iter()
            .map(|r| r.iter().map(|x| rational::parse(x)).collect::<Result<Vec<_>>>())
            .collect::<Result<Matrix>>()
            .map_err(serde::de::Error::custom)?;
        Subspace::new(repr.ambient, rows).map_err(serde::de::Error::custom)
    }
}

/// `W_{i,j} = span(w_1..w_i, w_{j+1}..w_2n)`.
pub fn w_space(n: u32, i: u32, j: u32) -> Subspace {
    Subspace::coordinate(2 * n as usize, (1..=i).chain(j + 1..=2 * n))
}

/// The coordinates `{1..k} u {2n-k+1..2n}` kept by `pr_{1,3}`.
fn outer_coords(n: u32, k: u32) -> Vec<u32> {
    (1..=k).chain(2 * n - k + 1..=2 * n).collect()
}

pub fn in_sp_grass_a(u: &Subspace, k: u32, n: u32) -> Result<bool> {
    if u.ambient() != 2 * n as usize || u.dim() != k as usize || k > n {
        return Err(Error::DimensionMismatch(format!(
            "expected a {k}-dimensional subspace of Q^{} with k <= n",
            2 * n
        )));
    }
    Ok(u.keep(&outer_coords(n, k)).is_isotropic())
}

/// A point `(V_{d_1}, ..., V_{d_k})` of a (degenerate) partial flag variety.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagPoint {
    pub flag: FlagType,
    pub spaces: Vec<Subspace>,
}

impl FlagPoint {
    pub fn new(flag: FlagType, spaces: Vec<Subspace>) -> Result<Self> {
        let p = FlagPoint { flag, spaces };
        p.check_shape()?;
        Ok(p)
    }

    fn check_shape(&self) -> Result<()> {
        let n = self.flag.n();
        if self.spaces.len() != self.flag.k() {
            return Err(Error::DimensionMismatch(format!(
                "{} spaces for flag type {}",
                self.spaces.len(),
                self.flag
            )));
        }
        for (v, &dl) in self.spaces.iter().zip(self.flag.d()) {
            if v.ambient() != 2 * n as usize || v.dim() != dl as usize {
                return Err(Error::DimensionMismatch(format!(
                    "space of dimension {} in Q^{} where {dl} in Q^{} is required",
                    v.dim(),
                    v.ambient(),
                    2 * n
                )));
            }
        }
        Ok(())
    }

    /// The coordinate flag `span(w_1..w_{d_l})`.
    pub fn coordinate(flag: &FlagType) -> Self {
        let amb = 2 * flag.n() as usize;
        FlagPoint {
            flag: flag.clone(),
            spaces: flag.d().iter().map(|&dl| Subspace::coordinate(amb, 1..=dl)).collect(),
        }
    }

    pub fn space(&self, dl: u32) -> Option<&Subspace> {
        self.flag.d().iter().position(|&x| x == dl).map(|k| &self.spaces[k])
    }
}

pub fn in_sp_flag_a(f: &FlagPoint) -> Result<bool> {
    f.check_shape()?;
    let n = f.flag.n();
    let d = f.flag.d();
    for (v, &dl) in f.spaces.iter().zip(d) {
        if !in_sp_grass_a(v, dl, n)? {
            return Ok(false);
        }
    }
    for l in 0..d.len().saturating_sub(1) {
        let projected = f.spaces[l].kill(d[l] + 1..=d[l + 1]);
        if !f.spaces[l + 1].contains(&projected) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A point of the resolution: one `i`-dimensional `V_{i,j}` for each `(i,j)` in `P_d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionPoint {
    pub flag: FlagType,
    #[serde(with = "root_map")]
    pub spaces: BTreeMap<Root, Subspace>,
}

mod root_map {
    use super::*;

    #[derive(Serialize, Deserialize)]
    struct Entry {
        i: u32,
        j: u32,
        space: Subspace,
    }

    pub fn serialize<S: serde::Serializer>(
        m: &BTreeMap<Root, Subspace>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<Entry> = m
            .iter()
            .map(|(r, sp)| Entry {
                i: r.i,
                j: r.j,
                space: sp.clone(),
            })
            .collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: serde::Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<BTreeMap<Root, Subspace>, D::Error> {
        let v = Vec::<Entry>::deserialize(d)?;
        Ok(v.into_iter().map(|e| (Root::new(e.i, e.j), e.space)).collect())
    }
}

impl ResolutionPoint {
    pub fn get(&self, i: u32, j: u32) -> Option<&Subspace> {
        self.spaces.get(&Root::new(i, j))
    }

    /// `V_{i,j} = span(w_1..w_i)` everywhere.
    pub fn highest_weight(flag: &FlagType) -> Self {
        let amb = 2 * flag.n() as usize;
        let spaces = Radical::new(flag)
            .roots()
            .iter()
            .map(|&r| (r, Subspace::coordinate(amb, 1..=r.i)))
            .collect();
        ResolutionPoint {
            flag: flag.clone(),
            spaces,
        }
    }
}

pub fn in_resolution(p: &ResolutionPoint) -> Result<bool> {
    let n = p.flag.n();
    let rad = Radical::new(&p.flag);
    let keys: Vec<Root> = p.spaces.keys().copied().collect();
    let mut expected: Vec<Root> = rad.roots().to_vec();
    expected.sort();
    if keys != expected {
        return Err(Error::DimensionMismatch(format!(
            "resolution point must have exactly one space per root of P_d for d = {}",
            p.flag
        )));
    }
    for (&r, v) in &p.spaces {
        if v.ambient() != 2 * n as usize {
            return Err(Error::DimensionMismatch(format!("V{r} is not in Q^{}", 2 * n)));
        }
        let (i, j) = (r.i, r.j);
        if v.dim() != i as usize || !w_space(n, i, j).contains(v) {
            return Ok(false);
        }
        if let Some(up) = p.get(i + 1, j) {
            if !up.contains(v) {
                return Ok(false);
            }
        }
        if let Some(right) = p.get(i, j + 1) {
            if !right.contains(&v.kill([j + 1])) {
                return Ok(false);
            }
        }
        if i + j == 2 * n && !v.is_isotropic() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Forgets everything but the diagonal `V_{d_l,d_l}`.
pub fn project_pi(p: &ResolutionPoint) -> FlagPoint {
    FlagPoint {
        flag: p.flag.clone(),
        spaces: p.flag.d().iter().map(|&dl| p.spaces[&Root::new(dl, dl)].clone()).collect(),
    }
}

fn infeasible(i: u32, j: u32, reason: impl Into<String>) -> Error {
    Error::LiftInfeasible {
        i,
        j,
        reason: reason.into(),
    }
}

/// `{v in upper : <Pv, Pu> = 0 for u in cur}` where `P` kills `killed`.
fn compatible_vectors(upper: &Subspace, cur: &Subspace, killed: &[u32], form: &Matrix) -> Subspace {
    let pcur = cur.kill(killed.iter().copied());
    if pcur.dim() == 0 {
        return upper.clone();
    }
    // <Pv, Pu> = v^t P J P u, and P is diagonal
    let amb = upper.ambient();
    let mut pjp = form.clone();
    for &c in killed {
        let c = c as usize - 1;
        for k in 0..amb {
            pjp[c][k] = Rational::zero();
            pjp[k][c] = Rational::zero();
        }
    }
    let constraints = pcur.perp_for(&transpose(&pjp));
    upper.intersect(&constraints)
}

/// Builds a resolution point over `f` column by column (`j` ascending, `i`
/// descending). Each `V_{i,j}` starts from the projections of the spaces in
/// column `j - 1` and is extended inside `W_{i,j} n V_{i+1,j}` by the first RREF
/// vectors that keep its eventual image in `V_{i,2n-i}` isotropic.
pub fn lift(f: &FlagPoint) -> Result<ResolutionPoint> {
    f.check_shape()?;
    let n = f.flag.n();
    let amb = 2 * n as usize;
    let form = int_matrix(&symplectic_form(n));
    let rad = Radical::new(&f.flag);
    let mut spaces: BTreeMap<Root, Subspace> = BTreeMap::new();
    for j in 1..2 * n {
        for i in (1..=j.min(2 * n - j)).rev() {
            if !rad.contains(i, j) {
                continue;
            }
            let mut lower = Subspace::zero(amb);
            for ip in 1..=i {
                if let Some(prev) = spaces.get(&Root::new(ip, j - 1)) {
                    lower = lower.sum(&prev.kill([j]));
                }
            }
            let w = w_space(n, i, j);
            let upper = match spaces.get(&Root::new(i + 1, j)) {
                Some(v) => w.intersect(v),
                None => w,
            };
            let killed: Vec<u32> = (j + 1..=2 * n - i).collect();
            if !upper.contains(&lower) {
                return Err(infeasible(i, j, "projection of the previous column does not fit"));
            }
            let v = if i == j {
                let given = f.space(i).expect("diagonal of P_d is d").clone();
                if !given.contains(&lower) {
                    return Err(infeasible(i, j, "flag violates the projected inclusions"));
                }
                if !given.kill(killed.iter().copied()).is_isotropic() {
                    return Err(infeasible(i, j, "outer projection is not isotropic"));
                }
                given
            } else {
                let mut cur = lower;
                while cur.dim() < i as usize {
                    let cand = compatible_vectors(&upper, &cur, &killed, &form);
                    let Some(next) = cand.basis().iter().find(|v| !cur.contains_vector(v)) else {
                        return Err(infeasible(i, j, "no isotropic extension inside the bound"));
                    };
                    cur = cur.with_vector(next.clone());
                }
                if cur.dim() > i as usize {
                    return Err(infeasible(i, j, "lower bound exceeds the dimension"));
                }
                cur
            };
            spaces.insert(Root::new(i, j), v);
        }
    }
    let p = ResolutionPoint {
        flag: f.flag.clone(),
        spaces,
    };
    if !in_resolution(&p)? {
        return Err(infeasible(1, 1, "assembled point fails the resolution conditions"));
    }
    Ok(p)
}

/// `(V_i) -> (V_{2n-i}^perp)` on complete flags of `Q^{2n}`.
pub fn sigma_involution(flags: &[Subspace]) -> Result<Vec<Subspace>> {
    let len = flags.len();
    let amb = len + 1;
    if amb % 2 != 0 {
        return Err(Error::DimensionMismatch(format!("{len} spaces do not form a flag of Q^2n")));
    }
    for (k, v) in flags.iter().enumerate() {
        if v.dim() != k + 1 || v.ambient() != amb {
            return Err(Error::DimensionMismatch(format!(
                "V_{} has dimension {} in Q^{}",
                k + 1,
                v.dim(),
                v.ambient()
            )));
        }
    }
    Ok((1..=len).map(|i| flags[len - i].perp()).collect())
}

/// `sum c_alpha f_alpha` with random integer coefficients in `-9..=9`.
pub fn random_sp_radical_matrix<R: Rng>(n: u32, rng: &mut R) -> Matrix {
    let amb = 2 * n as usize;
    let mut x = vec![vec![0i64; amb]; amb];
    for r in positive_roots(RootSystem::TypeC(n)) {
        let c: i64 = rng.gen_range(-9..=9);
        let f = root_vector_matrix(r, n).expect("valid root");
        for (xr, fr) in x.iter_mut().zip(&f) {
            for (a, b) in xr.iter_mut().zip(fr) {
                *a += c * b;
            }
        }
    }
    int_matrix(&x)
}

/// A random strictly lower-triangular matrix with entries in `-9..=9`.
pub fn random_lower_matrix<R: Rng>(size: usize, rng: &mut R) -> Matrix {
    (0..size)
        .map(|r| {
            (0..size)
                .map(|c| if r > c { rational::int(rng.gen_range(-9..=9)) } else { Rational::zero() })
                .collect()
        })
        .collect()
}

/// Column span of `[I_k; X_{k+1..,1..k}]`: the first `k` columns of the
/// unipotent matrix with the upper `k x k` block reset to the identity.
pub fn cell_space(x: &Matrix, k: usize) -> Subspace {
    let amb = x.len();
    let rows = (0..k)
        .map(|c| {
            (0..amb)
                .map(|r| {
                    if r < k {
                        if r == c { Rational::one() } else { Rational::zero() }
                    } else {
                        x[r][c].clone()
                    }
                })
                .collect()
        })
        .collect();
    Subspace::from_rows(amb, rows)
}

/// A random point of the open cell of the degenerate partial flag variety.
pub fn random_open_cell_flag<R: Rng>(flag: &FlagType, rng: &mut R) -> FlagPoint {
    let x = random_sp_radical_matrix(flag.n(), rng);
    FlagPoint {
        flag: flag.clone(),
        spaces: flag.d().iter().map(|&dl| cell_space(&x, dl as usize)).collect(),
    }
}

/// The complete `sl_2n` flag `(V_1..V_{2n-1})` obtained from `x` by [`cell_space`].
pub fn cell_flag(x: &Matrix) -> Vec<Subspace> {
    (1..x.len()).map(|k| cell_space(x, k)).collect()
}

/// `J_s` for the degeneration splitting `W` into blocks of sizes `k, n-k, n-k, k`;
/// the middle anti-diagonal blocks are scaled by `s`, so `J_1` is the standard form.
pub fn flat_family_form(s: &Rational, n: u32, k: u32) -> Matrix {
    let j = int_matrix(&symplectic_form(n));
    let outer = |c: usize| c < k as usize || c >= (2 * n - k) as usize;
    j.into_iter()
        .enumerate()
        .map(|(r, row)| {
            row.into_iter()
                .map(|x| if outer(r) || x.is_zero() { x } else { x * s })
                .collect()
        })
        .collect()
}

/// `eta(s) = diag(I_k, s I_{2(n-k)}, I_k)`.
pub fn eta(s: &Rational, n: u32, k: u32) -> Matrix {
    let amb = 2 * n as usize;
    (0..amb)
        .map(|r| {
            (0..amb)
                .map(|c| {
                    if r != c {
                        Rational::zero()
                    } else if r < k as usize || r >= amb - k as usize {
                        Rational::one()
                    } else {
                        s.clone()
                    }
                })
                .collect()
        })
        .collect()
}

/// For a `J_1`-isotropic `u` and nonzero `s`, checks that `eta(1/s) u` is
/// `J_{s^2}`-isotropic. Returns `Ok(true)` vacuously when `u` is not isotropic.
pub fn isotropy_transport_check(u: &Subspace, s: &Rational, k: u32) -> Result<bool> {
    if s.is_zero() {
        return Err(Error::Parse("transport needs a nonzero parameter".into()));
    }
    let n = (u.ambient() / 2) as u32;
    if k > n {
        return Err(Error::DimensionMismatch(format!("block size {k} exceeds n = {n}")));
    }
    if !u.is_isotropic() {
        return Ok(true);
    }
    let moved = u.apply(&eta(&s.recip(), n, k));
    Ok(moved.is_isotropic_for(&flat_family_form(&(s * s), n, k)))
}

/// A random `dim`-dimensional isotropic subspace: a random subspace of
/// `span(w_1..w_n)` moved by a product of symplectic transvections
/// `x -> x + c <x, v> v`.
pub fn random_isotropic<R: Rng>(n: u32, dim: u32, rng: &mut R) -> Result<Subspace> {
    if dim > n {
        return Err(Error::DimensionMismatch(format!("isotropic subspaces of Q^{} have dimension <= {n}", 2 * n)));
    }
    let amb = 2 * n as usize;
    let j = int_matrix(&symplectic_form(n));
    let mut g: Matrix = (0..amb)
        .map(|r| (0..amb).map(|c| if r == c { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    for _ in 0..2 * amb {
        let v: Vec<Rational> = (0..amb).map(|_| rational::int(rng.gen_range(-3..=3))).collect();
        let c = rational::int(rng.gen_range(1..=3));
        // <x, v> = x^T J v, so the transvection is I + c v (J v)^T.
        let jv: Vec<Rational> = j
            .iter()
            .map(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum())
            .collect();
        let t: Matrix = (0..amb)
            .map(|r| {
                (0..amb)
                    .map(|col| {
                        let id = if r == col { Rational::one() } else { Rational::zero() };
                        id + &c * &v[r] * &jv[col]
                    })
                    .collect()
            })
            .collect();
        g = mat_mul(&t, &g);
    }
    let mut u = Subspace::zero(amb);
    while u.dim() < dim as usize {
        let v = (0..amb)
            .map(|c| if c < n as usize { rational::int(rng.gen_range(-5..=5)) } else { Rational::zero() })
            .collect();
        u = u.with_vector(v);
    }
    Ok(u.apply(&g))
}

/// Isotropy for the limit form `J_0`.
pub fn is_j0_isotropic(u: &Subspace, k: u32) -> bool {
    let n = (u.ambient() / 2) as u32;
    u.is_isotropic_for(&flat_family_form(&Rational::zero(), n, k))
}

/// Choice in one `P^1` fiber of the tower over the complete flag type.
#[derive(Debug, Clone)]
pub enum FiberChoice {
    /// The section `V_{i-1,j+1} + C w_{j+1}`, i.e. a point of the divisor `Z_{i,j}`.
    Section,
    /// The line through `x u_1 + y u_2` for the canonical quotient basis `u_1, u_2`.
    Line(Rational, Rational),
}

/// Builds a resolution point for the complete flag type by walking the tower
/// of `P^1`-fibrations in root order, asking `choose` for a point in each fiber.
pub fn tower_point(n: u32, mut choose: impl FnMut(Root) -> FiberChoice) -> Result<ResolutionPoint> {
    let amb = 2 * n as usize;
    let mut spaces: BTreeMap<Root, Subspace> = BTreeMap::new();
    for r in positive_roots(RootSystem::TypeC(n)) {
        let (i, j) = (r.i, r.j);
        let below = if i == 1 {
            Subspace::zero(amb)
        } else {
            spaces[&Root::new(i - 1, j)].clone()
        };
        let v = match choose(r) {
            FiberChoice::Section => {
                let base = if i == 1 {
                    Subspace::zero(amb)
                } else {
                    spaces[&Root::new(i - 1, j + 1)].clone()
                };
                base.sum(&Subspace::coordinate(amb, [j + 1]))
            }
            FiberChoice::Line(x, y) => {
                let fiber = if i + j == 2 * n {
                    below.perp().intersect(&w_space(n, i, j))
                } else {
                    spaces[&Root::new(i, j + 1)].sum(&Subspace::coordinate(amb, [j + 1]))
                };
                let mut quotient = Vec::new();
                let mut acc = below.clone();
                for b in fiber.basis() {
                    if !acc.contains_vector(b) {
                        acc = acc.with_vector(b.clone());
                        quotient.push(b.clone());
                    }
                }
                if quotient.len() != 2 {
                    return Err(Error::DimensionMismatch(format!(
                        "fiber over {r} has quotient dimension {}",
                        quotient.len()
                    )));
                }
                let v: Vec<Rational> = quotient[0]
                    .iter()
                    .zip(&quotient[1])
                    .map(|(a, b)| &x * a + &y * b)
                    .collect();
                below.with_vector(v)
            }
        };
        spaces.insert(r, v);
    }
    Ok(ResolutionPoint {
        flag: FlagType::complete(n),
        spaces,
    })
}

/// True when every `p_{1..i}(V_{i,j})` is nonzero.
pub fn in_open_cell(p: &ResolutionPoint) -> bool {
    p.spaces.values().all(|v| !v.leading_plucker().is_zero())
}
