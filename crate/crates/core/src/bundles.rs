//! Line-bundle bookkeeping on the parabolic resolution.
//!
//! A ledger is an element of the free abelian group on the bundles
//! `omega_{i,j}` (determinant of the tautological `V_{i,j}`) and the divisors
//! `Z_{i,j}`, both indexed by `(i,j)` in `P_d`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{boundary_set, FlagType, Radical, Root};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BundleLedger {
    /// Exponent of `omega_{i,j}`.
    pub omega: BTreeMap<Root, i64>,
    /// Coefficient of `O(Z_{i,j})`.
    pub divisor: BTreeMap<Root, i64>,
}

fn bump(map: &mut BTreeMap<Root, i64>, r: Root, c: i64) {
    let v = map.entry(r).or_insert(0);
    *v += c;
    if *v == 0 {
        map.remove(&r);
    }
}

impl BundleLedger {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn omega(i: u32, j: u32) -> Self {
        let mut l = Self::zero();
        bump(&mut l.omega, Root::new(i, j), 1);
        l
    }

    pub fn divisor(i: u32, j: u32) -> Self {
        let mut l = Self::zero();
        bump(&mut l.divisor, Root::new(i, j), 1);
        l
    }

    pub fn is_zero(&self) -> bool {
        self.omega.is_empty() && self.divisor.is_empty()
    }

    pub fn omega_coeff(&self, i: u32, j: u32) -> i64 {
        self.omega.get(&Root::new(i, j)).copied().unwrap_or(0)
    }

    /// Replaces every divisor by its omega-expansion.
    pub fn expand(&self, flag: &FlagType) -> Result<BundleLedger> {
        let mut out = BundleLedger {
            omega: self.omega.clone(),
            divisor: BTreeMap::new(),
        };
        for (&r, &c) in &self.divisor {
            out = &out + &(&divisor_class(r.i, r.j, flag)? * c);
        }
        Ok(out)
    }
}

impl Add for &BundleLedger {
    type Output = BundleLedger;
    fn add(self, rhs: &BundleLedger) -> BundleLedger {
        let mut out = self.clone();
        for (&r, &c) in &rhs.omega {
            bump(&mut out.omega, r, c);
        }
        for (&r, &c) in &rhs.divisor {
            bump(&mut out.divisor, r, c);
        }
        out
    }
}

impl Mul<i64> for &BundleLedger {
    type Output = BundleLedger;
    fn mul(self, k: i64) -> BundleLedger {
        let scale = |m: &BTreeMap<Root, i64>| -> BTreeMap<Root, i64> {
            if k == 0 {
                BTreeMap::new()
            } else {
                m.iter().map(|(&r, &c)| (r, c * k)).collect()
            }
        };
        BundleLedger {
            omega: scale(&self.omega),
            divisor: scale(&self.divisor),
        }
    }
}

impl Neg for &BundleLedger {
    type Output = BundleLedger;
    fn neg(self) -> BundleLedger {
        self * -1
    }
}

impl Sub for &BundleLedger {
    type Output = BundleLedger;
    fn sub(self, rhs: &BundleLedger) -> BundleLedger {
        self + &(-rhs)
    }
}

fn require_in_radical(rad: &Radical, i: u32, j: u32) -> Result<()> {
    if rad.contains(i, j) {
        Ok(())
    } else {
        Err(Error::NotInRadical { i, j })
    }
}

/// The omega-expansion of `O(Z_{i,j})`:
///
/// * `i = 1`: `omega_{1,j} - omega_{1,j+1}`;
/// * `i > 1`, `i + j < 2n`: `omega_{i,j} - omega_{i-1,j} - omega_{i,j+1} + omega_{i-1,j+1}`;
/// * `i + j = 2n`: `omega_{i,j} - 2 omega_{i-1,j} + omega_{i-1,j+1}`.
///
/// Indices with `i = 0` or `j = 2n` are the trivial bundle and are dropped.
pub fn divisor_class(i: u32, j: u32, flag: &FlagType) -> Result<BundleLedger> {
    let n = flag.n();
    let rad = Radical::new(flag);
    require_in_radical(&rad, i, j)?;
    let mut out = BundleLedger::zero();
    let mut add = |p: u32, q: u32, c: i64| -> Result<()> {
        if p == 0 || q >= 2 * n {
            return Ok(());
        }
        require_in_radical(&rad, p, q)?;
        bump(&mut out.omega, Root::new(p, q), c);
        Ok(())
    };
    if i == 1 {
        add(1, j, 1)?;
        add(1, j + 1, -1)?;
    } else if i + j < 2 * n {
        add(i, j, 1)?;
        add(i - 1, j, -1)?;
        add(i, j + 1, -1)?;
        add(i - 1, j + 1, 1)?;
    } else {
        add(i, j, 1)?;
        add(i - 1, j, -2)?;
        add(i - 1, j + 1, 1)?;
    }
    Ok(out)
}

/// Which range of the closed form produced a coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClosedFormCase {
    /// `d_{s-1} <= j < d_s`, `d_l < i <= d_{l+1}`, `l <= s - 2`.
    BelowDiagonalBlock,
    /// `d_k <= j < 2n - d_k`.
    MiddleBand,
    /// Anti-diagonal `i = 2n - j`.
    AntiDiagonal,
    /// `2n - d_s <= j < 2n - d_{s-1}` with `d_{s-1} < i < d_s`.
    UpperSameBlock,
    /// `2n - d_s <= j < 2n - d_{s-1}` with `d_{l-1} < i <= d_l`, `l < s`.
    UpperEarlierBlock,
}

/// Every closed-form case matching `(i,j)` with its value; exactly one is
/// expected on `P_d`.
pub fn closed_form_matches(i: u32, j: u32, flag: &FlagType) -> Vec<(ClosedFormCase, i64)> {
    let n = flag.n() as i64;
    let k = flag.k();
    let d = |s: usize| flag.d_at(s) as i64;
    let (i, j) = (i as i64, j as i64);
    let two_n = 2 * n;
    let mut out = Vec::new();
    for s in 2..=k {
        for l in 0..=s - 2 {
            if d(s - 1) <= j && j < d(s) && d(l) < i && i <= d(l + 1) {
                out.push((ClosedFormCase::BelowDiagonalBlock, d(s) - d(l) - j + i - 1));
            }
        }
    }
    for l in 0..k {
        if d(k) <= j && j < two_n - d(k) && d(l) < i && i <= d(l + 1) {
            out.push((ClosedFormCase::MiddleBand, two_n - d(k) - d(l) - j + i));
        }
    }
    for s in 1..=k {
        if !(two_n - d(s) <= j && j < two_n - d(s - 1)) {
            continue;
        }
        if i == two_n - j {
            out.push((ClosedFormCase::AntiDiagonal, two_n - j - d(s - 1)));
        }
        if d(s - 1) < i && i < d(s) && i < two_n - j {
            out.push((ClosedFormCase::UpperSameBlock, two_n - 2 * d(s - 1) - j + i));
        }
        for l in 1..s {
            if d(l - 1) < i && i <= d(l) {
                out.push((ClosedFormCase::UpperEarlierBlock, two_n - d(s - 1) - d(l - 1) - j + i));
            }
        }
    }
    out
}

/// `b_{i,j}` from the closed form.
pub fn discrepancy_b(i: u32, j: u32, flag: &FlagType) -> Result<i64> {
    require_in_radical(&Radical::new(flag), i, j)?;
    match closed_form_matches(i, j, flag).as_slice() {
        [(_, b)] => Ok(*b),
        _ => Err(Error::NoMatchingCase { i, j }),
    }
}

/// All closed-form coefficients on `P_d`.
pub fn discrepancy_table(flag: &FlagType) -> Result<BTreeMap<Root, i64>> {
    Radical::new(flag)
        .roots()
        .iter()
        .map(|&r| Ok((r, discrepancy_b(r.i, r.j, flag)?)))
        .collect()
}

/// Exponents of `omega_{d_l}` in the anticanonical bundle of the partial flag
/// variety: `d_2`, then `d_{l+1} - d_{l-1}`, and `2n + 1 - d_k - d_{k-1}` last
/// (with `d_0 = 0`, so `k = 1` gives `2n + 1 - d_1`).
pub fn tilde_omega(flag: &FlagType) -> BundleLedger {
    let n = flag.n() as i64;
    let k = flag.k();
    let d = |s: usize| flag.d_at(s) as i64;
    let mut out = BundleLedger::zero();
    for l in 1..=k {
        let e = if l == k { 2 * n + 1 - d(k) - d(k - 1) } else { d(l + 1) - d(l - 1) };
        let dl = flag.d_at(l);
        bump(&mut out.omega, Root::new(dl, dl), e);
    }
    out
}

/// `tilde_omega - sum_{B_d} omega_{i,j}`, the side of the identity that does
/// not involve divisors.
pub fn canonical_lhs(flag: &FlagType) -> BundleLedger {
    let mut out = tilde_omega(flag);
    for r in boundary_set(flag) {
        bump(&mut out.omega, r, -1);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalCheck {
    pub holds: bool,
    /// `lhs - sum b_{i,j} Z_{i,j}` expanded; empty when the identity holds.
    pub residual: BundleLedger,
}

/// Expands `sum b_{i,j} Z_{i,j}` with the closed-form `b` and compares it
/// with [`canonical_lhs`].
pub fn verify_canonical_identity(flag: &FlagType) -> Result<CanonicalCheck> {
    let mut rhs = BundleLedger::zero();
    for (r, b) in discrepancy_table(flag)? {
        bump(&mut rhs.divisor, r, b);
    }
    let residual = &canonical_lhs(flag) - &rhs.expand(flag)?;
    Ok(CanonicalCheck {
        holds: residual.is_zero(),
        residual,
    })
}

/// Solves `sum b Z = lhs` by elimination: `Z_{i,j}` is the only divisor whose
/// expansion reaches `omega_{i,j}` once those at `(i+1,j)`, `(i,j-1)` and
/// `(i+1,j-1)` are known, so the pairs are visited with `j` ascending and `i`
/// descending.
pub fn discrepancy_solve(flag: &FlagType) -> Result<BTreeMap<Root, i64>> {
    let n = flag.n();
    let rad = Radical::new(flag);
    let lhs = canonical_lhs(flag);
    let mut b: BTreeMap<Root, i64> = BTreeMap::new();
    for j in 1..2 * n {
        for i in (1..=j.min(2 * n - j)).rev() {
            if !rad.contains(i, j) {
                continue;
            }
            let mut rest = lhs.omega_coeff(i, j);
            for (p, q) in [(i + 1, j), (i, j - 1), (i + 1, j - 1)] {
                if !rad.contains(p, q) {
                    continue;
                }
                let coeff = divisor_class(p, q, flag)?.omega_coeff(i, j);
                rest -= b[&Root::new(p, q)] * coeff;
            }
            // Z_{i,j} carries omega_{i,j} with coefficient 1
            b.insert(Root::new(i, j), rest);
        }
    }
    Ok(b)
}

/// The pairs whose divisors are not exceptional:
/// `(1, d_l - 1)` for `l >= 2`, `(d_l + 1, d_m - 1)` for `l <= m - 2`,
/// `(1, 2n - 1)` and `(d_l + 1, 2n - d_l - 1)` for `l <= k - 1`.
pub fn non_exceptional(flag: &FlagType) -> Vec<Root> {
    let n = flag.n();
    let k = flag.k();
    let d = |s: usize| flag.d_at(s);
    let mut out = Vec::new();
    for l in 2..=k {
        out.push(Root::new(1, d(l) - 1));
    }
    for m in 1..=k {
        for l in 1..m.saturating_sub(1) {
            out.push(Root::new(d(l) + 1, d(m) - 1));
        }
    }
    out.push(Root::new(1, 2 * n - 1));
    for l in 1..k {
        out.push(Root::new(d(l) + 1, 2 * n - d(l) - 1));
    }
    out.sort();
    out.dedup();
    out
}

pub fn is_exceptional(i: u32, j: u32, flag: &FlagType) -> Result<bool> {
    require_in_radical(&Radical::new(flag), i, j)?;
    Ok(!non_exceptional(flag).contains(&Root::new(i, j)))
}

/// One row of the discrepancy table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscrepancyRow {
    pub i: u32,
    pub j: u32,
    pub b: i64,
    pub exceptional: bool,
}

pub fn discrepancy_rows(flag: &FlagType) -> Result<Vec<DiscrepancyRow>> {
    let nonex = non_exceptional(flag);
    let mut rows: Vec<DiscrepancyRow> = discrepancy_table(flag)?
        .into_iter()
        .map(|(r, b)| DiscrepancyRow {
            i: r.i,
            j: r.j,
            b,
            exceptional: !nonex.contains(&r),
        })
        .collect();
    rows.sort_by_key(|r| (r.j, r.i));
    Ok(rows)
}
