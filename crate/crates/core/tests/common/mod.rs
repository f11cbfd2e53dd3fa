//! Oracles written independently of the library, shared by the test targets.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

fn ratio_product(pairs: impl Iterator<Item = (i64, i64)>) -> u64 {
    let mut acc = BigRational::one();
    for (num, den) in pairs {
        acc *= BigRational::new(BigInt::from(num), BigInt::from(den));
    }
    assert!(acc.is_integer(), "dimension product is not an integer");
    acc.to_integer().to_u64().expect("dimension fits in u64")
}

/// Weyl dimension of the `sp_2n` module with highest weight `sum m_i omega_i`,
/// as a product over `eps_i -+ eps_j` and `2 eps_i`.
pub fn sp_dimension(m: &[u32]) -> u64 {
    let n = m.len();
    // lambda + rho in eps-coordinates, rho = (n, ..., 1).
    let shifted: Vec<i64> = (0..n)
        .map(|i| m[i..].iter().map(|&x| x as i64).sum::<i64>() + (n - i) as i64)
        .collect();
    let rho: Vec<i64> = (0..n).map(|i| (n - i) as i64).collect();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((shifted[i] - shifted[j], rho[i] - rho[j]));
            pairs.push((shifted[i] + shifted[j], rho[i] + rho[j]));
        }
        pairs.push((shifted[i], rho[i]));
    }
    ratio_product(pairs.into_iter())
}

/// Weyl dimension of the `sl_N` module with highest weight `sum m_i omega_i`
/// (`m` has `N - 1` entries).
pub fn sl_dimension(m: &[u32]) -> u64 {
    let big_n = m.len() + 1;
    let shifted: Vec<i64> = (0..big_n)
        .map(|i| m.get(i..).map_or(0, |t| t.iter().map(|&x| x as i64).sum::<i64>()) + (big_n - 1 - i) as i64)
        .collect();
    let mut pairs = Vec::new();
    for i in 0..big_n {
        for j in i + 1..big_n {
            pairs.push((shifted[i] - shifted[j], (j - i) as i64));
        }
    }
    ratio_product(pairs.into_iter())
}

/// All `m` of length `rank` with `sum m_i <= total`.
pub fn weights_up_to(rank: usize, total: u32) -> Vec<Vec<u32>> {
    fn rec(rank: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == rank {
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur.push(v);
            rec(rank, left - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rank, total, &mut Vec::new(), &mut out);
    out
}

/// Runs the command line in-process and returns `(exit code, stdout, stderr)`.
pub fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("spflag").chain(args.iter().copied());
    let code = spflag::cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("utf-8 stdout"),
        String::from_utf8(err).expect("utf-8 stderr"),
    )
}
