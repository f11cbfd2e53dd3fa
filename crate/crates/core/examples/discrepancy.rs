//! Discrepancy coefficients for every flag type of sp_2n.
//!
//! cargo run --example discrepancy -- 3

use spflag::bundles::{discrepancy_rows, verify_canonical_identity};
use spflag::rootsys::FlagType;

fn main() -> spflag::Result<()> {
    let n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    for flag in FlagType::all(n) {
        let rows = discrepancy_rows(&flag)?;
        let exc: Vec<String> = rows
            .iter()
            .filter(|r| r.exceptional)
            .map(|r| format!("({},{}):{}", r.i, r.j, r.b))
            .collect();
        let holds = verify_canonical_identity(&flag)?.holds;
        println!("d = {flag:<10} |P_d| = {:<3} identity {holds}  exceptional {}", rows.len(), exc.join(" "));
    }
    Ok(())
}
