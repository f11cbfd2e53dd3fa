//! The fixed-point sum against the polytope character at random rational points.
//!
//! cargo run --release --example localization -- 0,1,0

use spflag::fixedpoints::abl_verify;
use spflag::rootsys::DominantWeight;

fn main() -> spflag::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "1,1".into());
    let m: Vec<u32> = arg.split(',').map(|s| s.trim().parse().expect("nonnegative integer")).collect();
    let report = abl_verify(&DominantWeight(m), 5, 0)?;
    println!("{} fixed points, convention {:?}", report.fixed_points, report.convention);
    for p in &report.points {
        println!("  z = {:?} q = {}: {} vs {}", p.z, p.q, p.localization, p.polytope);
    }
    println!("matched: {}", report.matched);
    Ok(())
}
