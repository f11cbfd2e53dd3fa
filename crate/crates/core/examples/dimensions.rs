//! Lattice-point counts against the Weyl dimension formula.
//!
//! cargo run --example dimensions -- 3

use spflag::charring::weyl_dimension;
use spflag::polytope::dimension;
use spflag::rootsys::{DominantWeight, RootSystem};

fn main() -> spflag::Result<()> {
    let n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let system = RootSystem::type_c(n)?;
    println!("{system}, total degree <= 2");
    println!("{:<14} {:>8} {:>8}", "lambda", "|S|", "weyl");
    for lambda in DominantWeight::all_up_to(n as usize, 2) {
        let points = dimension(&lambda, system)?;
        let weyl = weyl_dimension(&lambda, system)?;
        println!("{:<14} {points:>8} {weyl:>8}", format!("{:?}", lambda.0));
        assert_eq!(points, weyl);
    }
    Ok(())
}
