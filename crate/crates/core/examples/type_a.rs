//! The same machinery for sl_N.

use spflag::charring::weyl_dimension;
use spflag::polytope::dimension;
use spflag::rootsys::{DominantWeight, RootSystem};

fn main() -> spflag::Result<()> {
    for m in 2..=5u32 {
        let system = RootSystem::type_a(m)?;
        for lambda in DominantWeight::all_up_to(m as usize - 1, 2) {
            let d = dimension(&lambda, system)?;
            assert_eq!(d, weyl_dimension(&lambda, system)?);
            println!("{system} {:?}: {d}", lambda.0);
        }
    }
    Ok(())
}
