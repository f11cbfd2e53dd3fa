//! The Weyl character in epsilon-coordinates, for type C and type A.

use spflag::charring::weyl_character;
use spflag::rational;
use spflag::rootsys::{DominantWeight, RootSystem};

fn main() -> spflag::Result<()> {
    for (system, m) in [
        (RootSystem::type_c(2)?, vec![0, 1]),
        (RootSystem::type_a(3)?, vec![1, 1]),
    ] {
        let ch = weyl_character(&DominantWeight(m.clone()), system)?;
        println!("{system} lambda = {m:?}: {} weights", ch.len());
        for (mono, c) in ch.terms() {
            println!("  {:?} x {}", mono.z, rational::format(c));
        }
    }
    Ok(())
}
