//! The PBW-graded character of one module, grouped by degree.
//!
//! cargo run --example q_character -- 1,1

use spflag::polytope::graded_character;
use spflag::rootsys::{DominantWeight, RootSystem};

fn main() -> spflag::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "1,1".into());
    let m: Vec<u32> = arg.split(',').map(|s| s.trim().parse().expect("nonnegative integer")).collect();
    let system = RootSystem::type_c(m.len() as u32)?;
    let ch = graded_character(&DominantWeight(m), system)?;
    for d in 0..=ch.max_degree() {
        let terms: Vec<String> = ch
            .terms
            .iter()
            .filter(|((q, _), _)| *q == d)
            .map(|((_, w), mult)| if *mult == 1 { format!("{:?}", w.0) } else { format!("{mult}*{:?}", w.0) })
            .collect();
        println!("q^{d}: {} weights  {}", terms.len(), terms.join(" "));
    }
    println!("dimension {}", ch.dimension());
    Ok(())
}
