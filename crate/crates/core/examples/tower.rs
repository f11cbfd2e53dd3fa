//! Points of the resolution built fiber by fiber, and the divisors Z_{i,j}.

use spflag::geometry::{in_open_cell, in_resolution, tower_point, FiberChoice};
use spflag::rational;
use spflag::rootsys::{positive_roots, RootSystem};

fn main() -> spflag::Result<()> {
    let n = 2;
    let generic = |_| FiberChoice::Line(rational::int(1), rational::frac(3, 7));
    let p = tower_point(n, generic)?;
    println!("generic point: in resolution {}, open cell {}", in_resolution(&p)?, in_open_cell(&p));
    for target in positive_roots(RootSystem::type_c(n)?) {
        let p = tower_point(n, |r| if r == target { FiberChoice::Section } else { generic(r) })?;
        println!("section at {target}: open cell {}", in_open_cell(&p));
    }
    Ok(())
}
