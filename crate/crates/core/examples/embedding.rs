//! Symplectic polytope points read as points of the sl_2n polytope.

use spflag::polytope::{lattice_points, phi_point_embed, polytope_spec};
use spflag::rootsys::{DominantWeight, RootSystem};

fn main() -> spflag::Result<()> {
    let n = 2;
    let lambda = DominantWeight(vec![1, 1]);
    let spec = polytope_spec(&lambda, RootSystem::type_c(n)?)?;
    let pts = lattice_points(&spec);
    for p in pts.iter().take(5) {
        let (a_spec, image) = phi_point_embed(p, &lambda, n)?;
        println!("{:?} -> {:?} in {}", p.0, image.0, a_spec.system);
    }
    println!("all {} points embed", pts.iter().filter(|p| phi_point_embed(p, &lambda, n).is_ok()).count());
    Ok(())
}
