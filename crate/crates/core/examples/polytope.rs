//! Dyck-path inequalities and the lattice points they cut out.

use spflag::polytope::{dyck_paths, lattice_points, polytope_spec};
use spflag::rootsys::{DominantWeight, RootSystem};

fn main() -> spflag::Result<()> {
    let system = RootSystem::type_c(2)?;
    let lambda = DominantWeight(vec![1, 1]);
    println!("{} Dyck paths in {system}", dyck_paths(system).len());
    let spec = polytope_spec(&lambda, system)?;
    for q in &spec.inequalities {
        let lhs: Vec<String> = q.support.iter().map(|r| format!("s_{}{}", r.i, r.j)).collect();
        println!("  {} <= {}", lhs.join(" + "), q.bound);
    }
    let roots: Vec<String> = spec.roots.iter().map(|r| r.to_string()).collect();
    println!("coordinates: {}", roots.join(" "));
    let pts = lattice_points(&spec);
    for p in &pts {
        println!("  {:?}", p.0);
    }
    println!("{} points", pts.len());
    Ok(())
}
