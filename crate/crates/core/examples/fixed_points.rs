//! Torus fixed points of the complete resolution.

use spflag::fixedpoints::{check_admissible, enumerate_fixed_points, local_term};
use spflag::geometry::in_resolution;

fn main() -> spflag::Result<()> {
    for n in 1..=3 {
        let all = enumerate_fixed_points(n);
        for c in &all {
            check_admissible(c)?;
            assert!(in_resolution(&c.realize())?);
        }
        println!("n = {n}: {} admissible collections", all.len());
    }
    let all = enumerate_fixed_points(2);
    let c = &all[5];
    for (r, s) in c.sets() {
        println!("  S_{}{} = {s:?}", r.i, r.j);
    }
    println!("{:?}", local_term(c)?);
    Ok(())
}
