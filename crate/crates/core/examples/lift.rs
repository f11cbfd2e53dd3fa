//! Lift a random open-cell flag to the resolution and project it back.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spflag::cli::GeometryDoc;
use spflag::geometry::{in_sp_flag_a, lift, project_pi, random_open_cell_flag};
use spflag::rootsys::FlagType;

fn main() -> spflag::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let flag = FlagType::new(2, vec![1, 2])?;
    let f = random_open_cell_flag(&flag, &mut rng);
    assert!(in_sp_flag_a(&f)?);
    let p = lift(&f)?;
    assert_eq!(project_pi(&p), f);
    for (r, v) in &p.spaces {
        println!("V_{}{}: dim {}", r.i, r.j, v.dim());
    }
    println!("{}", serde_json::to_string_pretty(&GeometryDoc::Resolution(p))?);
    Ok(())
}
