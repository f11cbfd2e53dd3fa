//! Isotropy transported along the family of forms J_s.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spflag::geometry::{is_j0_isotropic, isotropy_transport_check, random_isotropic, Subspace};
use spflag::rational;

fn main() -> spflag::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let n = 3;
    for k in 0..=n {
        let u = random_isotropic(n, 2, &mut rng)?;
        let s = rational::frac(2, 5);
        println!("k = {k}: transport to J_(s^2) holds {}", isotropy_transport_check(&u, &s, k)?);
    }
    // The limit form only sees the outer blocks.
    let u = Subspace::coordinate(6, [2, 5]);
    println!("span(w2, w5): J isotropic {}, J_0 isotropic for k = 1 {}", u.is_isotropic(), is_j0_isotropic(&u, 1));
    Ok(())
}
