//! The involution V_i -> V_{2n-i}^perp on complete flags.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spflag::geometry::{cell_flag, random_lower_matrix, random_sp_radical_matrix, sigma_involution};

fn main() -> spflag::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for n in 1..=3 {
        let generic = cell_flag(&random_lower_matrix(2 * n as usize, &mut rng));
        let image = sigma_involution(&generic)?;
        let fixed = cell_flag(&random_sp_radical_matrix(n, &mut rng));
        println!(
            "n = {n}: generic flag fixed {}, sigma^2 = id {}, symplectic cell flag fixed {}",
            image == generic,
            sigma_involution(&image)? == generic,
            sigma_involution(&fixed)? == fixed
        );
    }
    Ok(())
}
