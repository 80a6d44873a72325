use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{CouplingMatrix, IsingError, MaxCutInstance, Result};

/// Generate a fully coupled MAX-CUT instance with ±1 weights.
///
/// Every unordered pair {i, j} receives a weight drawn uniformly from
/// {-1, +1}. The stream comes from a ChaCha8 generator seeded with `seed`,
/// so equal `(n, seed)` reproduce the instance bit-for-bit on any platform.
pub fn generate_maxcut(n: usize, seed: u64) -> Result<MaxCutInstance> {
    if n < 2 {
        return Err(IsingError::TooFewNodes(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut weights = CouplingMatrix::zeros(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let w = if rng.gen::<bool>() { 1 } else { -1 };
            weights.set_pair(i, j, w);
        }
    }
    Ok(MaxCutInstance::from_weights(weights))
}
