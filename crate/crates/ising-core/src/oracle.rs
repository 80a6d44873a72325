use crate::{IsingError, MaxCutInstance, Result, SpinVector};

/// Largest instance `brute_force_maxcut` will accept.
pub const BRUTE_FORCE_MAX_N: usize = 24;

/// Exact MAX-CUT optimum by exhaustive enumeration.
///
/// Walks all `2^(n-1)` assignments (spin 0 pinned to +1; the cut is
/// invariant under a global flip) in Gray-code order, maintaining the cut
/// incrementally so each assignment costs O(n).
pub fn brute_force_maxcut(w: &MaxCutInstance) -> Result<(i64, SpinVector)> {
    let n = w.n();
    if n < 2 {
        return Err(IsingError::TooFewNodes(n));
    }
    if n > BRUTE_FORCE_MAX_N {
        return Err(IsingError::TooLarge {
            max: BRUTE_FORCE_MAX_N,
            got: n,
        });
    }

    let mut spins = vec![1i8; n];
    let mut cut = 0i64; // all spins on one side
    let mut best_cut = cut;
    let mut best = spins.clone();

    let total = 1u64 << (n - 1);
    for idx in 1..total {
        // Gray code: bit b toggles between idx-1 and idx; bit b drives spin b+1.
        let k = idx.trailing_zeros() as usize + 1;
        let mut delta = 0i64;
        for j in 0..n {
            if j != k {
                let wkj = w.weight(k, j) as i64;
                if spins[k] == spins[j] {
                    delta += wkj;
                } else {
                    delta -= wkj;
                }
            }
        }
        spins[k] = -spins[k];
        cut += delta;
        if cut > best_cut {
            best_cut = cut;
            best = spins.clone();
        }
    }

    Ok((best_cut, SpinVector::new(best)?))
}
