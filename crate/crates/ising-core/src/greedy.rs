use crate::{cut_value, IsingError, MaxCutInstance, Result, SpinVector};

/// Deterministic Sahni–Gonzalez greedy MAX-CUT baseline.
///
/// Nodes 0 and 1 seed the two sides; each remaining node is taken in index
/// order and placed on the side that maximizes the incremental cut over the
/// already-placed nodes. Ties go to side A (+1). The construction is fully
/// deterministic, which the regression tests rely on.
pub fn sahni_gonzalez(w: &MaxCutInstance) -> Result<(i64, SpinVector)> {
    let n = w.n();
    if n < 2 {
        return Err(IsingError::TooFewNodes(n));
    }

    let mut spins = vec![0i8; n];
    spins[0] = 1;
    spins[1] = -1;
    for k in 2..n {
        // Placing k on side A cuts its edges to placed B nodes, and vice versa.
        let mut gain_a = 0i64;
        let mut gain_b = 0i64;
        for j in 0..k {
            let wkj = w.weight(k, j) as i64;
            if spins[j] == -1 {
                gain_a += wkj;
            } else {
                gain_b += wkj;
            }
        }
        spins[k] = if gain_a >= gain_b { 1 } else { -1 };
    }

    let s = SpinVector::new(spins)?;
    let cut = cut_value(w, &s)?;
    Ok((cut, s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{brute_force_maxcut, generate_maxcut, CouplingMatrix};

    #[test]
    fn two_node_edge() {
        let mut m = CouplingMatrix::zeros(2);
        m.set_pair(0, 1, 1);
        let (cut, _) = sahni_gonzalez(&MaxCutInstance::from_weights(m)).unwrap();
        assert_eq!(cut, 1);
    }

    #[test]
    fn triangle_reaches_optimum() {
        let mut m = CouplingMatrix::zeros(3);
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            m.set_pair(i, j, 1);
        }
        let (cut, _) = sahni_gonzalez(&MaxCutInstance::from_weights(m)).unwrap();
        assert_eq!(cut, 2);
    }

    #[test]
    fn bounded_by_brute_force_optimum() {
        for seed in 0..20 {
            let n = 8 + (seed as usize % 9); // 8..=16
            let w = generate_maxcut(n, seed).unwrap();
            let (greedy, _) = sahni_gonzalez(&w).unwrap();
            let (opt, _) = brute_force_maxcut(&w).unwrap();
            assert!(
                greedy <= opt,
                "greedy {greedy} exceeds optimum {opt} on n={n} seed={seed}"
            );
        }
    }

    #[test]
    fn deterministic() {
        let w = generate_maxcut(32, 9).unwrap();
        assert_eq!(sahni_gonzalez(&w).unwrap(), sahni_gonzalez(&w).unwrap());
    }
}
