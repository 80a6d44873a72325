use crate::{IsingError, Result};

/// Dense symmetric coupling matrix with zero diagonal.
///
/// Entries are restricted to {-1, 0, +1}: generated instances are fully
/// coupled with ±1 weights, loaded instances may contain zeros. The same
/// storage doubles as the MAX-CUT weight matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CouplingMatrix {
    n: usize,
    entries: Vec<i8>,
}

impl CouplingMatrix {
    /// All-zero couplings.
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: vec![0; n * n],
        }
    }

    /// Build from dense row-major entries, validating shape, symmetry,
    /// zero diagonal and the value range.
    pub fn from_entries(n: usize, entries: Vec<i8>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(IsingError::DimensionMismatch {
                expected: n * n,
                got: entries.len(),
            });
        }
        let m = Self { n, entries };
        for i in 0..n {
            if m.get(i, i) != 0 {
                return Err(IsingError::NonzeroDiagonal(i));
            }
            for j in (i + 1)..n {
                let v = m.get(i, j);
                if !(-1..=1).contains(&v) {
                    return Err(IsingError::InvalidEntry {
                        i,
                        j,
                        value: v as i64,
                    });
                }
                if v != m.get(j, i) {
                    return Err(IsingError::NotSymmetric { i, j });
                }
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[i8] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    /// Set the symmetric pair (i, j) and (j, i). Panics on the diagonal.
    pub fn set_pair(&mut self, i: usize, j: usize, w: i8) {
        assert!(i != j, "diagonal must stay zero");
        debug_assert!((-1..=1).contains(&w));
        self.entries[i * self.n + j] = w;
        self.entries[j * self.n + i] = w;
    }

    /// Entry-wise negation (preserves all invariants).
    pub fn negated(&self) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|v| -v).collect(),
        }
    }

    /// RMS of the off-diagonal entries; 0.0 for the all-zero matrix.
    pub fn off_diagonal_rms(&self) -> f64 {
        if self.n < 2 {
            return 0.0;
        }
        let sum_sq: u64 = self
            .entries
            .iter()
            .map(|&v| (v as i64 * v as i64) as u64)
            .sum();
        (sum_sq as f64 / (self.n * (self.n - 1)) as f64).sqrt()
    }
}

/// MAX-CUT instance: symmetric edge weights with zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxCutInstance {
    weights: CouplingMatrix,
}

impl MaxCutInstance {
    pub fn from_weights(weights: CouplingMatrix) -> Self {
        Self { weights }
    }

    pub fn n(&self) -> usize {
        self.weights.n()
    }

    #[inline]
    pub fn weight(&self, i: usize, j: usize) -> i8 {
        self.weights.get(i, j)
    }

    pub fn weights(&self) -> &CouplingMatrix {
        &self.weights
    }
}

/// Spin assignment; every element is exactly +1 or -1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinVector {
    spins: Vec<i8>,
}

impl SpinVector {
    pub fn new(spins: Vec<i8>) -> Result<Self> {
        for (index, &s) in spins.iter().enumerate() {
            if s != 1 && s != -1 {
                return Err(IsingError::InvalidSpin {
                    index,
                    value: s as i64,
                });
            }
        }
        Ok(Self { spins })
    }

    pub fn all_plus(n: usize) -> Self {
        Self { spins: vec![1; n] }
    }

    pub fn len(&self) -> usize {
        self.spins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spins.is_empty()
    }

    #[inline]
    pub fn get(&self, i: usize) -> i8 {
        self.spins[i]
    }

    pub fn as_slice(&self) -> &[i8] {
        &self.spins
    }

    /// Global spin flip.
    pub fn flipped(&self) -> Self {
        Self {
            spins: self.spins.iter().map(|s| -s).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_asymmetric_and_diagonal() {
        let mut e = vec![0i8; 4];
        e[1] = 1; // (0,1) = 1 but (1,0) = 0
        assert!(matches!(
            CouplingMatrix::from_entries(2, e),
            Err(IsingError::NotSymmetric { .. })
        ));
        let e = vec![1i8, 0, 0, 0];
        assert!(matches!(
            CouplingMatrix::from_entries(2, e),
            Err(IsingError::NonzeroDiagonal(0))
        ));
    }

    #[test]
    fn rejects_bad_spins() {
        assert!(SpinVector::new(vec![1, -1, 1]).is_ok());
        assert!(matches!(
            SpinVector::new(vec![1, 0]),
            Err(IsingError::InvalidSpin { index: 1, .. })
        ));
    }

    #[test]
    fn negation_is_involutive() {
        let mut m = CouplingMatrix::zeros(3);
        m.set_pair(0, 1, 1);
        m.set_pair(1, 2, -1);
        assert_eq!(m.negated().negated(), m);
    }
}
