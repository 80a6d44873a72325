use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::{PartitionError, Result};

/// The two logical ring directions. Data on `RingL` flows toward lower chip
/// indices, data on `RingR` toward higher ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ring {
    L,
    R,
}

impl Ring {
    pub fn opposite(self) -> Ring {
        match self {
            Ring::L => Ring::R,
            Ring::R => Ring::L,
        }
    }

    pub const BOTH: [Ring; 2] = [Ring::L, Ring::R];

    pub fn index(self) -> usize {
        match self {
            Ring::L => 0,
            Ring::R => 1,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ring::L => "L",
            Ring::R => "R",
        })
    }
}

/// One of the `2·P_chip` position subvectors, labeled by owner chip and ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubvectorId {
    pub chip: usize,
    pub ring: Ring,
}

impl SubvectorId {
    pub fn new(chip: usize, ring: Ring) -> Self {
        Self { chip, ring }
    }

    /// Dense index in [0, 2·P_chip): chip-major, L before R.
    pub fn dense(&self) -> usize {
        2 * self.chip + self.ring.index()
    }
}

impl fmt::Display for SubvectorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.chip, self.ring)
    }
}

impl Serialize for SubvectorId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Equal contiguous split of `N` oscillators over `P_chip` chips.
///
/// Chip `c` owns the global index range `[c·P_r, (c+1)·P_r)`; its first half
/// is subvector `(c, L)`, the second `(c, R)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    n: usize,
    p_chip: usize,
}

impl Partition {
    pub fn build(n: usize, p_chip: usize) -> Result<Self> {
        if p_chip == 0 {
            return Err(PartitionError::NoChips);
        }
        if n == 0 || n % (2 * p_chip) != 0 {
            return Err(PartitionError::NotDivisible { n, p_chip });
        }
        Ok(Self { n, p_chip })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p_chip(&self) -> usize {
        self.p_chip
    }

    /// Oscillators per chip, `P_r = N/P_chip`.
    pub fn p_r(&self) -> usize {
        self.n / self.p_chip
    }

    /// Elements per subvector, `N/(2·P_chip)`.
    pub fn sub_len(&self) -> usize {
        self.n / (2 * self.p_chip)
    }

    /// Global index range owned by a chip.
    pub fn chip_range(&self, chip: usize) -> Range<usize> {
        let p_r = self.p_r();
        chip * p_r..(chip + 1) * p_r
    }

    /// Global index range of one subvector.
    pub fn range(&self, sv: SubvectorId) -> Range<usize> {
        let base = sv.chip * self.p_r();
        let half = self.sub_len();
        match sv.ring {
            Ring::L => base..base + half,
            Ring::R => base + half..base + 2 * half,
        }
    }

    pub fn subvectors(&self) -> impl Iterator<Item = SubvectorId> + '_ {
        (0..self.p_chip).flat_map(|c| Ring::BOTH.map(|r| SubvectorId::new(c, r)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contiguous_split_example() {
        let p = Partition::build(8, 2).unwrap();
        assert_eq!(p.p_r(), 4);
        assert_eq!(p.range(SubvectorId::new(0, Ring::L)), 0..2);
        assert_eq!(p.range(SubvectorId::new(0, Ring::R)), 2..4);
        assert_eq!(p.range(SubvectorId::new(1, Ring::L)), 4..6);
        assert_eq!(p.range(SubvectorId::new(1, Ring::R)), 6..8);
    }

    #[test]
    fn rows_per_chip_large() {
        let p = Partition::build(32768, 8).unwrap();
        assert_eq!(p.p_r(), 4096);
        assert_eq!(p.sub_len(), 2048);
    }

    #[test]
    fn divisibility_guard() {
        assert!(matches!(
            Partition::build(10, 2),
            Err(PartitionError::NotDivisible { n: 10, p_chip: 2 })
        ));
        assert!(matches!(Partition::build(8, 0), Err(PartitionError::NoChips)));
    }

    #[test]
    fn ranges_are_disjoint_and_cover() {
        for p_chip in [1, 2, 3, 4, 8] {
            let p = Partition::build(48, p_chip).unwrap();
            let mut seen = vec![false; 48];
            for sv in p.subvectors() {
                for g in p.range(sv) {
                    assert!(!seen[g], "index {g} covered twice");
                    seen[g] = true;
                }
            }
            assert!(seen.iter().all(|&b| b));
        }
    }
}
