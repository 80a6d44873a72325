//! Chip-partitioned simulated bifurcation over a dual-ring topology.
//!
//! The position vector is split into `2·P_chip` subvectors, two per chip
//! (labels like `1L`, `1R`). Every SB step each chip updates its own
//! oscillators, streams its two subvectors onto both rings (the copy on the
//! opposite ring replayed in reversed element order), forwards received
//! subvectors along, and consumes the streams in arrival order into its
//! force accumulators — column-major MAC with every position datum used
//! exactly once.
//!
//! Functionally the partitioned run computes the same trajectory as the
//! monolithic engine; in fixed16 mode the wide-integer force accumulation is
//! order-free, so results are bit-identical for every chip count. The same
//! schedule object drives the cycle-level cluster simulator.

mod engine;
mod error;
mod partition;
mod schedule;

pub use engine::{
    equivalence_check, run_partitioned_sb, run_partitioned_sb_scored, run_with_schedule,
    Divergence, EquivalenceOutcome, EquivalenceReport, StateField,
};
pub use error::PartitionError;
pub use partition::{Partition, Ring, SubvectorId};
pub use schedule::{
    build_ring_schedule, schedule_to_json, stream_columns, ChipRingSchedule, ConsumeEntry,
    ElementOrder, Phase, RingSchedule, SendEntry, SendKind, Source,
};

pub type Result<T> = std::result::Result<T, PartitionError>;
