use thiserror::Error;

#[derive(Debug, Error)]
pub enum PartitionError {
    #[error("invalid partition: n = {n} must be divisible by 2·p_chip = {}", 2 * p_chip)]
    NotDivisible { n: usize, p_chip: usize },

    #[error("invalid partition: p_chip must be >= 1")]
    NoChips,

    #[error("equivalence check requires fixed16 numeric mode")]
    NotFixed16,

    #[error("equivalence check needs at least one chip count")]
    EmptyChipList,

    #[error(transparent)]
    Engine(#[from] sb_engine::SbError),
}
