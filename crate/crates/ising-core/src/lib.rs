//! Ising / MAX-CUT problem kernel: dense ±1 coupling matrices, instance
//! generation, exact integer scoring, and small-instance oracles.
//!
//! The Ising energy is `E(s) = -1/2 ΣΣ J_ij s_i s_j` over spins `s_i ∈ {±1}`
//! with a symmetric, zero-diagonal coupling matrix `J`. Minimizing `E` with
//! `J = -w` is equivalent to maximizing the cut of the weighted graph `w`;
//! both objectives are evaluated in exact integer arithmetic here so that
//! solver outputs can be checked against enumeration oracles bit-for-bit.

mod error;
mod generate;
mod greedy;
mod io;
mod oracle;
mod score;
mod types;

pub use error::IsingError;
pub use generate::generate_maxcut;
pub use greedy::sahni_gonzalez;
pub use io::{read_edge_list, read_json, write_edge_list, write_json, InstanceJson};
pub use oracle::{brute_force_maxcut, BRUTE_FORCE_MAX_N};
pub use score::{cut_value, ising_energy, maxcut_to_ising};
pub use types::{CouplingMatrix, MaxCutInstance, SpinVector};

pub type Result<T> = std::result::Result<T, IsingError>;
