//! Adiabatic simulated-bifurcation (SB) solver.
//!
//! The solver evolves one oscillator (position `x_i`, momentum `p_i`) per
//! spin. Each SB step computes the coupling forces `Δp = Δt γ₀ J x` (MM),
//! then advances every oscillator through `M` sub-steps of symplectic Euler
//! updates (TE), while the linear-potential coefficient `α` ramps from
//! `α(0)` to its final value. Binarizing the final positions yields spins.
//!
//! Two numeric modes are supported:
//!
//! * `Real` — plain f64 with a fixed evaluation order, so runs are exactly
//!   reproducible.
//! * `Fixed16` — positions and momenta live on a signed 16-bit Q3.12 grid
//!   with saturation at state write-back, while MM accumulates the ±x column
//!   sums in a wide integer and applies the `Δt γ₀` scale once per row.
//!   Integer accumulation makes the force sums order-independent, which the
//!   partitioned engine relies on for bit-exact cross-partition agreement.

mod engine;
mod error;
mod fixed;
mod params;
mod state;

pub use engine::{
    binarize, fp, fx, mm_force, run_sb, run_sb_scored, te_update, te_update_fixed, DpVec, SbResult,
};
pub use error::SbError;
pub use fixed::{fixed_from_f64, fixed_to_f64, quantize_round_even, FIXED_ONE, FRAC_BITS};
pub use params::{NumericMode, SbParams, SbParamsFile};
pub use state::{init_state, OscillatorState, StateData};

pub type Result<T> = std::result::Result<T, SbError>;
