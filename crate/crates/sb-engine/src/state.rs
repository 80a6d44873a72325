use rand_mt::Mt19937GenRand32;

use crate::fixed::{fixed_from_f64, fixed_to_f64};
use crate::{NumericMode, SbParams};

/// Per-oscillator state in one of the two numeric modes.
///
/// `dp` is the force accumulator. In fixed16 mode it is kept in a wide
/// integer (values on the Q3.12 grid, range well beyond 16 bits) so the MM
/// accumulation never saturates mid-sum; saturation happens only when the
/// value is added onto `p`.
#[derive(Debug, Clone, PartialEq)]
pub enum StateData {
    Real {
        x: Vec<f64>,
        p: Vec<f64>,
        dp: Vec<f64>,
    },
    Fixed16 {
        x: Vec<i16>,
        p: Vec<i16>,
        dp: Vec<i64>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct OscillatorState {
    pub data: StateData,
    pub alpha: f64,
    pub step_index: u32,
}

impl OscillatorState {
    pub fn n(&self) -> usize {
        match &self.data {
            StateData::Real { x, .. } => x.len(),
            StateData::Fixed16 { x, .. } => x.len(),
        }
    }

    pub fn mode(&self) -> NumericMode {
        match &self.data {
            StateData::Real { .. } => NumericMode::Real,
            StateData::Fixed16 { .. } => NumericMode::Fixed16,
        }
    }

    /// Position i as f64 (dequantized in fixed16 mode).
    pub fn x_f64(&self, i: usize) -> f64 {
        match &self.data {
            StateData::Real { x, .. } => x[i],
            StateData::Fixed16 { x, .. } => fixed_to_f64(x[i]),
        }
    }

    /// Momentum i as f64 (dequantized in fixed16 mode).
    pub fn p_f64(&self, i: usize) -> f64 {
        match &self.data {
            StateData::Real { p, .. } => p[i],
            StateData::Fixed16 { p, .. } => fixed_to_f64(p[i]),
        }
    }
}

/// Initial oscillator state: `x = 0`, momenta i.i.d. uniform on
/// [-0.1, +0.1] from an MT19937 stream.
///
/// The generator is pinned to MT19937 (seeded with the two 32-bit halves of
/// `seed` via the reference key-array procedure) so that state streams are
/// reproducible across implementations. In fixed16 mode the drawn reals are
/// rounded to the Q3.12 grid, ties to even.
pub fn init_state(n: usize, seed: u64, params: &SbParams) -> OscillatorState {
    let mut rng = Mt19937GenRand32::new_with_key([seed as u32, (seed >> 32) as u32]);
    let mut draw = || {
        let u = rng.next_u32() as f64 / 4294967296.0; // [0, 1)
        -0.1 + 0.2 * u
    };
    let data = match params.numeric_mode {
        NumericMode::Real => StateData::Real {
            x: vec![0.0; n],
            p: (0..n).map(|_| draw()).collect(),
            dp: vec![0.0; n],
        },
        NumericMode::Fixed16 => StateData::Fixed16 {
            x: vec![0; n],
            p: (0..n).map(|_| fixed_from_f64(draw())).collect(),
            dp: vec![0; n],
        },
    };
    OscillatorState {
        data,
        alpha: params.alpha_start,
        step_index: 0,
    }
}
