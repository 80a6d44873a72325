use ising_core::{CouplingMatrix, SpinVector};

use crate::fixed::{fixed_to_f64, quantize_round_even, sat_add};
use crate::state::{init_state, OscillatorState, StateData};
use crate::{Result, SbError, SbParams};

/// Force accumulator in the active numeric mode. Fixed16 values are raw
/// Q3.12 held wide; they saturate only when added onto `p`.
#[derive(Debug, Clone, PartialEq)]
pub enum DpVec {
    Real(Vec<f64>),
    Fixed16(Vec<i64>),
}

/// Position force `FX(x_i, h_i) = δt{-(α₀-α)x_i - β₀x_i³ - η h_i}`.
#[inline]
pub fn fx(x: f64, h: f64, alpha: f64, params: &SbParams) -> f64 {
    params.dt_sub * (-(params.alpha0 - alpha) * x - params.beta0 * x * x * x - params.eta * h)
}

/// Momentum force `FP(p_i) = δt·p_i`.
#[inline]
pub fn fp(p: f64, params: &SbParams) -> f64 {
    params.dt_sub * p
}

/// One full TE update of a single oscillator, real mode:
/// `p += Δp`, then `M` sub-steps of `p += FX(x, h); x += FP(p)`.
#[inline]
pub fn te_update(x: &mut f64, p: &mut f64, dp: f64, h: f64, alpha: f64, params: &SbParams) {
    *p += dp;
    for _ in 0..params.m_substeps {
        *p += fx(*x, h, alpha, params);
        *x += fp(*p, params);
    }
}

/// Fixed16 TE update. Force increments are computed in f64 on dequantized
/// values, rounded to the Q3.12 grid (ties to even) and added with
/// saturation — the write-back behavior of a 16-bit register file.
#[inline]
pub fn te_update_fixed(
    x: &mut i16,
    p: &mut i16,
    dp_raw: i64,
    h: f64,
    alpha: f64,
    params: &SbParams,
) {
    *p = sat_add(*p, dp_raw);
    for _ in 0..params.m_substeps {
        let fxv = fx(fixed_to_f64(*x), h, alpha, params);
        *p = sat_add(*p, quantize_round_even(fxv));
        let fpv = fp(fixed_to_f64(*p), params);
        *x = sat_add(*x, quantize_round_even(fpv));
    }
}

/// Coupling force `Δp_i = Δt·γ₀·Σ_j J_ij x_j`.
///
/// Fixed16 mode accumulates the ±x_j column sum in a wide integer (the
/// couplings are 1-bit signs, so the MAC is a sign-select add) and applies
/// the `Δt·γ₀` scale once per row. The integer sum makes the result
/// independent of accumulation order.
pub fn mm_force(j: &CouplingMatrix, state: &OscillatorState, params: &SbParams) -> Result<DpVec> {
    let n = j.n();
    if state.n() != n {
        return Err(SbError::DimensionMismatch {
            expected: n,
            got: state.n(),
        });
    }
    let scale = params.dt_step() * params.gamma0;
    match &state.data {
        StateData::Real { x, .. } => {
            let mut dp = vec![0.0f64; n];
            for (i, out) in dp.iter_mut().enumerate() {
                let row = j.row(i);
                let mut acc = 0.0;
                for (jj, &xj) in x.iter().enumerate() {
                    acc += row[jj] as f64 * xj;
                }
                *out = scale * acc;
            }
            Ok(DpVec::Real(dp))
        }
        StateData::Fixed16 { x, .. } => {
            let mut dp = vec![0i64; n];
            for (i, out) in dp.iter_mut().enumerate() {
                let row = j.row(i);
                let mut acc = 0i64;
                for (jj, &xj) in x.iter().enumerate() {
                    match row[jj] {
                        1 => acc += xj as i64,
                        -1 => acc -= xj as i64,
                        _ => {}
                    }
                }
                // acc is already on the raw Q3.12 grid, so scaling it keeps
                // the grid: round once, ties to even.
                *out = (acc as f64 * scale).round_ties_even() as i64;
            }
            Ok(DpVec::Fixed16(dp))
        }
    }
}

/// Sign binarization of the positions; exact zeros map to +1.
pub fn binarize(state: &OscillatorState) -> SpinVector {
    let spins = match &state.data {
        StateData::Real { x, .. } => x.iter().map(|&v| if v >= 0.0 { 1 } else { -1 }).collect(),
        StateData::Fixed16 { x, .. } => x.iter().map(|&v| if v >= 0 { 1 } else { -1 }).collect(),
    };
    SpinVector::new(spins).expect("binarize produces only ±1")
}

#[derive(Debug, Clone, PartialEq)]
pub struct SbResult {
    pub spins: SpinVector,
    pub final_state: OscillatorState,
    pub per_step_scores: Option<Vec<(u32, i64)>>,
}

/// Run the SB algorithm: per step MM from the current positions, then TE
/// over every oscillator, then the α increment. Deterministic given
/// `(J, params, seed)`.
pub fn run_sb(j: &CouplingMatrix, params: &SbParams, seed: u64) -> Result<SbResult> {
    run_impl(j, params, seed, None)
}

/// Same as [`run_sb`], recording `scorer(binarize(x))` after every step.
pub fn run_sb_scored(
    j: &CouplingMatrix,
    params: &SbParams,
    seed: u64,
    scorer: &mut dyn FnMut(&SpinVector) -> i64,
) -> Result<SbResult> {
    run_impl(j, params, seed, Some(scorer))
}

fn run_impl(
    j: &CouplingMatrix,
    params: &SbParams,
    seed: u64,
    mut scorer: Option<&mut dyn FnMut(&SpinVector) -> i64>,
) -> Result<SbResult> {
    let n = j.n();
    params.validate(n)?;
    let mut state = init_state(n, seed, params);
    let d_alpha = params.alpha_increment();
    let mut scores = scorer.as_ref().map(|_| Vec::new());

    for step in 1..=params.n_sbsteps {
        let dp = mm_force(j, &state, params)?;
        match (&mut state.data, &dp) {
            (StateData::Real { x, p, dp: sdp }, DpVec::Real(f)) => {
                for i in 0..n {
                    te_update(
                        &mut x[i],
                        &mut p[i],
                        f[i],
                        params.bias_at(i),
                        state.alpha,
                        params,
                    );
                }
                sdp.copy_from_slice(f);
                if x.iter().chain(p.iter()).any(|v| !v.is_finite()) {
                    return Err(SbError::NumericFailure { step });
                }
            }
            (StateData::Fixed16 { x, p, dp: sdp }, DpVec::Fixed16(f)) => {
                for i in 0..n {
                    te_update_fixed(
                        &mut x[i],
                        &mut p[i],
                        f[i],
                        params.bias_at(i),
                        state.alpha,
                        params,
                    );
                }
                sdp.copy_from_slice(f);
            }
            _ => unreachable!("state and force modes always agree"),
        }
        state.alpha += d_alpha;
        state.step_index = step;
        if let Some(s) = scorer.as_mut() {
            let spins = binarize(&state);
            scores.as_mut().unwrap().push((step, s(&spins)));
        }
    }

    Ok(SbResult {
        spins: binarize(&state),
        final_state: state,
        per_step_scores: scores,
    })
}
