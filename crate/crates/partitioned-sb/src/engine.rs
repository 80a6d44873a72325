//! Partitioned SB execution: per step, each chip updates its own
//! oscillators with the forces staged from the previous step, then consumes
//! both ring streams in schedule order to accumulate the next forces.
//!
//! Chips execute as a sequential round-robin here; only timing depends on
//! actual concurrency, never values, so this is the reference execution.

use ising_core::{CouplingMatrix, SpinVector};
use sb_engine::{
    binarize, init_state, te_update, te_update_fixed, NumericMode, OscillatorState, SbParams,
    SbResult, StateData,
};

use crate::partition::{Partition, Ring};
use crate::schedule::{build_ring_schedule, stream_columns, RingSchedule};
use crate::{PartitionError, Result};

/// Run the partitioned algorithm with `p_chip` logical chips.
///
/// The initial momenta come from the same single MT19937 stream as the
/// monolithic engine, scattered by the (contiguous) partition, so runs with
/// different chip counts start from identical conditions.
pub fn run_partitioned_sb(
    j: &CouplingMatrix,
    params: &SbParams,
    p_chip: usize,
    seed: u64,
) -> Result<SbResult> {
    let partition = Partition::build(j.n(), p_chip)?;
    let schedule = build_ring_schedule(&partition);
    run_observed(j, params, seed, &partition, &schedule, None, None)
}

/// Like [`run_partitioned_sb`], recording `scorer(binarize(x))` per step.
pub fn run_partitioned_sb_scored(
    j: &CouplingMatrix,
    params: &SbParams,
    p_chip: usize,
    seed: u64,
    scorer: &mut dyn FnMut(&SpinVector) -> i64,
) -> Result<SbResult> {
    let partition = Partition::build(j.n(), p_chip)?;
    let schedule = build_ring_schedule(&partition);
    run_observed(j, params, seed, &partition, &schedule, None, Some(scorer))
}

/// Run with an explicit schedule. The schedule is trusted as-is; tests use
/// this to inject corrupted schedules and watch the divergence reporting.
pub fn run_with_schedule(
    j: &CouplingMatrix,
    params: &SbParams,
    seed: u64,
    partition: &Partition,
    schedule: &RingSchedule,
) -> Result<SbResult> {
    run_observed(j, params, seed, partition, schedule, None, None)
}

type Observer<'a> = &'a mut dyn FnMut(u32, &OscillatorState);

pub(crate) fn run_observed(
    j: &CouplingMatrix,
    params: &SbParams,
    seed: u64,
    partition: &Partition,
    schedule: &RingSchedule,
    mut observer: Option<Observer<'_>>,
    mut scorer: Option<&mut dyn FnMut(&SpinVector) -> i64>,
) -> Result<SbResult> {
    let n = j.n();
    params.validate(n)?;
    let p_chip = partition.p_chip();
    let p_r = partition.p_r();
    let scale = params.dt_step() * params.gamma0;
    let d_alpha = params.alpha_increment();
    let mut state = init_state(n, seed, params);
    let mut scores = scorer.as_ref().map(|_| Vec::new());

    // Per-ring accumulator banks, merged and scaled once per step.
    match &mut state.data {
        StateData::Real { x, p, dp } => {
            let mut staged = vec![0.0f64; n];
            let mut acc = vec![[0.0f64; 2]; n];
            for step in 1..=params.n_sbsteps {
                std::mem::swap(&mut staged, dp);
                for chip in 0..p_chip {
                    let base = chip * p_r;
                    for r in 0..p_r {
                        let g = base + r;
                        te_update(
                            &mut x[g],
                            &mut p[g],
                            staged[g],
                            params.bias_at(g),
                            state.alpha,
                            params,
                        );
                    }
                }
                for a in acc.iter_mut() {
                    *a = [0.0, 0.0];
                }
                for chip in 0..p_chip {
                    let base = chip * p_r;
                    for ring in Ring::BOTH {
                        let bank = ring.index();
                        for entry in &schedule.chip_ring(chip, ring).consume {
                            for col in stream_columns(partition, entry) {
                                let xj = x[col];
                                for r in 0..p_r {
                                    acc[base + r][bank] += j.get(base + r, col) as f64 * xj;
                                }
                            }
                        }
                    }
                }
                for g in 0..n {
                    dp[g] = scale * (acc[g][0] + acc[g][1]);
                }
                state.alpha += d_alpha;
                state.step_index = step;
                if x.iter().chain(p.iter()).any(|v| !v.is_finite()) {
                    return Err(PartitionError::Engine(sb_engine::SbError::NumericFailure {
                        step,
                    }));
                }
                observe(&mut observer, &mut scorer, &mut scores, step, &state);
            }
        }
        StateData::Fixed16 { x, p, dp } => {
            let mut staged = vec![0i64; n];
            let mut acc = vec![[0i64; 2]; n];
            for step in 1..=params.n_sbsteps {
                std::mem::swap(&mut staged, dp);
                for chip in 0..p_chip {
                    let base = chip * p_r;
                    for r in 0..p_r {
                        let g = base + r;
                        te_update_fixed(
                            &mut x[g],
                            &mut p[g],
                            staged[g],
                            params.bias_at(g),
                            state.alpha,
                            params,
                        );
                    }
                }
                for a in acc.iter_mut() {
                    *a = [0, 0];
                }
                for chip in 0..p_chip {
                    let base = chip * p_r;
                    for ring in Ring::BOTH {
                        let bank = ring.index();
                        for entry in &schedule.chip_ring(chip, ring).consume {
                            for col in stream_columns(partition, entry) {
                                let xj = x[col] as i64;
                                for r in 0..p_r {
                                    match j.get(base + r, col) {
                                        1 => acc[base + r][bank] += xj,
                                        -1 => acc[base + r][bank] -= xj,
                                        _ => {}
                                    }
                                }
                            }
                        }
                    }
                }
                for g in 0..n {
                    dp[g] = ((acc[g][0] + acc[g][1]) as f64 * scale).round_ties_even() as i64;
                }
                state.alpha += d_alpha;
                state.step_index = step;
                observe(&mut observer, &mut scorer, &mut scores, step, &state);
            }
        }
    }

    Ok(SbResult {
        spins: binarize(&state),
        final_state: state,
        per_step_scores: scores,
    })
}

fn observe(
    observer: &mut Option<Observer<'_>>,
    scorer: &mut Option<&mut dyn FnMut(&SpinVector) -> i64>,
    scores: &mut Option<Vec<(u32, i64)>>,
    step: u32,
    state: &OscillatorState,
    _j: &CouplingMatrix,
) -> Result<()> {
    if let Some(obs) = observer.as_mut() {
        obs(step, state);
    }
    if let Some(s) = scorer.as_mut() {
        let spins = binarize(state);
        scores.as_mut().unwrap().push((step, s(&spins)));
    }
    Ok(())
}

/// Which state component first diverged.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateField {
    Position,
    Momentum,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divergence {
    pub p_chip_a: usize,
    pub p_chip_b: usize,
    pub step: u32,
    pub oscillator: usize,
    pub field: StateField,
    pub value_a: i16,
    pub value_b: i16,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquivalenceOutcome {
    AllIdentical,
    Diverged(Divergence),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub p_chips: Vec<usize>,
    pub steps: u32,
    pub outcome: EquivalenceOutcome,
}

impl EquivalenceReport {
    pub fn is_identical(&self) -> bool {
        matches!(self.outcome, EquivalenceOutcome::AllIdentical)
    }
}

type Trajectory = Vec<(Vec<i16>, Vec<i16>)>;

fn capture_trajectory(
    j: &CouplingMatrix,
    params: &SbParams,
    seed: u64,
    partition: &Partition,
    schedule: &RingSchedule,
) -> Result<Trajectory> {
    let mut traj = Vec::with_capacity(params.n_sbsteps as usize);
    let mut obs = |_step: u32, state: &OscillatorState| {
        if let StateData::Fixed16 { x, p, .. } = &state.data {
            traj.push((x.clone(), p.clone()));
        }
    };
    run_observed(j, params, seed, partition, schedule, Some(&mut obs), None)?;
    Ok(traj)
}

/// Run the partitioned solver for every chip count in `p_chip_list` and
/// check that the per-step states are bit-identical across all of them.
/// Requires fixed16 mode, where the wide-accumulator MM makes the force sums
/// order-free. On failure the report pinpoints the first divergent step and
/// oscillator rather than raising an error.
pub fn equivalence_check(
    j: &CouplingMatrix,
    params: &SbParams,
    seed: u64,
    p_chip_list: &[usize],
) -> Result<EquivalenceReport> {
    if params.numeric_mode != NumericMode::Fixed16 {
        return Err(PartitionError::NotFixed16);
    }
    let (&first, rest) = p_chip_list.split_first().ok_or(PartitionError::EmptyChipList)?;

    let run_one = |p_chip: usize| -> Result<Trajectory> {
        let partition = Partition::build(j.n(), p_chip)?;
        let schedule = build_ring_schedule(&partition);
        capture_trajectory(j, params, seed, &partition, &schedule)
    };

    let reference = run_one(first)?;
    for &p_chip in rest {
        let other = run_one(p_chip)?;
        if let Some(d) = first_divergence(first, &reference, p_chip, &other) {
            return Ok(EquivalenceReport {
                p_chips: p_chip_list.to_vec(),
                steps: params.n_sbsteps,
                outcome: EquivalenceOutcome::Diverged(d),
            });
        }
    }
    Ok(EquivalenceReport {
        p_chips: p_chip_list.to_vec(),
        steps: params.n_sbsteps,
        outcome: EquivalenceOutcome::AllIdentical,
    })
}

fn first_divergence(
    pa: usize,
    a: &Trajectory,
    pb: usize,
    b: &Trajectory,
) -> Option<Divergence> {
    for (step, ((xa, pa_vec), (xb, pb_vec))) in a.iter().zip(b).enumerate() {
        for i in 0..xa.len() {
            if xa[i] != xb[i] {
                return Some(Divergence {
                    p_chip_a: pa,
                    p_chip_b: pb,
                    step: step as u32 + 1,
                    oscillator: i,
                    field: StateField::Position,
                    value_a: xa[i],
                    value_b: xb[i],
                });
            }
            if pa_vec[i] != pb_vec[i] {
                return Some(Divergence {
                    p_chip_a: pa,
                    p_chip_b: pb,
                    step: step as u32 + 1,
                    oscillator: i,
                    field: StateField::Momentum,
                    value_a: pa_vec[i],
                    value_b: pb_vec[i],
                });
            }
        }
    }
    None
}

/// Compare the final (x, p, spins) of two results bit-exactly (fixed16).
pub fn states_bit_identical(a: &SbResult, b: &SbResult) -> bool {
    match (&a.final_state.data, &b.final_state.data) {
        (
            StateData::Fixed16 { x: xa, p: pa, .. },
            StateData::Fixed16 { x: xb, p: pb, .. },
        ) => xa == xb && pa == pb && a.spins == b.spins,
        _ => false,
    }
}
