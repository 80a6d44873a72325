//! Independent oracles for the SB engine: re-evaluated force expressions,
//! double-loop MM sums, an explicit symplectic-Euler reference stepper, and
//! ground-state checks against exhaustive enumeration.

use ising_core::{
    brute_force_maxcut, cut_value, generate_maxcut, maxcut_to_ising, CouplingMatrix,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sb_engine::{
    binarize, fp, fx, init_state, mm_force, run_sb, te_update, DpVec, NumericMode, SbParams,
    StateData,
};

fn real_params(j: &CouplingMatrix, steps: u32) -> SbParams {
    SbParams::defaults_for(j, steps, NumericMode::Real)
}

#[test]
fn fx_odd_at_origin_and_linear_term_vanishing() {
    let j = CouplingMatrix::zeros(2);
    let params = real_params(&j, 1);
    assert_eq!(fx(0.0, 0.0, 0.3, &params), 0.0);
    // At α = α₀ only the cubic term survives.
    let x = 0.7;
    let got = fx(x, 0.0, params.alpha0, &params);
    assert!((got - (-params.dt_sub * params.beta0 * x * x * x)).abs() < 1e-15);
}

#[test]
fn fx_matches_symbolic_reevaluation() {
    // Independent evaluation: same formula, different factoring and powi.
    let j = CouplingMatrix::zeros(2);
    let mut params = real_params(&j, 1);
    params.eta = 0.37;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let x: f64 = rng.gen_range(-2.0..2.0);
        let h: f64 = rng.gen_range(-1.0..1.0);
        let alpha: f64 = rng.gen_range(0.0..1.0);
        let reference = params.dt_sub
            * (x.mul_add(alpha - params.alpha0, -params.beta0 * x.powi(3)) - params.eta * h);
        assert!((fx(x, h, alpha, &params) - reference).abs() < 1e-14);
    }
}

#[test]
fn fp_is_dt_times_p() {
    let j = CouplingMatrix::zeros(2);
    let mut params = real_params(&j, 1);
    assert_eq!(fp(0.0, &params), 0.0);
    params.dt_sub = 1.0;
    assert_eq!(fp(0.5, &params), 0.5);
    params.dt_sub = 0.5;
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..100 {
        let p: f64 = rng.gen_range(-3.0..3.0);
        assert_eq!(fp(p, &params), 0.5 * p);
    }
}

#[test]
fn mm_force_zero_cases() {
    let w = generate_maxcut(16, 0).unwrap();
    let j = maxcut_to_ising(&w);
    for mode in [NumericMode::Real, NumericMode::Fixed16] {
        let params = SbParams::defaults_for(&j, 1, mode);
        // x = 0 at init, so forces vanish at the origin.
        let state = init_state(16, 1, &params);
        match mm_force(&j, &state, &params).unwrap() {
            DpVec::Real(v) => assert!(v.iter().all(|&d| d == 0.0)),
            DpVec::Fixed16(v) => assert!(v.iter().all(|&d| d == 0)),
        }
    }
    // Zero couplings give zero force regardless of x.
    let zero = CouplingMatrix::zeros(16);
    let params = SbParams::defaults_for(&zero, 1, NumericMode::Real);
    let mut state = init_state(16, 1, &params);
    if let StateData::Real { x, .. } = &mut state.data {
        x.iter_mut().for_each(|v| *v = 0.5);
    }
    match mm_force(&zero, &state, &params).unwrap() {
        DpVec::Real(v) => assert!(v.iter().all(|&d| d == 0.0)),
        _ => unreachable!(),
    }
}

#[test]
fn mm_force_matches_double_loop_oracle() {
    let w = generate_maxcut(32, 5).unwrap();
    let j = maxcut_to_ising(&w);

    // Real mode: loop written independently; tolerance covers reordering.
    let params = real_params(&j, 1);
    let mut state = init_state(32, 7, &params);
    if let StateData::Real { x, p, .. } = &mut state.data {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for i in 0..32 {
            x[i] = rng.gen_range(-1.0..1.0);
            p[i] = 0.0;
        }
    }
    let scale = params.dt_step() * params.gamma0;
    let DpVec::Real(dp) = mm_force(&j, &state, &params).unwrap() else {
        unreachable!()
    };
    for i in 0..32 {
        let mut acc = 0.0;
        for k in 0..32 {
            acc += j.get(i, k) as f64 * state.x_f64(k);
        }
        let rel = (dp[i] - scale * acc).abs() / (scale * acc).abs().max(1e-30);
        assert!(rel < 1e-12, "row {i}: {} vs {}", dp[i], scale * acc);
    }

    // Fixed16 mode: exact equality against an integer double loop.
    let params = SbParams::defaults_for(&j, 1, NumericMode::Fixed16);
    let mut state = init_state(32, 7, &params);
    if let StateData::Fixed16 { x, .. } = &mut state.data {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for v in x.iter_mut() {
            *v = rng.gen_range(-4096..4096);
        }
    }
    let DpVec::Fixed16(dp) = mm_force(&j, &state, &params).unwrap() else {
        unreachable!()
    };
    let StateData::Fixed16 { x, .. } = &state.data else {
        unreachable!()
    };
    for i in 0..32 {
        let mut acc = 0i64;
        for k in 0..32 {
            acc += j.get(i, k) as i64 * x[k] as i64;
        }
        let expect = (acc as f64 * scale).round_ties_even() as i64;
        assert_eq!(dp[i], expect, "row {i}");
    }
}

#[test]
fn fixed16_mm_is_order_independent() {
    // Accumulating columns in reverse order must give bit-identical forces.
    let w = generate_maxcut(24, 9).unwrap();
    let j = maxcut_to_ising(&w);
    let params = SbParams::defaults_for(&j, 1, NumericMode::Fixed16);
    let mut state = init_state(24, 3, &params);
    if let StateData::Fixed16 { x, .. } = &mut state.data {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for v in x.iter_mut() {
            *v = rng.gen_range(i16::MIN..=i16::MAX);
        }
    }
    let DpVec::Fixed16(dp) = mm_force(&j, &state, &params).unwrap() else {
        unreachable!()
    };
    let StateData::Fixed16 { x, .. } = &state.data else {
        unreachable!()
    };
    let scale = params.dt_step() * params.gamma0;
    for i in 0..24 {
        let mut acc = 0i64;
        for k in (0..24).rev() {
            match j.get(i, k) {
                1 => acc += x[k] as i64,
                -1 => acc -= x[k] as i64,
                _ => {}
            }
        }
        assert_eq!(dp[i], (acc as f64 * scale).round_ties_even() as i64);
    }
}

#[test]
fn zero_steps_yields_all_plus_spins() {
    let w = generate_maxcut(8, 2).unwrap();
    let j = maxcut_to_ising(&w);
    let params = real_params(&j, 0);
    let r = run_sb(&j, &params, 5).unwrap();
    assert!(r.spins.as_slice().iter().all(|&s| s == 1));
    assert_eq!(r.final_state.step_index, 0);
}

#[test]
fn binarize_rules() {
    let j = CouplingMatrix::zeros(2);
    let params = real_params(&j, 1);
    let mut state = init_state(2, 0, &params);
    if let StateData::Real { x, .. } = &mut state.data {
        x[0] = 0.3;
        x[1] = -0.2;
    }
    assert_eq!(binarize(&state).as_slice(), &[1, -1]);
    if let StateData::Real { x, .. } = &mut state.data {
        x[0] = 0.0;
    }
    assert_eq!(binarize(&state).get(0), 1);
    // Antisymmetry away from zeros.
    if let StateData::Real { x, .. } = &mut state.data {
        x[0] = -0.3;
        x[1] = 0.2;
    }
    assert_eq!(binarize(&state).as_slice(), &[-1, 1]);
}

#[test]
fn antiferromagnetic_pair_reaches_ground_state() {
    let mut j = CouplingMatrix::zeros(2);
    j.set_pair(0, 1, -1);
    let params = real_params(&j, 300);
    // The 2-spin ground state from enumeration: opposite spins.
    let w = ising_core::MaxCutInstance::from_weights(j.negated());
    let (_, ground) = brute_force_maxcut(&w).unwrap();
    assert_ne!(ground.get(0), ground.get(1));
    let mut hits = 0;
    for seed in 0..20 {
        let r = run_sb(&j, &params, seed).unwrap();
        if r.spins.get(0) != r.spins.get(1) {
            hits += 1;
        }
    }
    assert!(hits >= 19, "only {hits}/20 seeds found the AF ground state");
}

#[test]
fn best_of_seeds_matches_brute_force_on_small_instance() {
    let w = generate_maxcut(10, 21).unwrap();
    let j = maxcut_to_ising(&w);
    let params = real_params(&j, 120);
    let (opt, _) = brute_force_maxcut(&w).unwrap();
    let mut best = i64::MIN;
    for seed in 0..100 {
        let r = run_sb(&j, &params, seed).unwrap();
        best = best.max(cut_value(&w, &r.spins).unwrap());
    }
    assert_eq!(best, opt);
}

#[test]
fn determinism_bitwise() {
    let w = generate_maxcut(24, 4).unwrap();
    let j = maxcut_to_ising(&w);
    for mode in [NumericMode::Real, NumericMode::Fixed16] {
        let params = SbParams::defaults_for(&j, 50, mode);
        let a = run_sb(&j, &params, 77).unwrap();
        let b = run_sb(&j, &params, 77).unwrap();
        assert_eq!(a, b);
    }
}

/// Explicit symplectic-Euler reference for M = 1: the whole step written out
/// longhand against the engine's composed updates.
#[test]
fn m1_matches_reference_stepper() {
    let w = generate_maxcut(12, 8).unwrap();
    let j = maxcut_to_ising(&w);
    let mut params = real_params(&j, 40);
    params.m_substeps = 1;

    let n = 12;
    let mut state = init_state(n, 42, &params);
    let (mut x_ref, mut p_ref) = match &state.data {
        StateData::Real { x, p, .. } => (x.clone(), p.clone()),
        _ => unreachable!(),
    };
    let mut alpha = params.alpha_start;
    let d_alpha = params.alpha_increment();
    let scale = params.dt_step() * params.gamma0;

    for _ in 0..params.n_sbsteps {
        // Reference: Δp, then p += Δp + FX, x += FP, independently coded.
        let mut dp_ref = vec![0.0; n];
        for i in 0..n {
            for k in 0..n {
                dp_ref[i] += scale * j.get(i, k) as f64 * x_ref[k];
            }
        }
        for i in 0..n {
            p_ref[i] += dp_ref[i];
            p_ref[i] += params.dt_sub
                * (-(params.alpha0 - alpha) * x_ref[i] - params.beta0 * x_ref[i].powi(3));
            x_ref[i] += params.dt_sub * p_ref[i];
        }
        alpha += d_alpha;

        // Engine: one step via the public per-oscillator pieces.
        let dp = mm_force(&j, &state, &params).unwrap();
        let DpVec::Real(dpv) = dp else { unreachable!() };
        if let StateData::Real { x, p, .. } = &mut state.data {
            for i in 0..n {
                te_update(&mut x[i], &mut p[i], dpv[i], 0.0, state.alpha, &params);
            }
        }
        state.alpha += d_alpha;
    }

    for i in 0..n {
        assert!(
            (state.x_f64(i) - x_ref[i]).abs() <= 1e-12 * x_ref[i].abs().max(1.0),
            "x[{i}] diverged: {} vs {}",
            state.x_f64(i),
            x_ref[i]
        );
        assert!((state.p_f64(i) - p_ref[i]).abs() <= 1e-12 * p_ref[i].abs().max(1.0));
    }
}

#[test]
fn full_run_matches_reference_via_run_sb() {
    // Same check through the top-level entry point: recompute the whole
    // trajectory with an independent loop and compare the end state.
    let w = generate_maxcut(12, 8).unwrap();
    let j = maxcut_to_ising(&w);
    let mut params = real_params(&j, 40);
    params.m_substeps = 1;
    let r = run_sb(&j, &params, 42).unwrap();

    let n = 12;
    let init = init_state(n, 42, &params);
    let (mut x, mut p) = match &init.data {
        StateData::Real { x, p, .. } => (x.clone(), p.clone()),
        _ => unreachable!(),
    };
    let mut alpha = params.alpha_start;
    let scale = params.dt_step() * params.gamma0;
    for _ in 0..params.n_sbsteps {
        let mut dp = vec![0.0; n];
        for i in 0..n {
            for k in 0..n {
                dp[i] += scale * j.get(i, k) as f64 * x[k];
            }
        }
        for i in 0..n {
            p[i] += dp[i];
            p[i] += params.dt_sub * (-(params.alpha0 - alpha) * x[i] - params.beta0 * x[i].powi(3));
            x[i] += params.dt_sub * p[i];
        }
        alpha += params.alpha_increment();
    }
    for i in 0..n {
        assert!((r.final_state.x_f64(i) - x[i]).abs() <= 1e-12 * x[i].abs().max(1.0));
    }
}

#[test]
fn scored_run_records_every_step() {
    let w = generate_maxcut(16, 1).unwrap();
    let j = maxcut_to_ising(&w);
    let params = real_params(&j, 25);
    let mut calls = 0;
    let r = sb_engine::run_sb_scored(&j, &params, 3, &mut |s| {
        calls += 1;
        cut_value(&w, s).unwrap()
    })
    .unwrap();
    assert_eq!(calls, 25);
    let scores = r.per_step_scores.unwrap();
    assert_eq!(scores.len(), 25);
    assert_eq!(scores[0].0, 1);
    assert_eq!(scores[24].0, 25);
    // Last recorded score is the final state's score.
    assert_eq!(scores[24].1, cut_value(&w, &r.spins).unwrap());
}
