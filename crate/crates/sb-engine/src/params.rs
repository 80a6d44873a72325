use ising_core::CouplingMatrix;
use serde::{Deserialize, Serialize};

use crate::{Result, SbError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NumericMode {
    Real,
    Fixed16,
}

/// All SB algorithm constants and schedules.
///
/// `Δt = M·δt` is the SB step; `α` ramps linearly from `alpha_start` to
/// `alpha_end` in `n_sbsteps` equal increments. `bias` is the per-oscillator
/// external term `h` fed to the position force; it stays zero for MAX-CUT.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SbParams {
    pub dt_sub: f64,
    pub m_substeps: u32,
    pub n_sbsteps: u32,
    pub alpha0: f64,
    pub beta0: f64,
    pub eta: f64,
    pub gamma0: f64,
    pub alpha_start: f64,
    pub alpha_end: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bias: Option<Vec<f64>>,
    pub numeric_mode: NumericMode,
}

impl SbParams {
    /// Default hyperparameters for a given coupling matrix.
    ///
    /// `γ₀ = 0.5·α₀/(√N·σ_J)` with `σ_J` the RMS off-diagonal coupling, the
    /// usual adiabatic-SB scaling that keeps the force magnitude comparable
    /// with the potential terms at any problem size.
    pub fn defaults_for(j: &CouplingMatrix, n_sbsteps: u32, numeric_mode: NumericMode) -> Self {
        let n = j.n().max(1);
        let alpha0 = 1.0;
        let sigma = match j.off_diagonal_rms() {
            s if s > 0.0 => s,
            _ => 1.0,
        };
        let gamma0 = 0.5 * alpha0 / ((n as f64).sqrt() * sigma);
        Self {
            dt_sub: 0.5,
            m_substeps: 2,
            n_sbsteps,
            alpha0,
            beta0: 1.0,
            eta: 1.0,
            gamma0,
            alpha_start: 0.0,
            alpha_end: alpha0,
            bias: None,
            numeric_mode,
        }
    }

    /// The SB step duration `Δt = M·δt`.
    pub fn dt_step(&self) -> f64 {
        self.m_substeps as f64 * self.dt_sub
    }

    /// Per-step increment `Δα = (α_end - α_start)/N_SBstep`.
    pub fn alpha_increment(&self) -> f64 {
        if self.n_sbsteps == 0 {
            0.0
        } else {
            (self.alpha_end - self.alpha_start) / self.n_sbsteps as f64
        }
    }

    pub fn bias_at(&self, i: usize) -> f64 {
        self.bias.as_ref().map_or(0.0, |b| b[i])
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        if !(self.dt_sub > 0.0) {
            return Err(SbError::InvalidParam {
                name: "dt_sub",
                msg: format!("must be > 0, got {}", self.dt_sub),
            });
        }
        if self.m_substeps < 1 {
            return Err(SbError::InvalidParam {
                name: "m_substeps",
                msg: "must be >= 1".into(),
            });
        }
        if let Some(b) = &self.bias {
            if b.len() != n {
                return Err(SbError::DimensionMismatch {
                    expected: n,
                    got: b.len(),
                });
            }
        }
        Ok(())
    }
}

/// Parameter file: every field optional, resolved against the defaults for
/// the instance at hand. CLI flags override file values downstream.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SbParamsFile {
    pub dt_sub: Option<f64>,
    pub m_substeps: Option<u32>,
    pub n_sbsteps: Option<u32>,
    pub alpha0: Option<f64>,
    pub beta0: Option<f64>,
    pub eta: Option<f64>,
    pub gamma0: Option<f64>,
    pub alpha_start: Option<f64>,
    pub alpha_end: Option<f64>,
    pub bias: Option<Vec<f64>>,
    pub numeric_mode: Option<NumericMode>,
}

impl SbParamsFile {
    pub fn resolve(&self, j: &CouplingMatrix, default_steps: u32) -> SbParams {
        let mode = self.numeric_mode.unwrap_or(NumericMode::Real);
        let mut p = SbParams::defaults_for(j, self.n_sbsteps.unwrap_or(default_steps), mode);
        if let Some(v) = self.dt_sub {
            p.dt_sub = v;
        }
        if let Some(v) = self.m_substeps {
            p.m_substeps = v;
        }
        if let Some(v) = self.alpha0 {
            p.alpha0 = v;
            p.alpha_end = self.alpha_end.unwrap_or(v);
        }
        if let Some(v) = self.beta0 {
            p.beta0 = v;
        }
        if let Some(v) = self.eta {
            p.eta = v;
        }
        if let Some(v) = self.gamma0 {
            p.gamma0 = v;
        }
        if let Some(v) = self.alpha_start {
            p.alpha_start = v;
        }
        if let Some(v) = self.alpha_end {
            p.alpha_end = v;
        }
        p.bias = self.bias.clone();
        p
    }
}
