use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, DensityMatrix, C64};
use crate::ode::{dopri5, rk4_fixed, AdaptiveOptions, IntegrationStats};

use super::master::TwoQubitGenerator;

/// Validation tolerance applied to integrated states.
pub const TRAJECTORY_TOLERANCE: f64 = 1e-7;

/// Time-ordered states with integrator bookkeeping.
#[derive(Clone, Debug)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<DensityMatrix>,
    pub stats: IntegrationStats,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn last(&self) -> Option<(f64, &DensityMatrix)> {
        self.times.last().copied().zip(self.states.last())
    }
}

fn to_real(m: &ComplexMatrix) -> Vec<f64> {
    let e = m.entries();
    e.iter().map(|z| z.re).chain(e.iter().map(|z| z.im)).collect()
}

fn from_real(y: &[f64]) -> Result<ComplexMatrix> {
    let entries: Vec<C64> = (0..16).map(|k| C64::new(y[k], y[16 + k])).collect();
    ComplexMatrix::from_rows(4, &entries)
}

/// Integrates the master equation from `rho0` at `times[0] = 0` and reports
/// the state at every requested time.
///
/// Steps are capped at `2/‖L‖∞`. Without the cap, modes that start with
/// zero amplitude (e.g. the fast `|01⟩ ↔ |10⟩` exchange for symmetric states)
/// sit outside the stability region unnoticed by the error estimate and
/// amplify round-off.
pub fn evolve_two_qubit(
    rho0: &DensityMatrix,
    times: &[f64],
    generator: &TwoQubitGenerator,
    opts: &AdaptiveOptions,
) -> Result<Trajectory> {
    if rho0.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: rho0.dim() });
    }
    if times.first() != Some(&0.0) {
        return Err(Error::InvalidArgument("time grid must start at 0"));
    }
    let y0 = to_real(rho0.matrix());
    let cap = 2.0 / generator.spectral_bound().max(f64::MIN_POSITIVE);
    let opts = AdaptiveOptions { max_step: Some(opts.max_step.map_or(cap, |m| m.min(cap))), ..*opts };
    let (ys, stats) = dopri5(|_, y, dy| generator.apply_real(y, dy), &y0, times, &opts)?;
    let mut states = Vec::with_capacity(ys.len());
    states.push(*rho0);
    for (y, &t) in ys.iter().zip(times).skip(1) {
        let m = from_real(y)?;
        let rho = DensityMatrix::with_tolerance(m, TRAJECTORY_TOLERANCE)
            .map_err(|_| Error::IntegrationFailure { last_good_time: t })?;
        states.push(rho);
    }
    Ok(Trajectory { times: times.to_vec(), states, stats })
}

/// Classical RK4 with a fixed number of steps; returns the raw matrix at
/// `t_end` for convergence studies.
pub fn evolve_two_qubit_fixed_step(
    rho0: &ComplexMatrix,
    t_end: f64,
    steps: usize,
    generator: &TwoQubitGenerator,
) -> Result<ComplexMatrix> {
    if rho0.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: rho0.dim() });
    }
    if steps == 0 {
        return Err(Error::InvalidArgument("need at least one step"));
    }
    let y = rk4_fixed(|_, y, dy| generator.apply_real(y, dy), &to_real(rho0), 0.0, t_end, steps);
    from_real(&y)
}
