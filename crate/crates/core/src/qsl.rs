//! Wigner-space quantum speed limit.
//!
//! The speed at time `t` is the smallest weighted p-norm of `Ẇ(t)` over a
//! set of exponents, and the speed-limit time over a run of length `τ` is
//! `τ_QSL = D(W(τ), W(0)) / ((1/τ) ∫₀^τ v dt)`.
//!
//! With `p = 1` only, `D(W(τ), W(0)) ≤ ∫‖Ẇ‖₁ dt` by the triangle inequality,
//! so `τ_QSL ≤ τ` up to time discretization; that is [`PNormSpec::bound`].
//! Exponents below one are allowed in custom specs but never used by
//! default: on a sphere of area `4π` the norm grows without bound as
//! `p → 0` for fields with full support.

use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::metrics::wasserstein1;
use crate::wigner::{wigner_transform, FieldDomain, WignerField};

/// Exponents over which the speed is minimized.
#[derive(Clone, Debug, PartialEq)]
pub struct PNormSpec {
    p_values: Vec<f64>,
    include_sup_norm: bool,
}

impl PNormSpec {
    /// Exponents are deduplicated and sorted.
    pub fn new(mut p_values: Vec<f64>, include_sup_norm: bool) -> Result<Self> {
        if p_values.iter().any(|p| !(p.is_finite() && *p > 0.0)) {
            return Err(Error::InvalidArgument("p values must be finite and positive"));
        }
        if p_values.is_empty() && !include_sup_norm {
            return Err(Error::InvalidArgument("p-norm spec is empty"));
        }
        p_values.sort_by(|a, b| a.total_cmp(b));
        p_values.dedup();
        Ok(Self { p_values, include_sup_norm })
    }

    /// `p = 1` only; guarantees `τ_QSL ≤ τ`.
    pub fn bound() -> Self {
        Self { p_values: alloc::vec![1.0], include_sup_norm: false }
    }

    /// `{1, 2, 4, 8}` plus the sup norm.
    pub fn paper_min() -> Self {
        Self { p_values: alloc::vec![1.0, 2.0, 4.0, 8.0], include_sup_norm: true }
    }

    pub fn p_values(&self) -> &[f64] {
        &self.p_values
    }

    pub fn include_sup_norm(&self) -> bool {
        self.include_sup_norm
    }
}

/// `Ẇ` as the Wigner transform of `dρ/dt`.
///
/// `drho_dt` must be Hermitian and traceless, as any trace-preserving
/// generator output is.
pub fn wigner_time_derivative(drho_dt: &ComplexMatrix, domain: &FieldDomain) -> Result<WignerField> {
    let scale = drho_dt.max_abs().max(1.0);
    let defect = drho_dt.hermiticity_defect();
    if defect > 1e-8 * scale {
        return Err(Error::NotHermitian(defect));
    }
    if drho_dt.trace().norm() > 1e-8 * scale {
        return Err(Error::InvalidArgument("generator output is not traceless"));
    }
    wigner_transform(&drho_dt.hermitian_part(), domain)
}

/// `(Σ_k w_k |f_k|^p)^(1/p)`.
pub fn weighted_p_norm(field: &WignerField, p: f64) -> f64 {
    if p == 1.0 {
        return field.weighted_sum(f64::abs);
    }
    // scale out the maximum so large p cannot overflow
    let m = field.max_abs();
    if m == 0.0 {
        return 0.0;
    }
    m * field.weighted_sum(|v| (v.abs() / m).powf(p)).powf(1.0 / p)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Velocity {
    pub v: f64,
    /// Exponent attaining the minimum; `f64::INFINITY` for the sup norm.
    pub argmin_p: f64,
}

/// Smallest norm of `Ẇ` over `spec`; ties go to the smaller exponent.
pub fn qsl_velocity(wdot: &WignerField, spec: &PNormSpec) -> Result<Velocity> {
    if wdot.values().iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite);
    }
    let mut best: Option<Velocity> = None;
    let candidates = spec
        .p_values
        .iter()
        .map(|&p| (p, weighted_p_norm(wdot, p)))
        .chain(spec.include_sup_norm.then(|| (f64::INFINITY, wdot.max_abs())));
    for (p, v) in candidates {
        if best.is_none_or(|b| v < b.v) {
            best = Some(Velocity { v, argmin_p: p });
        }
    }
    best.ok_or(Error::InvalidArgument("p-norm spec is empty"))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QslTime {
    pub tau_qsl: f64,
    /// `D(W(τ), W(0))`.
    pub distance: f64,
    /// Trapezoid time average of the speed.
    pub mean_velocity: f64,
    pub driving_time: f64,
}

/// Speed-limit time for a run sampled at `times` with speeds `velocities`.
pub fn qsl_time(w_start: &WignerField, w_end: &WignerField, times: &[f64], velocities: &[f64]) -> Result<QslTime> {
    if times.len() < 2 {
        return Err(Error::InvalidArgument("need at least two time nodes"));
    }
    if velocities.len() != times.len() {
        return Err(Error::DimensionMismatch { expected: times.len(), found: velocities.len() });
    }
    if times.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::InvalidArgument("time nodes must be strictly increasing"));
    }
    let tau = times[times.len() - 1] - times[0];
    let area: f64 = times.windows(2).zip(velocities.windows(2)).map(|(t, v)| 0.5 * (v[0] + v[1]) * (t[1] - t[0])).sum();
    let mean_velocity = area / tau;
    if !(mean_velocity > 0.0) {
        return Err(Error::StationaryTrajectory);
    }
    let distance = wasserstein1(w_end, w_start)?.value;
    Ok(QslTime { tau_qsl: distance / mean_velocity, distance, mean_velocity, driving_time: tau })
}

/// Speeds along a trajectory plus the resulting speed-limit time.
#[derive(Clone, Debug, PartialEq)]
pub struct QslResult {
    pub times: Vec<f64>,
    pub v_qsl: Vec<f64>,
    pub argmin_p: Vec<f64>,
    pub summary: QslTime,
}

/// Evaluates the speed at every node from the generator outputs
/// `derivatives[i] = dρ/dt(times[i])` and the bound from the first and last
/// states. Fields are built one node at a time and dropped.
pub fn qsl_along(
    times: &[f64],
    states: &[ComplexMatrix],
    derivatives: &[ComplexMatrix],
    domain: &FieldDomain,
    spec: &PNormSpec,
) -> Result<QslResult> {
    if states.len() != times.len() || derivatives.len() != times.len() {
        return Err(Error::DimensionMismatch { expected: times.len(), found: states.len() });
    }
    if times.len() < 2 {
        return Err(Error::InvalidArgument("need at least two time nodes"));
    }
    let mut v_qsl = Vec::with_capacity(times.len());
    let mut argmin_p = Vec::with_capacity(times.len());
    for d in derivatives {
        let vel = qsl_velocity(&wigner_time_derivative(d, domain)?, spec)?;
        v_qsl.push(vel.v);
        argmin_p.push(vel.argmin_p);
    }
    let w_start = wigner_transform(&states[0], domain)?;
    let w_end = wigner_transform(&states[states.len() - 1], domain)?;
    let summary = qsl_time(&w_start, &w_end, times, &v_qsl)?;
    Ok(QslResult { times: times.to_vec(), v_qsl, argmin_p, summary })
}
