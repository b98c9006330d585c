use qslwigner_core::metrics::nonclassical_volume;
use qslwigner_core::phase_covariant::{evolve_phase_covariant, phase_covariant_derivative, PhaseCovariantParams};
use qslwigner_core::qsl::{qsl_along, PNormSpec};
use qslwigner_core::wigner::{wigner_single, wigner_single_at, FieldDomain};
use qslwigner_core::{ComplexMatrix, DensityMatrix, SphereGrid};

use super::{grid, p_norm, state, time_grid};
use crate::config::RunConfig;
use crate::error::CliError;
use crate::output::Table;

struct Plan {
    params: PhaseCovariantParams,
    rho0: DensityMatrix,
    times: Vec<f64>,
    grid: SphereGrid,
}

fn plan(cfg: &RunConfig) -> Result<Plan, CliError> {
    let params = PhaseCovariantParams::new(cfg.float("kappa")?, cfg.float("l")?, cfg.float("nu")?, cfg.float("eta")?)
        .map_err(|e| CliError::invalid("channel parameters", e))?;
    Ok(Plan { params, rho0: state(cfg, 2)?, times: time_grid(cfg)?, grid: grid(cfg, "grid_theta", "grid_phi")? })
}

/// Closed-form states at every node, stopping at the first failure.
fn states(plan: &Plan) -> Result<Vec<DensityMatrix>, CliError> {
    let mut out = Vec::with_capacity(plan.times.len());
    for (i, &t) in plan.times.iter().enumerate() {
        let last_good = i.checked_sub(1).map(|j| plan.times[j]);
        out.push(evolve_phase_covariant(&plan.rho0, t, &plan.params).map_err(|e| CliError::numerical(e, last_good))?);
    }
    Ok(out)
}

fn delta(rho: &DensityMatrix, grid: &SphereGrid, t: f64) -> Result<f64, CliError> {
    wigner_single(rho, grid)
        .and_then(|w| nonclassical_volume(&w))
        .map(|m| m.value)
        .map_err(|e| CliError::numerical(e, Some(t)))
}

pub(super) fn wigner(cfg: &RunConfig) -> Result<Table, CliError> {
    let plan = plan(cfg)?;
    let (theta, phi) = (cfg.float("theta")?, cfg.float("phi")?);
    let mut table = Table::new(vec!["t", "W", "delta"]);
    for (rho, &t) in states(&plan)?.iter().zip(&plan.times) {
        let w = wigner_single_at(rho.matrix(), theta, phi).map_err(|e| CliError::numerical(e, Some(t)))?;
        table.rows.push(vec![t, w, delta(rho, &plan.grid, t)?]);
    }
    Ok(table)
}

pub(super) fn volume(cfg: &RunConfig) -> Result<Table, CliError> {
    let plan = plan(cfg)?;
    let mut table = Table::new(vec!["t", "delta"]);
    for (rho, &t) in states(&plan)?.iter().zip(&plan.times) {
        table.rows.push(vec![t, delta(rho, &plan.grid, t)?]);
    }
    Ok(table)
}

pub(super) fn qsl(cfg: &RunConfig) -> Result<Table, CliError> {
    let plan = plan(cfg)?;
    let spec: PNormSpec = p_norm(cfg)?;
    let states = states(&plan)?;
    let mut derivatives: Vec<ComplexMatrix> = Vec::with_capacity(states.len());
    for (i, &t) in plan.times.iter().enumerate() {
        let last_good = i.checked_sub(1).map(|j| plan.times[j]);
        derivatives.push(
            phase_covariant_derivative(&plan.rho0, t, &plan.params).map_err(|e| CliError::numerical(e, last_good))?,
        );
    }
    let matrices: Vec<ComplexMatrix> = states.iter().map(|s| *s.matrix()).collect();
    let domain = FieldDomain::Sphere(plan.grid.clone());
    let res =
        qsl_along(&plan.times, &matrices, &derivatives, &domain, &spec).map_err(|e| CliError::numerical(e, None))?;
    let mut table = Table::new(vec!["t", "v_qsl", "argmin_p", "delta"]);
    for (i, rho) in states.iter().enumerate() {
        let t = plan.times[i];
        table.rows.push(vec![t, res.v_qsl[i], res.argmin_p[i], delta(rho, &plan.grid, t)?]);
    }
    table.summary = vec![
        ("tau".into(), res.summary.driving_time),
        ("D".into(), res.summary.distance),
        ("tau_qsl".into(), res.summary.tau_qsl),
    ];
    Ok(table)
}
