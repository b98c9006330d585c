use rayon::prelude::*;

use qslwigner_core::discord::{quantum_discord_with, DiscordOptions};
use qslwigner_core::metrics::nonclassical_volume;
use qslwigner_core::ode::AdaptiveOptions;
use qslwigner_core::qsl::{qsl_along, PNormSpec, QslResult};
use qslwigner_core::states::werner;
use qslwigner_core::two_qubit::{
    evolve_two_qubit, BathGeometryParams, CouplingConvention, FSign, OmegaPrefactor, Trajectory, TwoQubitGenerator,
};
use qslwigner_core::wigner::{wigner_two, wigner_two_at, FieldDomain};
use qslwigner_core::{ComplexMatrix, DensityMatrix, SphereGrid};

use super::{grid, p_norm, pool, state, time_grid};
use crate::config::{linspace, RunConfig};
use crate::error::CliError;
use crate::output::Table;

/// Bath parameters from the config with `temperature` and `x12` supplied
/// by the caller (both may be sweep variables).
fn bath_params(cfg: &RunConfig, temperature: f64, x12: f64) -> Result<TwoQubitGenerator, CliError> {
    let params = BathGeometryParams {
        temperature,
        squeezing_r: cfg.float("squeezing_r")?,
        squeezing_phase: cfg.float("squeezing_phase")?,
        omega: [cfg.float("omega1")?, cfg.float("omega2")?],
        gamma: [cfg.float("gamma1")?, cfg.float("gamma2")?],
        x12,
        mu_dot_r: cfg.float("mu_dot_r")?,
        convention: CouplingConvention {
            f_sign: cfg.get::<FSign>("f_sign")?,
            omega_prefactor: cfg.get::<OmegaPrefactor>("omega_prefactor")?,
        },
    };
    TwoQubitGenerator::new(&params)
        .map_err(|e| CliError::invalid(&format!("bath parameters (temperature {temperature}, x12 {x12})"), e))
}

fn generators(cfg: &RunConfig, temperatures: &[f64], distances: &[f64]) -> Result<Vec<TwoQubitGenerator>, CliError> {
    let mut out = Vec::with_capacity(temperatures.len() * distances.len());
    for &t in temperatures {
        for &x in distances {
            out.push(bath_params(cfg, t, x)?);
        }
    }
    Ok(out)
}

fn adaptive(cfg: &RunConfig) -> Result<AdaptiveOptions, CliError> {
    let (atol, rtol) = (cfg.float("atol")?, cfg.float("rtol")?);
    if !(atol > 0.0 && rtol > 0.0) {
        return Err(CliError::Config("atol and rtol must be positive".into()));
    }
    Ok(AdaptiveOptions { atol, rtol, ..AdaptiveOptions::default() })
}

fn pair_domain(cfg: &RunConfig) -> Result<FieldDomain, CliError> {
    let g: SphereGrid = grid(cfg, "grid_theta", "grid_phi")?;
    Ok(FieldDomain::SpherePair(g.clone(), g))
}

fn trajectory(
    rho0: &DensityMatrix,
    times: &[f64],
    gen: &TwoQubitGenerator,
    opts: &AdaptiveOptions,
) -> Result<Trajectory, CliError> {
    evolve_two_qubit(rho0, times, gen, opts).map_err(|e| CliError::numerical(e, None))
}

/// Speeds along `[0, time]` sampled at `nodes` points, and the final state.
fn evolve_with_qsl(
    rho0: &DensityMatrix,
    time: f64,
    nodes: usize,
    gen: &TwoQubitGenerator,
    opts: &AdaptiveOptions,
    domain: &FieldDomain,
    spec: &PNormSpec,
) -> Result<(QslResult, DensityMatrix), CliError> {
    let times = linspace(0.0, time, nodes - 1);
    let traj = trajectory(rho0, &times, gen, opts)?;
    let states: Vec<ComplexMatrix> = traj.states.iter().map(|s| *s.matrix()).collect();
    let derivatives: Vec<ComplexMatrix> = states.iter().map(|s| gen.rhs(s)).collect();
    let res = qsl_along(&times, &states, &derivatives, domain, spec).map_err(|e| CliError::numerical(e, None))?;
    Ok((res, traj.states[traj.len() - 1]))
}

fn qsl_settings(cfg: &RunConfig) -> Result<(f64, usize), CliError> {
    let time = cfg.float("time")?;
    let nodes: usize = cfg.get("qsl_nodes")?;
    if !(time > 0.0) || nodes < 2 {
        return Err(CliError::Config("time must be positive and qsl_nodes at least 2".into()));
    }
    Ok((time, nodes))
}

pub(super) fn wigner(cfg: &RunConfig) -> Result<Table, CliError> {
    let rho0 = state(cfg, 4)?;
    let distances = cfg.floats("x12")?;
    let gens = generators(cfg, &[cfg.float("temperature")?], &distances)?;
    let times = time_grid(cfg)?;
    let opts = adaptive(cfg)?;
    let point = [cfg.float("theta1")?, cfg.float("phi1")?, cfg.float("theta2")?, cfg.float("phi2")?];
    let blocks: Vec<Vec<Vec<f64>>> = pool(cfg)?.install(|| {
        gens.par_iter()
            .zip(&distances)
            .map(|(gen, &x)| {
                let traj = trajectory(&rho0, &times, gen, &opts)?;
                traj.states
                    .iter()
                    .zip(&times)
                    .map(|(rho, &t)| {
                        let w = wigner_two_at(rho.matrix(), point[0], point[1], point[2], point[3])
                            .map_err(|e| CliError::numerical(e, Some(t)))?;
                        Ok(vec![x, t, w])
                    })
                    .collect()
            })
            .collect::<Result<_, CliError>>()
    })?;
    let mut table = Table::new(vec!["x12", "t", "W"]);
    table.rows = blocks.into_iter().flatten().collect();
    Ok(table)
}

pub(super) fn volume(cfg: &RunConfig) -> Result<Table, CliError> {
    let rho0 = state(cfg, 4)?;
    let distances = cfg.floats("x12")?;
    let gens = generators(cfg, &[cfg.float("temperature")?], &distances)?;
    let times = time_grid(cfg)?;
    let opts = adaptive(cfg)?;
    let g = grid(cfg, "grid_theta", "grid_phi")?;
    let blocks: Vec<Vec<Vec<f64>>> = pool(cfg)?.install(|| {
        gens.par_iter()
            .zip(&distances)
            .map(|(gen, &x)| {
                let traj = trajectory(&rho0, &times, gen, &opts)?;
                traj.states
                    .par_iter()
                    .zip(&times)
                    .map(|(rho, &t)| {
                        let d = wigner_two(rho, &g, &g)
                            .and_then(|w| nonclassical_volume(&w))
                            .map_err(|e| CliError::numerical(e, Some(t)))?;
                        Ok(vec![x, t, d.value])
                    })
                    .collect()
            })
            .collect::<Result<_, CliError>>()
    })?;
    let mut table = Table::new(vec!["x12", "t", "delta"]);
    table.rows = blocks.into_iter().flatten().collect();
    Ok(table)
}

/// One speed-limit evaluation per generator, in order.
fn qsl_points(cfg: &RunConfig, gens: &[TwoQubitGenerator]) -> Result<Vec<QslResult>, CliError> {
    let rho0 = state(cfg, 4)?;
    let (time, nodes) = qsl_settings(cfg)?;
    let opts = adaptive(cfg)?;
    let domain = pair_domain(cfg)?;
    let spec = p_norm(cfg)?;
    pool(cfg)?.install(|| {
        gens.par_iter()
            .map(|gen| evolve_with_qsl(&rho0, time, nodes, gen, &opts, &domain, &spec).map(|(r, _)| r))
            .collect()
    })
}

fn last(v: &[f64]) -> f64 {
    v[v.len() - 1]
}

pub(super) fn qsl_distance(cfg: &RunConfig) -> Result<Table, CliError> {
    let temperatures = cfg.floats("temperature")?;
    let distances = cfg.sweep("x12_min", "x12_max", "x12_steps")?;
    let gens = generators(cfg, &temperatures, &distances)?;
    let results = qsl_points(cfg, &gens)?;
    let mut table = Table::new(vec!["x12", "T", "v_qsl", "argmin_p", "tau_qsl"]);
    for (gen, r) in gens.iter().zip(&results) {
        let p = gen.params();
        table.rows.push(vec![p.x12, p.temperature, last(&r.v_qsl), last(&r.argmin_p), r.summary.tau_qsl]);
    }
    table.summary.push(("tau".into(), cfg.float("time")?));
    Ok(table)
}

pub(super) fn qsl_temperature(cfg: &RunConfig) -> Result<Table, CliError> {
    let distances = cfg.floats("x12")?;
    let temperatures = cfg.sweep("temperature_min", "temperature_max", "temperature_steps")?;
    let mut gens = Vec::with_capacity(distances.len() * temperatures.len());
    for &x in &distances {
        gens.extend(generators(cfg, &temperatures, &[x])?);
    }
    let results = qsl_points(cfg, &gens)?;
    let mut table = Table::new(vec!["T", "x12", "v_qsl", "argmin_p", "tau_qsl"]);
    for (gen, r) in gens.iter().zip(&results) {
        let p = gen.params();
        table.rows.push(vec![p.temperature, p.x12, last(&r.v_qsl), last(&r.argmin_p), r.summary.tau_qsl]);
    }
    table.summary.push(("tau".into(), cfg.float("time")?));
    Ok(table)
}

pub(super) fn discord_sweep(cfg: &RunConfig) -> Result<Table, CliError> {
    let gen = bath_params(cfg, cfg.float("temperature")?, cfg.float("x12")?)?;
    let (time, nodes) = qsl_settings(cfg)?;
    let opts = adaptive(cfg)?;
    let domain = pair_domain(cfg)?;
    let spec = p_norm(cfg)?;
    let discord_opts =
        DiscordOptions { n_theta: cfg.get("discord_theta")?, n_phi: cfg.get("discord_phi")?, ..Default::default() };
    if discord_opts.n_theta < 2 || discord_opts.n_phi < 1 {
        return Err(CliError::Config("discord_theta must be at least 2 and discord_phi at least 1".into()));
    }
    let steps: usize = cfg.get("p_steps")?;
    if steps == 0 {
        return Err(CliError::Config("p_steps must be at least 1".into()));
    }
    let mixing = linspace(0.0, 1.0, steps);
    let rows: Vec<Vec<f64>> = pool(cfg)?.install(|| {
        mixing
            .par_iter()
            .map(|&p| {
                let rho0 = werner(p).map_err(|e| CliError::invalid("mixing probability", e))?;
                let (res, rho) = evolve_with_qsl(&rho0, time, nodes, &gen, &opts, &domain, &spec)?;
                let d = quantum_discord_with(&rho, &discord_opts).map_err(|e| CliError::numerical(e, Some(time)))?;
                Ok(vec![
                    p,
                    last(&res.v_qsl),
                    d.discord,
                    res.summary.tau_qsl,
                    d.argmin_direction.theta,
                    d.argmin_direction.phi,
                ])
            })
            .collect::<Result<_, CliError>>()
    })?;
    let mut table = Table::new(vec!["P", "v_qsl", "discord", "tau_qsl", "theta_m", "phi_m"]);
    table.rows = rows;
    table.summary.push(("tau".into(), time));
    Ok(table)
}
