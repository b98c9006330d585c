//! Experiment drivers. Each one validates its whole configuration into a
//! plan first, then computes; sweep points run on a bounded rayon pool and
//! rows come back in sweep order.

mod phasecov;
mod twoqubit;

use qslwigner_core::qsl::PNormSpec;
use qslwigner_core::states::StateSpec;
use qslwigner_core::{DensityMatrix, SphereGrid};

use crate::config::{Experiment, RunConfig};
use crate::error::CliError;
use crate::output::Table;

pub fn run(cfg: &RunConfig) -> Result<Table, CliError> {
    match cfg.experiment {
        Experiment::PhasecovWigner => phasecov::wigner(cfg),
        Experiment::PhasecovVolume => phasecov::volume(cfg),
        Experiment::PhasecovQsl => phasecov::qsl(cfg),
        Experiment::TwoqubitWigner => twoqubit::wigner(cfg),
        Experiment::TwoqubitVolume => twoqubit::volume(cfg),
        Experiment::TwoqubitQslDistance => twoqubit::qsl_distance(cfg),
        Experiment::TwoqubitQslTemperature => twoqubit::qsl_temperature(cfg),
        Experiment::DiscordSweep => twoqubit::discord_sweep(cfg),
    }
}

/// `bound` (p = 1 only) or `paper-min` ({1, 2, 4, 8} and the sup norm).
pub fn p_norm(cfg: &RunConfig) -> Result<PNormSpec, CliError> {
    match cfg.raw("p_norm")? {
        "bound" => Ok(PNormSpec::bound()),
        "paper-min" => Ok(PNormSpec::paper_min()),
        other => Err(CliError::Config(format!("invalid value `{other}` for `p_norm`: expected bound or paper-min"))),
    }
}

fn grid(cfg: &RunConfig, theta_key: &str, phi_key: &str) -> Result<SphereGrid, CliError> {
    SphereGrid::new(cfg.get(theta_key)?, cfg.get(phi_key)?)
        .map_err(|e| CliError::invalid(&format!("{theta_key} x {phi_key}"), e))
}

fn state(cfg: &RunConfig, dim: usize) -> Result<DensityMatrix, CliError> {
    let spec: StateSpec = cfg.get("state")?;
    if spec.dim() != dim {
        return Err(CliError::Config(format!("state `{spec}` is not a {dim}-dimensional state")));
    }
    qslwigner_core::states::build_state(&spec).map_err(|e| CliError::invalid("state", e))
}

fn time_grid(cfg: &RunConfig) -> Result<Vec<f64>, CliError> {
    let t_end = cfg.float("t_end")?;
    let steps: usize = cfg.get("t_steps")?;
    if !(t_end > 0.0) || steps == 0 {
        return Err(CliError::Config("t_end must be positive and t_steps at least 1".into()));
    }
    Ok(crate::config::linspace(0.0, t_end, steps))
}

fn pool(cfg: &RunConfig) -> Result<rayon::ThreadPool, CliError> {
    let threads: usize = cfg.get("threads")?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Config(format!("cannot start {threads} worker threads: {e}")))
}
