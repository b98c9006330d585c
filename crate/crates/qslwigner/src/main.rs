use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qslwigner::config::{parse_config_text, split_assignment};
use qslwigner::{list_experiments, CliError, Experiment, RunConfig};

#[derive(Parser)]
#[command(
    name = "qslwigner",
    version,
    about = "Wigner-function nonclassicality and quantum speed limits of open qubit systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one experiment and write its CSV.
    Run {
        /// Experiment name (see `list`); may instead come from the config file.
        #[arg(long)]
        experiment: Option<String>,
        /// Config file of `key = value` lines.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Override a single key; repeatable.
        #[arg(long = "set", value_name = "KEY=VALUE")]
        set: Vec<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the experiment catalog.
    List,
}

fn run(experiment: Option<String>, config: Option<PathBuf>, set: Vec<String>, out: PathBuf) -> Result<(), CliError> {
    let (file_experiment, file_pairs) = match &config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.clone(), source })?;
            parse_config_text(&text)?
        }
        None => (None, Vec::new()),
    };
    let name = experiment
        .or(file_experiment)
        .ok_or_else(|| CliError::Config("no experiment given (use --experiment or an `experiment` key)".into()))?;
    let experiment: Experiment = name.parse()?;
    let overrides = set
        .iter()
        .map(|s| split_assignment(s).ok_or_else(|| CliError::Config(format!("--set expects KEY=VALUE, got `{s}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    let cfg = RunConfig::resolve(experiment, [file_pairs.as_slice(), overrides.as_slice()])?;
    let (_, text) = qslwigner::run(&cfg)?;
    qslwigner::output::write(&out, &text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::List => {
            print!("{}", list_experiments());
            ExitCode::SUCCESS
        }
        Command::Run { experiment, config, set, out } => match run(experiment, config, set, out) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(e.exit_code())
            }
        },
    }
}
