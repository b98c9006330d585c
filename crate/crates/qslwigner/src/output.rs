//! CSV artifacts: a `#` block echoing the resolved configuration, the
//! header, data rows, and optional `#` summary lines after the data.
//!
//! Removing the leading `# ` from the configuration block yields a config
//! file that reproduces the run.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::config::RunConfig;
use crate::error::CliError;

/// Rows of one experiment, in sweep order.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
    pub summary: Vec<(String, f64)>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self { columns, rows: Vec::new(), summary: Vec::new() }
    }

    /// Column by name.
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.columns.iter().position(|c| *c == name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }

    pub fn summary_value(&self, key: &str) -> Option<f64> {
        self.summary.iter().find(|(k, _)| k == key).map(|(_, v)| *v)
    }
}

/// Shortest round-trip decimal, in exponent form for very small or large
/// magnitudes; infinities print as `inf`.
fn number(v: f64) -> String {
    let a = v.abs();
    if a != 0.0 && a.is_finite() && !(1e-4..1e16).contains(&a) {
        format!("{v:e}")
    } else {
        format!("{v}")
    }
}

pub fn render(config: &RunConfig, table: &Table) -> String {
    let mut out = String::new();
    writeln!(out, "## qslwigner {}", env!("CARGO_PKG_VERSION")).unwrap();
    writeln!(out, "# experiment = {}", config.experiment).unwrap();
    for (k, v) in config.entries() {
        writeln!(out, "# {k} = {v}").unwrap();
    }
    // writes go to memory and cannot fail
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&table.columns).expect("in-memory csv");
    for row in &table.rows {
        w.write_record(row.iter().map(|v| number(*v))).expect("in-memory csv");
    }
    let body = w.into_inner().expect("in-memory csv");
    out.push_str(std::str::from_utf8(&body).expect("csv output is utf-8"));
    for (k, v) in &table.summary {
        writeln!(out, "# summary {k} = {}", number(*v)).unwrap();
    }
    out
}

pub fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{parse_config_text, Experiment};

    #[test]
    fn layout() {
        let cfg = RunConfig::new(Experiment::PhasecovVolume);
        let mut t = Table::new(vec!["t", "delta"]);
        t.rows.push(vec![0.0, 0.25]);
        t.rows.push(vec![0.5, f64::INFINITY]);
        t.summary.push(("tau".into(), 20.0));
        let s = render(&cfg, &t);
        let lines: Vec<&str> = s.lines().collect();
        assert!(lines[0].starts_with("## qslwigner "));
        assert_eq!(lines[1], "# experiment = phasecov-volume");
        let header = lines.iter().position(|l| *l == "t,delta").unwrap();
        assert!(lines[..header].iter().all(|l| l.starts_with('#')));
        assert_eq!(lines[header + 1], "0,0.25");
        assert_eq!(lines[header + 2], "0.5,inf");
        assert_eq!(lines[header + 3], "# summary tau = 20");
        assert_eq!(t.column("delta").unwrap()[0], 0.25);
        assert_eq!(t.summary_value("tau"), Some(20.0));
    }

    #[test]
    fn echoed_block_is_a_config_file() {
        let mut cfg = RunConfig::new(Experiment::DiscordSweep);
        cfg.set("p_steps", "4").unwrap();
        let s = render(&cfg, &Table::new(vec!["P"]));
        let text: String = s
            .lines()
            .take_while(|l| l.starts_with('#'))
            .map(|l| format!("{}\n", l.strip_prefix("# ").unwrap_or(l)))
            .collect();
        let (exp, pairs) = parse_config_text(&text).unwrap();
        let exp: Experiment = exp.unwrap().parse().unwrap();
        let back = RunConfig::resolve(exp, [pairs.as_slice()]).unwrap();
        assert_eq!(back, cfg);
    }
}
