//! Run configuration: experiment catalog, `key = value` files and overrides.
//!
//! Values are resolved in three layers. Built-in defaults come first, then
//! keys from a config file, then `--set` overrides. Every key is checked
//! against the experiment's own table, so typos fail before any work starts.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::CliError;

const PI_3: &str = "1.0471975511965976";
const PI: &str = "3.141592653589793";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Experiment {
    PhasecovWigner,
    PhasecovVolume,
    PhasecovQsl,
    TwoqubitWigner,
    TwoqubitVolume,
    TwoqubitQslDistance,
    TwoqubitQslTemperature,
    DiscordSweep,
}

impl Experiment {
    pub const ALL: [Experiment; 8] = [
        Experiment::PhasecovWigner,
        Experiment::PhasecovVolume,
        Experiment::PhasecovQsl,
        Experiment::TwoqubitWigner,
        Experiment::TwoqubitVolume,
        Experiment::TwoqubitQslDistance,
        Experiment::TwoqubitQslTemperature,
        Experiment::DiscordSweep,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Experiment::PhasecovWigner => "phasecov-wigner",
            Experiment::PhasecovVolume => "phasecov-volume",
            Experiment::PhasecovQsl => "phasecov-qsl",
            Experiment::TwoqubitWigner => "twoqubit-wigner",
            Experiment::TwoqubitVolume => "twoqubit-volume",
            Experiment::TwoqubitQslDistance => "twoqubit-qsl-distance",
            Experiment::TwoqubitQslTemperature => "twoqubit-qsl-temperature",
            Experiment::DiscordSweep => "discord-sweep",
        }
    }

    /// One-line summary of what the experiment's CSV contains.
    pub fn description(self) -> &'static str {
        match self {
            Experiment::PhasecovWigner => {
                "qubit under the phase-covariant channel: W at a fixed point and delta versus time"
            }
            Experiment::PhasecovVolume => {
                "qubit under the phase-covariant channel: nonclassical volume delta versus time"
            }
            Experiment::PhasecovQsl => {
                "qubit under the phase-covariant channel: v_QSL and delta versus time, tau_QSL summary"
            }
            Experiment::TwoqubitWigner => {
                "two qubits in a squeezed thermal bath: W at a fixed point versus time, per distance"
            }
            Experiment::TwoqubitVolume => {
                "two qubits in a squeezed thermal bath: nonclassical volume versus time, per distance"
            }
            Experiment::TwoqubitQslDistance => {
                "two qubits in a squeezed thermal bath: v_QSL at fixed time versus distance, per temperature"
            }
            Experiment::TwoqubitQslTemperature => {
                "two qubits in a squeezed thermal bath: v_QSL at fixed time versus temperature, per distance"
            }
            Experiment::DiscordSweep => "evolved Werner states: v_QSL and quantum discord versus mixing probability P",
        }
    }

    /// Built-in parameter table; its keys are the only ones accepted.
    pub fn defaults(self) -> Vec<(&'static str, &'static str)> {
        let phasecov = [
            ("kappa", "1"),
            ("l", "0.01"),
            ("nu", "1"),
            ("eta", "0.01"),
            ("state", "qubit:0.5,0.8660254037844386"),
            ("t_end", "20"),
            ("t_steps", "400"),
            ("grid_theta", "64"),
            ("grid_phi", "64"),
        ];
        let bath = [
            ("temperature", "1"),
            ("squeezing_r", "-0.2"),
            ("squeezing_phase", "0"),
            ("omega1", "1"),
            ("omega2", "1"),
            ("gamma1", "0.05"),
            ("gamma2", "0.05"),
            ("x12", "0.1"),
            ("mu_dot_r", "0"),
            ("f_sign", "corrected"),
            ("omega_prefactor", "paper"),
            ("atol", "1e-10"),
            ("rtol", "1e-8"),
            ("grid_theta", "24"),
            ("grid_phi", "24"),
            ("threads", "0"),
        ];
        let mut table: Vec<(&'static str, &'static str)> = match self {
            Experiment::PhasecovWigner => {
                let mut v = phasecov.to_vec();
                v.extend([("theta", PI_3), ("phi", PI)]);
                v
            }
            Experiment::PhasecovVolume => phasecov.to_vec(),
            Experiment::PhasecovQsl => {
                let mut v = phasecov.to_vec();
                v.push(("p_norm", "bound"));
                v
            }
            Experiment::TwoqubitWigner => {
                let mut v = bath.to_vec();
                v.extend([
                    ("state", "01"),
                    ("x12", "0.1,1.1"),
                    ("t_end", "50"),
                    ("t_steps", "500"),
                    ("theta1", PI_3),
                    ("phi1", PI),
                    ("theta2", PI_3),
                    ("phi2", PI),
                ]);
                v
            }
            Experiment::TwoqubitVolume => {
                let mut v = bath.to_vec();
                v.extend([("state", "01"), ("x12", "0.1,1.1"), ("t_end", "50"), ("t_steps", "100")]);
                v
            }
            Experiment::TwoqubitQslDistance => {
                let mut v = bath.to_vec();
                v.extend([
                    ("state", "01"),
                    ("time", "0.5"),
                    ("temperature", "0.1,1"),
                    ("x12_min", "0.05"),
                    ("x12_max", "2"),
                    ("x12_steps", "39"),
                    ("qsl_nodes", "21"),
                    ("p_norm", "bound"),
                ]);
                v
            }
            Experiment::TwoqubitQslTemperature => {
                let mut v = bath.to_vec();
                v.extend([
                    ("state", "01"),
                    ("time", "0.5"),
                    ("x12", "0.1,1.1"),
                    ("temperature_min", "0.1"),
                    ("temperature_max", "5"),
                    ("temperature_steps", "49"),
                    ("qsl_nodes", "21"),
                    ("p_norm", "bound"),
                ]);
                v
            }
            Experiment::DiscordSweep => {
                let mut v = bath.to_vec();
                v.extend([
                    ("squeezing_r", "0.5"),
                    ("x12", "0.05"),
                    ("time", "1"),
                    ("p_steps", "19"),
                    ("qsl_nodes", "21"),
                    ("p_norm", "bound"),
                    ("discord_theta", "24"),
                    ("discord_phi", "48"),
                ]);
                v
            }
        };
        // later entries override earlier ones; keep the first position
        let mut seen: BTreeMap<&str, usize> = BTreeMap::new();
        let mut out: Vec<(&'static str, &'static str)> = Vec::new();
        for (k, v) in table.drain(..) {
            match seen.get(k) {
                Some(&i) => out[i].1 = v,
                None => {
                    seen.insert(k, out.len());
                    out.push((k, v));
                }
            }
        }
        out
    }
}

impl fmt::Display for Experiment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Experiment {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Experiment::ALL
            .into_iter()
            .find(|e| e.name() == s.trim())
            .ok_or_else(|| CliError::UnknownExperiment(s.trim().to_string()))
    }
}

/// Comma-separated names of every experiment.
pub fn catalog_names() -> String {
    Experiment::ALL.map(Experiment::name).join(", ")
}

/// Ordered `key = value` pairs.
pub type Assignments = Vec<(String, String)>;

/// `key = value` pairs from a config file. Blank lines and `#` comments are
/// skipped; the special key `experiment` is returned separately.
pub fn parse_config_text(text: &str) -> Result<(Option<String>, Assignments), CliError> {
    let mut experiment = None;
    let mut pairs = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = split_assignment(line)
            .ok_or_else(|| CliError::Config(format!("line {}: expected `key = value`, got `{line}`", n + 1)))?;
        if key == "experiment" {
            experiment = Some(value);
        } else {
            pairs.push((key, value));
        }
    }
    Ok((experiment, pairs))
}

/// Splits `key = value` (also used for `--set key=value`).
pub fn split_assignment(s: &str) -> Option<(String, String)> {
    let (k, v) = s.split_once('=')?;
    let (k, v) = (k.trim(), v.trim());
    (!k.is_empty() && !v.is_empty()).then(|| (k.to_string(), v.to_string()))
}

/// Fully resolved configuration of one run.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub experiment: Experiment,
    params: BTreeMap<String, String>,
}

impl RunConfig {
    /// Defaults for `experiment`.
    pub fn new(experiment: Experiment) -> Self {
        let params = experiment.defaults().into_iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
        Self { experiment, params }
    }

    /// Applies layers in order, so later layers win.
    pub fn resolve<'a, I>(experiment: Experiment, layers: I) -> Result<Self, CliError>
    where
        I: IntoIterator<Item = &'a [(String, String)]>,
    {
        let mut cfg = Self::new(experiment);
        for layer in layers {
            for (k, v) in layer {
                cfg.set(k, v)?;
            }
        }
        Ok(cfg)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        match self.params.get_mut(key) {
            Some(slot) => {
                *slot = value.trim().to_string();
                Ok(())
            }
            None => Err(CliError::Config(format!(
                "unknown key `{key}` for {}; accepted keys: {}",
                self.experiment,
                self.params.keys().cloned().collect::<Vec<_>>().join(", ")
            ))),
        }
    }

    /// Resolved pairs in key order.
    pub fn entries(&self) -> impl Iterator<Item = (&str, &str)> {
        self.params.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub fn raw(&self, key: &str) -> Result<&str, CliError> {
        self.params
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| CliError::Config(format!("{} has no key `{key}`", self.experiment)))
    }

    pub fn get<T>(&self, key: &str) -> Result<T, CliError>
    where
        T: FromStr,
        T::Err: fmt::Display,
    {
        let raw = self.raw(key)?;
        raw.parse::<T>().map_err(|e| invalid(key, raw, e))
    }

    /// Comma-separated list, at least one element.
    pub fn list<T>(&self, key: &str) -> Result<Vec<T>, CliError>
    where
        T: FromStr,
        T::Err: fmt::Display,
    {
        let raw = self.raw(key)?;
        raw.split(',').map(|s| s.trim().parse::<T>().map_err(|e| invalid(key, raw, e))).collect()
    }

    /// A finite float.
    pub fn float(&self, key: &str) -> Result<f64, CliError> {
        let v: f64 = self.get(key)?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(invalid(key, self.raw(key)?, "not finite"))
        }
    }

    pub fn floats(&self, key: &str) -> Result<Vec<f64>, CliError> {
        let v: Vec<f64> = self.list(key)?;
        if v.iter().all(|x| x.is_finite()) {
            Ok(v)
        } else {
            Err(invalid(key, self.raw(key)?, "not finite"))
        }
    }

    /// `steps + 1` evenly spaced values from `key_min` to `key_max`.
    pub fn sweep(&self, key_min: &str, key_max: &str, key_steps: &str) -> Result<Vec<f64>, CliError> {
        let (a, b) = (self.float(key_min)?, self.float(key_max)?);
        let n: usize = self.get(key_steps)?;
        if n == 0 {
            return Err(invalid(key_steps, "0", "need at least one step"));
        }
        if !(b >= a) {
            return Err(CliError::Config(format!("{key_max} must not be below {key_min}")));
        }
        Ok(linspace(a, b, n))
    }
}

fn invalid(key: &str, value: &str, reason: impl fmt::Display) -> CliError {
    CliError::Config(format!("invalid value `{value}` for `{key}`: {reason}"))
}

/// `n + 1` evenly spaced points; the end point is exact.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..=n).map(|i| if i == n { b } else { a + (b - a) * i as f64 / n as f64 }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for e in Experiment::ALL {
            assert_eq!(e.name().parse::<Experiment>().unwrap(), e);
        }
        assert!(matches!("fig9".parse::<Experiment>(), Err(CliError::UnknownExperiment(_))));
    }

    #[test]
    fn defaults_have_unique_keys() {
        for e in Experiment::ALL {
            let d = e.defaults();
            let keys: std::collections::BTreeSet<_> = d.iter().map(|(k, _)| k).collect();
            assert_eq!(keys.len(), d.len(), "{e}");
        }
        let d: BTreeMap<_, _> = Experiment::DiscordSweep.defaults().into_iter().collect();
        assert_eq!(d["squeezing_r"], "0.5");
        assert_eq!(d["x12"], "0.05");
    }

    #[test]
    fn config_text() {
        let (exp, pairs) = parse_config_text("# c\n\nexperiment = phasecov-qsl\n kappa=2 \nl = 0.5\n").unwrap();
        assert_eq!(exp.as_deref(), Some("phasecov-qsl"));
        assert_eq!(pairs, vec![("kappa".into(), "2".into()), ("l".into(), "0.5".into())]);
        assert!(parse_config_text("kappa 2").is_err());
        assert!(parse_config_text("kappa =").is_err());
    }

    #[test]
    fn later_layers_win() {
        let file = vec![("kappa".to_string(), "2".to_string()), ("l".to_string(), "3".to_string())];
        let cli = vec![("kappa".to_string(), "5".to_string())];
        let cfg = RunConfig::resolve(Experiment::PhasecovVolume, [file.as_slice(), cli.as_slice()]).unwrap();
        assert_eq!(cfg.float("kappa").unwrap(), 5.0);
        assert_eq!(cfg.float("l").unwrap(), 3.0);
        assert_eq!(cfg.float("nu").unwrap(), 1.0);
        let bad = vec![("kapa".to_string(), "1".to_string())];
        assert!(RunConfig::resolve(Experiment::PhasecovVolume, [bad.as_slice()]).is_err());
    }

    #[test]
    fn typed_access() {
        let mut cfg = RunConfig::new(Experiment::TwoqubitQslDistance);
        assert_eq!(cfg.floats("temperature").unwrap(), vec![0.1, 1.0]);
        assert_eq!(cfg.sweep("x12_min", "x12_max", "x12_steps").unwrap().len(), 40);
        cfg.set("gamma1", "inf").unwrap();
        assert!(cfg.float("gamma1").is_err());
        cfg.set("qsl_nodes", "-3").unwrap();
        assert!(cfg.get::<usize>("qsl_nodes").is_err());
    }

    #[test]
    fn linspace_endpoints() {
        let v = linspace(0.0, 1.0, 19);
        assert_eq!(v.len(), 20);
        assert_eq!(v[0], 0.0);
        assert_eq!(v[19], 1.0);
    }
}
