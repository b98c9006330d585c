use core::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    InvalidArgument(&'static str),
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    NonFinite,
    NotHermitian(f64),
    TraceNotUnity(f64),
    NotPositive(f64),
    /// A time-dependent rate hit a pole of its closed form.
    Pole {
        t: f64,
    },
    /// Adaptive integration could not keep the step above its floor.
    IntegrationFailure {
        last_good_time: f64,
    },
    /// The time-averaged speed vanished so no speed-limit time exists.
    StationaryTrajectory,
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NonFinite => f.write_str("matrix has non-finite entries"),
            Error::NotHermitian(dev) => write!(f, "matrix is not Hermitian (deviation {dev:e})"),
            Error::TraceNotUnity(tr) => write!(f, "trace is not one (got {tr})"),
            Error::NotPositive(min) => {
                write!(f, "matrix is not positive semidefinite (min eigenvalue {min:e})")
            }
            Error::Pole { t } => write!(f, "rate function has a pole at t = {t}"),
            Error::IntegrationFailure { last_good_time } => {
                write!(f, "step size underflow; last good time {last_good_time}")
            }
            Error::StationaryTrajectory => f.write_str("stationary trajectory: time-averaged speed is zero"),
        }
    }
}

impl core::error::Error for Error {}
