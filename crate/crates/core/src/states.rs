//! Named initial states.

use core::fmt;
use core::str::FromStr;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, DensityMatrix, C64};

/// Description of a preparable state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum StateSpec {
    /// Two-qubit computational basis state; the two bits are `(a, b)`.
    Basis(u8, u8),
    /// `(|00⟩ + |11⟩)/√2`.
    Bell,
    /// `P |Bell⟩⟨Bell| + (1 − P) I/4`.
    Werner(f64),
    /// Single-qubit pure state `c0 |0⟩ + c1 |1⟩`, normalised on construction.
    Qubit(C64, C64),
}

impl StateSpec {
    pub fn dim(&self) -> usize {
        match self {
            StateSpec::Qubit(..) => 2,
            _ => 4,
        }
    }
}

impl fmt::Display for StateSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StateSpec::Basis(a, b) => write!(f, "{a}{b}"),
            StateSpec::Bell => f.write_str("bell"),
            StateSpec::Werner(p) => write!(f, "werner:{p}"),
            StateSpec::Qubit(c0, c1) if c0.im == 0.0 && c1.im == 0.0 => {
                write!(f, "qubit:{},{}", c0.re, c1.re)
            }
            StateSpec::Qubit(c0, c1) => {
                write!(f, "qubit:{}{:+}i,{}{:+}i", c0.re, c0.im, c1.re, c1.im)
            }
        }
    }
}

/// Accepts `00`, `01`, `10`, `11`, `bell`, `werner:P`, the single-qubit labels
/// `0`, `1`, `+`, `-`, and `qubit:a,b` with real amplitudes.
impl FromStr for StateSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let h = core::f64::consts::FRAC_1_SQRT_2;
        let spec = match s {
            "00" => StateSpec::Basis(0, 0),
            "01" => StateSpec::Basis(0, 1),
            "10" => StateSpec::Basis(1, 0),
            "11" => StateSpec::Basis(1, 1),
            "bell" => StateSpec::Bell,
            "0" => StateSpec::Qubit(C64::new(1.0, 0.0), C64::new(0.0, 0.0)),
            "1" => StateSpec::Qubit(C64::new(0.0, 0.0), C64::new(1.0, 0.0)),
            "+" => StateSpec::Qubit(C64::new(h, 0.0), C64::new(h, 0.0)),
            "-" => StateSpec::Qubit(C64::new(h, 0.0), C64::new(-h, 0.0)),
            _ => {
                if let Some(p) = s.strip_prefix("werner:") {
                    let p =
                        p.trim().parse::<f64>().map_err(|_| Error::InvalidArgument("werner weight is not a number"))?;
                    StateSpec::Werner(p)
                } else if let Some(amps) = s.strip_prefix("qubit:") {
                    let mut it = amps.split(',').map(|a| a.trim().parse::<f64>());
                    match (it.next(), it.next(), it.next()) {
                        (Some(Ok(a)), Some(Ok(b)), None) => StateSpec::Qubit(C64::new(a, 0.0), C64::new(b, 0.0)),
                        _ => return Err(Error::InvalidArgument("qubit state needs two real amplitudes")),
                    }
                } else {
                    return Err(Error::InvalidArgument("unknown state label"));
                }
            }
        };
        Ok(spec)
    }
}

/// Prepares the density matrix described by `spec`.
pub fn build_state(spec: &StateSpec) -> Result<DensityMatrix> {
    match *spec {
        StateSpec::Basis(a, b) => {
            if a > 1 || b > 1 {
                return Err(Error::InvalidArgument("basis labels are bits"));
            }
            let mut psi = [C64::new(0.0, 0.0); 4];
            psi[2 * a as usize + b as usize] = C64::new(1.0, 0.0);
            DensityMatrix::pure(&psi)
        }
        StateSpec::Bell => werner(1.0),
        StateSpec::Werner(p) => werner(p),
        StateSpec::Qubit(c0, c1) => {
            let norm = (c0.norm_sqr() + c1.norm_sqr()).sqrt();
            if !norm.is_finite() || norm == 0.0 {
                return Err(Error::InvalidArgument("qubit amplitudes must be finite and not both zero"));
            }
            DensityMatrix::pure(&[c0 / norm, c1 / norm])
        }
    }
}

/// Werner state with Bell weight `p ∈ [0, 1]`.
pub fn werner(p: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument("werner weight must lie in [0, 1]"));
    }
    let h = core::f64::consts::FRAC_1_SQRT_2;
    let bell = ComplexMatrix::projector(&[C64::new(h, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(h, 0.0)])?;
    let mixed = ComplexMatrix::identity(4)?.scale_real(0.25);
    DensityMatrix::new(bell.scale_real(p) + mixed.scale_real(1.0 - p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::string::ToString;

    #[test]
    fn parses_labels() {
        assert_eq!("01".parse::<StateSpec>().unwrap(), StateSpec::Basis(0, 1));
        assert_eq!("werner:0.25".parse::<StateSpec>().unwrap(), StateSpec::Werner(0.25));
        assert!("werner:x".parse::<StateSpec>().is_err());
        assert!("2".parse::<StateSpec>().is_err());
        let q: StateSpec = "qubit:0.5,0.8660254037844386".parse().unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(q.to_string().parse::<StateSpec>().unwrap(), q);
    }

    #[test]
    fn basis_state_ordering() {
        let rho = build_state(&StateSpec::Basis(0, 1)).unwrap();
        assert_eq!(rho.matrix()[(1, 1)], C64::new(1.0, 0.0));
        assert_eq!(rho.matrix().trace(), C64::new(1.0, 0.0));
    }

    #[test]
    fn werner_limits() {
        let w0 = werner(0.0).unwrap();
        assert!(w0.matrix().max_abs_diff(&ComplexMatrix::identity(4).unwrap().scale_real(0.25)) < 1e-15);
        let w1 = werner(1.0).unwrap();
        assert!((w1.matrix()[(0, 3)].re - 0.5).abs() < 1e-15);
        assert!(werner(1.01).is_err());
        assert!(werner(-0.1).is_err());
        let ev = werner(0.3).unwrap().eigenvalues();
        assert!((ev[3] - (1.0 + 0.9) / 4.0).abs() < 1e-12);
        assert!((ev[0] - 0.7 / 4.0).abs() < 1e-12);
    }

    #[test]
    fn qubit_amplitudes_are_normalised() {
        let rho = build_state(&StateSpec::Qubit(C64::new(1.0, 0.0), C64::new(1.0, 0.0))).unwrap();
        assert!((rho.matrix()[(0, 1)].re - 0.5).abs() < 1e-15);
    }
}
