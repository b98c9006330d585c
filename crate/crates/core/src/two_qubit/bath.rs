use core::fmt;
use core::str::FromStr;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::C64;

/// Sign of the `sin x / x³` term inside the dissipative coupling `F(x)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum FSign {
    /// `cos x/x² − sin x/x³`, which tends to `−1/3` so that `F(0⁺) = 1`.
    #[default]
    Corrected,
    /// `cos x/x² + sin x/x³`, kept for comparison; diverges as `x → 0`.
    PaperPrinted,
}

/// Overall prefactor of the coherent dipole coupling `Ω₁₂`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum OmegaPrefactor {
    /// `(3/4)√(Γ₁Γ₂/2)`.
    #[default]
    Paper,
    /// `(3/4)√(Γ₁Γ₂)`.
    Standard,
}

impl FromStr for FSign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "corrected" => Ok(FSign::Corrected),
            "paper-printed" => Ok(FSign::PaperPrinted),
            _ => Err(Error::InvalidArgument("f-sign must be `corrected` or `paper-printed`")),
        }
    }
}

impl fmt::Display for FSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FSign::Corrected => "corrected",
            FSign::PaperPrinted => "paper-printed",
        })
    }
}

impl FromStr for OmegaPrefactor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "paper" => Ok(OmegaPrefactor::Paper),
            "standard" => Ok(OmegaPrefactor::Standard),
            _ => Err(Error::InvalidArgument("omega-prefactor must be `paper` or `standard`")),
        }
    }
}

impl fmt::Display for OmegaPrefactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OmegaPrefactor::Paper => "paper",
            OmegaPrefactor::Standard => "standard",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct CouplingConvention {
    pub f_sign: FSign,
    pub omega_prefactor: OmegaPrefactor,
}

/// Bath and geometry parameters in units with `ħ = k_B = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BathGeometryParams {
    pub temperature: f64,
    pub squeezing_r: f64,
    pub squeezing_phase: f64,
    pub omega: [f64; 2],
    pub gamma: [f64; 2],
    /// Inter-qubit distance times the resonant wavenumber, `k₀r₁₂`.
    pub x12: f64,
    /// Cosine between the dipole moment and the separation vector.
    pub mu_dot_r: f64,
    pub convention: CouplingConvention,
}

impl Default for BathGeometryParams {
    fn default() -> Self {
        Self {
            temperature: 1.0,
            squeezing_r: -0.2,
            squeezing_phase: 0.0,
            omega: [1.0, 1.0],
            gamma: [0.05, 0.05],
            x12: 0.1,
            mu_dot_r: 0.0,
            convention: CouplingConvention::default(),
        }
    }
}

impl BathGeometryParams {
    pub fn validate(&self) -> Result<()> {
        let finite = [self.temperature, self.squeezing_r, self.squeezing_phase, self.x12, self.mu_dot_r]
            .iter()
            .chain(&self.omega)
            .chain(&self.gamma)
            .all(|v| v.is_finite());
        if !finite {
            return Err(Error::NonFinite);
        }
        if self.temperature < 0.0 {
            return Err(Error::InvalidArgument("temperature must be non-negative"));
        }
        if self.gamma.iter().any(|&g| g <= 0.0) {
            return Err(Error::InvalidArgument("emission rates must be positive"));
        }
        if self.omega.iter().any(|&w| w <= 0.0) {
            return Err(Error::InvalidArgument("qubit frequencies must be positive"));
        }
        if self.x12 <= 0.0 {
            return Err(Error::InvalidArgument("inter-qubit distance must be positive"));
        }
        if self.mu_dot_r.abs() > 1.0 {
            return Err(Error::InvalidArgument("mu_dot_r must lie in [-1, 1]"));
        }
        Ok(())
    }

    /// Mean transition frequency `(ω₁ + ω₂)/2`.
    pub fn omega0(&self) -> f64 {
        0.5 * (self.omega[0] + self.omega[1])
    }

    /// The same system with the qubit labels exchanged.
    pub fn swapped(&self) -> Self {
        Self { omega: [self.omega[1], self.omega[0]], gamma: [self.gamma[1], self.gamma[0]], ..*self }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DerivedCoefficients {
    pub n_th: f64,
    pub n_e: f64,
    pub m_e: C64,
    pub f12: f64,
    pub gamma12: f64,
    pub omega12: f64,
}

/// Bose–Einstein occupation `1/(e^{ω/T} − 1)`; exactly zero at `T = 0`.
pub fn planck_occupation(omega0: f64, temperature: f64) -> Result<f64> {
    if !(omega0 > 0.0) || !(temperature >= 0.0) || !temperature.is_finite() {
        return Err(Error::InvalidArgument("need omega0 > 0 and finite T >= 0"));
    }
    if temperature == 0.0 {
        return Ok(0.0);
    }
    Ok(1.0 / (omega0 / temperature).exp_m1())
}

/// Effective bath moments `(N_e, M_e)` of a squeezed thermal field.
pub fn squeezed_moments(n_th: f64, r: f64, phi: f64) -> (f64, C64) {
    let (s, c) = (r.sinh(), r.cosh());
    let n_e = n_th * (c * c + s * s) + s * s;
    let m_e = C64::from_polar(1.0, phi) * (-0.5 * (2.0 * r).sinh() * (2.0 * n_th + 1.0));
    (n_e, m_e)
}

/// `cos x/x² ∓ sin x/x³`, with a series near the origin for the corrected sign.
fn f_bracket(x: f64, sign: FSign) -> f64 {
    match sign {
        FSign::Corrected if x < 1e-2 => {
            let x2 = x * x;
            -1.0 / 3.0 + x2 / 30.0 - x2 * x2 / 840.0 + x2 * x2 * x2 / 45360.0
        }
        FSign::Corrected => x.cos() / (x * x) - x.sin() / (x * x * x),
        FSign::PaperPrinted => x.cos() / (x * x) + x.sin() / (x * x * x),
    }
}

/// Normalised dissipative coupling `F(x)` between two dipoles at
/// dimensionless separation `x = k₀r₁₂`.
pub fn coupling_f(x: f64, mu_dot_r: f64, sign: FSign) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::InvalidArgument("x12 must be positive and finite"));
    }
    let a2 = mu_dot_r * mu_dot_r;
    let sinc = if x < 1e-4 { 1.0 - x * x / 6.0 } else { x.sin() / x };
    Ok(1.5 * ((1.0 - a2) * sinc + (1.0 - 3.0 * a2) * f_bracket(x, sign)))
}

/// Coherent dipole–dipole coupling `Ω₁₂`.
pub fn coupling_omega(x: f64, mu_dot_r: f64, gamma: [f64; 2], prefactor: OmegaPrefactor) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::InvalidArgument("x12 must be positive and finite"));
    }
    let a2 = mu_dot_r * mu_dot_r;
    let scale = match prefactor {
        OmegaPrefactor::Paper => 0.75 * (gamma[0] * gamma[1] / 2.0).sqrt(),
        OmegaPrefactor::Standard => 0.75 * (gamma[0] * gamma[1]).sqrt(),
    };
    let (s, c) = (x.sin(), x.cos());
    Ok(scale * ((a2 - 1.0) * c / x + (1.0 - 3.0 * a2) * (s / (x * x) + c / (x * x * x))))
}

pub fn collective_coefficients(params: &BathGeometryParams) -> Result<DerivedCoefficients> {
    params.validate()?;
    let n_th = planck_occupation(params.omega0(), params.temperature)?;
    let (n_e, m_e) = squeezed_moments(n_th, params.squeezing_r, params.squeezing_phase);
    let f12 = coupling_f(params.x12, params.mu_dot_r, params.convention.f_sign)?;
    let gamma12 = (params.gamma[0] * params.gamma[1]).sqrt() * f12;
    let omega12 = coupling_omega(params.x12, params.mu_dot_r, params.gamma, params.convention.omega_prefactor)?;
    Ok(DerivedCoefficients { n_th, n_e, m_e, f12, gamma12, omega12 })
}
