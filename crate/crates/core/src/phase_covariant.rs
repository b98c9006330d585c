//! Single-qubit phase-covariant evolution with non-Markovian amplitude
//! damping (NMAD) and non-Markovian random telegraph noise (NMRTN)
//! dephasing, with the absorption rate fixed to zero.
//!
//! The rates `γ₂`, `γ₃` have poles in their non-Markovian regimes, so they
//! are never integrated numerically. The state map goes through pole-free
//! closed forms instead:
//!
//! * `h(t) = e^{−lt/2}[cosh(zt/2) + (l/z) sinh(zt/2)] = e^{−Γ₂/4}`, `z = √(l² − 2κl)`
//! * `q(t) = e^{−ηt}[cos(μηt) + sin(μηt)/μ] = e^{−Γ₃}`, `μ = √((2ν/η)² − 1)`
//!
//! giving `λ_z = h⁴`, `G = λ_z − 1` and `λ_x = h²q²`. Both `z` and `μ` may be
//! imaginary; all branches are handled in real arithmetic through the entire
//! functions `C(u) = cos √u` and `S(u) = sin √u / √u` of `u = (argument)²`.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, DensityMatrix, C64};

const SERIES_THRESHOLD: f64 = 1e-8;
const POLE_TOLERANCE: f64 = 1e-14;

/// `(e^{−a} C(u), e^{−a} S(u))`.
fn damped_cs(a: f64, u: f64) -> (f64, f64) {
    if u.abs() < SERIES_THRESHOLD {
        let d = (-a).exp();
        return (d * (1.0 - u / 2.0 + u * u / 24.0), d * (1.0 - u / 6.0 + u * u / 120.0));
    }
    if u > 0.0 {
        let s = u.sqrt();
        let d = (-a).exp();
        (d * s.cos(), d * s.sin() / s)
    } else {
        let b = (-u).sqrt();
        let up = (b - a).exp();
        let down = (-b - a).exp();
        (0.5 * (up + down), 0.5 * (up - down) / b)
    }
}

fn check_time(t: f64) -> Result<()> {
    if t.is_finite() && t >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument("time must be finite and non-negative"))
    }
}

/// `h(t)` and `ḣ(t)` of the amplitude-damping closed form.
fn damping_envelope(t: f64, kappa: f64, l: f64) -> (f64, f64) {
    let u = (2.0 * kappa * l - l * l) * t * t / 4.0;
    let (c, s) = damped_cs(l * t / 2.0, u);
    (c + 0.5 * l * t * s, -0.5 * kappa * l * t * s)
}

/// `q(t)` and `q̇(t)` of the telegraph-noise closed form.
fn dephasing_envelope(t: f64, nu: f64, eta: f64) -> (f64, f64) {
    let u = (4.0 * nu * nu - eta * eta) * t * t;
    let (c, s) = damped_cs(eta * t, u);
    (c + eta * t * s, -4.0 * nu * nu * t * s)
}

/// Emission rate `γ₂(t) = 4κl sinh(zt/2) / (z cosh(zt/2) + l sinh(zt/2))`.
///
/// Returns [`Error::Pole`] where the denominator vanishes (only possible
/// for `l < 2κ`).
pub fn gamma2(t: f64, kappa: f64, l: f64) -> Result<f64> {
    check_time(t)?;
    let u = (2.0 * kappa * l - l * l) * t * t / 4.0;
    let (c, s) = damped_cs(0.0, u);
    let den = c + 0.5 * l * t * s;
    if den.abs() <= POLE_TOLERANCE * (c.abs() + (0.5 * l * t * s).abs()) {
        return Err(Error::Pole { t });
    }
    Ok(2.0 * kappa * l * t * s / den)
}

/// Dephasing rate `γ₃(t) = η(μ²+1) sin(μηt) / (μ cos(μηt) + sin(μηt))`.
///
/// Returns [`Error::Pole`] where the denominator vanishes (only possible
/// for `2ν > η`).
pub fn gamma3(t: f64, nu: f64, eta: f64) -> Result<f64> {
    check_time(t)?;
    let u = (4.0 * nu * nu - eta * eta) * t * t;
    let (c, s) = damped_cs(0.0, u);
    let den = c + eta * t * s;
    if den.abs() <= POLE_TOLERANCE * (c.abs() + (eta * t * s).abs()) {
        return Err(Error::Pole { t });
    }
    Ok(4.0 * nu * nu * t * s / den)
}

/// Channel parameters, all rates in inverse time.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhaseCovariantParams {
    /// NMAD qubit–environment coupling κ.
    pub kappa: f64,
    /// NMAD spectral width l.
    pub l: f64,
    /// NMRTN coupling ν.
    pub nu: f64,
    /// NMRTN spectral bandwidth η.
    pub eta: f64,
}

impl PhaseCovariantParams {
    pub fn new(kappa: f64, l: f64, nu: f64, eta: f64) -> Result<Self> {
        let finite = [kappa, l, nu, eta].iter().all(|x| x.is_finite());
        if !finite || kappa < 0.0 || nu < 0.0 {
            return Err(Error::InvalidArgument("couplings must be finite and non-negative"));
        }
        if !(l > 0.0 && eta > 0.0) {
            return Err(Error::InvalidArgument("spectral widths must be positive"));
        }
        Ok(Self { kappa, l, nu, eta })
    }
}

/// Accumulated decoherence at one instant.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DecoherenceFunctions {
    pub t: f64,
    /// `Γ₂(t) = −4 ln|h(t)|`.
    pub gamma2_integral: f64,
    /// `Γ₃(t) = −ln|q(t)|`.
    pub gamma3_integral: f64,
    pub g: f64,
    pub lambda_x: f64,
    pub lambda_z: f64,
    /// The envelopes `h` and `q` themselves (may be negative).
    pub h: f64,
    pub q: f64,
}

/// Time derivatives of the decoherence functions.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DecoherenceRates {
    pub d_g: f64,
    pub d_lambda_x: f64,
    pub d_lambda_z: f64,
}

pub fn decoherence_functions(t: f64, params: &PhaseCovariantParams) -> Result<DecoherenceFunctions> {
    check_time(t)?;
    let (h, _) = damping_envelope(t, params.kappa, params.l);
    let (q, _) = dephasing_envelope(t, params.nu, params.eta);
    let h2 = h * h;
    let lambda_z = h2 * h2;
    Ok(DecoherenceFunctions {
        t,
        gamma2_integral: -4.0 * h.abs().ln(),
        gamma3_integral: -q.abs().ln(),
        g: lambda_z - 1.0,
        lambda_x: h2 * q * q,
        lambda_z,
        h,
        q,
    })
}

/// Closed-form derivatives, finite even where `γ₂` or `γ₃` have poles.
pub fn decoherence_rates(t: f64, params: &PhaseCovariantParams) -> Result<DecoherenceRates> {
    check_time(t)?;
    let (h, dh) = damping_envelope(t, params.kappa, params.l);
    let (q, dq) = dephasing_envelope(t, params.nu, params.eta);
    let d_lambda_z = 4.0 * h * h * h * dh;
    let d_lambda_x = 2.0 * h * dh * q * q + 2.0 * h * h * q * dq;
    Ok(DecoherenceRates { d_g: d_lambda_z, d_lambda_x, d_lambda_z })
}

fn bloch_matrix(diag: f64, off_scale: f64, x: f64, y: f64) -> ComplexMatrix {
    ComplexMatrix::from_rows(
        2,
        &[
            C64::new(0.5 * diag, 0.0),
            C64::new(0.5 * off_scale * x, -0.5 * off_scale * y),
            C64::new(0.5 * off_scale * x, 0.5 * off_scale * y),
            C64::new(-0.5 * diag, 0.0),
        ],
    )
    .expect("finite 2x2 entries")
}

/// `ρ(t) = ½[[1 + G + zλ_z, λ_x(x − iy)], [λ_x(x + iy), 1 − G − zλ_z]]`.
pub fn evolve_phase_covariant(rho0: &DensityMatrix, t: f64, params: &PhaseCovariantParams) -> Result<DensityMatrix> {
    let [x, y, z] = rho0.bloch_vector()?;
    if t == 0.0 {
        return Ok(*rho0);
    }
    let d = decoherence_functions(t, params)?;
    let m = bloch_matrix(d.g + z * d.lambda_z, d.lambda_x, x, y) + ComplexMatrix::identity(2)?.scale_real(0.5);
    DensityMatrix::with_tolerance(m, rho0.tolerance())
}

/// `dρ/dt` of [`evolve_phase_covariant`] at time `t`.
pub fn phase_covariant_derivative(
    rho0: &DensityMatrix,
    t: f64,
    params: &PhaseCovariantParams,
) -> Result<ComplexMatrix> {
    let [x, y, z] = rho0.bloch_vector()?;
    let r = decoherence_rates(t, params)?;
    Ok(bloch_matrix(r.d_g + z * r.d_lambda_z, r.d_lambda_x, x, y))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    Markovian,
    NonMarkovian,
    Boundary,
}

/// Regimes of the two channels: NMAD is non-Markovian for `l < 2κ`,
/// NMRTN for `(2ν/η)² > 1`.
pub fn classify_regime(params: &PhaseCovariantParams) -> (Regime, Regime) {
    let classify = |lhs: f64, rhs: f64| {
        if lhs < rhs {
            Regime::NonMarkovian
        } else if lhs > rhs {
            Regime::Markovian
        } else {
            Regime::Boundary
        }
    };
    (classify(params.l, 2.0 * params.kappa), classify(params.eta, 2.0 * params.nu))
}
