//! Quantum discord of two-qubit states with rank-one projective
//! measurements on one side.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, pauli, tensor_product, Axis, ComplexMatrix, DensityMatrix, Subsystem, C64};
use crate::optimize::nelder_mead;

/// Branches with probability below this contribute nothing.
const MIN_BRANCH_PROBABILITY: f64 = 1e-12;
const CLAMP: f64 = 1e-9;

/// Bloch direction `n̂` of a projective qubit measurement.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasurementDirection {
    pub theta: f64,
    pub phi: f64,
}

impl MeasurementDirection {
    /// Canonical angles `θ ∈ [0, π]`, `φ ∈ [0, 2π)` for an arbitrary pair.
    pub fn new(theta: f64, phi: f64) -> Self {
        let n = [theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()];
        let theta = n[2].clamp(-1.0, 1.0).acos();
        let mut phi = n[1].atan2(n[0]);
        if phi < 0.0 {
            phi += 2.0 * PI;
        }
        if phi >= 2.0 * PI {
            phi = 0.0;
        }
        Self { theta, phi }
    }

    pub fn unit_vector(&self) -> [f64; 3] {
        [self.theta.sin() * self.phi.cos(), self.theta.sin() * self.phi.sin(), self.theta.cos()]
    }

    /// The two projectors `(I ± n̂·σ)/2`.
    pub fn projectors(&self) -> [ComplexMatrix; 2] {
        let [x, y, z] = self.unit_vector();
        let n_sigma = pauli(Axis::X).scale_real(x) + pauli(Axis::Y).scale_real(y) + pauli(Axis::Z).scale_real(z);
        let id = pauli(Axis::Identity);
        [(id + n_sigma).scale_real(0.5), (id - n_sigma).scale_real(0.5)]
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiscordResult {
    /// In bits.
    pub discord: f64,
    pub argmin_direction: MeasurementDirection,
    /// Spread of the objective over the final refinement simplex.
    pub refinement_residual: f64,
    /// Best value found on the coarse direction grid alone.
    pub coarse_conditional_entropy: f64,
    pub conditional_entropy: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiscordOptions {
    pub measured: Subsystem,
    /// Polar nodes over the half sphere `θ ∈ [0, π/2]`.
    pub n_theta: usize,
    pub n_phi: usize,
}

impl Default for DiscordOptions {
    fn default() -> Self {
        Self { measured: Subsystem::B, n_theta: 24, n_phi: 48 }
    }
}

fn entropy_bits(m: &ComplexMatrix) -> Result<f64> {
    Ok(hermitian_eigenvalues(m)?.into_iter().filter(|&l| l > 0.0).map(|l| -l * l.log2()).sum())
}

fn reduce(m: &ComplexMatrix, keep: Subsystem) -> ComplexMatrix {
    let mut out = [C64::new(0.0, 0.0); 4];
    for i in 0..2 {
        for j in 0..2 {
            out[2 * i + j] = match keep {
                Subsystem::A => m[(2 * i, 2 * j)] + m[(2 * i + 1, 2 * j + 1)],
                Subsystem::B => m[(i, j)] + m[(2 + i, 2 + j)],
            };
        }
    }
    ComplexMatrix::from_rows(2, &out).unwrap_or_else(|_| unreachable!())
}

/// Average entropy of the unmeasured qubit after measuring `measured` along `n`.
pub fn conditional_entropy_on(rho: &DensityMatrix, n: MeasurementDirection, measured: Subsystem) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: rho.dim() });
    }
    let id = pauli(Axis::Identity);
    let other = match measured {
        Subsystem::A => Subsystem::B,
        Subsystem::B => Subsystem::A,
    };
    let mut total = 0.0;
    for proj in n.projectors() {
        let lift = match measured {
            Subsystem::A => tensor_product(&proj, &id)?,
            Subsystem::B => tensor_product(&id, &proj)?,
        };
        let post = lift * *rho.matrix() * lift;
        let p = post.trace().re;
        if p < MIN_BRANCH_PROBABILITY {
            continue;
        }
        let reduced = reduce(&post, other).scale_real(1.0 / p).hermitian_part();
        total += p * entropy_bits(&reduced)?;
    }
    Ok(total)
}

/// [`conditional_entropy_on`] with the measurement on qubit B.
pub fn conditional_entropy(rho: &DensityMatrix, n: MeasurementDirection) -> Result<f64> {
    conditional_entropy_on(rho, n, Subsystem::B)
}

pub fn quantum_discord(rho: &DensityMatrix) -> Result<DiscordResult> {
    quantum_discord_with(rho, &DiscordOptions::default())
}

/// Discord `S(M) − S(AB) + min_n S(·|Π_n)` where `M` is the measured qubit.
///
/// The minimum is searched on a half-sphere grid (the projector pair is
/// invariant under `n̂ → −n̂`) and polished with a simplex search started
/// at the best grid node.
pub fn quantum_discord_with(rho: &DensityMatrix, opts: &DiscordOptions) -> Result<DiscordResult> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: rho.dim() });
    }
    if opts.n_theta < 2 || opts.n_phi < 1 {
        return Err(Error::InvalidArgument("direction grid too small"));
    }
    let s_measured = rho.partial_trace(opts.measured)?.von_neumann_entropy();
    let s_joint = rho.von_neumann_entropy();

    let d_theta = FRAC_PI_2 / (opts.n_theta - 1) as f64;
    let d_phi = 2.0 * PI / opts.n_phi as f64;
    let mut best = (f64::INFINITY, MeasurementDirection { theta: 0.0, phi: 0.0 });
    for i in 0..opts.n_theta {
        // the pole needs a single azimuth
        let n_phi = if i == 0 { 1 } else { opts.n_phi };
        for j in 0..n_phi {
            let dir = MeasurementDirection { theta: i as f64 * d_theta, phi: j as f64 * d_phi };
            let s = conditional_entropy_on(rho, dir, opts.measured)?;
            if s < best.0 {
                best = (s, dir);
            }
        }
    }
    let coarse = best.0;

    let mut failure = None;
    let refined = nelder_mead(
        |x| match conditional_entropy_on(rho, MeasurementDirection { theta: x[0], phi: x[1] }, opts.measured) {
            Ok(v) => v,
            Err(e) => {
                failure = Some(e);
                f64::INFINITY
            }
        },
        &[best.1.theta, best.1.phi],
        0.5 * d_theta.min(d_phi),
        1e-14,
        400,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    if refined.value < best.0 {
        best = (refined.value, MeasurementDirection::new(refined.point[0], refined.point[1]));
    }

    let mut discord = s_measured - s_joint + best.0;
    if discord.abs() < CLAMP {
        discord = 0.0;
    }
    Ok(DiscordResult {
        discord,
        argmin_direction: MeasurementDirection::new(best.1.theta, best.1.phi),
        refinement_residual: refined.residual,
        coarse_conditional_entropy: coarse,
        conditional_entropy: best.0,
    })
}

/// Direction-grid minimum without refinement, evaluated on explicit
/// directions; useful as an independent cross-check.
pub fn conditional_entropy_min_over(rho: &DensityMatrix, directions: &[MeasurementDirection]) -> Result<f64> {
    let values: Result<Vec<f64>> = directions.iter().map(|&d| conditional_entropy(rho, d)).collect();
    Ok(values?.into_iter().fold(f64::INFINITY, f64::min))
}
