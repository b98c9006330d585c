use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use super::eigen::hermitian_eigenvalues;
use super::matrix::{ComplexMatrix, C64};
use crate::error::{Error, Result};

/// Validation threshold used when no other tolerance is requested.
pub const DEFAULT_TOLERANCE: f64 = 1e-8;

/// One half of a two-qubit system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// A validated quantum state: Hermitian, unit trace and positive
/// semidefinite, each within `tolerance`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    tolerance: f64,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        Self::with_tolerance(matrix, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(matrix: ComplexMatrix, tolerance: f64) -> Result<Self> {
        if !(tolerance >= 0.0 && tolerance.is_finite()) {
            return Err(Error::InvalidArgument("tolerance must be finite and non-negative"));
        }
        if !matrix.is_finite() {
            return Err(Error::NonFinite);
        }
        let defect = matrix.hermiticity_defect();
        if defect > tolerance {
            return Err(Error::NotHermitian(defect));
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > tolerance || tr.im.abs() > tolerance {
            return Err(Error::TraceNotUnity(tr.re));
        }
        let min = hermitian_eigenvalues(&matrix)?[0];
        if min < -tolerance {
            return Err(Error::NotPositive(min));
        }
        Ok(Self { matrix, tolerance })
    }

    /// `|ψ⟩⟨ψ|` for a normalized `ψ` of length 2 or 4.
    pub fn pure(psi: &[C64]) -> Result<Self> {
        Self::new(ComplexMatrix::projector(psi)?)
    }

    /// `I / dim`.
    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        Self::new(ComplexMatrix::identity(dim)?.scale_real(1.0 / dim as f64))
    }

    #[inline]
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    #[inline]
    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.matrix).expect("validated density matrix is Hermitian")
    }

    /// Von Neumann entropy in bits, with `0·log 0 = 0`.
    pub fn von_neumann_entropy(&self) -> f64 {
        let s: f64 = self.eigenvalues().into_iter().filter(|&l| l > 0.0).map(|l| -l * l.log2()).sum();
        s.clamp(0.0, (self.dim() as f64).log2())
    }

    /// Reduced state of one qubit of a two-qubit state.
    pub fn partial_trace(&self, keep: Subsystem) -> Result<DensityMatrix> {
        if self.dim() != 4 {
            return Err(Error::DimensionMismatch { expected: 4, found: self.dim() });
        }
        let m = &self.matrix;
        let mut out = ComplexMatrix::zeros(2)?;
        for i in 0..2 {
            for j in 0..2 {
                out[(i, j)] = (0..2)
                    .map(|k| match keep {
                        Subsystem::A => m[(2 * i + k, 2 * j + k)],
                        Subsystem::B => m[(2 * k + i, 2 * k + j)],
                    })
                    .sum();
            }
        }
        DensityMatrix::with_tolerance(out, self.tolerance)
    }

    /// Bloch vector `(Tr σ_x ρ, Tr σ_y ρ, Tr σ_z ρ)` of a qubit state.
    pub fn bloch_vector(&self) -> Result<[f64; 3]> {
        if self.dim() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, found: self.dim() });
        }
        let m = &self.matrix;
        let off = m[(1, 0)];
        Ok([2.0 * off.re, 2.0 * off.im, (m[(0, 0)] - m[(1, 1)]).re])
    }

    /// Qubit state from a Bloch vector with `|r| ≤ 1`.
    pub fn from_bloch(r: [f64; 3]) -> Result<Self> {
        let [x, y, z] = r;
        let m = ComplexMatrix::from_rows(
            2,
            &[
                C64::new(0.5 * (1.0 + z), 0.0),
                C64::new(0.5 * x, -0.5 * y),
                C64::new(0.5 * x, 0.5 * y),
                C64::new(0.5 * (1.0 - z), 0.0),
            ],
        )?;
        Self::new(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::tensor_product;

    fn werner(p: f64) -> DensityMatrix {
        let s = core::f64::consts::FRAC_1_SQRT_2;
        let bell =
            ComplexMatrix::projector(&[C64::new(s, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(s, 0.0)])
                .unwrap();
        let mix = ComplexMatrix::identity(4).unwrap().scale_real(0.25);
        DensityMatrix::new(bell.scale_real(p) + mix.scale_real(1.0 - p)).unwrap()
    }

    #[test]
    fn werner_half_spectrum_and_entropy() {
        let rho = werner(0.5);
        let ev = rho.eigenvalues();
        let expected = [0.125, 0.125, 0.125, 0.625];
        for (a, b) in ev.iter().zip(expected) {
            assert!((a - b).abs() < 1e-12, "{ev:?}");
        }
        // −(5/8)log₂(5/8) − (3/8)log₂(1/8)
        assert!((rho.von_neumann_entropy() - 1.548_794_940_695_398_5).abs() < 1e-6);
    }

    #[test]
    fn werner_marginals_are_maximally_mixed() {
        let rho = werner(0.7);
        let half = DensityMatrix::maximally_mixed(2).unwrap();
        for keep in [Subsystem::A, Subsystem::B] {
            let r = rho.partial_trace(keep).unwrap();
            assert!(r.matrix().max_abs_diff(half.matrix()) < 1e-15);
        }
    }

    #[test]
    fn basis_state_marginal() {
        let p0 = ComplexMatrix::diagonal(&[1.0, 0.0]).unwrap();
        let p1 = ComplexMatrix::diagonal(&[0.0, 1.0]).unwrap();
        let rho = DensityMatrix::new(tensor_product(&p0, &p1).unwrap()).unwrap();
        assert_eq!(rho.partial_trace(Subsystem::A).unwrap().matrix(), &p0);
        assert_eq!(rho.partial_trace(Subsystem::B).unwrap().matrix(), &p1);
    }

    #[test]
    fn entropy_endpoints() {
        let pure = DensityMatrix::from_bloch([0.0, 0.0, 1.0]).unwrap();
        assert_eq!(pure.von_neumann_entropy(), 0.0);
        let mixed = DensityMatrix::maximally_mixed(2).unwrap();
        assert!((mixed.von_neumann_entropy() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn validation_failures() {
        let not_unit = ComplexMatrix::identity(2).unwrap();
        assert!(matches!(DensityMatrix::new(not_unit), Err(Error::TraceNotUnity(_))));
        let negative = ComplexMatrix::diagonal(&[1.5, -0.5]).unwrap();
        assert!(matches!(DensityMatrix::new(negative), Err(Error::NotPositive(_))));
        let mut skew = ComplexMatrix::diagonal(&[0.5, 0.5]).unwrap();
        skew[(0, 1)] = C64::new(0.1, 0.0);
        assert!(matches!(DensityMatrix::new(skew), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn bloch_roundtrip() {
        let r = [0.3, -0.2, 0.5];
        let rho = DensityMatrix::from_bloch(r).unwrap();
        let back = rho.bloch_vector().unwrap();
        for (a, b) in r.iter().zip(back) {
            assert!((a - b).abs() < 1e-15);
        }
    }
}
