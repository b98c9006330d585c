use crate::error::{Error, Result};
use crate::linalg::{pauli, tensor_product, Axis, ComplexMatrix, C64};

use super::bath::{collective_coefficients, BathGeometryParams, DerivedCoefficients};

fn on_qubit(op: Axis, qubit: usize) -> ComplexMatrix {
    let id = pauli(Axis::Identity);
    let a = pauli(op);
    let pair = if qubit == 0 { (a, id) } else { (id, a) };
    // both factors are 2×2, so the product always exists
    tensor_product(&pair.0, &pair.1).unwrap_or_else(|_| unreachable!())
}

/// `S₊ = |e⟩⟨g|` acting on qubit `qubit` (0 or 1) of the pair.
pub fn raising(qubit: usize) -> ComplexMatrix {
    on_qubit(Axis::Plus, qubit)
}

/// `S₋ = |g⟩⟨e|` acting on qubit `qubit` of the pair.
pub fn lowering(qubit: usize) -> ComplexMatrix {
    on_qubit(Axis::Minus, qubit)
}

/// `S_z = (|e⟩⟨e| − |g⟩⟨g|)/2` acting on qubit `qubit` of the pair.
pub fn sz(qubit: usize) -> ComplexMatrix {
    on_qubit(Axis::Z, qubit).scale_real(0.5)
}

/// Right-hand side of the two-qubit master equation, precomputed for one
/// parameter set.
///
/// Besides the direct operator form, the generator is available as a
/// 16×16 superoperator acting on row-major `vec(ρ)`.
#[derive(Clone, Debug)]
pub struct TwoQubitGenerator {
    params: BathGeometryParams,
    coeffs: DerivedCoefficients,
    hamiltonian: ComplexMatrix,
    gamma: [[f64; 2]; 2],
    up: [ComplexMatrix; 2],
    down: [ComplexMatrix; 2],
    liouvillian: [[C64; 16]; 16],
}

impl TwoQubitGenerator {
    pub fn new(params: &BathGeometryParams) -> Result<Self> {
        let coeffs = collective_coefficients(params)?;
        Ok(Self::with_coefficients(params, coeffs))
    }

    /// Uses externally supplied coefficients, e.g. to explore values outside
    /// the physical parametrisation.
    pub fn with_coefficients(params: &BathGeometryParams, coeffs: DerivedCoefficients) -> Self {
        let up = [raising(0), raising(1)];
        let down = [lowering(0), lowering(1)];
        let exchange = up[0] * down[1] + up[1] * down[0];
        let hamiltonian =
            sz(0).scale_real(params.omega[0]) + sz(1).scale_real(params.omega[1]) + exchange.scale_real(coeffs.omega12);
        let gamma = [[params.gamma[0], coeffs.gamma12], [coeffs.gamma12, params.gamma[1]]];
        let mut gen =
            Self { params: *params, coeffs, hamiltonian, gamma, up, down, liouvillian: [[C64::new(0.0, 0.0); 16]; 16] };
        for k in 0..16 {
            let mut unit = ComplexMatrix::zeros(4).unwrap_or_else(|_| unreachable!());
            unit.entries_mut()[k] = C64::new(1.0, 0.0);
            let column = gen.rhs(&unit);
            for (a, v) in column.entries().iter().enumerate() {
                gen.liouvillian[a][k] = *v;
            }
        }
        gen
    }

    pub fn params(&self) -> &BathGeometryParams {
        &self.params
    }

    pub fn coefficients(&self) -> &DerivedCoefficients {
        &self.coeffs
    }

    /// System Hamiltonian including the dipole exchange term.
    pub fn hamiltonian(&self) -> &ComplexMatrix {
        &self.hamiltonian
    }

    pub fn liouvillian(&self) -> &[[C64; 16]; 16] {
        &self.liouvillian
    }

    /// Largest absolute row sum of the superoperator, an upper bound on the
    /// magnitude of its eigenvalues.
    pub fn spectral_bound(&self) -> f64 {
        self.liouvillian.iter().map(|row| row.iter().map(|l| l.norm()).sum::<f64>()).fold(0.0, f64::max)
    }

    /// `dρ/dt` evaluated term by term from the operator form.
    pub fn rhs(&self, rho: &ComplexMatrix) -> ComplexMatrix {
        let i = C64::new(0.0, 1.0);
        let mut out = self.hamiltonian.commutator(rho).scale(-i);
        let n_e = self.coeffs.n_e;
        let m_e = self.coeffs.m_e;
        for a in 0..2 {
            for b in 0..2 {
                let g = 0.5 * self.gamma[a][b];
                let (up_a, up_b, down_a, down_b) = (&self.up[a], &self.up[b], &self.down[a], &self.down[b]);

                let emission = *up_a * *down_b;
                out = out
                    - (emission.anticommutator(rho) - (*down_b * *rho * *up_a).scale_real(2.0))
                        .scale_real(g * (1.0 + n_e));

                let absorption = *down_a * *up_b;
                out = out
                    - (absorption.anticommutator(rho) - (*up_b * *rho * *down_a).scale_real(2.0)).scale_real(g * n_e);

                let double_up = *up_a * *up_b;
                out += (double_up.anticommutator(rho) - (*up_b * *rho * *up_a).scale_real(2.0)).scale(m_e * g);

                let double_down = *down_a * *down_b;
                out += (double_down.anticommutator(rho) - (*down_b * *rho * *down_a).scale_real(2.0))
                    .scale(m_e.conj() * g);
            }
        }
        out
    }

    /// `dρ/dt` through the precomputed superoperator.
    pub fn apply(&self, rho: &ComplexMatrix) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(4).unwrap_or_else(|_| unreachable!());
        let v = rho.entries();
        for (a, row) in self.liouvillian.iter().enumerate() {
            out.entries_mut()[a] = row.iter().zip(v).map(|(l, x)| l * x).sum();
        }
        out
    }

    /// Same as [`apply`](Self::apply) on the 32 real components
    /// `[Re vec(ρ), Im vec(ρ)]`.
    pub fn apply_real(&self, y: &[f64], dy: &mut [f64]) {
        for (a, row) in self.liouvillian.iter().enumerate() {
            let mut acc = C64::new(0.0, 0.0);
            for (k, l) in row.iter().enumerate() {
                acc += l * C64::new(y[k], y[16 + k]);
            }
            dy[a] = acc.re;
            dy[16 + a] = acc.im;
        }
    }
}

/// Master-equation right-hand side for a single state.
pub fn master_rhs(
    rho: &ComplexMatrix,
    coeffs: &DerivedCoefficients,
    params: &BathGeometryParams,
) -> Result<ComplexMatrix> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: rho.dim() });
    }
    Ok(TwoQubitGenerator::with_coefficients(params, *coeffs).rhs(rho))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ground() -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(4).unwrap();
        m[(3, 3)] = C64::new(1.0, 0.0);
        m
    }

    #[test]
    fn ladder_operators_act_on_the_right_qubit() {
        // |11⟩ = |gg⟩ is index 3; raising qubit A gives |01⟩ = index 1
        let a = raising(0);
        let b = raising(1);
        assert_eq!(a[(1, 3)], C64::new(1.0, 0.0));
        assert_eq!(b[(2, 3)], C64::new(1.0, 0.0));
        assert_eq!(lowering(0), a.adjoint());
        assert_eq!(sz(1)[(0, 0)], C64::new(0.5, 0.0));
    }

    #[test]
    fn vacuum_ground_state_is_stationary() {
        let params = BathGeometryParams { temperature: 0.0, squeezing_r: 0.0, x12: 0.4, ..Default::default() };
        let gen = TwoQubitGenerator::new(&params).unwrap();
        let d = gen.rhs(&ground());
        assert!(d.max_abs() < 1e-15);
    }

    #[test]
    fn superoperator_matches_direct_form() {
        let gen = TwoQubitGenerator::new(&BathGeometryParams::default()).unwrap();
        let mut rho = ComplexMatrix::zeros(4).unwrap();
        for (k, e) in rho.entries_mut().iter_mut().enumerate() {
            *e = C64::new(0.1 * k as f64, 0.03 * (k as f64 - 7.0));
        }
        let rho = rho.hermitian_part();
        let direct = gen.rhs(&rho);
        assert!(direct.max_abs_diff(&gen.apply(&rho)) < 1e-12 * (1.0 + direct.max_abs()));
        assert!(direct.trace().norm() < 1e-12);
        assert!(direct.hermiticity_defect() < 1e-12);
    }

    #[test]
    fn rejects_wrong_dimension() {
        let params = BathGeometryParams::default();
        let coeffs = collective_coefficients(&params).unwrap();
        assert!(master_rhs(&ComplexMatrix::identity(2).unwrap(), &coeffs, &params).is_err());
    }
}
