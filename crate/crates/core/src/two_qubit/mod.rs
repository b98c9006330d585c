//! Two qubits coupled to a squeezed thermal electromagnetic bath with
//! distance-dependent collective decay (Born–Markov, rotating wave).

mod bath;
mod evolve;
mod master;

pub use bath::{
    collective_coefficients, coupling_f, coupling_omega, planck_occupation, squeezed_moments, BathGeometryParams,
    CouplingConvention, DerivedCoefficients, FSign, OmegaPrefactor,
};
pub use evolve::{evolve_two_qubit, evolve_two_qubit_fixed_step, Trajectory, TRAJECTORY_TOLERANCE};
pub use master::{lowering, master_rhs, raising, sz, TwoQubitGenerator};
