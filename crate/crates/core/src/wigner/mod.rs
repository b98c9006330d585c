//! SU(2) Wigner quasiprobability transform for qubits.
//!
//! A qubit operator `A` maps to the sphere through its multipole expansion
//! `A = Σ_KQ a_KQ T_KQ` with `a_KQ = Tr(T†_KQ A)`, giving
//! `W(θ, φ) = √((2j+1)/4π) Σ_KQ a_KQ Y_KQ(θ, φ)`. Two-qubit operators use
//! the product basis `T_K₁Q₁ ⊗ T_K₂Q₂` and the prefactor `(2j+1)/4π`.

mod field;
mod grid;
mod harmonics;
mod multipole;
mod threej;

pub use field::{
    multipole_coefficients_single, multipole_coefficients_two, wigner_single, wigner_single_at, wigner_transform,
    wigner_two, wigner_two_at, FieldDomain, FieldNode, WignerField, WignerSource, SPIN_HALF_MULTIPOLES,
};
pub use grid::{gauss_legendre, GridSpec, SphereGrid};
pub use harmonics::spherical_harmonic;
pub use multipole::multipole_operator;
pub use threej::{wigner_3j, HalfInt};
