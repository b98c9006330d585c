//! Numerics for spin-phase-space Wigner functions of one and two qubits,
//! their nonclassicality, and Wigner-space quantum speed limits along open
//! system trajectories.
//!
//! The crate is `no_std` and only needs `alloc`; the default `std` feature
//! swaps the `libm` float routines for the platform ones. Everything here is a pure
//! function of its inputs; IO, configuration and the command line live in the
//! `qslwigner` companion crate.
//!
//! Basis convention: `|0⟩` is the excited state `|e⟩` (spin up, `m = +1/2`) and
//! `|1⟩` is the ground state `|g⟩`. Two-qubit states use the ordering
//! `|00⟩, |01⟩, |10⟩, |11⟩`, so `|01⟩` carries one excitation on qubit A.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod discord;
pub mod error;
pub mod linalg;
pub mod metrics;
pub mod ode;
pub mod optimize;
pub mod phase_covariant;
pub mod qsl;
pub mod states;
pub mod two_qubit;
pub mod wigner;

pub use error::{Error, Result};
pub use linalg::{
    hermitian_eigenvalues, pauli, tensor_product, Axis, ComplexMatrix, DensityMatrix, Subsystem, C64, DEFAULT_TOLERANCE,
};
pub use wigner::{SphereGrid, WignerField};
