//! Dense complex linear algebra for one- and two-qubit operators.

mod density;
mod eigen;
mod matrix;

pub use density::{DensityMatrix, Subsystem, DEFAULT_TOLERANCE};
pub use eigen::hermitian_eigenvalues;
pub use matrix::{pauli, tensor_product, Axis, ComplexMatrix, C64};
