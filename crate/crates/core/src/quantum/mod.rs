//! Dense complex linear algebra and measurement primitives for composite
//! systems of at most a few qubits and three-level photon modes.
//!
//! Basis ordering is row-major over the [`Layout`]: the first subsystem is the
//! most significant digit of a basis index. Three-level modes use the level
//! order `{|vac>, |0>, |1>}`.

mod density;
mod eigen;
mod info;
mod layout;
mod matrix;
mod measure;
mod operator;
mod state;

pub use density::DensityOperator;
pub use eigen::{eigvals_hermitian, MAX_SWEEPS, OFF_DIAGONAL_TOL};
pub use info::{binary_capacity, spectrum_entropy, von_neumann_entropy};
pub use layout::{qubit_level, Layout, Role, Subsystem, VAC};
pub use matrix::Matrix;
pub use measure::{measure, Branch, Measured, MeasurementBasis, Outcome};
pub use operator::{Operator, OperatorKind};
pub use state::StateVector;

/// Complex amplitude type used throughout the crate.
pub type C64 = num_complex::Complex64;

/// Normalization, Hermiticity, unitarity and orthonormality tolerance.
pub const TOL: f64 = 1e-10;
/// Smallest eigenvalue a density operator may have before it is rejected.
pub const PSD_TOL: f64 = 1e-9;

pub(crate) const ZERO: C64 = C64::new(0.0, 0.0);
pub(crate) const ONE: C64 = C64::new(1.0, 0.0);

pub(crate) fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

pub(crate) fn norm_sqr(v: &[C64]) -> f64 {
    v.iter().map(|a| a.norm_sqr()).sum()
}
