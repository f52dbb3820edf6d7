//! Dense complex linear algebra for small qubit registers.
//!
//! States are represented as dense density matrices in the polarization
//! basis, index 0 = `|H>` and index 1 = `|V>` per qubit. Register ordering is
//! big-endian in the declared photon label: qubit 0 occupies the most
//! significant bit of a basis index. Traces may be below one; a subnormalized
//! trace carries the probability of the postselections applied so far.

mod basis;
mod density_matrix;
mod pauli;
mod projector;

pub use basis::{born_distribution, MeasurementBasis};
pub use density_matrix::{DensityMatrix, Projection};
pub use pauli::{PauliFactor, PauliObservable};
pub use projector::Projector;

use thiserror::Error;

/// Errors from register-level linear algebra.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum QuantumError {
    #[error("operand register sizes are incompatible: {0}")]
    DimensionMismatch(String),
    #[error("register of {requested} qubits exceeds the dense cap of {cap}")]
    CapacityExceeded { requested: usize, cap: usize },
    #[error("imaginary residue {residue:.3e} where a real value was expected")]
    NumericalIntegrity { residue: f64 },
    #[error("postselection annihilated the state (success probability {prob:.3e})")]
    PostselectionAnnihilated { prob: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("state violates a density-matrix invariant: {0}")]
    InvalidState(String),
}

pub(crate) fn bit_of(index: usize, qubit: usize, n_qubits: usize) -> usize {
    (index >> (n_qubits - 1 - qubit)) & 1
}
