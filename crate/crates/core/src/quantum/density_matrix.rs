use nalgebra::{DMatrix, DVector, Matrix2};
use num_complex::Complex64;

use super::{bit_of, PauliObservable, Projector, QuantumError};
use crate::tolerance::{Tolerances, DEFAULT_TOLERANCES, DENSE_QUBIT_CAP};

/// Dense Hermitian operator on an n-qubit register.
///
/// The trace is cached on construction. Values are immutable; every
/// operation returns a new state, so instances can be shared freely across
/// threads.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    n_qubits: usize,
    elements: DMatrix<Complex64>,
    trace_value: f64,
}

/// Result of applying a projector: the unnormalized projected state together
/// with the conditional success probability `tr(P rho P) / tr(rho)`.
#[derive(Debug, Clone)]
pub struct Projection {
    pub state: DensityMatrix,
    pub success_prob: f64,
}

impl Projection {
    /// The projected state renormalized to unit trace.
    pub fn normalized(&self) -> DensityMatrix {
        self.state.renormalized()
    }
}

impl DensityMatrix {
    /// Builds a state from a raw matrix, checking the Hermiticity, positivity
    /// and trace invariants.
    pub fn from_matrix(n_qubits: usize, elements: DMatrix<Complex64>) -> Result<Self, QuantumError> {
        check_cap(n_qubits)?;
        let dim = 1usize << n_qubits;
        if elements.nrows() != dim || elements.ncols() != dim {
            return Err(QuantumError::DimensionMismatch(format!(
                "expected {dim}x{dim} matrix for {n_qubits} qubits, got {}x{}",
                elements.nrows(),
                elements.ncols()
            )));
        }
        let state = Self::from_parts(n_qubits, elements);
        state.validate(&DEFAULT_TOLERANCES)?;
        Ok(state)
    }

    /// Internal constructor for matrices already known to be valid.
    pub(crate) fn from_parts(n_qubits: usize, elements: DMatrix<Complex64>) -> Self {
        let trace_value = elements.diagonal().iter().map(|c| c.re).sum();
        Self {
            n_qubits,
            elements,
            trace_value,
        }
    }

    /// Pure state `|psi><psi|` from an amplitude vector.
    pub fn pure(n_qubits: usize, amplitudes: &DVector<Complex64>) -> Result<Self, QuantumError> {
        check_cap(n_qubits)?;
        let dim = 1usize << n_qubits;
        if amplitudes.len() != dim {
            return Err(QuantumError::DimensionMismatch(format!(
                "amplitude vector of length {} does not fit {n_qubits} qubits",
                amplitudes.len()
            )));
        }
        let elements = amplitudes * amplitudes.adjoint();
        Ok(Self::from_parts(n_qubits, elements))
    }

    /// Computational basis state `|pattern><pattern|`; bit i of `pattern`
    /// (counting from the most significant of the low `n_qubits` bits) is the
    /// polarization of qubit i.
    pub fn basis_state(n_qubits: usize, pattern: usize) -> Result<Self, QuantumError> {
        check_cap(n_qubits)?;
        let dim = 1usize << n_qubits;
        if pattern >= dim {
            return Err(QuantumError::InvalidParameter(format!(
                "pattern {pattern} out of range for {n_qubits} qubits"
            )));
        }
        let mut amps = DVector::zeros(dim);
        amps[pattern] = Complex64::new(1.0, 0.0);
        Self::pure(n_qubits, &amps)
    }

    /// The maximally mixed state `I / 2^n`.
    pub fn maximally_mixed(n_qubits: usize) -> Result<Self, QuantumError> {
        check_cap(n_qubits)?;
        let dim = 1usize << n_qubits;
        let elements = DMatrix::identity(dim, dim) * Complex64::new(1.0 / dim as f64, 0.0);
        Ok(Self::from_parts(n_qubits, elements))
    }

    /// `(|0..0> + e^{i phase} |1..1>) / sqrt(2)` on n qubits.
    pub fn ghz_with_phase(n_qubits: usize, phase: f64) -> Result<Self, QuantumError> {
        check_cap(n_qubits)?;
        if n_qubits < 1 {
            return Err(QuantumError::InvalidParameter(
                "GHZ state needs at least one qubit".into(),
            ));
        }
        let dim = 1usize << n_qubits;
        let mut amps = DVector::zeros(dim);
        let inv = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        amps[0] = inv;
        amps[dim - 1] = inv * Complex64::from_polar(1.0, phase);
        Self::pure(n_qubits, &amps)
    }

    /// The n-qubit GHZ state with zero relative phase.
    pub fn ghz(n_qubits: usize) -> Result<Self, QuantumError> {
        Self::ghz_with_phase(n_qubits, 0.0)
    }

    /// Two-qubit `(|HH> + e^{i phase} |VV>) / sqrt(2)`.
    pub fn bell_phi(phase: f64) -> Self {
        Self::ghz_with_phase(2, phase).expect("two qubits are always below the cap")
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        1usize << self.n_qubits
    }

    pub fn trace(&self) -> f64 {
        self.trace_value
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.elements
    }

    /// `tr(rho^2)`, a purity diagnostic (1 for pure states of unit trace).
    pub fn purity(&self) -> f64 {
        self.elements
            .iter()
            .map(|c| c.norm_sqr())
            .sum::<f64>()
    }

    /// Copy rescaled to unit trace.
    pub fn renormalized(&self) -> Self {
        let scale = Complex64::new(1.0 / self.trace_value, 0.0);
        Self::from_parts(self.n_qubits, &self.elements * scale)
    }

    /// Checks the Hermiticity, positive-semidefiniteness and trace invariants.
    pub fn validate(&self, tol: &Tolerances) -> Result<(), QuantumError> {
        let dim = self.dim();
        for i in 0..dim {
            for j in i..dim {
                let delta = self.elements[(i, j)] - self.elements[(j, i)].conj();
                if delta.norm() > tol.equality {
                    return Err(QuantumError::InvalidState(format!(
                        "not Hermitian at ({i},{j}): residue {:.3e}",
                        delta.norm()
                    )));
                }
            }
        }
        if !(self.trace_value > 0.0 && self.trace_value <= 1.0 + tol.equality) {
            return Err(QuantumError::InvalidState(format!(
                "trace {:.6e} outside (0, 1]",
                self.trace_value
            )));
        }
        let min_eig = self
            .elements
            .clone()
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .cloned()
            .fold(f64::INFINITY, f64::min);
        if min_eig < -tol.psd_slack {
            return Err(QuantumError::InvalidState(format!(
                "smallest eigenvalue {min_eig:.3e} below PSD slack"
            )));
        }
        Ok(())
    }

    /// Kronecker product placing `self`'s qubits before `other`'s.
    pub fn tensor(&self, other: &Self) -> Result<Self, QuantumError> {
        let n = self.n_qubits + other.n_qubits;
        check_cap(n)?;
        Ok(Self::from_parts(n, self.elements.kronecker(&other.elements)))
    }

    /// `tr(rho O)` for a Pauli-product observable.
    ///
    /// The caller is expected to pass a normalized state (or divide by the
    /// trace). The imaginary part must vanish within tolerance.
    pub fn expectation(&self, obs: &PauliObservable) -> Result<f64, QuantumError> {
        if obs.len() != self.n_qubits {
            return Err(QuantumError::DimensionMismatch(format!(
                "observable over {} qubits applied to {}-qubit state",
                obs.len(),
                self.n_qubits
            )));
        }
        let op = obs.to_matrix();
        // tr(rho O) = sum_ij rho_ij O_ji
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                acc += self.elements[(i, j)] * op[(j, i)];
            }
        }
        let tol = DEFAULT_TOLERANCES;
        if acc.im.abs() >= tol.imag_residue {
            return Err(QuantumError::NumericalIntegrity { residue: acc.im.abs() });
        }
        Ok(acc.re)
    }

    /// Applies a projector, returning `P rho P` (trace = joint probability)
    /// together with the conditional success probability.
    pub fn project(&self, projector: &Projector) -> Result<Projection, QuantumError> {
        if projector.n_qubits() != self.n_qubits {
            return Err(QuantumError::DimensionMismatch(format!(
                "projector over {} qubits applied to {}-qubit state",
                projector.n_qubits(),
                self.n_qubits
            )));
        }
        let p = projector.matrix();
        let projected = p * &self.elements * p;
        let state = Self::from_parts(self.n_qubits, projected);
        let success_prob = state.trace_value / self.trace_value;
        let tol = DEFAULT_TOLERANCES;
        if success_prob < tol.annihilation {
            return Err(QuantumError::PostselectionAnnihilated { prob: success_prob });
        }
        Ok(Projection { state, success_prob })
    }

    /// `<psi| rho |psi>` against a pure target state.
    pub fn fidelity_to_pure(&self, target: &DVector<Complex64>) -> Result<f64, QuantumError> {
        if target.len() != self.dim() {
            return Err(QuantumError::DimensionMismatch(format!(
                "target vector of length {} against {}-qubit state",
                target.len(),
                self.n_qubits
            )));
        }
        let value = (target.adjoint() * &self.elements * target)[(0, 0)];
        let tol = DEFAULT_TOLERANCES;
        if value.im.abs() >= tol.imag_residue {
            return Err(QuantumError::NumericalIntegrity { residue: value.im.abs() });
        }
        Ok(value.re)
    }

    /// Depolarizing channel: `V rho + (1 - V) tr(rho) I / 2^n`.
    pub fn depolarize(&self, visibility: f64) -> Result<Self, QuantumError> {
        if !(0.0..=1.0).contains(&visibility) {
            return Err(QuantumError::InvalidParameter(format!(
                "visibility {visibility} outside [0, 1]"
            )));
        }
        let dim = self.dim();
        let mixed_weight = (1.0 - visibility) * self.trace_value / dim as f64;
        let mut elements = &self.elements * Complex64::new(visibility, 0.0);
        for i in 0..dim {
            elements[(i, i)] += Complex64::new(mixed_weight, 0.0);
        }
        Ok(Self::from_parts(self.n_qubits, elements))
    }

    /// Phase damping on one qubit: off-diagonal H/V coherences of that qubit
    /// are multiplied by `1 - lambda`.
    pub fn dephase(&self, lambda: f64, qubit: usize) -> Result<Self, QuantumError> {
        if !(0.0..=1.0).contains(&lambda) {
            return Err(QuantumError::InvalidParameter(format!(
                "dephasing strength {lambda} outside [0, 1]"
            )));
        }
        if qubit >= self.n_qubits {
            return Err(QuantumError::DimensionMismatch(format!(
                "qubit {qubit} out of range for {} qubits",
                self.n_qubits
            )));
        }
        let damp = Complex64::new(1.0 - lambda, 0.0);
        let n = self.n_qubits;
        let elements = DMatrix::from_fn(self.dim(), self.dim(), |i, j| {
            if bit_of(i, qubit, n) != bit_of(j, qubit, n) {
                self.elements[(i, j)] * damp
            } else {
                self.elements[(i, j)]
            }
        });
        Ok(Self::from_parts(self.n_qubits, elements))
    }

    /// Conjugates the state by a single-qubit unitary on `qubit`.
    pub fn apply_one_qubit(&self, qubit: usize, u: &Matrix2<Complex64>) -> Result<Self, QuantumError> {
        if qubit >= self.n_qubits {
            return Err(QuantumError::DimensionMismatch(format!(
                "qubit {qubit} out of range for {} qubits",
                self.n_qubits
            )));
        }
        let full = embed_one_qubit(self.n_qubits, qubit, u);
        let elements = &full * &self.elements * full.adjoint();
        Ok(Self::from_parts(self.n_qubits, elements))
    }
}

/// Lifts a single-qubit operator to the full register by Kronecker products.
pub(crate) fn embed_one_qubit(n_qubits: usize, qubit: usize, u: &Matrix2<Complex64>) -> DMatrix<Complex64> {
    let mut full = DMatrix::identity(1, 1);
    let u_dyn = DMatrix::from_fn(2, 2, |i, j| u[(i, j)]);
    for q in 0..n_qubits {
        let factor = if q == qubit {
            u_dyn.clone()
        } else {
            DMatrix::identity(2, 2)
        };
        full = full.kronecker(&factor);
    }
    full
}

fn check_cap(n_qubits: usize) -> Result<(), QuantumError> {
    if n_qubits > DENSE_QUBIT_CAP {
        Err(QuantumError::CapacityExceeded {
            requested: n_qubits,
            cap: DENSE_QUBIT_CAP,
        })
    } else {
        Ok(())
    }
}
