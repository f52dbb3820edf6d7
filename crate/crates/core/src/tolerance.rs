//! Centralised numerical tolerances.
//!
//! Every module uses the same tolerance record so that the thresholds can be
//! audited (and, in tests, tightened) in one place.

/// Numerical tolerances shared across the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Elementwise equality threshold for exact algebraic identities.
    pub equality: f64,
    /// Slack allowed on the smallest eigenvalue of a positive-semidefinite
    /// operator (eigenvalues above `-psd_slack` are accepted).
    pub psd_slack: f64,
    /// Largest imaginary residue tolerated where a real value is expected.
    pub imag_residue: f64,
    /// Postselection probabilities below this are treated as annihilation.
    pub annihilation: f64,
}

impl Tolerances {
    pub const fn default_const() -> Self {
        Self {
            equality: 1e-12,
            psd_slack: 1e-10,
            imag_residue: 1e-10,
            annihilation: 1e-15,
        }
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::default_const()
    }
}

/// The crate-wide default tolerance record.
pub const DEFAULT_TOLERANCES: Tolerances = Tolerances::default_const();

/// Maximum register size for dense representations, in qubits.
///
/// Dense matrices scale as `4^n`; the cap keeps accidental blow-ups from
/// taking the process down. Verification workloads stay well below it.
pub const DENSE_QUBIT_CAP: usize = 14;
