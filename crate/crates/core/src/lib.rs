//! Simulation toolkit for memory-assisted preparation of photonic GHZ and
//! graph states.
//!
//! The crate is organised around the stages of the physical protocol:
//!
//! - [`quantum`]: dense complex linear algebra on small qubit registers
//!   (density matrices, Pauli observables, projectors, noise channels).
//! - [`graph`]: symbolic graph-state algebra with the beam-splitter
//!   connection rule and dense export for verification.
//! - [`dlcz`]: parametric models of a DLCZ-type atomic memory node, the
//!   emitted photon-pair state, and its click-level diagnostics.
//! - [`protocol`]: the discrete-event Monte Carlo engine that runs the
//!   asynchronous (memory-assisted) and simultaneous heralding strategies.
//! - [`analysis`]: estimators for fidelity, MABK Bell values, secret-sharing
//!   QBER, fringe calibration, and preparation-time scaling laws.

pub mod analysis;
pub mod dlcz;
pub mod graph;
pub mod protocol;
pub mod quantum;
pub mod tolerance;

pub use tolerance::Tolerances;
