//! Separability and entanglement of the single-qudit (j = 3/2) X-state.
//!
//! A spin-3/2 state lives in a four-dimensional space. Relabelling the basis
//! `|3/2, m>` as the two-qubit basis `|m1 m2>` gives the qudit a "qubit
//! portrait": reduced matrices, a partial transpose and a spin flip all become
//! available even though the qudit has no subsystems. For density matrices of
//! X shape every quantity has a closed form, and this crate computes each of
//! them next to a cyclic-Jacobi eigensolver that acts as an independent check.
//!
//! Module map:
//!
//! - [`basis`]: index maps between `m`, `(m1, m2)` and matrix positions, and
//!   the commuting spin-projection operators.
//! - [`state`]: [`XState`], [`DensityMatrix4`] and validation.
//! - [`linalg`]: 4×4 complex algebra and the Hermitian eigensolver.
//! - [`measures`]: spectra, reductions, entropies, negativity, concurrence.
//! - [`qentropy`]: classical Tsallis and Rényi entropies.
//! - [`werner`]: the two-parameter Werner family, region grids and sweeps.
//! - [`io`]: the matrix text format and the CSV schemas.
//! - [`sampling`]: random valid X-states for property checks.

pub mod basis;
pub mod error;
pub mod io;
pub mod linalg;
pub mod measures;
pub mod qentropy;
pub mod sampling;
pub mod state;
pub mod tol;
pub mod werner;

pub use error::{EigenError, EntropyError, ParseError, StateError, WernerError};
pub use linalg::{Matrix4, Provenance, Spectrum};
pub use measures::{ActiveCondition, EntanglementReport, EntropyReport};
pub use state::{Block, DensityMatrix4, QubitState2, ValidationReport, XState};
pub use werner::{BRule, Classification, SweepRow, WernerPoint};

/// Complex matrix entry.
pub type ComplexScalar = num_complex::Complex64;
