//! Numerical tolerances shared across the crate.
//!
//! All closed forms are exact algebra; these only absorb floating-point
//! round-off.

/// Hermiticity residual allowed in `|m[i][j] - conj(m[j][i])|`.
pub const HERMITIAN: f64 = 1e-10;
/// Allowed deviation of the trace from one.
pub const TRACE: f64 = 1e-10;
/// Most negative eigenvalue still accepted as positive semidefinite.
pub const PSD: f64 = 1e-10;
/// Slack on entropy inequalities.
pub const ENTROPY: f64 = 1e-12;
/// Margin for the strict entanglement decisions (`> 1` and `> 0`).
pub const ENTANGLEMENT: f64 = 1e-12;
/// Off-diagonal Frobenius norm at which Jacobi iteration stops.
pub const JACOBI_EPS: f64 = 1e-14;
/// Upper bound on cyclic Jacobi sweeps.
pub const JACOBI_MAX_SWEEPS: usize = 100;
/// Off-X-pattern modulus accepted when reading hand-written matrix files.
pub const X_SHAPE_FILE: f64 = 1e-9;
/// Slack on the Werner region inequalities, so boundary points stay valid.
pub const REGION: f64 = 1e-12;
