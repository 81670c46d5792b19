//! X-state parameters, general 4×4 density matrices and their validation.

use std::fmt;

use num_complex::Complex64;

use crate::error::StateError;
use crate::linalg::{adjoint, hermitian_eigenvalues, Matrix4};
use crate::tol;

/// One of the two 2×2 blocks of an X-state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Block {
    /// Positions 1 and 4: `rho11`, `rho44`, `rho14`.
    Outer,
    /// Positions 2 and 3: `rho22`, `rho33`, `rho23`.
    Inner,
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Block::Outer => "outer",
            Block::Inner => "inner",
        })
    }
}

/// The six free parameters of an X-shaped density matrix.
///
/// `diag` holds `rho11..rho44`, `corner` is `rho14` and `inner` is `rho23`.
/// The lower-triangle entries are always derived by conjugation.
///
/// Values built through [`XState::new`] are valid states. The partial
/// transpose in [`crate::measures`] yields X-shaped matrices that may be
/// indefinite; those are still carried in this type.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XState {
    diag: [f64; 4],
    corner: Complex64,
    inner: Complex64,
}

impl XState {
    pub fn new(
        d1: f64,
        d2: f64,
        d3: f64,
        d4: f64,
        corner: Complex64,
        inner: Complex64,
    ) -> Result<Self, StateError> {
        let diag = [d1, d2, d3, d4];
        if diag.iter().any(|d| !d.is_finite()) {
            return Err(StateError::NonFinite("diagonal"));
        }
        if !(corner.re.is_finite() && corner.im.is_finite()) {
            return Err(StateError::NonFinite("rho14"));
        }
        if !(inner.re.is_finite() && inner.im.is_finite()) {
            return Err(StateError::NonFinite("rho23"));
        }
        if let Some((i, &value)) = diag.iter().enumerate().find(|(_, &d)| d < -tol::PSD) {
            return Err(StateError::NegativeDiagonal {
                index: i + 1,
                value,
            });
        }
        let trace: f64 = diag.iter().sum();
        if (trace - 1.0).abs() > tol::TRACE {
            return Err(StateError::TraceNotOne { trace });
        }
        if d1 * d4 < corner.norm_sqr() - tol::PSD {
            return Err(StateError::BlockPositivityViolated(Block::Outer));
        }
        if d2 * d3 < inner.norm_sqr() - tol::PSD {
            return Err(StateError::BlockPositivityViolated(Block::Inner));
        }
        Ok(Self {
            diag,
            corner,
            inner,
        })
    }

    /// No validation; for X-shaped operators that need not be states.
    pub(crate) fn from_parts(diag: [f64; 4], corner: Complex64, inner: Complex64) -> Self {
        Self {
            diag,
            corner,
            inner,
        }
    }

    /// `diag(1/4, 1/4, 1/4, 1/4)`.
    pub fn maximally_mixed() -> Self {
        Self::from_parts(
            [0.25; 4],
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
        )
    }

    pub fn diag(&self) -> [f64; 4] {
        self.diag
    }

    /// `rho14`.
    pub fn corner(&self) -> Complex64 {
        self.corner
    }

    /// `rho23`.
    pub fn inner(&self) -> Complex64 {
        self.inner
    }

    /// Embeds the parameters into the full matrix.
    pub fn to_matrix(&self) -> DensityMatrix4 {
        let mut m = Matrix4::from_real_diagonal(self.diag);
        m.0[0][3] = self.corner;
        m.0[3][0] = self.corner.conj();
        m.0[1][2] = self.inner;
        m.0[2][1] = self.inner.conj();
        DensityMatrix4(m)
    }

    /// Reads an X-state back out of a validated density matrix. Entries off
    /// the X pattern must have modulus at most `tol`.
    pub fn from_matrix(m: &DensityMatrix4, tol: f64) -> Result<Self, StateError> {
        let report = validate(m);
        if !report.passed() {
            return Err(StateError::InvalidDensityMatrix(Box::new(report)));
        }
        let offending = m.off_pattern_entries(tol);
        if !offending.is_empty() {
            return Err(StateError::NotXShaped(offending));
        }
        let e = &m.0 .0;
        Self::new(
            e[0][0].re, e[1][1].re, e[2][2].re, e[3][3].re, e[0][3], e[1][2],
        )
    }
}

/// A general 4×4 complex matrix read as a density matrix. Accessors are
/// 1-based to match `rho_ij` labels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix4(pub Matrix4);

impl DensityMatrix4 {
    pub fn new(entries: [[Complex64; 4]; 4]) -> Self {
        Self(Matrix4(entries))
    }

    /// `rho_ij`, 1-based. Panics outside `1..=4`.
    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        assert!(
            (1..=4).contains(&i) && (1..=4).contains(&j),
            "index ({i}, {j}) out of range"
        );
        self.0 .0[i - 1][j - 1]
    }

    pub fn matrix(&self) -> &Matrix4 {
        &self.0
    }

    /// 1-based positions off the X pattern whose modulus exceeds `tol`.
    pub fn off_pattern_entries(&self, tol: f64) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..4 {
            for j in 0..4 {
                if in_x_pattern(i, j) {
                    continue;
                }
                let modulus = self.0 .0[i][j].norm();
                if modulus.is_nan() || modulus > tol {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }
}

fn in_x_pattern(i: usize, j: usize) -> bool {
    i == j || i + j == 3
}

/// A 2×2 reduced state `[[p_up, off], [conj(off), p_down]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitState2 {
    pub p_up: f64,
    pub p_down: f64,
    pub off: Complex64,
}

/// Pass/fail diagnostics for a candidate density matrix. Every check is
/// always evaluated so callers can report all failures at once.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    /// Largest `|m_ij - conj(m_ji)|`.
    pub hermitian_residual: f64,
    /// `|Re tr(m) - 1|`.
    pub trace_residual: f64,
    /// Largest `|Im m_ii|`.
    pub diagonal_imag_residual: f64,
    /// Smallest eigenvalue of the Hermitian part `(m + m†)/2`; `None` when
    /// the eigensolver could not run (non-finite input).
    pub min_eigenvalue: Option<f64>,
    pub hermitian_ok: bool,
    pub trace_ok: bool,
    pub psd_ok: bool,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.hermitian_ok && self.trace_ok && self.psd_ok
    }

    /// Names of the failed checks.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.hermitian_ok {
            out.push("hermiticity");
        }
        if !self.trace_ok {
            out.push("unit trace");
        }
        if !self.psd_ok {
            out.push("positive semidefinite");
        }
        out
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failures = self.failures();
        if failures.is_empty() {
            write!(f, "all checks passed")
        } else {
            write!(f, "failed {}", failures.join(", "))?;
            write!(
                f,
                " (hermitian residual {:e}, trace residual {:e}, min eigenvalue {})",
                self.hermitian_residual,
                self.trace_residual,
                self.min_eigenvalue
                    .map_or_else(|| "n/a".to_string(), |v| format!("{v:e}"))
            )
        }
    }
}

pub fn validate(m: &DensityMatrix4) -> ValidationReport {
    let a = &m.0;
    let hermitian_residual = a.hermitian_residual();
    let trace_residual = (a.trace().re - 1.0).abs();
    let diagonal_imag_residual = (0..4).map(|i| a.0[i][i].im.abs()).fold(0.0, f64::max);

    let adj = adjoint(a);
    let mut sym = Matrix4::zeros();
    for i in 0..4 {
        for j in 0..4 {
            sym.0[i][j] = (a.0[i][j] + adj.0[i][j]) * 0.5;
        }
    }
    let min_eigenvalue = hermitian_eigenvalues(&sym).ok().map(|s| s.min());

    ValidationReport {
        hermitian_residual,
        trace_residual,
        diagonal_imag_residual,
        min_eigenvalue,
        hermitian_ok: hermitian_residual <= tol::HERMITIAN,
        trace_ok: trace_residual <= tol::TRACE && diagonal_imag_residual <= tol::HERMITIAN,
        psd_ok: min_eigenvalue.is_some_and(|v| v >= -tol::PSD),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn zero() -> Complex64 {
        c(0.0, 0.0)
    }

    fn bell() -> XState {
        XState::new(0.5, 0.0, 0.0, 0.5, c(0.5, 0.0), zero()).unwrap()
    }

    #[test]
    fn accepts_mixed_and_bell() {
        let mixed = XState::new(0.25, 0.25, 0.25, 0.25, zero(), zero()).unwrap();
        assert_eq!(mixed, XState::maximally_mixed());
        assert_eq!(bell().corner(), c(0.5, 0.0));
    }

    #[test]
    fn rejects_outer_block() {
        let err = XState::new(0.5, 0.0, 0.0, 0.5, c(0.6, 0.0), zero()).unwrap_err();
        assert_eq!(err, StateError::BlockPositivityViolated(Block::Outer));
        let err = XState::new(0.25, 0.25, 0.25, 0.25, zero(), c(0.0, 0.3)).unwrap_err();
        assert_eq!(err, StateError::BlockPositivityViolated(Block::Inner));
    }

    #[test]
    fn rejects_negative_diagonal_and_trace() {
        assert!(matches!(
            XState::new(0.6, -0.1, 0.3, 0.2, zero(), zero()),
            Err(StateError::NegativeDiagonal { index: 2, .. })
        ));
        assert!(matches!(
            XState::new(0.3, 0.3, 0.3, 0.3, zero(), zero()),
            Err(StateError::TraceNotOne { .. })
        ));
        assert!(matches!(
            XState::new(f64::NAN, 0.3, 0.3, 0.3, zero(), zero()),
            Err(StateError::NonFinite(_))
        ));
    }

    #[test]
    fn to_matrix_layout() {
        let mixed = XState::maximally_mixed().to_matrix();
        assert_eq!(mixed.0, Matrix4::from_real_diagonal([0.25; 4]));

        let b = bell().to_matrix();
        assert_eq!(b.entry(1, 4), c(0.5, 0.0));
        assert_eq!(b.entry(4, 1), c(0.5, 0.0));
        assert_eq!(b.entry(2, 3), zero());

        let x = XState::new(0.4, 0.3, 0.2, 0.1, c(0.05, 0.05), c(0.0, 0.1)).unwrap();
        let m = x.to_matrix();
        assert_eq!(m.entry(4, 1), c(0.05, -0.05));
        assert_eq!(m.entry(3, 2), c(0.0, -0.1));
        assert_eq!(m.entry(1, 2), zero());
        assert_eq!(m.0.hermitian_residual(), 0.0);
        assert!((m.0.trace() - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn from_matrix_round_trip_and_errors() {
        let x = XState::new(0.4, 0.3, 0.2, 0.1, c(0.05, 0.05), c(0.0, 0.1)).unwrap();
        assert_eq!(XState::from_matrix(&x.to_matrix(), 1e-9).unwrap(), x);

        let d = DensityMatrix4(Matrix4::from_real_diagonal([0.4, 0.3, 0.2, 0.1]));
        assert_eq!(
            XState::from_matrix(&d, 1e-9).unwrap(),
            XState::new(0.4, 0.3, 0.2, 0.1, zero(), zero()).unwrap()
        );

        let mut m = Matrix4::from_real_diagonal([0.25; 4]);
        m.0[0][1] = c(0.01, 0.0);
        m.0[1][0] = c(0.01, 0.0);
        assert_eq!(
            XState::from_matrix(&DensityMatrix4(m), 1e-9).unwrap_err(),
            StateError::NotXShaped(vec![(1, 2), (2, 1)])
        );

        let bad = DensityMatrix4(Matrix4::from_real_diagonal([0.5, 0.5, 0.5, -0.5]));
        assert!(matches!(
            XState::from_matrix(&bad, 1e-9),
            Err(StateError::InvalidDensityMatrix(_))
        ));
    }

    #[test]
    fn validation_reports() {
        let r = validate(&XState::maximally_mixed().to_matrix());
        assert!(r.passed());
        assert_eq!(r.hermitian_residual, 0.0);
        assert_eq!(r.trace_residual, 0.0);
        assert_eq!(r.min_eigenvalue, Some(0.25));

        // the diagonal sums to 1, so only the PSD check fails here
        let r = validate(&DensityMatrix4(Matrix4::from_real_diagonal([
            0.5, 0.5, 0.5, -0.5,
        ])));
        assert!(r.hermitian_ok);
        assert!(r.trace_ok);
        assert!(!r.psd_ok);
        assert_eq!(r.failures(), vec!["positive semidefinite"]);

        let r = validate(&DensityMatrix4(Matrix4::from_real_diagonal([
            0.6, 0.6, 0.6, -0.5,
        ])));
        assert_eq!(r.failures(), vec!["unit trace", "positive semidefinite"]);

        let r = validate(&bell().to_matrix());
        assert!(r.passed());
        assert!(r.min_eigenvalue.unwrap().abs() <= tol::PSD);

        let mut m = Matrix4::from_real_diagonal([0.25; 4]);
        m.0[0][2] = c(0.1, 0.0);
        let r = validate(&DensityMatrix4(m));
        assert!(!r.hermitian_ok);
        assert!((r.hermitian_residual - 0.1).abs() < 1e-15);

        let mut m = Matrix4::from_real_diagonal([0.25; 4]);
        m.0[1][1] = c(0.25, 0.01);
        assert!(!validate(&DensityMatrix4(m)).trace_ok);
    }
}
