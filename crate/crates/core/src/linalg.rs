//! Fixed-size 4×4 complex algebra and a cyclic Jacobi eigensolver for
//! Hermitian matrices.
//!
//! The eigensolver shares no code with the closed-form spectra in
//! [`crate::measures`], so agreement between the two is a meaningful check.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_complex::Complex64;

use crate::error::EigenError;
use crate::tol;

/// Dense 4×4 complex matrix, row-major, 0-based indexing.
#[derive(Clone, Copy, PartialEq)]
pub struct Matrix4(pub [[Complex64; 4]; 4]);

impl Matrix4 {
    pub fn zeros() -> Self {
        Self([[Complex64::new(0.0, 0.0); 4]; 4])
    }

    pub fn identity() -> Self {
        Self::from_real_diagonal([1.0; 4])
    }

    pub fn from_real_diagonal(diag: [f64; 4]) -> Self {
        let mut m = Self::zeros();
        for (i, d) in diag.into_iter().enumerate() {
            m.0[i][i] = Complex64::new(d, 0.0);
        }
        m
    }

    pub fn from_real(rows: [[f64; 4]; 4]) -> Self {
        Self(rows.map(|row| row.map(|v| Complex64::new(v, 0.0))))
    }

    /// Entrywise complex conjugate (no transpose).
    pub fn conj(&self) -> Self {
        let mut out = *self;
        out.0.iter_mut().flatten().for_each(|z| *z = z.conj());
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..4).map(|i| self.0[i][i]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Frobenius norm of the strictly off-diagonal part.
    pub fn off_diagonal_norm(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    acc += self.0[i][j].norm_sqr();
                }
            }
        }
        acc.sqrt()
    }

    /// Largest `|m[i][j] - conj(m[j][i])|` over all index pairs.
    pub fn hermitian_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in i..4 {
                let r = (self.0[i][j] - self.0[j][i].conj()).norm();
                // NaN propagates as "worst" so downstream `<=` checks fail
                if r.is_nan() || r > worst {
                    worst = r;
                }
            }
        }
        worst
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.0
            .iter()
            .flatten()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl Default for Matrix4 {
    fn default() -> Self {
        Self::zeros()
    }
}

impl Index<(usize, usize)> for Matrix4 {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Matrix4 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.0[i][j]
    }
}

impl Mul for Matrix4 {
    type Output = Matrix4;

    fn mul(self, rhs: Matrix4) -> Matrix4 {
        mat_mul(&self, &rhs)
    }
}

impl fmt::Debug for Matrix4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix4[")?;
        for row in &self.0 {
            write!(f, "  ")?;
            for z in row {
                write!(f, "{:>+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

pub fn mat_mul(lhs: &Matrix4, rhs: &Matrix4) -> Matrix4 {
    let mut out = Matrix4::zeros();
    for i in 0..4 {
        for j in 0..4 {
            out.0[i][j] = (0..4).map(|k| lhs.0[i][k] * rhs.0[k][j]).sum();
        }
    }
    out
}

/// Conjugate transpose.
pub fn adjoint(m: &Matrix4) -> Matrix4 {
    let mut out = Matrix4::zeros();
    for i in 0..4 {
        for j in 0..4 {
            out.0[j][i] = m.0[i][j].conj();
        }
    }
    out
}

/// `lhs * rhs - rhs * lhs`.
pub fn commutator(lhs: &Matrix4, rhs: &Matrix4) -> Matrix4 {
    let ab = mat_mul(lhs, rhs);
    let ba = mat_mul(rhs, lhs);
    let mut out = Matrix4::zeros();
    for i in 0..4 {
        for j in 0..4 {
            out.0[i][j] = ab.0[i][j] - ba.0[i][j];
        }
    }
    out
}

/// σy ⊗ σy in the two-qubit basis.
pub fn sigma_y_sigma_y() -> Matrix4 {
    Matrix4::from_real([
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ])
}

/// Where a [`Spectrum`] came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    ClosedForm,
    Oracle,
}

/// Four real eigenvalues, sorted descending.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spectrum {
    values: [f64; 4],
    provenance: Provenance,
}

impl Spectrum {
    pub fn new(mut values: [f64; 4], provenance: Provenance) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Self { values, provenance }
    }

    pub fn values(&self) -> [f64; 4] {
        self.values
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn min(&self) -> f64 {
        self.values[3]
    }

    pub fn abs_sum(&self) -> f64 {
        self.values.iter().map(|v| v.abs()).sum()
    }

    /// Largest entrywise difference against another sorted spectrum.
    pub fn max_abs_diff(&self, other: &Spectrum) -> f64 {
        self.values
            .iter()
            .zip(other.values.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Outcome of a Jacobi run, with the sweep count for diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiRun {
    pub spectrum: Spectrum,
    pub sweeps: usize,
}

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.
pub fn hermitian_eigenvalues(m: &Matrix4) -> Result<Spectrum, EigenError> {
    jacobi(m).map(|run| run.spectrum)
}

pub fn jacobi(m: &Matrix4) -> Result<JacobiRun, EigenError> {
    let residual = m.hermitian_residual();
    if residual.is_nan() || residual > tol::HERMITIAN || !m.is_finite() {
        return Err(EigenError::NotHermitian { residual });
    }

    let mut a = *m;
    // Symmetrize exactly so rounding in the input cannot stall the sweeps.
    for i in 0..4 {
        a.0[i][i] = Complex64::new(a.0[i][i].re, 0.0);
        for j in (i + 1)..4 {
            let avg = (a.0[i][j] + a.0[j][i].conj()) * 0.5;
            a.0[i][j] = avg;
            a.0[j][i] = avg.conj();
        }
    }

    let threshold = tol::JACOBI_EPS * a.frobenius_norm().max(1.0);
    let mut sweeps = 0;
    while a.off_diagonal_norm() > threshold {
        if sweeps == tol::JACOBI_MAX_SWEEPS {
            return Err(EigenError::NoConvergence { sweeps });
        }
        for p in 0..3 {
            for q in (p + 1)..4 {
                rotate(&mut a, p, q);
            }
        }
        sweeps += 1;
    }

    let values = [a.0[0][0].re, a.0[1][1].re, a.0[2][2].re, a.0[3][3].re];
    Ok(JacobiRun {
        spectrum: Spectrum::new(values, Provenance::Oracle),
        sweeps,
    })
}

/// Annihilates `a[p][q]` with a unitary `U` acting on the (p, q) plane,
/// replacing `a` by `U† a U`.
fn rotate(a: &mut Matrix4, p: usize, q: usize) {
    let apq = a.0[p][q];
    let magnitude = apq.norm();
    if magnitude == 0.0 {
        return;
    }
    // Phase that makes the pivot real, then a real symmetric rotation.
    let phase = apq / magnitude;
    let app = a.0[p][p].re;
    let aqq = a.0[q][q].re;
    let theta = (aqq - app) / (2.0 * magnitude);
    let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;

    // U restricted to (p, q): [[c, s], [-s conj(phase), c conj(phase)]]
    let u_pp = Complex64::new(c, 0.0);
    let u_pq = Complex64::new(s, 0.0);
    let u_qp = -phase.conj() * s;
    let u_qq = phase.conj() * c;

    for r in 0..4 {
        let arp = a.0[r][p];
        let arq = a.0[r][q];
        a.0[r][p] = arp * u_pp + arq * u_qp;
        a.0[r][q] = arp * u_pq + arq * u_qq;
    }
    for r in 0..4 {
        let apr = a.0[p][r];
        let aqr = a.0[q][r];
        a.0[p][r] = u_pp.conj() * apr + u_qp.conj() * aqr;
        a.0[q][r] = u_pq.conj() * apr + u_qq.conj() * aqr;
    }
    a.0[p][q] = Complex64::new(0.0, 0.0);
    a.0[q][p] = Complex64::new(0.0, 0.0);
    a.0[p][p] = Complex64::new(a.0[p][p].re, 0.0);
    a.0[q][q] = Complex64::new(a.0[q][q].re, 0.0);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_is_neutral() {
        let mut m = Matrix4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                m.0[i][j] = c(i as f64 + 0.5, j as f64 - 1.0);
            }
        }
        assert_eq!(mat_mul(&Matrix4::identity(), &m), m);
        assert_eq!(mat_mul(&m, &Matrix4::identity()), m);
    }

    #[test]
    fn adjoint_basics() {
        let d = Matrix4::from_real_diagonal([0.4, 0.3, 0.2, 0.1]);
        assert_eq!(adjoint(&d), d);

        let mut m = Matrix4::zeros();
        m.0[0][3] = c(0.0, 1.0);
        assert_eq!(adjoint(&m).0[3][0], c(0.0, -1.0));

        let mut g = Matrix4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                g.0[i][j] = c((i * 4 + j) as f64, (j as f64) - (i as f64) * 0.3);
            }
        }
        assert_eq!(adjoint(&adjoint(&g)), g);
    }

    #[test]
    fn diagonal_spectrum() {
        let d = Matrix4::from_real_diagonal([0.1, 0.4, 0.2, 0.3]);
        let run = jacobi(&d).unwrap();
        assert_eq!(run.spectrum.values(), [0.4, 0.3, 0.2, 0.1]);
        assert_eq!(run.sweeps, 0);
        assert_eq!(run.spectrum.provenance(), Provenance::Oracle);
    }

    #[test]
    fn complex_two_by_two_block() {
        // [[a, z], [z*, b]] has eigenvalues (a+b)/2 ± sqrt(((a-b)/2)^2 + |z|^2)
        let mut m = Matrix4::from_real_diagonal([0.3, 0.0, 0.0, 0.2]);
        m.0[0][3] = c(0.1, -0.2);
        m.0[3][0] = c(0.1, 0.2);
        let mean = 0.25;
        let half = (0.05f64 * 0.05 + 0.05).sqrt();
        let s = hermitian_eigenvalues(&m).unwrap();
        let expected = Spectrum::new([mean + half, mean - half, 0.0, 0.0], Provenance::Oracle);
        assert!(s.max_abs_diff(&expected) < 1e-15, "{s:?}");
    }

    #[test]
    fn dense_hermitian_trace_and_sweeps() {
        let mut m = Matrix4::zeros();
        for (i, v) in [0.7, -0.2, 0.35, 1.1].into_iter().enumerate() {
            m.0[i][i] = c(v, 0.0);
            for j in (i + 1)..4 {
                let z = c(0.1 * (i + 2 * j) as f64, -0.07 * (3 * i + j) as f64);
                m.0[i][j] = z;
                m.0[j][i] = z.conj();
            }
        }
        let run = jacobi(&m).unwrap();
        assert!((run.spectrum.sum() - m.trace().re).abs() < 4e-10);
        assert!(run.sweeps <= tol::JACOBI_MAX_SWEEPS);
        // sum of squares is the Frobenius norm squared
        let sq: f64 = run.spectrum.values().iter().map(|v| v * v).sum();
        assert!((sq - m.frobenius_norm().powi(2)).abs() < 1e-13);
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut m = Matrix4::identity();
        m.0[0][1] = c(0.5, 0.0);
        assert!(matches!(
            hermitian_eigenvalues(&m),
            Err(EigenError::NotHermitian { .. })
        ));
        let mut n = Matrix4::identity();
        n.0[2][2] = c(f64::NAN, 0.0);
        assert!(hermitian_eigenvalues(&n).is_err());
    }

    #[test]
    fn spectrum_sorts_descending() {
        let s = Spectrum::new([-0.5, 0.5, 0.25, 0.75], Provenance::ClosedForm);
        assert_eq!(s.values(), [0.75, 0.5, 0.25, -0.5]);
        assert_eq!(s.abs_sum(), 2.0);
    }
}
