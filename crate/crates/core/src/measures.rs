//! Closed-form spectra, entropies and entanglement measures of X-states.
//!
//! Each block of an X-state is a 2×2 Hermitian matrix, so every spectrum
//! below is a pair of `(sum ± sqrt(diff² + 4|off|²)) / 2` roots. Entropies are
//! in nats and use `0 ln 0 = 0`.

use num_complex::Complex64;

use crate::linalg::{Provenance, Spectrum};
use crate::state::{QubitState2, XState};
use crate::tol;

/// Eigenvalues of `[[x, z], [conj(z), y]]`.
fn block_eigenvalues(x: f64, y: f64, z: Complex64) -> [f64; 2] {
    let root = (x - y).hypot(2.0 * z.norm());
    [0.5 * (x + y + root), 0.5 * (x + y - root)]
}

/// Spectrum of the state matrix.
pub fn xstate_spectrum(x: &XState) -> Spectrum {
    let [d1, d2, d3, d4] = x.diag();
    let [l1, l2] = block_eigenvalues(d1, d4, x.corner());
    let [l3, l4] = block_eigenvalues(d2, d3, x.inner());
    Spectrum::new([l1, l2, l3, l4], Provenance::ClosedForm)
}

/// First-qubit reduction: `diag(rho11 + rho22, rho33 + rho44)`.
pub fn reduce_first(x: &XState) -> QubitState2 {
    let [d1, d2, d3, d4] = x.diag();
    QubitState2 {
        p_up: d1 + d2,
        p_down: d3 + d4,
        off: Complex64::new(0.0, 0.0),
    }
}

/// Second-qubit reduction: `diag(rho11 + rho33, rho22 + rho44)`.
pub fn reduce_second(x: &XState) -> QubitState2 {
    let [d1, d2, d3, d4] = x.diag();
    QubitState2 {
        p_up: d1 + d3,
        p_down: d2 + d4,
        off: Complex64::new(0.0, 0.0),
    }
}

/// `-p ln p`, zero for `p <= 0`.
pub(crate) fn entropy_term(p: f64) -> f64 {
    if p > 0.0 {
        -p * p.ln()
    } else {
        0.0
    }
}

/// Shannon entropy in nats. Non-positive entries contribute nothing.
pub fn shannon_entropy(probs: &[f64]) -> f64 {
    probs.iter().copied().map(entropy_term).sum()
}

/// Von Neumann entropies of the two reductions and of the whole state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyReport {
    pub s1: f64,
    pub s2: f64,
    pub s12: f64,
    /// `s1 + s2 - s12`, nonnegative up to round-off.
    pub info: f64,
}

impl EntropyReport {
    pub fn subadditive(&self) -> bool {
        self.info >= -4.0 * tol::ENTROPY
    }
}

pub fn entropy_report(x: &XState) -> EntropyReport {
    let r1 = reduce_first(x);
    let r2 = reduce_second(x);
    let s1 = shannon_entropy(&[r1.p_up, r1.p_down]);
    let s2 = shannon_entropy(&[r2.p_up, r2.p_down]);
    let s12 = shannon_entropy(&xstate_spectrum(x).values());
    EntropyReport {
        s1,
        s2,
        s12,
        info: s1 + s2 - s12,
    }
}

/// Partial transpose on the second qubit. For X-shaped matrices this swaps
/// `rho14` and `rho23` and keeps the diagonal. The result may be indefinite.
pub fn partial_transpose(x: &XState) -> XState {
    XState::from_parts(x.diag(), x.inner(), x.corner())
}

/// Spectrum of the partial transpose.
pub fn ppt_spectrum(x: &XState) -> Spectrum {
    let [d1, d2, d3, d4] = x.diag();
    let [l1, l2] = block_eigenvalues(d1, d4, x.inner());
    let [l3, l4] = block_eigenvalues(d2, d3, x.corner());
    Spectrum::new([l1, l2, l3, l4], Provenance::ClosedForm)
}

/// Which of the two mutually exclusive entanglement conditions holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActiveCondition {
    None,
    /// `rho22 rho33 < |rho14|^2`
    CornerDominant,
    /// `rho11 rho44 < |rho23|^2`
    InnerDominant,
}

impl ActiveCondition {
    pub fn label(self) -> &'static str {
        match self {
            ActiveCondition::None => "none",
            ActiveCondition::CornerDominant => "corner-dominant",
            ActiveCondition::InnerDominant => "inner-dominant",
        }
    }
}

/// Both strict dominance tests, in (corner, inner) order.
pub fn dominance_conditions(x: &XState) -> (bool, bool) {
    let [d1, d2, d3, d4] = x.diag();
    (
        d2 * d3 < x.corner().norm_sqr(),
        d1 * d4 < x.inner().norm_sqr(),
    )
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntanglementReport {
    pub ppt_spectrum: Spectrum,
    /// Sum of absolute partial-transpose eigenvalues; exceeds 1 only for
    /// entangled states.
    pub negativity_parameter: f64,
    /// `max(0, (negativity_parameter - 1) / 2)`, the usual negativity.
    pub standard_negativity: f64,
    pub concurrence: f64,
    pub entangled: bool,
    pub active_condition: ActiveCondition,
}

pub fn entanglement_report(x: &XState) -> EntanglementReport {
    let ppt = ppt_spectrum(x);
    let negativity_parameter = ppt.abs_sum();
    let active_condition = match dominance_conditions(x) {
        (true, _) => ActiveCondition::CornerDominant,
        (false, true) => ActiveCondition::InnerDominant,
        (false, false) => ActiveCondition::None,
    };
    EntanglementReport {
        ppt_spectrum: ppt,
        negativity_parameter,
        standard_negativity: standard_negativity(negativity_parameter),
        concurrence: concurrence_closed(x),
        entangled: negativity_parameter > 1.0 + tol::ENTANGLEMENT,
        active_condition,
    }
}

pub fn standard_negativity(negativity_parameter: f64) -> f64 {
    ((negativity_parameter - 1.0) / 2.0).max(0.0)
}

/// `(σy ⊗ σy) conj(rho) (σy ⊗ σy)`: reverses the diagonal and keeps both
/// off-diagonal entries in place.
pub fn spin_flip(x: &XState) -> XState {
    let [d1, d2, d3, d4] = x.diag();
    XState::from_parts([d4, d3, d2, d1], x.corner(), x.inner())
}

/// Eigenvalues of `rho * spin_flip(rho)`:
/// `(|rho14| ∓ sqrt(rho11 rho44))^2` and `(|rho23| ∓ sqrt(rho22 rho33))^2`.
pub fn product_spectrum(x: &XState) -> [f64; 4] {
    let [d1, d2, d3, d4] = x.diag();
    let outer = (d1 * d4).max(0.0).sqrt();
    let inner = (d2 * d3).max(0.0).sqrt();
    let a = x.corner().norm();
    let c = x.inner().norm();
    [
        (a - outer).powi(2),
        (a + outer).powi(2),
        (c - inner).powi(2),
        (c + inner).powi(2),
    ]
}

/// Concurrence from the square roots of the product spectrum, sorted
/// descending: `max(0, r1 - r2 - r3 - r4)`.
pub fn concurrence_spectrum_route(x: &XState) -> f64 {
    concurrence_from_product_eigenvalues(product_spectrum(x))
}

/// Shared tail of the spectrum route; accepts eigenvalues from any source.
pub fn concurrence_from_product_eigenvalues(eigenvalues: [f64; 4]) -> f64 {
    let mut roots = eigenvalues.map(|l| l.max(0.0).sqrt());
    roots.sort_by(|a, b| b.total_cmp(a));
    (roots[0] - roots[1] - roots[2] - roots[3]).max(0.0)
}

/// `max(0, 2|rho23| - 2 sqrt(rho11 rho44), 2|rho14| - 2 sqrt(rho22 rho33))`.
pub fn concurrence_closed(x: &XState) -> f64 {
    let [d1, d2, d3, d4] = x.diag();
    let via_inner = 2.0 * x.inner().norm() - 2.0 * (d1 * d4).max(0.0).sqrt();
    let via_corner = 2.0 * x.corner().norm() - 2.0 * (d2 * d3).max(0.0).sqrt();
    via_inner.max(via_corner).max(0.0)
}
