//! The two-parameter Werner family
//!
//! ```text
//!           | (1+p)/4    0       0     p/2   |
//! rho(p,b) =|   0     (1-p)/4    b      0    |
//!           |   0        b    (1-p)/4   0    |
//!           |  p/2       0       0   (1+p)/4 |
//! ```
//!
//! It is a state for `-1/3 <= p <= 1` and `|b| <= (1-p)/4`; its partial
//! transpose is positive for `|b| <= (1+p)/4`. Points inside both bands are
//! entangled exactly when `p > 1/3`.

use num_complex::Complex64;

use crate::error::WernerError;
use crate::linalg::{Provenance, Spectrum};
use crate::measures::{self, EntropyReport};
use crate::state::XState;
use crate::tol;

pub const P_MIN: f64 = -1.0 / 3.0;
pub const P_MAX: f64 = 1.0;
pub const B_MIN: f64 = -0.5;
pub const B_MAX: f64 = 0.5;

/// Largest number of cells a region grid may hold.
pub const MAX_GRID_CELLS: usize = 1 << 24;
/// Largest number of rows a sweep may produce.
pub const MAX_SWEEP_ROWS: usize = 10_000_000;

pub fn state_valid(p: f64, b: f64) -> bool {
    (P_MIN - tol::REGION..=P_MAX + tol::REGION).contains(&p)
        && (1.0 - p) / 4.0 + tol::REGION >= b.abs()
}

pub fn ppt_valid(p: f64, b: f64) -> bool {
    (1.0 + p) / 4.0 + tol::REGION >= b.abs()
}

pub fn werner_state(p: f64, b: f64) -> Result<XState, WernerError> {
    if !(p.is_finite() && b.is_finite() && state_valid(p, b)) {
        return Err(WernerError::OutOfRegion { p, b });
    }
    let outer = (1.0 + p) / 4.0;
    let inner = (1.0 - p) / 4.0;
    XState::new(
        outer,
        inner,
        inner,
        outer,
        Complex64::new(p / 2.0, 0.0),
        Complex64::new(b, 0.0),
    )
    .map_err(|_| WernerError::OutOfRegion { p, b })
}

/// `{(1+3p)/4, (1-p)/4, (1-p)/4 - b, (1-p)/4 + b}`.
pub fn werner_spectrum(p: f64, b: f64) -> Spectrum {
    let inner = (1.0 - p) / 4.0;
    Spectrum::new(
        [(1.0 + 3.0 * p) / 4.0, inner, inner - b, inner + b],
        Provenance::ClosedForm,
    )
}

/// `{(1-3p)/4, (1+p)/4, (1+p)/4 - b, (1+p)/4 + b}`.
pub fn werner_ppt_spectrum(p: f64, b: f64) -> Spectrum {
    let outer = (1.0 + p) / 4.0;
    Spectrum::new(
        [(1.0 - 3.0 * p) / 4.0, outer, outer - b, outer + b],
        Provenance::ClosedForm,
    )
}

pub fn werner_negativity(p: f64, b: f64) -> f64 {
    let outer = (1.0 + p) / 4.0;
    ((1.0 - 3.0 * p) / 4.0).abs() + outer.abs() + (outer - b).abs() + (outer + b).abs()
}

pub fn werner_concurrence(p: f64, b: f64) -> f64 {
    let via_inner = 2.0 * b.abs() - (1.0 + p) / 2.0;
    let via_corner = p.abs() - (1.0 - p) / 2.0;
    via_inner.max(via_corner).max(0.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Invalid,
    Separable,
    Entangled,
}

impl Classification {
    /// CSV code: 0 invalid, 1 separable, 2 entangled.
    pub fn code(self) -> u8 {
        match self {
            Classification::Invalid => 0,
            Classification::Separable => 1,
            Classification::Entangled => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WernerPoint {
    pub p: f64,
    pub b: f64,
    pub state_valid: bool,
    pub ppt_valid: bool,
    pub classification: Classification,
}

impl WernerPoint {
    /// Invalid outside the intersection of the state and partial-transpose
    /// bands; otherwise decided by the negativity parameter.
    pub fn classify(p: f64, b: f64) -> Self {
        let state_valid = state_valid(p, b);
        let ppt_valid = ppt_valid(p, b);
        let classification = if !(state_valid && ppt_valid) {
            Classification::Invalid
        } else if werner_negativity(p, b) > 1.0 + tol::ENTANGLEMENT {
            Classification::Entangled
        } else {
            Classification::Separable
        };
        Self {
            p,
            b,
            state_valid,
            ppt_valid,
            classification,
        }
    }
}

/// `count` evenly spaced points from `lo` to `hi`, both ends exact.
fn linspace(lo: f64, hi: f64, count: usize) -> impl Iterator<Item = f64> {
    let last = count - 1;
    (0..count).map(move |i| {
        if i == last {
            hi
        } else {
            lo + (hi - lo) * (i as f64) / (last as f64)
        }
    })
}

/// Uniform grid over `p in [-1/3, 1]`, `b in [-1/2, 1/2]`, ordered by
/// ascending `p` then `b`.
pub fn region_grid(p_steps: usize, b_steps: usize) -> Result<Vec<WernerPoint>, WernerError> {
    let cells = p_steps.checked_mul(b_steps);
    if p_steps < 2 || b_steps < 2 || cells.is_none_or(|n| n > MAX_GRID_CELLS) {
        return Err(WernerError::BadGrid { p_steps, b_steps });
    }
    let bs: Vec<f64> = linspace(B_MIN, B_MAX, b_steps).collect();
    Ok(linspace(P_MIN, P_MAX, p_steps)
        .flat_map(|p| bs.iter().map(move |&b| WernerPoint::classify(p, b)))
        .collect())
}

/// How `b` follows `p` along a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BRule {
    Const(f64),
    /// `b = (1 - p) / k`
    Scaled(f64),
}

impl BRule {
    pub fn check(self) -> Result<Self, WernerError> {
        match self {
            BRule::Scaled(k) if !(k > 0.0 && k.is_finite()) => Err(WernerError::BadRule(k)),
            BRule::Const(v) if !v.is_finite() => Err(WernerError::BadRange(format!(
                "constant b = {v} is not finite"
            ))),
            rule => Ok(rule),
        }
    }

    pub fn b_at(self, p: f64) -> f64 {
        match self {
            BRule::Const(v) => v,
            BRule::Scaled(k) => (1.0 - p) / k,
        }
    }
}

/// Points `start + k * step`. The grid point nearest to `stop` is replaced by
/// `stop` itself, so the range is inclusive whenever `stop` lies within half
/// a step of a grid point.
pub fn sweep_points(start: f64, stop: f64, step: f64) -> Result<Vec<f64>, WernerError> {
    if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
        return Err(WernerError::BadRange("bounds must be finite".into()));
    }
    if step <= 0.0 {
        return Err(WernerError::BadRange(format!(
            "step {step} must be positive"
        )));
    }
    if stop < start {
        return Err(WernerError::BadRange(format!(
            "stop {stop} is below start {start}"
        )));
    }
    let intervals = ((stop - start) / step).round();
    if intervals >= MAX_SWEEP_ROWS as f64 {
        return Err(WernerError::BadRange(format!(
            "range needs more than {MAX_SWEEP_ROWS} points"
        )));
    }
    let n = intervals as usize;
    if n == 0 {
        return Ok(vec![start]);
    }
    let mut points: Vec<f64> = (0..n).map(|k| start + (k as f64) * step).collect();
    points.push(stop);
    Ok(points)
}

/// One line of Werner curve data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub p: f64,
    pub b: f64,
    pub state_valid: bool,
    pub ppt_valid: bool,
    pub spectrum: [f64; 4],
    pub ppt_spectrum: [f64; 4],
    pub negativity_parameter: f64,
    pub standard_negativity: f64,
    pub concurrence: f64,
    /// Present only where `(p, b)` is a state.
    pub entropy: Option<EntropyReport>,
}

impl SweepRow {
    /// Closed-form values at `(p, b)`, reported whether or not the point is
    /// inside either validity band.
    pub fn at(p: f64, b: f64) -> Self {
        let negativity_parameter = werner_negativity(p, b);
        Self {
            p,
            b,
            state_valid: state_valid(p, b),
            ppt_valid: ppt_valid(p, b),
            spectrum: werner_spectrum(p, b).values(),
            ppt_spectrum: werner_ppt_spectrum(p, b).values(),
            negativity_parameter,
            standard_negativity: measures::standard_negativity(negativity_parameter),
            concurrence: werner_concurrence(p, b),
            entropy: werner_state(p, b)
                .ok()
                .map(|x| measures::entropy_report(&x)),
        }
    }
}

pub fn sweep(rule: BRule, start: f64, stop: f64, step: f64) -> Result<Vec<SweepRow>, WernerError> {
    let rule = rule.check()?;
    Ok(sweep_points(start, stop, step)?
        .into_iter()
        .map(|p| SweepRow::at(p, rule.b_at(p)))
        .collect())
}
