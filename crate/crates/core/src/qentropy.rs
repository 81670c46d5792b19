//! Classical Tsallis and Rényi entropies of a four-outcome distribution.
//!
//! For an X-state the distribution is the diagonal `(rho11, .., rho44)`.

use crate::error::EntropyError;
use crate::state::XState;
use crate::tol;

fn check(probs: &[f64; 4], q: f64) -> Result<(), EntropyError> {
    if !q.is_finite() || q <= 0.0 || q == 1.0 {
        return Err(EntropyError::BadParameter(q));
    }
    let in_range = probs.iter().all(|p| p.is_finite() && *p >= -tol::TRACE);
    let total: f64 = probs.iter().sum();
    if !in_range || (total - 1.0).abs() > tol::TRACE {
        return Err(EntropyError::NotDistribution);
    }
    Ok(())
}

/// `sum p_i^q` with `0^q = 0`.
fn power_sum(probs: &[f64; 4], q: f64) -> f64 {
    probs.iter().filter(|&&p| p > 0.0).map(|p| p.powf(q)).sum()
}

/// `(sum p_i^q - 1) / (1 - q)`.
pub fn tsallis_entropy(probs: &[f64; 4], q: f64) -> Result<f64, EntropyError> {
    check(probs, q)?;
    Ok((power_sum(probs, q) - 1.0) / (1.0 - q))
}

/// `ln(sum p_i^q) / (1 - q)`.
pub fn renyi_entropy(probs: &[f64; 4], q: f64) -> Result<f64, EntropyError> {
    check(probs, q)?;
    Ok(power_sum(probs, q).ln() / (1.0 - q))
}

/// The distribution the q-entropies are evaluated on.
pub fn diagonal_distribution(x: &XState) -> [f64; 4] {
    x.diag()
}
