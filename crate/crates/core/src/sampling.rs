//! Random valid X-states.
//!
//! The diagonal is a flat sample from the probability simplex (spacings of
//! three sorted uniforms). Off-diagonal moduli are uniform up to their block
//! bound `sqrt(d1 d4)` or `sqrt(d2 d3)`, with uniform phases. Every draw is a
//! valid state, and both block boundaries are approached with positive
//! density.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::state::XState;

pub struct XStateSampler {
    rng: ChaCha8Rng,
}

impl XStateSampler {
    pub fn seeded(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Uniform point on the 4-outcome probability simplex.
    pub fn simplex_point(&mut self) -> [f64; 4] {
        let mut cuts = [
            self.rng.random::<f64>(),
            self.rng.random::<f64>(),
            self.rng.random::<f64>(),
        ];
        cuts.sort_by(f64::total_cmp);
        [cuts[0], cuts[1] - cuts[0], cuts[2] - cuts[1], 1.0 - cuts[2]]
    }

    fn off_diagonal(&mut self, bound: f64) -> Complex64 {
        let modulus = self.rng.random::<f64>() * bound;
        Complex64::from_polar(modulus, self.rng.random::<f64>() * TAU)
    }

    pub fn next_state(&mut self) -> XState {
        let [d1, d2, d3, d4] = self.simplex_point();
        let corner = self.off_diagonal((d1 * d4).sqrt());
        let inner = self.off_diagonal((d2 * d3).sqrt());
        XState::new(d1, d2, d3, d4, corner, inner)
            .expect("sampled parameters are valid by construction")
    }

    pub fn states(&mut self, count: usize) -> Vec<XState> {
        (0..count).map(|_| self.next_state()).collect()
    }
}
