//! Seeded random triangles and perspectors.

use castillon_core::{HomoBary, TriangleData};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SIDE_RANGE: (f64, f64) = (0.1, 10.0);
/// Largest accepted `max_side² / (2·area)`.
pub const MAX_ASPECT: f64 = 1e3;

/// Seed from `CASTILLON_SEED`, or 0.
pub fn env_seed() -> u64 {
    std::env::var("CASTILLON_SEED").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(0)
}

pub fn aspect(t: &TriangleData) -> f64 {
    let m = t.max_side();
    m * m / (2.0 * t.area())
}

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    fn log_uniform(&mut self) -> f64 {
        let (lo, hi) = (SIDE_RANGE.0.ln(), SIDE_RANGE.1.ln());
        self.rng.random_range(lo..hi).exp()
    }

    /// A triangle with log-uniform sidelengths and bounded aspect ratio.
    pub fn triangle(&mut self) -> TriangleData {
        loop {
            let (a, b, c) = (self.log_uniform(), self.log_uniform(), self.log_uniform());
            if !(a + b > c && b + c > a && c + a > b) {
                continue;
            }
            if let Ok(t) = TriangleData::from_sides(a, b, c) {
                if aspect(&t) <= MAX_ASPECT {
                    return t;
                }
            }
        }
    }

    /// A point uniformly distributed in the interior, as barycentrics.
    pub fn interior_point(&mut self) -> HomoBary {
        let (mut r1, mut r2) = (self.rng.random::<f64>(), self.rng.random::<f64>());
        if r1 + r2 > 1.0 {
            r1 = 1.0 - r1;
            r2 = 1.0 - r2;
        }
        HomoBary::new(1.0 - r1 - r2, r1, r2)
    }
}
