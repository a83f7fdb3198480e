//! Reproducible random test polynomials.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactalg::{int, Poly};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_240_601;

/// Deterministic source of polynomials with integer coefficients in `-9..=9`.
pub struct PolySampler {
    rng: ChaCha8Rng,
}

impl PolySampler {
    pub fn new(seed: u64) -> Self {
        PolySampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// A polynomial of degree at most `max_degree`; the degree itself is drawn uniformly.
    pub fn poly(&mut self, max_degree: u32) -> Poly {
        let degree = self.rng.gen_range(0..=max_degree);
        self.poly_of_degree(degree)
    }

    /// A polynomial of exact degree `degree`.
    pub fn poly_of_degree(&mut self, degree: u32) -> Poly {
        let mut coeffs: Vec<_> = (0..=degree)
            .map(|_| int(self.rng.gen_range(-9..=9)))
            .collect();
        let top = loop {
            let c = self.rng.gen_range(-9..=9);
            if c != 0 {
                break c;
            }
        };
        coeffs[degree as usize] = int(top);
        Poly::new(coeffs)
    }

    pub fn pairs(&mut self, count: usize, max_degree: u32) -> Vec<(Poly, Poly)> {
        (0..count)
            .map(|_| (self.poly(max_degree), self.poly(max_degree)))
            .collect()
    }
}
