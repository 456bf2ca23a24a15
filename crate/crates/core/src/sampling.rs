//! Seeded sampling of ring elements for the infinite rings.

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::rings::{FpPoly, RingElement, RingSpec};

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_SAMPLES: usize = 1000;
/// Default largest degree of a sampled polynomial.
pub const DEFAULT_MAX_DEGREE: usize = 8;
/// Hard cap on sampled polynomial degree.
pub const DEGREE_CAP: usize = 64;
/// Largest magnitude of a sampled integer.
pub const INT_MAGNITUDE: u64 = 1_000_000;

/// Sampling parameters for the sampled suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleConfig {
    pub samples: usize,
    pub seed: u64,
    pub max_degree: usize,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig { samples: DEFAULT_SAMPLES, seed: DEFAULT_SEED, max_degree: DEFAULT_MAX_DEGREE }
    }
}

impl SampleConfig {
    pub fn new(samples: usize, seed: u64) -> Self {
        SampleConfig { samples, seed, ..SampleConfig::default() }
    }
}

/// Deterministic sampler. Independent suites use distinct streams of the same seed.
pub struct Sampler {
    rng: ChaCha8Rng,
    max_degree: usize,
}

impl Sampler {
    pub fn new(config: &SampleConfig, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        rng.set_stream(stream);
        Sampler { rng, max_degree: config.max_degree.min(DEGREE_CAP) }
    }

    /// Signed integer with magnitude log-uniform in `[1, 10^6]`, or zero with probability 1/16.
    pub fn integer(&mut self) -> BigInt {
        if self.rng.gen_ratio(1, 16) {
            return BigInt::from(0);
        }
        let ln_max = (INT_MAGNITUDE as f64).ln();
        let magnitude = (self.rng.gen::<f64>() * ln_max).exp().round().clamp(1.0, INT_MAGNITUDE as f64) as i64;
        if self.rng.gen_bool(0.5) {
            BigInt::from(-magnitude)
        } else {
            BigInt::from(magnitude)
        }
    }

    /// Polynomial of degree uniform in `[0, max_degree]`, or zero with probability 1/16.
    pub fn poly(&mut self, p: u64) -> FpPoly {
        if self.rng.gen_ratio(1, 16) {
            return FpPoly::zero(p);
        }
        let degree = self.rng.gen_range(0..=self.max_degree);
        let mut coeffs: Vec<u64> = (0..degree).map(|_| self.rng.gen_range(0..p)).collect();
        coeffs.push(self.rng.gen_range(1..p));
        FpPoly::new(p, coeffs)
    }

    pub fn nonzero_scalar(&mut self, p: u64) -> u64 {
        self.rng.gen_range(1..p)
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.rng.gen_range(0..len)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    /// A random element of `spec`.
    pub fn element(&mut self, spec: RingSpec) -> RingElement {
        match spec {
            RingSpec::Integer => RingElement::Integer(self.integer()),
            RingSpec::Modular { n } => RingElement::Residue { n, value: self.rng.gen_range(0..n) },
            RingSpec::Poly { p } => RingElement::Poly(self.poly(p)),
            RingSpec::Triangular { p } => RingElement::tri(
                p,
                self.rng.gen_range(0..p),
                self.rng.gen_range(0..p),
                self.rng.gen_range(0..p),
            ),
        }
    }

    /// A random unit of `spec`.
    pub fn unit(&mut self, spec: RingSpec) -> RingElement {
        match spec {
            RingSpec::Integer => RingElement::int(if self.coin() { 1 } else { -1 }),
            RingSpec::Poly { p } => RingElement::Poly(FpPoly::constant(p, self.nonzero_scalar(p))),
            RingSpec::Modular { n } => loop {
                let v = self.rng.gen_range(1..n.max(2));
                if crate::rings::gcd_u64(v, n) == 1 {
                    return RingElement::Residue { n, value: v % n };
                }
            },
            RingSpec::Triangular { p } => RingElement::tri(
                p,
                self.nonzero_scalar(p),
                self.rng.gen_range(0..p),
                self.nonzero_scalar(p),
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let cfg = SampleConfig::new(10, 7);
        let a: Vec<_> = {
            let mut s = Sampler::new(&cfg, 3);
            (0..20).map(|_| s.integer()).collect()
        };
        let b: Vec<_> = {
            let mut s = Sampler::new(&cfg, 3);
            (0..20).map(|_| s.integer()).collect()
        };
        assert_eq!(a, b);
        let c: Vec<_> = {
            let mut s = Sampler::new(&cfg, 4);
            (0..20).map(|_| s.integer()).collect()
        };
        assert_ne!(a, c);
    }

    #[test]
    fn sampled_values_respect_bounds() {
        let cfg = SampleConfig::default();
        let mut s = Sampler::new(&cfg, 0);
        for _ in 0..500 {
            let v = s.integer();
            assert!(v <= BigInt::from(INT_MAGNITUDE) && v >= BigInt::from(-(INT_MAGNITUDE as i64)));
            let f = s.poly(5);
            assert!(f.degree().map_or(true, |d| d <= DEFAULT_MAX_DEGREE));
        }
    }
}
