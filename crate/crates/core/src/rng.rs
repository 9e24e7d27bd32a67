//! Reproducible randomness for graph generation.
//!
//! The generator is xoshiro256** (Blackman & Vigna). Its 256-bit state is
//! filled from the 64-bit seed by four SplitMix64 outputs:
//!
//! ```text
//! s += 0x9E3779B97F4A7C15
//! z = s
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! out = z ^ (z >> 31)
//! ```
//!
//! Derived samples use only `next_u64`, so another implementation of
//! xoshiro256** produces identical graphs:
//!
//! - [`GraphRng::below`]`(k)`: draw `r` until `r >= (2^64 - k) mod k`, return `r mod k`.
//! - [`GraphRng::bernoulli`]`(p)`: `(r >> 11) * 2^-53 < p`.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

pub struct GraphRng(Xoshiro256StarStar);

impl GraphRng {
    pub fn new(seed: u64) -> Self {
        GraphRng(Xoshiro256StarStar::seed_from_u64(seed))
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform integer in `0..bound`. Panics if `bound == 0`.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let r = self.next_u64();
            if r >= threshold {
                return r % bound;
            }
        }
    }

    /// `true` with probability `p`; exact for `p = 0` and `p = 1`.
    pub fn bernoulli(&mut self, p: f64) -> bool {
        let unit = (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        unit < p
    }
}
