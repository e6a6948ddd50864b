//! Minimal counter-friendly pseudo-random generator.
//!
//! Everything seeded in this crate (random graph models, search restarts,
//! annealing) runs on SplitMix64 so that a `(seed, index)` pair pins an
//! entire stream independently of evaluation order or thread count. The
//! constants are the standard SplitMix64 ones:
//!
//! - increment `0x9E3779B97F4A7C15`
//! - mix multipliers `0xBF58476D1CE4E5B9` and `0x94D049BB133111EB`
//!
//! Floats in `[0, 1)` take the top 53 bits of a draw, `(x >> 11) * 2^-53`.

const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// Finalizer of SplitMix64; a bijective avalanche mix on 64 bits.
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    /// Stream for sample `index` of a run seeded with `seed`. Distinct
    /// indexes get decorrelated streams; identical inputs get identical
    /// streams, so parallel consumers need no shared state.
    pub fn stream(seed: u64, index: u64) -> Self {
        Self::new(mix64(seed) ^ mix64(index.wrapping_mul(GAMMA).wrapping_add(1)))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GAMMA);
        mix64(self.state)
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// True with probability `p`.
    pub fn bernoulli(&mut self, p: f64) -> bool {
        self.next_f64() < p
    }

    /// Uniform integer in `[0, n)` via rejection-free Lemire reduction.
    pub fn below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        ((self.next_u64() as u128 * n as u128) >> 64) as u64
    }
}
