//! Deterministic seeded randomness for the experiment harness.
//!
//! The generator is a splittable counter-based design: stream `i` of a
//! 64-bit master seed is `SplitMix64` seeded with `mix(seed, i)`, so
//! trials can run in any order (or in parallel) and still reproduce
//! bit-identically for a fixed master seed.

/// The SplitMix64 finalizer (Steele, Lea & Flood).
#[inline]
fn splitmix64_next(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        splitmix64_next(&mut self.state)
    }

    /// Uniform in [0, 1); 53 mantissa bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Derive the seed for sub-stream `stream` of `seed`.
pub fn derive_seed(seed: u64, stream: u64) -> u64 {
    let mut s = seed ^ stream.wrapping_mul(0xa076_1d64_78bd_642f);
    // one extra scramble so stream 0 is not the master stream itself
    splitmix64_next(&mut s)
}
