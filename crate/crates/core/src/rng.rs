//! Deterministic pseudo-random streams.
//!
//! The generator is SplitMix64 with its standard constants, written out here
//! so every build on every platform produces the same sequences. Substreams
//! are addressed by `(master_seed, index)`: the pair is mixed through the
//! 64-bit finalizer twice, which decorrelates streams regardless of how close
//! the seeds or indices are. Integer-only derivation keeps stream addressing
//! bit-identical everywhere.

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;
const F64_FROM_BITS: f64 = 1.0 / 9_007_199_254_740_992.0; // 2^-53

/// murmur-style 64-bit finalizer used by SplitMix64
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Debug, Clone)]
pub struct Stream {
    state: u64,
}

impl Stream {
    pub fn new(seed: u64) -> Self {
        Stream { state: seed }
    }

    /// Stream `index` of the family rooted at `master_seed`. Same pair in,
    /// same stream out, independent of call order or thread assignment.
    pub fn substream(master_seed: u64, index: u64) -> Self {
        let a = mix64(master_seed.wrapping_add(GOLDEN_GAMMA));
        let b = mix64(index.wrapping_mul(GOLDEN_GAMMA).wrapping_add(1));
        Stream::new(mix64(a ^ b))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix64(self.state)
    }

    /// Uniform in `[0, 1)` with the full 53 bits of mantissa.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * F64_FROM_BITS
    }

    /// Uniform in `(0, 1]`, safe to feed into `ln`.
    fn next_f64_open(&mut self) -> f64 {
        ((self.next_u64() >> 11) + 1) as f64 * F64_FROM_BITS
    }

    /// One Box-Muller step: two independent standard normals.
    pub fn next_normal_pair(&mut self) -> (f64, f64) {
        let u1 = self.next_f64_open();
        let u2 = self.next_f64();
        let r = (-2.0 * u1.ln()).sqrt();
        let theta = 2.0 * std::f64::consts::PI * u2;
        (r * theta.cos(), r * theta.sin())
    }
}
