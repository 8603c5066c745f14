//! Deterministic seeded randomness for tests and randomized verification
//! passes (random points, random linear forms, random variable shuffles).
//!
//! A tiny fixed-algorithm generator (splitmix64) is used instead of an
//! external RNG crate so that byte-identical reports never depend on a
//! dependency's version.

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` (`bound > 0`) via rejection sampling.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }

    /// Signed value in `-span..=span`, never zero (useful for nonzero
    /// coefficients over the rationals).
    pub fn nonzero_signed(&mut self, span: u64) -> i64 {
        assert!(span > 0);
        let v = self.below(2 * span) as i64; // 0..2*span
        if v < span as i64 {
            v - span as i64 // -span..0
        } else {
            v - span as i64 + 1 // 1..=span
        }
    }

    /// In-place Fisher–Yates shuffle.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.below((i + 1) as u64) as usize;
            xs.swap(i, j);
        }
    }
}

/// Stable 64-bit string hash (FNV-1a). Used to derive per-check seeds from a
/// master seed and a label, so adding checks never shifts other checks' draws.
pub fn stable_hash(label: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.as_bytes() {
        h ^= *b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01B3);
    }
    h
}

pub fn derive_seed(master: u64, label: &str) -> u64 {
    let mut g = SplitMix64::new(master ^ stable_hash(label));
    g.next_u64()
}
