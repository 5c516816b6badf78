//! Deterministic pseudo-random streams.
//!
//! The generator is SplitMix64 (Steele, Lea & Flood 2014): a 64-bit additive
//! counter pushed through an avalanching mixer. It is small, has no state
//! beyond one word, and — unlike adapter-dependent generator APIs — its
//! output sequence is trivial to reproduce in any language, which is what
//! the resampling and simulation layers require.
//!
//! Parallel work units never share a stream. Unit `i` of a job seeded with
//! `seed` owns [`RandomStream::substream`]`(seed, i)`, so results are
//! independent of scheduling order and thread count.

/// SplitMix64 additive constant (2^64 / golden ratio, odd).
const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 output mixing function (finalizer).
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A deterministic stream of pseudo-random values.
///
/// Each stream is owned by exactly one consumer; cloning captures the
/// current state, so a clone replays the remainder of the sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomStream {
    state: u64,
}

impl RandomStream {
    /// Stream whose state starts at `seed`.
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    /// Independent substream for work unit `index` under `seed`.
    ///
    /// The initial state is one SplitMix64 mixing round applied to
    /// `seed + (index + 1) * GOLDEN`. Distinct indices map to distinct
    /// states, and the `+ 1` keeps substream 0 from replaying the base
    /// stream's own sequence.
    pub fn substream(seed: u64, index: u64) -> Self {
        Self {
            state: mix(seed.wrapping_add(index.wrapping_add(1).wrapping_mul(GOLDEN))),
        }
    }

    /// Next 64-bit value.
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        mix(self.state)
    }

    /// Uniform draw in the open interval (0, 1) with 53-bit resolution.
    ///
    /// The end points are excluded by construction: the 53 high bits are
    /// offset by 1/2 before scaling, so quantile transforms never see 0 or 1.
    pub fn next_open01(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64 + 0.5) * (1.0 / 9_007_199_254_740_992.0)
    }

    /// Uniform index in `0..bound` via the multiply-shift reduction
    /// (Lemire 2019). `bound` must be positive.
    pub fn next_index(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        (((self.next_u64() as u128) * (bound as u128)) >> 64) as usize
    }
}
