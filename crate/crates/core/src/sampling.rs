//! Small deterministic pseudo-random source (SplitMix64) used for
//! seed-stable randomized checks in tests and tooling.

use crate::words::{Letter, Word};

/// SplitMix64 generator.  Deterministic for a given seed across platforms.
#[derive(Debug, Clone)]
pub struct Rng64(pub u64);

impl Rng64 {
    pub fn new(seed: u64) -> Rng64 {
        Rng64(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..n` (`n > 0`).
    pub fn gen_range(&mut self, n: usize) -> usize {
        assert!(n > 0, "gen_range requires a nonempty range");
        (self.next_u64() % n as u64) as usize
    }

    /// Random boolean.
    pub fn gen_bool(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }
}

/// A random word of exactly `len` letters at the given rank, drawn from
/// crossings, inverse crossings and (when allowed) deletion letters.
pub fn random_word(rng: &mut Rng64, rank: usize, len: usize, allow_eps: bool) -> Word {
    let mut letters = Vec::with_capacity(len);
    for _ in 0..len {
        let pick_eps = allow_eps && rank >= 1 && rng.gen_range(4) == 0;
        if pick_eps {
            letters.push(Letter::Eps(1 + rng.gen_range(rank)));
        } else if rank >= 2 {
            let i = 1 + rng.gen_range(rank - 1);
            if rng.gen_bool() {
                letters.push(Letter::Sigma(i));
            } else {
                letters.push(Letter::SigmaInv(i));
            }
        } else if allow_eps && rank == 1 {
            letters.push(Letter::Eps(1));
        }
        // rank <= 1 without deletions: no letters exist; the word stays shorter.
    }
    Word::new(rank, letters).expect("sampled letters are in range")
}
