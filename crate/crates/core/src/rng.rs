//! Seeding. Every run owns one ChaCha8 stream derived from
//! `(master seed, replicate id)`, so any replicate is reproducible alone.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type RunRng = ChaCha8Rng;

/// SplitMix64 finalizer applied to `master + replicate`. The finalizer is
/// a bijection on `u64`, so distinct replicate ids give distinct seeds.
pub fn replicate_seed(master: u64, replicate: u64) -> u64 {
    let mut z = master.wrapping_add(replicate).wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn replicate_rng(master: u64, replicate: u64) -> RunRng {
    RunRng::seed_from_u64(replicate_seed(master, replicate))
}
