use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random source whose words all have the top bit set, so every
/// `gen_bool(p)` with `p <= 1/2` comes out false: standard bit mutation
/// never flips and the crossover coin (at 1/2) never fires. Integer draws
/// still vary, so rejection sampling terminates.
pub struct NoFlipRng(ChaCha8Rng);

impl NoFlipRng {
    pub fn new(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }
}

impl RngCore for NoFlipRng {
    fn next_u32(&mut self) -> u32 {
        self.0.next_u32() | 1 << 31
    }

    fn next_u64(&mut self) -> u64 {
        self.0.next_u64() | 1 << 63
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.0.fill_bytes(dest);
    }

    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> Result<(), rand::Error> {
        self.0.try_fill_bytes(dest)
    }
}
