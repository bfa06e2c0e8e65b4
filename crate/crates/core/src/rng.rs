//! Seeded random streams.
//!
//! Every random draw in a run comes from a stream addressed by
//! `(master seed, purpose, generation, slot)`. The address is written
//! directly into the ChaCha key, so distinct addresses give independent
//! streams and results do not depend on the order (or thread) in which
//! slots are processed.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// What a stream is used for. Keeps e.g. initialization and pairing draws
/// from colliding with per-slot variation draws of the same generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u64)]
pub enum Purpose {
    Init = 1,
    Pairing = 2,
    Variation = 3,
    Instance = 4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Streams {
    seed: u64,
}

impl Streams {
    pub fn new(seed: u64) -> Self {
        Self { seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream(&self, purpose: Purpose, generation: u64, slot: u64) -> ChaCha8Rng {
        let mut key = [0u8; 32];
        key[0..8].copy_from_slice(&self.seed.to_le_bytes());
        key[8..16].copy_from_slice(&(purpose as u64).to_le_bytes());
        key[16..24].copy_from_slice(&generation.to_le_bytes());
        key[24..32].copy_from_slice(&slot.to_le_bytes());
        ChaCha8Rng::from_seed(key)
    }
}
