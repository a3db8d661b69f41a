//! Seeded error injection. A (seed, stream) pair fixes every draw.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ff::{Field, Gf};

pub struct Channel {
    rng: ChaCha8Rng,
}

impl Channel {
    pub fn new(seed: u64) -> Self {
        Channel {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Independent stream per trial, so trials can run in any order.
    pub fn for_trial(seed: u64, trial: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        Channel { rng }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn element(&mut self, field: &Field) -> Gf {
        Gf(self.rng.gen_range(0..field.size()))
    }

    pub fn nonzero(&mut self, field: &Field) -> Gf {
        Gf(self.rng.gen_range(1..field.size()))
    }

    pub fn vector(&mut self, field: &Field, len: usize) -> Vec<Gf> {
        (0..len).map(|_| self.element(field)).collect()
    }

    /// Adds a nonzero error at `weight` distinct uniform positions.
    /// Returns the received word and the sorted error positions.
    pub fn corrupt(&mut self, field: &Field, word: &[Gf], weight: usize) -> (Vec<Gf>, Vec<usize>) {
        assert!(weight <= word.len(), "more errors than symbols");
        let mut pos = sample(&mut self.rng, word.len(), weight).into_vec();
        pos.sort_unstable();
        let mut out = word.to_vec();
        for &p in &pos {
            let e = self.nonzero(field);
            out[p] = field.add(out[p], e);
        }
        (out, pos)
    }
}
