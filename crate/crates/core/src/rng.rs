//! Seeded randomness for "general position" choices.
//!
//! Every random object comes from [`GenericRng`], a xoshiro256++ generator.
//! Independent streams of one seed are obtained with the generator's jump
//! function, so stream `k` never overlaps stream `k + 1`.

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::field::Field;

pub const DEFAULT_SEED: u64 = 0x5EED;

/// Coordinates of random objects are integers in `[-DEFAULT_BOUND, DEFAULT_BOUND]`.
pub const DEFAULT_BOUND: i64 = 10_000;

#[derive(Clone, Debug)]
pub struct GenericRng {
    inner: Xoshiro256PlusPlus,
    bound: i64,
}

impl GenericRng {
    pub fn new(seed: u64) -> Self {
        GenericRng { inner: Xoshiro256PlusPlus::seed_from_u64(seed), bound: DEFAULT_BOUND }
    }

    /// Stream `stream` of `seed`.
    pub fn stream(seed: u64, stream: u64) -> Self {
        let mut inner = Xoshiro256PlusPlus::seed_from_u64(seed);
        for _ in 0..stream {
            inner.jump();
        }
        GenericRng { inner, bound: DEFAULT_BOUND }
    }

    pub fn with_bound(mut self, bound: i64) -> Self {
        assert!(bound > 0);
        self.bound = bound;
        self
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.random()
    }

    /// Uniform integer in `[-bound, bound]`.
    pub fn coord(&mut self) -> i64 {
        self.inner.random_range(-self.bound..=self.bound)
    }

    pub fn elem<F: Field>(&mut self, field: &F) -> F::Elem {
        field.from_i64(self.coord())
    }

    pub fn nonzero_elem<F: Field>(&mut self, field: &F) -> F::Elem {
        loop {
            let e = self.elem(field);
            if !field.is_zero(&e) {
                return e;
            }
        }
    }

    pub fn elems<F: Field>(&mut self, field: &F, n: usize) -> Vec<F::Elem> {
        (0..n).map(|_| self.elem(field)).collect()
    }
}
