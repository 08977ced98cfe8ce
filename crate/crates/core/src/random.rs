// SPDX-License-Identifier: Apache-2.0

//! Reproducible random functions.
//!
//! Function `index` of a corpus generated from `seed` at arity `n` uses a
//! ChaCha8 stream seeded with `seed` on stream `(n << 32) | index`; every
//! minterm is then drawn in index order with `gen_bool(density)`. ChaCha8 is
//! platform independent, so corpora are identical everywhere.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::truthtable::{NpTransform, TruthTable};

pub fn rng_for(seed: u64, n: usize, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((n as u64) << 32) | (index & 0xFFFF_FFFF));
    rng
}

pub fn random_table_with(rng: &mut impl Rng, n: usize, density: f64) -> Result<TruthTable> {
    let p = density.clamp(0.0, 1.0);
    TruthTable::from_fn(n, |_| rng.gen_bool(p))
}

/// Function `index` of the corpus `(seed, n, density)`.
pub fn random_table(seed: u64, n: usize, index: u64, density: f64) -> Result<TruthTable> {
    random_table_with(&mut rng_for(seed, n, index), n, density)
}

/// A uniformly random NP transformation with random output polarity.
pub fn random_transform(rng: &mut impl Rng, n: usize) -> NpTransform {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let neg = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    NpTransform::new(perm, neg, rng.gen_bool(0.5)).expect("shuffled identity is a bijection")
}
