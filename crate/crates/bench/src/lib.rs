//! Seeded inputs shared by the benchmarks.

use affsim_core::{sample, AffineMap, FieldSpec, Matrix};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn matrices(field: FieldSpec, n: usize, count: usize) -> Vec<Matrix> {
    let mut r = rng(n as u64);
    (0..count).map(|_| sample::structured_matrix(&mut r, field, n)).collect()
}

/// Pairs `(f, h ∘ f ∘ h^{-1})` with random `f` and `h`.
pub fn conjugate_pairs(field: FieldSpec, n: usize, count: usize) -> Vec<(AffineMap, AffineMap)> {
    let mut r = rng(1000 + n as u64);
    (0..count)
        .map(|_| {
            let f = sample::affine_map(&mut r, field, n);
            let h = sample::affine_isomorphism(&mut r, field, n);
            let g = h.conjugate(&f).expect("same space");
            (f, g)
        })
        .collect()
}
