#![allow(dead_code)]

use affsim_core::classes::oracle::{RawMap, RawSpace};
use affsim_core::classes::raw_affine;
use affsim_core::{AffineMap, FieldSpec};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn prime(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

/// Every affine map on `F_p^n`, paired with its residue form, in lexicographic order.
pub fn all_affine_maps(n: usize, p: u64) -> Vec<(RawMap, AffineMap)> {
    let field = prime(p);
    RawSpace::new(n, p as u32)
        .all_maps()
        .map(|raw| {
            let f = raw_affine(field, n, &raw);
            (raw, f)
        })
        .collect()
}
