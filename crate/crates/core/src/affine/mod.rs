//! Affine maps on `F^n`: trajectory cosets, `tau`, the similarity decision with a conjugator
//! certificate, and invariant flats.

mod flat;
mod map;
mod similarity;
mod tau;

pub use flat::{flat_through, is_invariant_flat, minimal_invariant_flat, rho, FlatDescriptor};
pub use map::{AffineMap, ConjugatorWitness, TrajectoryCoset};
pub use similarity::{build_conjugator, decide_similar, Verdict};
pub use tau::{simple_representative, tau, tau_vector, LinearProfile, SimpleRepresentative};
