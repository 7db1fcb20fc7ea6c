//! Exact similarity classification of affine maps `x -> Mx + b` over `F_p` and `Q`.
//!
//! Two affine maps are conjugate by an affine isomorphism exactly when their linear parts are
//! similar and they share the invariant `tau`, the least `k` with
//! `b ∈ im(M - I) + ker((M - I)^k)`. The crate decides this, produces verified conjugators,
//! finds invariant flats of least dimension and enumerates classes over small fields.

pub mod affine;
pub mod algebra;
pub mod classes;
pub mod decomp;
pub mod error;
pub mod sample;

pub use affine::{
    build_conjugator, decide_similar, flat_through, is_invariant_flat, minimal_invariant_flat, rho,
    simple_representative, tau, tau_vector, AffineMap, ConjugatorWitness, FlatDescriptor, LinearProfile,
    SimpleRepresentative, TrajectoryCoset, Verdict,
};
pub use algebra::{FieldKind, FieldSpec, Matrix, Poly, Scalar, Subspace, Vector};
pub use classes::{
    affine_class_count, brute_force_affine_classes, enumerate_linear_classes, predicted_affine_classes,
    ClassEntry, ClassTable,
};
pub use decomp::{
    fitting_split, frobenius_basis, invariant_factors, minimal_polynomial, module_isomorphism,
    nilpotent_chains, rebase_chains, ChainDecomposition, FittingSplit, FrobeniusBasis, InvariantFactors,
};
pub use error::{Error, Result};
