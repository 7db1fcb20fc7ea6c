//! The `F[X]`-module structure of `F^n` under a matrix: cyclic spans, invariant factors,
//! rational canonical bases, the eigenvalue-1 Fitting split and its Jordan chains.

mod chains;
mod fitting;
mod frobenius;
mod invariant;
mod iso;
mod krylov;

pub use chains::{chains_through, nilpotent_chains, rebase_chains, Chain, ChainDecomposition, Rebased};
pub use fitting::{fitting_project, fitting_split, FittingSplit};
pub use frobenius::{frobenius_basis, FrobeniusBasis};
pub use invariant::{invariant_factors, InvariantFactors};
pub use iso::module_isomorphism;
pub use krylov::{krylov_span, minimal_polynomial, restrict, KrylovSpan};
