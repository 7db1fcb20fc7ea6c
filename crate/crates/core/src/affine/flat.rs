use super::map::AffineMap;
use super::tau::{simple_representative, tau};
use crate::algebra::{Subspace, Vector};
use crate::decomp::krylov_span;
use crate::error::{Error, Result};

/// The flat `point + direction`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatDescriptor {
    pub point: Vector,
    pub direction: Subspace,
}

impl FlatDescriptor {
    pub fn dim(&self) -> usize {
        self.direction.dim()
    }

    pub fn direction_basis(&self) -> Vec<Vector> {
        self.direction.basis_vectors()
    }
}

/// `point + W` is invariant exactly when `f(point) - point ∈ W` and `M W ⊆ W`.
pub fn is_invariant_flat(point: &Vector, direction: &Subspace, f: &AffineMap) -> Result<bool> {
    if point.len() != f.dim() || direction.ambient_dim() != f.dim() {
        return Err(Error::DimensionMismatch("flat and map live in different spaces".into()));
    }
    Ok(direction.contains(&f.displacement(point))? && direction.is_invariant_under(f.linear()))
}

/// The smallest invariant flat through `point`: `point + <f(point) - point>`.
pub fn flat_through(point: &Vector, f: &AffineMap) -> Result<FlatDescriptor> {
    if point.len() != f.dim() {
        return Err(Error::DimensionMismatch("point length".into()));
    }
    let span = krylov_span(f.linear(), &f.displacement(point))?;
    let flat = FlatDescriptor { point: point.clone(), direction: span.subspace(f.dim()) };
    if !is_invariant_flat(&flat.point, &flat.direction, f)? {
        return Err(Error::VerificationFailed("flat through a point is not invariant"));
    }
    Ok(flat)
}

/// An invariant flat of least dimension, whose direction is the cyclic span of a simple
/// representative and therefore lies in the eigenvalue-1 component.
pub fn minimal_invariant_flat(f: &AffineMap) -> Result<FlatDescriptor> {
    let simple = simple_representative(f)?;
    let point = f.linear().minus_identity().solve(&(&simple.vector - f.translation()))?;
    let span = krylov_span(f.linear(), &simple.vector)?;
    let flat = FlatDescriptor { point, direction: span.subspace(f.dim()) };
    if flat.dim() != simple.tau || !is_invariant_flat(&flat.point, &flat.direction, f)? {
        return Err(Error::VerificationFailed("minimal flat postconditions"));
    }
    Ok(flat)
}

/// Least dimension of an invariant flat, which equals `tau`.
pub fn rho(f: &AffineMap) -> Result<usize> {
    tau(f)
}
