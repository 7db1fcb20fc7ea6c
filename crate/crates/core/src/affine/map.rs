use std::fmt;

use crate::algebra::{FieldSpec, Matrix, Subspace, Vector};
use crate::error::{Error, Result};

/// `x -> linear * x + translation` on `F^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap {
    linear: Matrix,
    translation: Vector,
}

impl AffineMap {
    pub fn new(linear: Matrix, translation: Vector) -> Result<Self> {
        if !linear.is_square() || linear.rows() != translation.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} linear part with a translation of length {}",
                linear.rows(),
                linear.cols(),
                translation.len()
            )));
        }
        if linear.field() != translation.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(AffineMap { linear, translation })
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        AffineMap { linear: Matrix::identity(field, n), translation: Vector::zero(field, n) }
    }

    pub fn translation_by(b: Vector) -> Self {
        AffineMap { linear: Matrix::identity(b.field(), b.len()), translation: b }
    }

    pub fn linear(&self) -> &Matrix {
        &self.linear
    }

    pub fn translation(&self) -> &Vector {
        &self.translation
    }

    pub fn field(&self) -> FieldSpec {
        self.linear.field()
    }

    pub fn dim(&self) -> usize {
        self.translation.len()
    }

    pub fn evaluate(&self, x: &Vector) -> Vector {
        &self.linear.mul_vec(x) + &self.translation
    }

    /// `self ∘ inner`, i.e. `x -> self(inner(x))`.
    pub fn compose(&self, inner: &AffineMap) -> Result<AffineMap> {
        self.check_compatible(inner)?;
        Ok(AffineMap {
            linear: &self.linear * &inner.linear,
            translation: self.evaluate(&inner.translation),
        })
    }

    pub fn inverse(&self) -> Result<AffineMap> {
        let inv = self.linear.inverse()?;
        let translation = -&inv.mul_vec(&self.translation);
        Ok(AffineMap { linear: inv, translation })
    }

    /// `self ∘ f ∘ self^{-1}`.
    pub fn conjugate(&self, f: &AffineMap) -> Result<AffineMap> {
        self.compose(f)?.compose(&self.inverse()?)
    }

    /// `f(A) - A` for the point `a`.
    pub fn displacement(&self, a: &Vector) -> Vector {
        &self.evaluate(a) - a
    }

    pub fn trajectory_coset(&self) -> TrajectoryCoset {
        TrajectoryCoset {
            representative: self.translation.clone(),
            direction: Subspace::image(&self.linear.minus_identity()),
        }
    }

    pub(crate) fn check_compatible(&self, other: &AffineMap) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(format!(
                "maps on spaces of dimension {} and {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x -> {} x + {}", self.linear, self.translation)
    }
}

/// `{f(A) - A}` over all points `A`: the coset `translation + im(M - I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrajectoryCoset {
    pub representative: Vector,
    pub direction: Subspace,
}

impl TrajectoryCoset {
    pub fn contains(&self, v: &Vector) -> Result<bool> {
        self.direction.contains(&(v - &self.representative))
    }

    pub fn same_coset(&self, other: &TrajectoryCoset) -> Result<bool> {
        Ok(self.direction == other.direction && self.contains(&other.representative)?)
    }
}

/// A conjugating affine isomorphism `h(x) = linear * x + translation` with `h ∘ f ∘ h^{-1} = g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugatorWitness {
    pub linear: Matrix,
    pub translation: Vector,
}

impl ConjugatorWitness {
    pub fn as_map(&self) -> AffineMap {
        AffineMap { linear: self.linear.clone(), translation: self.translation.clone() }
    }

    /// Recomposes `h ∘ f ∘ h^{-1}` and compares with `g`.
    pub fn verify(&self, f: &AffineMap, g: &AffineMap) -> bool {
        self.as_map().conjugate(f).is_ok_and(|c| &c == g)
    }
}
