//! Subspaces of `F^n` held as a reduced row-echelon basis, so equality is structural.

use super::field::FieldSpec;
use super::matrix::{Matrix, Vector};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    pivots: Vec<usize>,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace { ambient, pivots: vec![], basis: Matrix::zero(field, 0, ambient) }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            ambient,
            pivots: (0..ambient).collect(),
            basis: Matrix::identity(field, ambient),
        }
    }

    pub fn span(field: FieldSpec, ambient: usize, vectors: &[Vector]) -> Self {
        let stacked = Matrix::from_row_vectors(field, ambient, vectors);
        let r = stacked.rref();
        let rows: Vec<Vector> = (0..r.rank).map(|i| r.reduced.row(i)).collect();
        Subspace {
            ambient,
            pivots: r.pivots,
            basis: Matrix::from_row_vectors(field, ambient, &rows),
        }
    }

    /// Column space of `m`.
    pub fn image(m: &Matrix) -> Self {
        Self::span(m.field(), m.rows(), &m.columns())
    }

    pub fn kernel(m: &Matrix) -> Self {
        Self::span(m.field(), m.cols(), &m.kernel_basis())
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// RREF basis rows.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    /// Basis vectors as the columns of an `ambient x dim` matrix.
    pub fn basis_columns(&self) -> Matrix {
        self.basis.transpose()
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of F^{} and F^{}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn contains(&self, v: &Vector) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in F^{}",
                v.len(),
                self.ambient
            )));
        }
        Ok(self.reduce(v).is_zero())
    }

    /// Residue of `v` after clearing every pivot coordinate against the basis.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut r = v.clone();
        for (i, &pc) in self.pivots.iter().enumerate() {
            if !r[pc].is_zero() {
                let c = r[pc].clone();
                r = &r - &self.basis.row(i).scale(&c);
            }
        }
        r
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        for v in other.basis_vectors() {
            if !self.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Ok(Subspace::span(self.field(), self.ambient, &vs))
    }

    /// Intersection from the kernel of `[U^T | -V^T]`: `sum a_i u_i = sum b_j v_j`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let field = self.field();
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(field, self.ambient));
        }
        let u = self.basis_columns();
        let v = other.basis_columns().scale(&-field.one());
        let joint = u.hstack(&v);
        let k = self.dim();
        let vectors: Vec<Vector> = joint
            .kernel_basis()
            .iter()
            .map(|c| {
                let coeffs = Vector::new(field, c.entries()[..k].to_vec());
                u.mul_vec(&coeffs)
            })
            .collect();
        Ok(Subspace::span(field, self.ambient, &vectors))
    }

    /// Image of the subspace under `m`.
    pub fn map(&self, m: &Matrix) -> Subspace {
        let vs: Vec<Vector> = self.basis_vectors().iter().map(|v| m.mul_vec(v)).collect();
        Subspace::span(self.field(), m.rows(), &vs)
    }

    pub fn is_invariant_under(&self, m: &Matrix) -> bool {
        self.basis_vectors()
            .iter()
            .all(|v| self.reduce(&m.mul_vec(v)).is_zero())
    }

    /// Vectors from `candidates`, in order, that extend `self` to the span of `self` and all
    /// candidates. Greedy, so the choice is deterministic.
    pub fn extend_with(&self, candidates: &[Vector]) -> Vec<Vector> {
        let mut current = self.clone();
        let mut picked = Vec::new();
        for c in candidates {
            if !current.reduce(c).is_zero() {
                picked.push(c.clone());
                let mut vs = current.basis_vectors();
                vs.push(c.clone());
                current = Subspace::span(self.field(), self.ambient, &vs);
            }
        }
        picked
    }
}
