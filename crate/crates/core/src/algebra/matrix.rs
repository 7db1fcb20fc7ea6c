//! Dense exact matrices and vectors, Gauss-Jordan elimination and linear solves.

use std::fmt;
use std::ops::Index;

use super::field::{FieldSpec, Scalar};
use crate::error::{Error, Result};

/// A column vector over a field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    field: FieldSpec,
    entries: Vec<Scalar>,
}

impl Vector {
    /// All entries must belong to `field`.
    pub fn new(field: FieldSpec, entries: Vec<Scalar>) -> Self {
        debug_assert!(entries.iter().all(|e| e.field() == field));
        Vector { field, entries }
    }

    pub fn from_i64(field: FieldSpec, entries: &[i64]) -> Self {
        Self::new(field, entries.iter().map(|&e| field.from_i64(e)).collect())
    }

    pub fn zero(field: FieldSpec, n: usize) -> Self {
        Vector { field, entries: vec![field.zero(); n] }
    }

    /// The `i`-th standard basis vector of `F^n`.
    pub fn unit(field: FieldSpec, n: usize, i: usize) -> Self {
        let mut v = Self::zero(field, n);
        v.entries[i] = field.one();
        v
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector::new(self.field, self.entries.iter().map(|e| e * c).collect())
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }
}

impl std::ops::Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        Vector::new(self.field, self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect())
    }
}

impl std::ops::Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        Vector::new(self.field, self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect())
    }
}

impl std::ops::Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector::new(self.field, self.entries.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of Gauss-Jordan elimination: `transform * m = reduced`.
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub transform: Matrix,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if data.iter().any(|s| s.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Matrix { field, rows, cols, data })
    }

    /// Convenience constructor from small integers; panics on ragged input.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let data = rows.iter().flat_map(|r| r.iter().map(|&v| field.from_i64(v))).collect();
        Matrix { field, rows: rows.len(), cols, data }
    }

    pub fn from_columns(field: FieldSpec, n: usize, cols: &[Vector]) -> Self {
        let mut m = Self::zero(field, n, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), n);
            for i in 0..n {
                m.data[i * cols.len() + j] = c[i].clone();
            }
        }
        m
    }

    pub fn from_row_vectors(field: FieldSpec, n: usize, rows: &[Vector]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * n);
        for r in rows {
            assert_eq!(r.len(), n);
            data.extend(r.entries().iter().cloned());
        }
        Matrix { field, rows: rows.len(), cols: n, data }
    }

    pub fn diagonal(field: FieldSpec, diag: &[Scalar]) -> Self {
        let n = diag.len();
        let mut m = Self::zero(field, n, n);
        for (i, d) in diag.iter().enumerate() {
            m.data[i * n + i] = d.clone();
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector::new(self.field, self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector::new(self.field, (0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { data: self.data.iter().map(|a| a * c).collect(), ..self.clone() }
    }

    pub fn mul_vec(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        Vector::new(
            self.field,
            (0..self.rows)
                .map(|i| {
                    self.data[i * self.cols..(i + 1) * self.cols]
                        .iter()
                        .zip(v.entries())
                        .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
                })
                .collect(),
        )
    }

    pub fn pow(&self, k: usize) -> Matrix {
        (0..k).fold(Matrix::identity(self.field, self.rows), |acc, _| &acc * self)
    }

    /// `M - I`
    pub fn minus_identity(&self) -> Matrix {
        self - &Matrix::identity(self.field, self.rows)
    }

    /// Gauss-Jordan elimination with the first nonzero entry of each column as pivot.
    pub fn rref(&self) -> Rref {
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.clone();
        let mut t = Matrix::identity(self.field, rows);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            t.swap_rows(r, p);
            let inv = a.get(r, c).inverse().expect("pivot is nonzero");
            a.scale_row(r, &inv);
            t.scale_row(r, &inv);
            for i in 0..rows {
                if i != r && !a.get(i, c).is_zero() {
                    let factor = a.get(i, c).clone();
                    a.add_row_multiple(i, r, &-&factor);
                    t.add_row_multiple(i, r, &-&factor);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { reduced: a, rank: r, pivots, transform: t }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let r = self.rref();
        if r.rank < self.rows {
            return Err(Error::NotInvertible);
        }
        Ok(r.transform)
    }

    /// Basis of the null space, one vector per free column, in increasing column order.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let r = self.rref();
        let mut basis = Vec::new();
        let mut pivot_iter = 0;
        for free in 0..self.cols {
            if pivot_iter < r.pivots.len() && r.pivots[pivot_iter] == free {
                pivot_iter += 1;
                continue;
            }
            let mut v = Vector::unit(self.field, self.cols, free);
            for (row, &pc) in r.pivots.iter().enumerate() {
                v.entries[pc] = -r.reduced.get(row, free);
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `self * x = rhs`, free variables set to zero.
    pub fn solve(&self, rhs: &Vector) -> Result<Vector> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                rhs.len(),
                self.rows
            )));
        }
        let mut aug = Matrix::zero(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, rhs[i].clone());
        }
        let r = aug.rref();
        if r.pivots.last() == Some(&self.cols) {
            return Err(Error::NoSolution);
        }
        let mut x = Vector::zero(self.field, self.cols);
        for (row, &pc) in r.pivots.iter().enumerate() {
            x.entries[pc] = r.reduced.get(row, self.cols).clone();
        }
        Ok(x)
    }

    /// Block matrix `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let cols: Vec<Vector> = self.columns().into_iter().chain(other.columns()).collect();
        Matrix::from_columns(self.field, self.rows, &cols)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row(&mut self, r: usize, c: &Scalar) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            self.data[idx] = &self.data[idx] * c;
        }
    }

    /// row[dst] += c * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, c: &Scalar) {
        for j in 0..self.cols {
            let s = &self.data[src * self.cols + j] * c;
            let idx = dst * self.cols + j;
            self.data[idx] = &self.data[idx] + &s;
        }
    }
}

impl std::ops::Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zero(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * rhs.get(k, j));
                }
            }
        }
        out
    }
}

impl std::ops::Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix { data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(), ..self.clone() }
    }
}

impl std::ops::Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix { data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(), ..self.clone() }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}
