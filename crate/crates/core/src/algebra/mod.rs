//! Exact scalar, polynomial, matrix and subspace arithmetic over `F_p` and `Q`.

mod field;
mod matrix;
mod poly;
mod subspace;

pub use field::{is_prime, ArithOp, FieldKind, FieldSpec, Scalar};
pub use matrix::{Matrix, Rref, Vector};
pub use poly::{Bezout, Poly};
pub use subspace::Subspace;
