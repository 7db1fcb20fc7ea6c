use super::krylov::require_square;
use crate::algebra::{Matrix, Subspace, Vector};
use crate::error::Result;

/// `F^n = ker((M-I)^n1) (+) im((M-I)^n1)`: the eigenvalue-1 primary component and the sum
/// of all the other primary components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FittingSplit {
    /// Exponent of `X - 1` in the minimal polynomial.
    pub n1: usize,
    pub v1: Subspace,
    pub w: Subspace,
    /// Projector onto `v1` along `w`.
    pub proj_v1: Matrix,
}

pub fn fitting_split(m: &Matrix) -> Result<FittingSplit> {
    require_square(m)?;
    let field = m.field();
    let n = m.rows();
    let nil = m.minus_identity();

    // smallest k with ker N^k = ker N^{k+1}
    let mut power = Matrix::identity(field, n);
    let mut kernel = Subspace::zero(field, n);
    let mut k = 0;
    loop {
        let next_power = &power * &nil;
        let next_kernel = Subspace::kernel(&next_power);
        if next_kernel == kernel {
            break;
        }
        power = next_power;
        kernel = next_kernel;
        k += 1;
    }
    let v1 = kernel;
    let w = Subspace::image(&power);

    let dim_v1 = v1.dim();
    let mut cols = v1.basis_vectors();
    cols.extend(w.basis_vectors());
    let basis = Matrix::from_columns(field, n, &cols);
    let keep: Vec<_> = (0..n)
        .map(|i| if i < dim_v1 { field.one() } else { field.zero() })
        .collect();
    let inv = basis.inverse()?;
    let proj_v1 = &(&basis * &Matrix::diagonal(field, &keep)) * &inv;

    Ok(FittingSplit { n1: k, v1, w, proj_v1 })
}

/// The `v1` component of `a`. The discarded part lies in `w`, hence in `im(M - I)`.
pub fn fitting_project(split: &FittingSplit, a: &Vector) -> Vector {
    split.proj_v1.mul_vec(a)
}
