use crate::algebra::{Matrix, Poly, Subspace, Vector};
use crate::error::{Error, Result};

/// The cyclic subspace generated by a vector, with the annihilating polynomial of that vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KrylovSpan {
    /// `a, Ma, ..., M^{d-1} a`, the pivotal prefix of the orbit.
    pub basis: Vec<Vector>,
    /// Monic generator of `{p : p(M) a = 0}`, of degree `d`.
    pub local_min_poly: Poly,
}

impl KrylovSpan {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn subspace(&self, ambient: usize) -> Subspace {
        Subspace::span(self.local_min_poly.field(), ambient, &self.basis)
    }
}

pub(crate) fn require_square(m: &Matrix) -> Result<()> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "expected a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

pub fn krylov_span(m: &Matrix, a: &Vector) -> Result<KrylovSpan> {
    require_square(m)?;
    if a.len() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} for a {}x{} matrix",
            a.len(),
            m.rows(),
            m.cols()
        )));
    }
    let field = m.field();
    let n = m.rows();
    let mut basis: Vec<Vector> = Vec::new();
    let mut span = Subspace::zero(field, n);
    let mut cur = a.clone();
    while !span.contains(&cur)? {
        basis.push(cur.clone());
        span = Subspace::span(field, n, &basis);
        cur = m.mul_vec(&cur);
    }
    // cur = M^d a is a combination of the basis
    let d = basis.len();
    let coeffs = if d == 0 {
        Vector::zero(field, 0)
    } else {
        Matrix::from_columns(field, n, &basis).solve(&cur)?
    };
    let mut poly: Vec<_> = coeffs.entries().iter().map(|c| -c).collect();
    poly.push(field.one());
    Ok(KrylovSpan { basis, local_min_poly: Poly::new(field, poly) })
}

/// Minimal polynomial as the lcm of the local minimal polynomials of the standard basis.
pub fn minimal_polynomial(m: &Matrix) -> Result<Poly> {
    require_square(m)?;
    let field = m.field();
    let n = m.rows();
    let mut acc = Poly::one(field);
    for i in 0..n {
        let local = krylov_span(m, &Vector::unit(field, n, i))?.local_min_poly;
        if !acc.divides(&local) || !local.divides(&acc) {
            acc = Poly::lcm(&acc, &local)?;
        }
    }
    Ok(acc)
}

/// Matrix of `m` restricted to the invariant subspace spanned by the columns of `basis`,
/// in those coordinates: `m * basis = basis * restricted`.
pub fn restrict(m: &Matrix, basis: &Matrix) -> Result<Matrix> {
    let k = basis.cols();
    let cols = basis
        .columns()
        .iter()
        .map(|c| basis.solve(&m.mul_vec(c)))
        .collect::<Result<Vec<_>>>()
        .map_err(|_| Error::VerificationFailed("restriction to a non-invariant subspace"))?;
    Ok(Matrix::from_columns(m.field(), k, &cols))
}
