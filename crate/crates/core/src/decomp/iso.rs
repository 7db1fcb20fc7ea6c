use super::chains::{chains_through, nilpotent_chains, ChainDecomposition};
use super::fitting::{fitting_split, FittingSplit};
use super::frobenius::frobenius_basis;
use super::invariant::invariant_factors;
use super::krylov::restrict;
use crate::algebra::{Matrix, Vector};
use crate::error::{Error, Result};

/// An invertible `T` with `T * left = right * T` and `T * a = b`.
///
/// `a` and `b` must each be zero or generate a complemented cyclic submodule of the
/// eigenvalue-1 component, of the same depth. The eigenvalue-1 components are matched chain
/// by chain, with the chains through `a` and `b` paired; the remaining summands are matched
/// through their rational canonical forms.
pub fn module_isomorphism(left: &Matrix, right: &Matrix, a: &Vector, b: &Vector) -> Result<Matrix> {
    if left.field() != right.field() || a.field() != left.field() || b.field() != left.field() {
        return Err(Error::FieldMismatch);
    }
    if left.rows() != right.rows() || a.len() != left.rows() || b.len() != right.rows() {
        return Err(Error::DimensionMismatch("operands of module_isomorphism".into()));
    }
    if invariant_factors(left)? != invariant_factors(right)? {
        return Err(Error::NotSimilar);
    }
    let field = left.field();
    let n = left.rows();
    let split_l = fitting_split(left)?;
    let split_r = fitting_split(right)?;

    let mut source = Vec::with_capacity(n);
    let mut target = Vec::with_capacity(n);
    if split_l.n1 > 0 {
        let (chains_l, head_l) = chains_for(&split_l, left, a)?;
        let (chains_r, head_r) = chains_for(&split_r, right, b)?;
        let depth_of = |c: &ChainDecomposition, h: Option<usize>| h.map_or(0, |i| c.chains()[i].depth);
        let (tau_l, tau_r) = (depth_of(&chains_l, head_l), depth_of(&chains_r, head_r));
        if tau_l != tau_r {
            return Err(Error::TauMismatch(tau_l, tau_r));
        }
        if chains_l.depths() != chains_r.depths() || head_l != head_r {
            return Err(Error::VerificationFailed("chain structures of similar matrices differ"));
        }
        source.extend(chains_l.basis_vectors());
        target.extend(chains_r.basis_vectors());
    } else if !a.is_zero() || !b.is_zero() {
        return Err(Error::VectorNotInV1);
    }

    if !split_l.w.is_zero() {
        let wl = split_l.w.basis_columns();
        let wr = split_r.w.basis_columns();
        let fl = frobenius_basis(&restrict(left, &wl)?)?;
        let fr = frobenius_basis(&restrict(right, &wr)?)?;
        if fl.form != fr.form {
            return Err(Error::NotSimilar);
        }
        source.extend((&wl * &fl.basis).columns());
        target.extend((&wr * &fr.basis).columns());
    }

    let s = Matrix::from_columns(field, n, &source);
    let d = Matrix::from_columns(field, n, &target);
    let s_inv = s.inverse().map_err(|_| Error::VerificationFailed("source basis is singular"))?;
    let t = &d * &s_inv;
    if !t.is_invertible() || &t * left != right * &t || &t.mul_vec(a) != b {
        return Err(Error::VerificationFailed("module isomorphism postconditions"));
    }
    Ok(t)
}

fn chains_for(split: &FittingSplit, m: &Matrix, head: &Vector) -> Result<(ChainDecomposition, Option<usize>)> {
    if head.is_zero() {
        Ok((nilpotent_chains(split, m)?, None))
    } else {
        let (c, i) = chains_through(split, m, head)?;
        Ok((c, Some(i)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FieldSpec;

    #[test]
    fn shear_to_lower_shear() {
        let f2 = FieldSpec::prime(2).unwrap();
        let l = Matrix::from_i64(f2, &[&[1, 1], &[0, 1]]);
        let r = Matrix::from_i64(f2, &[&[1, 0], &[1, 1]]);
        let a = Vector::from_i64(f2, &[0, 1]);
        let b = Vector::from_i64(f2, &[1, 0]);
        let t = module_isomorphism(&l, &r, &a, &b).unwrap();
        assert_eq!(&t * &l, &r * &t);
        assert_eq!(t.mul_vec(&a), b);
    }

    #[test]
    fn swapped_diagonal() {
        let f5 = FieldSpec::prime(5).unwrap();
        let l = Matrix::from_i64(f5, &[&[1, 0], &[0, 2]]);
        let r = Matrix::from_i64(f5, &[&[2, 0], &[0, 1]]);
        let a = Vector::from_i64(f5, &[1, 0]);
        let b = Vector::from_i64(f5, &[0, 3]);
        let t = module_isomorphism(&l, &r, &a, &b).unwrap();
        assert_eq!(t.mul_vec(&a), b);
        assert_eq!(&t * &l, &r * &t);
    }

    #[test]
    fn zero_heads_and_mismatches() {
        let q = FieldSpec::rationals();
        let m = Matrix::from_i64(q, &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
        let z = Vector::zero(q, 3);
        let t = module_isomorphism(&m, &m, &z, &z).unwrap();
        assert_eq!(&t * &m, &m * &t);

        let deep = Vector::from_i64(q, &[0, 1, 0]);
        let shallow = Vector::from_i64(q, &[0, 0, 1]);
        assert_eq!(module_isomorphism(&m, &m, &deep, &shallow), Err(Error::TauMismatch(2, 1)));
        assert_eq!(module_isomorphism(&m, &m, &deep, &z), Err(Error::TauMismatch(2, 0)));

        let id = Matrix::identity(q, 3);
        assert_eq!(module_isomorphism(&m, &id, &z, &z), Err(Error::NotSimilar));
    }
}
