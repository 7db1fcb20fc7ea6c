//! Rational canonical form with an explicit change of basis.
//!
//! Cyclic-vector descent: find a vector whose local minimal polynomial equals the minimal
//! polynomial, split off its Krylov block together with an invariant complement, recurse.
//! The complement is cut out by the functionals `u^T M^i` (`i < d`) where `u` pairs to the
//! Krylov basis as `u^T M^i v = [i == d-1]`; the resulting Hankel pairing is nonsingular and
//! `u^T M^d` is a combination of lower powers because `M^d` is.

use super::krylov::{krylov_span, require_square, restrict};
use crate::algebra::{Matrix, Poly, Vector};
use crate::error::{Error, Result};

/// `basis^{-1} * M * basis = form`, `form` block-diagonal with companion blocks of the
/// invariant factors in divisibility order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusBasis {
    pub basis: Matrix,
    pub form: Matrix,
    pub factors: Vec<Poly>,
}

pub fn frobenius_basis(m: &Matrix) -> Result<FrobeniusBasis> {
    require_square(m)?;
    let field = m.field();
    let n = m.rows();
    let mut blocks = cyclic_blocks(m)?;
    blocks.reverse();

    let mut cols = Vec::with_capacity(n);
    let mut form = Matrix::zero(field, n, n);
    let mut offset = 0;
    let mut factors = Vec::with_capacity(blocks.len());
    for (vectors, poly) in blocks {
        let c = poly.companion();
        for i in 0..c.rows() {
            for j in 0..c.cols() {
                form.set(offset + i, offset + j, c.get(i, j).clone());
            }
        }
        offset += vectors.len();
        cols.extend(vectors);
        factors.push(poly);
    }
    let basis = Matrix::from_columns(field, n, &cols);
    let inv = basis.inverse().map_err(|_| Error::VerificationFailed("Frobenius basis is singular"))?;
    if &(&inv * m) * &basis != form {
        return Err(Error::VerificationFailed("Frobenius form does not match"));
    }
    Ok(FrobeniusBasis { basis, form, factors })
}

/// Krylov blocks from the largest invariant factor down, in `m`'s coordinates.
fn cyclic_blocks(m: &Matrix) -> Result<Vec<(Vec<Vector>, Poly)>> {
    let field = m.field();
    let n = m.rows();
    if n == 0 {
        return Ok(vec![]);
    }
    let v = max_order_vector(m)?;
    let kr = krylov_span(m, &v)?;
    let d = kr.dim();
    let mut out = vec![(kr.basis.clone(), kr.local_min_poly.clone())];
    if d == n {
        return Ok(out);
    }

    let pairing = Matrix::from_row_vectors(field, n, &kr.basis);
    let u = pairing.solve(&Vector::unit(field, d, d - 1))?;
    let mt = m.transpose();
    let mut functionals = Vec::with_capacity(d);
    let mut cur = u;
    for _ in 0..d {
        let next = mt.mul_vec(&cur);
        functionals.push(cur);
        cur = next;
    }
    let complement = Matrix::from_row_vectors(field, n, &functionals).kernel_basis();
    let complement = Matrix::from_columns(field, n, &complement);
    let restricted = restrict(m, &complement)?;
    for (vectors, poly) in cyclic_blocks(&restricted)? {
        let lifted = vectors.iter().map(|x| complement.mul_vec(x)).collect();
        out.push((lifted, poly));
    }
    Ok(out)
}

/// A vector whose annihilator is generated by the minimal polynomial. Scans the standard
/// basis and merges incomparable orders through a coprime split.
fn max_order_vector(m: &Matrix) -> Result<Vector> {
    let field = m.field();
    let n = m.rows();
    let mut v = Vector::unit(field, n, 0);
    let mut order = krylov_span(m, &v)?.local_min_poly;
    for i in 1..n {
        let w = Vector::unit(field, n, i);
        let w_order = krylov_span(m, &w)?.local_min_poly;
        if w_order.divides(&order) {
            continue;
        }
        let (a_part, b_part) = coprime_split(&order, &w_order)?;
        let v_part = a_part.apply(m, &v);
        let w_part = b_part.apply(m, &w);
        v = &v_part + &w_part;
        order = Poly::lcm(&order, &w_order)?;
        debug_assert_eq!(krylov_span(m, &v)?.local_min_poly, order);
    }
    Ok(v)
}

/// For monic `a`, `b` returns `(a / a', b / b')` where `a' | a`, `b' | b`, `gcd(a', b') = 1`
/// and `a' * b' = lcm(a, b)`. Multiplying a vector of order `a` by `a / a'` leaves order `a'`.
fn coprime_split(a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
    let field = a.field();
    let base = gcd_free_basis(&[a.clone(), b.clone()])?;
    let mut a_keep = Poly::one(field);
    let mut b_keep = Poly::one(field);
    for q in &base {
        let ea = a.multiplicity(q);
        let eb = b.multiplicity(q);
        let power = (0..ea.max(eb)).fold(Poly::one(field), |acc, _| &acc * q);
        if ea >= eb {
            a_keep = &a_keep * &power;
        } else {
            b_keep = &b_keep * &power;
        }
    }
    Ok((a.div_rem(&a_keep)?.0, b.div_rem(&b_keep)?.0))
}

/// Pairwise coprime monic polynomials such that every input is a product of their powers.
fn gcd_free_basis(polys: &[Poly]) -> Result<Vec<Poly>> {
    let nonconstant = |p: &Poly| p.degree().is_some_and(|d| d > 0);
    let mut list: Vec<Poly> = polys.iter().filter(|p| nonconstant(p)).map(Poly::monic).collect();
    'refine: loop {
        for i in 0..list.len() {
            for j in i + 1..list.len() {
                let g = Poly::gcd(&list[i], &list[j])?;
                if nonconstant(&g) {
                    let b = list.remove(j);
                    let a = list.remove(i);
                    for p in [a.div_rem(&g)?.0, g.clone(), b.div_rem(&g)?.0] {
                        if nonconstant(&p) && !list.contains(&p) {
                            list.push(p);
                        }
                    }
                    continue 'refine;
                }
            }
        }
        break;
    }
    Ok(list)
}
