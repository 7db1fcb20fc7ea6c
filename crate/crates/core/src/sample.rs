//! Random test inputs. Uniform matrices over `F_p` rarely have interesting eigenvalue-1
//! structure, so [`structured_matrix`] builds Jordan-type blocks and hides them behind a random
//! change of basis.

use rand::Rng;

use crate::affine::AffineMap;
use crate::algebra::{FieldKind, FieldSpec, Matrix, Poly, Scalar, Vector};

/// Uniform over `F_p`; small numerators and denominators over `Q`.
pub fn scalar<R: Rng + ?Sized>(rng: &mut R, field: FieldSpec) -> Scalar {
    match field.kind() {
        FieldKind::Prime(p) => field.from_i64(rng.gen_range(0..p as i64)),
        FieldKind::Rationals => {
            let num = field.from_i64(rng.gen_range(-3..=3));
            if rng.gen_bool(0.8) {
                num
            } else {
                num.checked_div(&field.from_i64(rng.gen_range(1..=3))).expect("nonzero denominator")
            }
        }
    }
}

pub fn vector<R: Rng + ?Sized>(rng: &mut R, field: FieldSpec, n: usize) -> Vector {
    Vector::new(field, (0..n).map(|_| scalar(rng, field)).collect())
}

pub fn matrix<R: Rng + ?Sized>(rng: &mut R, field: FieldSpec, rows: usize, cols: usize) -> Matrix {
    let data = (0..rows * cols).map(|_| scalar(rng, field)).collect();
    Matrix::from_rows(field, rows, cols, data).expect("entry count matches shape")
}

pub fn invertible<R: Rng + ?Sized>(rng: &mut R, field: FieldSpec, n: usize) -> Matrix {
    loop {
        let m = matrix(rng, field, n, n);
        if m.is_invertible() {
            return m;
        }
    }
}

/// Block diagonal: unipotent Jordan blocks, other scalar blocks and random companion blocks,
/// then conjugated by a random invertible matrix.
pub fn structured_matrix<R: Rng + ?Sized>(rng: &mut R, field: FieldSpec, n: usize) -> Matrix {
    let mut m = Matrix::zero(field, n, n);
    let mut offset = 0;
    while offset < n {
        let size = rng.gen_range(1..=n - offset);
        let block = match rng.gen_range(0..3) {
            0 => jordan_block(field, &field.one(), size),
            1 => jordan_block(field, &scalar(rng, field), size),
            _ => {
                let mut coeffs: Vec<Scalar> = (0..size).map(|_| scalar(rng, field)).collect();
                coeffs.push(field.one());
                Poly::new(field, coeffs).companion()
            }
        };
        for i in 0..size {
            for j in 0..size {
                m.set(offset + i, offset + j, block.get(i, j).clone());
            }
        }
        offset += size;
    }
    let p = invertible(rng, field, n);
    &(&p * &m) * &p.inverse().expect("invertible by construction")
}

fn jordan_block(field: FieldSpec, eigenvalue: &Scalar, size: usize) -> Matrix {
    let mut m = Matrix::identity(field, size).scale(eigenvalue);
    for i in 0..size.saturating_sub(1) {
        m.set(i, i + 1, field.one());
    }
    m
}

/// Linear part is uniform or structured with equal odds.
pub fn affine_map<R: Rng + ?Sized>(rng: &mut R, field: FieldSpec, n: usize) -> AffineMap {
    let linear = if rng.gen_bool(0.5) { matrix(rng, field, n, n) } else { structured_matrix(rng, field, n) };
    AffineMap::new(linear, vector(rng, field, n)).expect("consistent shapes")
}

pub fn affine_isomorphism<R: Rng + ?Sized>(rng: &mut R, field: FieldSpec, n: usize) -> AffineMap {
    AffineMap::new(invertible(rng, field, n), vector(rng, field, n)).expect("consistent shapes")
}
