//! Invariant factors via the Smith normal form of `X*I - M` over `F[X]`.

use std::fmt;

use super::krylov::require_square;
use crate::algebra::{FieldSpec, Matrix, Poly};
use crate::error::Result;

/// Nonconstant monic invariant factors `f_1 | f_2 | ... | f_r`; `f_r` is the minimal polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantFactors {
    field: FieldSpec,
    factors: Vec<Poly>,
}

impl InvariantFactors {
    pub fn factors(&self) -> &[Poly] {
        &self.factors
    }

    pub fn minimal_polynomial(&self) -> Poly {
        self.factors.last().cloned().unwrap_or_else(|| Poly::one(self.field))
    }

    pub fn characteristic_polynomial(&self) -> Poly {
        self.factors.iter().fold(Poly::one(self.field), |acc, f| &acc * f)
    }

    /// Matrix order `n` (sum of factor degrees).
    pub fn order(&self) -> usize {
        self.factors.iter().map(|f| f.degree().unwrap_or(0)).sum()
    }
}

impl fmt::Display for InvariantFactors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

pub fn invariant_factors(m: &Matrix) -> Result<InvariantFactors> {
    require_square(m)?;
    let field = m.field();
    let n = m.rows();
    let mut a: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = Poly::constant(-m.get(i, j));
                    if i == j {
                        &c + &Poly::x(field)
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();

    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        // least-degree nonzero entry of the trailing block
        while let Some((pi, pj)) = (k..n)
            .flat_map(|i| (k..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by_key(|&(i, j)| a[i][j].degree())
        {
            a.swap(k, pi);
            for row in a.iter_mut() {
                row.swap(k, pj);
            }

            let pivot = a[k][k].clone();
            let mut clean = true;
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let (q, r) = a[i][k].div_rem(&pivot)?;
                let (top, bottom) = a.split_at_mut(i);
                for (target, source) in bottom[0][k..].iter_mut().zip(&top[k][k..]) {
                    *target = &*target - &(&q * source);
                }
                clean &= r.is_zero();
            }
            for j in k + 1..n {
                if a[k][j].is_zero() {
                    continue;
                }
                let (q, r) = a[k][j].div_rem(&pivot)?;
                for row in a.iter_mut().skip(k) {
                    let t = &q * &row[k];
                    row[j] = &row[j] - &t;
                }
                clean &= r.is_zero();
            }
            if !clean {
                continue;
            }
            // pivot must divide the rest of the block; otherwise fold the offending row in
            let offending = (k + 1..n).find(|&i| (k + 1..n).any(|j| !pivot.divides(&a[i][j])));
            match offending {
                Some(i) => {
                    let (top, bottom) = a.split_at_mut(i);
                    for (target, source) in top[k][k..].iter_mut().zip(&bottom[0][k..]) {
                        *target = &*target + source;
                    }
                }
                None => break,
            }
        }
        diag.push(a[k][k].monic());
    }

    let factors = diag.into_iter().filter(|p| p.degree().is_some_and(|d| d > 0)).collect();
    Ok(InvariantFactors { field, factors })
}
