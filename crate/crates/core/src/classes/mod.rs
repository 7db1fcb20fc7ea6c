//! Similarity classes of linear and affine maps over small prime fields.

pub mod oracle;

use std::collections::{HashMap, HashSet};

use crate::affine::{tau, AffineMap};
use crate::algebra::{FieldSpec, Matrix, Scalar, Vector};
use crate::decomp::{fitting_split, invariant_factors, nilpotent_chains, InvariantFactors};
use crate::error::{Error, Result};
use oracle::{raw_orbits, RawMap, RawSpace};

/// Largest number of matrices the linear class enumeration will visit.
pub const MAX_LINEAR_MATRICES: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassEntry {
    pub representative: AffineMap,
    pub linear_invariant: InvariantFactors,
    pub tau: usize,
    pub orbit_size: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassTable {
    pub field: FieldSpec,
    pub dim: usize,
    pub invertible_only: bool,
    pub classes: Vec<ClassEntry>,
}

impl ClassTable {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// The complete similarity invariants of the classes.
    pub fn signatures(&self) -> HashSet<(InvariantFactors, usize)> {
        self.classes.iter().map(|c| (c.linear_invariant.clone(), c.tau)).collect()
    }

    /// Same number of classes with the same invariants.
    pub fn agrees_with(&self, other: &ClassTable) -> bool {
        self.len() == other.len() && self.signatures() == other.signatures()
    }
}

/// Every `n x n` matrix over `F_p`, lexicographic in row-major entries.
pub fn all_matrices(field: FieldSpec, n: usize) -> Result<impl Iterator<Item = Matrix>> {
    let p = field.modulus().ok_or_else(|| Error::TooLarge("enumeration needs a finite field".into()))?;
    let count = (p as u64).checked_pow((n * n) as u32).unwrap_or(u64::MAX);
    if count > MAX_LINEAR_MATRICES {
        return Err(Error::TooLarge(format!("{count} matrices, limit {MAX_LINEAR_MATRICES}")));
    }
    Ok(RawSpace::new(n, p).all_matrices().map(move |entries| raw_matrix(field, n, &entries)))
}

/// One representative per similarity class, the first matrix of each class in enumeration order.
pub fn enumerate_linear_classes(n: usize, p: u64) -> Result<Vec<(Matrix, InvariantFactors)>> {
    let field = FieldSpec::prime(p)?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for m in all_matrices(field, n)? {
        let inv = invariant_factors(&m)?;
        if seen.insert(inv.clone()) {
            out.push((m, inv));
        }
    }
    Ok(out)
}

/// Number of affine similarity classes with linear part similar to `m`: one for each
/// achievable `tau`, namely zero and every distinct depth of an eigenvalue-1 Jordan chain.
pub fn affine_class_count(m: &Matrix) -> Result<usize> {
    Ok(achievable_taus(m)?.len())
}

/// Achievable `tau` values over the linear class of `m`, each with a translation realizing it.
pub fn achievable_taus(m: &Matrix) -> Result<Vec<(usize, Vector)>> {
    let split = fitting_split(m)?;
    let mut out = vec![(0, Vector::zero(m.field(), m.rows()))];
    if split.n1 == 0 {
        return Ok(out);
    }
    let chains = nilpotent_chains(&split, m)?;
    // deepest first, so equal depths are adjacent
    for c in chains.chains() {
        if out.last().map(|(d, _)| *d) != Some(c.depth) {
            out.push((c.depth, c.generator.clone()));
        }
    }
    Ok(out)
}

/// Affine classes predicted from the linear classes and the achievable `tau` values.
pub fn predicted_affine_classes(n: usize, p: u64, invertible_only: bool) -> Result<ClassTable> {
    let field = FieldSpec::prime(p)?;
    let mut classes = Vec::new();
    for (m, inv) in enumerate_linear_classes(n, p)? {
        if invertible_only && !m.is_invertible() {
            continue;
        }
        for (t, b) in achievable_taus(&m)? {
            classes.push(ClassEntry {
                representative: AffineMap::new(m.clone(), b)?,
                linear_invariant: inv.clone(),
                tau: t,
                orbit_size: None,
            });
        }
    }
    Ok(ClassTable { field, dim: n, invertible_only, classes })
}

/// Affine classes by exhaustive orbit search; invariants are attached afterwards for reporting.
pub fn brute_force_affine_classes(n: usize, p: u64, invertible_only: bool) -> Result<ClassTable> {
    let field = FieldSpec::prime(p)?;
    let space = RawSpace::new(n, field.modulus().expect("prime field"));
    let mut classes = Vec::new();
    let mut cache: HashMap<Vec<u32>, InvariantFactors> = HashMap::new();
    for orbit in raw_orbits(space, invertible_only)? {
        let f = raw_affine(field, n, &orbit.representative);
        let inv = match cache.get(&orbit.representative.linear) {
            Some(inv) => inv.clone(),
            None => {
                let inv = invariant_factors(f.linear())?;
                cache.insert(orbit.representative.linear.clone(), inv.clone());
                inv
            }
        };
        classes.push(ClassEntry { tau: tau(&f)?, representative: f, linear_invariant: inv, orbit_size: Some(orbit.size) });
    }
    Ok(ClassTable { field, dim: n, invertible_only, classes })
}

pub fn raw_matrix(field: FieldSpec, n: usize, entries: &[u32]) -> Matrix {
    let data: Vec<Scalar> = entries.iter().map(|&e| field.from_i64(e as i64)).collect();
    Matrix::from_rows(field, n, n, data).expect("square entry list")
}

pub fn raw_affine(field: FieldSpec, n: usize, f: &RawMap) -> AffineMap {
    let b = Vector::new(field, f.translation.iter().map(|&e| field.from_i64(e as i64)).collect());
    AffineMap::new(raw_matrix(field, n, &f.linear), b).expect("consistent raw map")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_class_counts() {
        assert_eq!(enumerate_linear_classes(1, 2).unwrap().len(), 2);
        assert_eq!(enumerate_linear_classes(1, 3).unwrap().len(), 3);
        assert_eq!(enumerate_linear_classes(2, 2).unwrap().len(), 6);
        assert!(matches!(enumerate_linear_classes(3, 5), Err(Error::TooLarge(_))));
    }

    #[test]
    fn class_count_examples() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert_eq!(affine_class_count(&Matrix::identity(f2, 2)).unwrap(), 2);
        assert_eq!(affine_class_count(&Matrix::from_i64(f2, &[&[1, 1], &[0, 1]])).unwrap(), 2);
        assert_eq!(affine_class_count(&Matrix::zero(f2, 2, 2)).unwrap(), 1);
        let q = FieldSpec::rationals();
        let m = Matrix::from_i64(q, &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(affine_class_count(&m).unwrap(), 3);
    }

    #[test]
    fn predicted_matches_brute_force_small() {
        for (n, p, inv) in [(1, 2, true), (1, 3, false), (2, 2, true), (2, 2, false)] {
            let predicted = predicted_affine_classes(n, p, inv).unwrap();
            let brute = brute_force_affine_classes(n, p, inv).unwrap();
            assert!(predicted.agrees_with(&brute), "n={n} p={p} invertible_only={inv}");
        }
        assert_eq!(brute_force_affine_classes(2, 2, true).unwrap().len(), 5);
        assert_eq!(brute_force_affine_classes(1, 3, false).unwrap().len(), 4);
    }
}
