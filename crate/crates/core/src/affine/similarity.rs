use std::fmt;

use super::map::{AffineMap, ConjugatorWitness};
use super::tau::LinearProfile;
use crate::decomp::{invariant_factors, module_isomorphism};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Similar,
    LinearPartsDiffer,
    TauDiffers,
}

impl Verdict {
    pub fn is_similar(self) -> bool {
        self == Verdict::Similar
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Similar => "Similar",
            Verdict::LinearPartsDiffer => "LinearPartsDiffer",
            Verdict::TauDiffers => "TauDiffers",
        })
    }
}

/// Two affine maps are conjugate by an affine isomorphism exactly when their linear parts are
/// similar and their `tau` values agree.
pub fn decide_similar(f: &AffineMap, g: &AffineMap) -> Result<Verdict> {
    f.check_compatible(g)?;
    if invariant_factors(f.linear())? != invariant_factors(g.linear())? {
        return Ok(Verdict::LinearPartsDiffer);
    }
    let pf = LinearProfile::new(f.linear())?;
    let pg = LinearProfile::new(g.linear())?;
    if pf.tau_of(f.translation())? != pg.tau_of(g.translation())? {
        return Ok(Verdict::TauDiffers);
    }
    Ok(Verdict::Similar)
}

/// An affine isomorphism `h` with `h ∘ f ∘ h^{-1} = g`, checked by composition.
pub fn build_conjugator(f: &AffineMap, g: &AffineMap) -> Result<ConjugatorWitness> {
    if !decide_similar(f, g)?.is_similar() {
        return Err(Error::NotSimilar);
    }
    let sf = LinearProfile::new(f.linear())?.simple_representative(f.translation())?;
    let sg = LinearProfile::new(g.linear())?.simple_representative(g.translation())?;
    let t = module_isomorphism(f.linear(), g.linear(), &sf.vector, &sg.vector)?;

    // f(A) - A = sf and g(B) - B = sg, so h must send A to B
    let a = f.linear().minus_identity().solve(&(&sf.vector - f.translation()))?;
    let b = g.linear().minus_identity().solve(&(&sg.vector - g.translation()))?;
    let witness = ConjugatorWitness { translation: &b - &t.mul_vec(&a), linear: t };
    if !witness.verify(f, g) {
        return Err(Error::VerificationFailed("conjugator does not conjugate"));
    }
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FieldSpec, Matrix, Vector};

    #[test]
    fn verdicts() {
        let f2 = FieldSpec::prime(2).unwrap();
        let id = AffineMap::identity(f2, 2);
        let t10 = AffineMap::translation_by(Vector::from_i64(f2, &[1, 0]));
        let t01 = AffineMap::translation_by(Vector::from_i64(f2, &[0, 1]));
        assert_eq!(decide_similar(&id, &t10).unwrap(), Verdict::TauDiffers);
        assert_eq!(decide_similar(&t10, &t01).unwrap(), Verdict::Similar);
        let shear = AffineMap::new(Matrix::from_i64(f2, &[&[1, 1], &[0, 1]]), Vector::zero(f2, 2)).unwrap();
        assert_eq!(decide_similar(&shear, &id).unwrap(), Verdict::LinearPartsDiffer);
        assert!(decide_similar(&id, &AffineMap::identity(f2, 3)).is_err());
    }

    #[test]
    fn witnesses() {
        let f2 = FieldSpec::prime(2).unwrap();
        let t10 = AffineMap::translation_by(Vector::from_i64(f2, &[1, 0]));
        let t01 = AffineMap::translation_by(Vector::from_i64(f2, &[0, 1]));
        let h = build_conjugator(&t10, &t01).unwrap();
        assert_eq!(h.linear, Matrix::from_i64(f2, &[&[0, 1], &[1, 0]]));
        assert!(h.verify(&t10, &t01));

        let id = AffineMap::identity(f2, 2);
        assert!(build_conjugator(&id, &id).unwrap().verify(&id, &id));
        assert_eq!(build_conjugator(&id, &t10), Err(Error::NotSimilar));
    }

    #[test]
    fn witness_through_other_components() {
        let q = FieldSpec::rationals();
        let m = Matrix::from_i64(q, &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 3]]);
        let f = AffineMap::new(m, Vector::from_i64(q, &[2, 5, -1])).unwrap();
        let h = AffineMap::new(
            Matrix::from_i64(q, &[&[1, 2, 0], &[0, 1, 1], &[1, 0, 1]]),
            Vector::from_i64(q, &[1, -1, 4]),
        )
        .unwrap();
        let g = h.conjugate(&f).unwrap();
        let w = build_conjugator(&f, &g).unwrap();
        assert!(w.verify(&f, &g));
    }
}
