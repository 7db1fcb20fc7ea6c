use super::map::AffineMap;
use crate::algebra::{Matrix, Subspace, Vector};
use crate::decomp::{fitting_project, fitting_split, nilpotent_chains, rebase_chains, ChainDecomposition, FittingSplit};
use crate::error::{Error, Result};

/// Least `k` with `alpha ∈ im(M - I) + ker((M - I)^k)`, by direct membership tests.
pub fn tau_vector(alpha: &Vector, m: &Matrix) -> Result<usize> {
    if !m.is_square() || m.rows() != alpha.len() {
        return Err(Error::DimensionMismatch("tau_vector operands".into()));
    }
    let nil = m.minus_identity();
    let image = Subspace::image(&nil);
    let mut power = Matrix::identity(m.field(), m.rows());
    for k in 0..=m.rows() {
        if image.sum(&Subspace::kernel(&power))?.contains(alpha)? {
            return Ok(k);
        }
        power = &power * &nil;
    }
    Err(Error::VerificationFailed("tau sweep did not terminate by n"))
}

/// `tau` of any displacement `f(A) - A`; the translation is the displacement at the origin.
pub fn tau(f: &AffineMap) -> Result<usize> {
    tau_vector(f.translation(), f.linear())
}

/// A coset representative that generates a direct summand of the eigenvalue-1 component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleRepresentative {
    /// Zero when `tau = 0`.
    pub vector: Vector,
    pub tau: usize,
    /// A chain decomposition in which `vector` is a generator, when `tau > 0`.
    pub chains: Option<ChainDecomposition>,
}

pub fn simple_representative(f: &AffineMap) -> Result<SimpleRepresentative> {
    LinearProfile::new(f.linear())?.simple_representative(f.translation())
}

/// Everything about a linear part that the per-translation computations reuse.
#[derive(Clone, Debug)]
pub struct LinearProfile {
    linear: Matrix,
    split: FittingSplit,
    chains: Option<ChainDecomposition>,
    /// `levels[k] = im(M - I) + ker((M - I)^k)` for `k = 0..=n1`.
    levels: Vec<Subspace>,
}

impl LinearProfile {
    pub fn new(linear: &Matrix) -> Result<Self> {
        let split = fitting_split(linear)?;
        let chains = if split.n1 > 0 { Some(nilpotent_chains(&split, linear)?) } else { None };
        let nil = linear.minus_identity();
        let image = Subspace::image(&nil);
        let mut levels = Vec::with_capacity(split.n1 + 1);
        let mut power = Matrix::identity(linear.field(), linear.rows());
        for _ in 0..=split.n1 {
            levels.push(image.sum(&Subspace::kernel(&power))?);
            power = &power * &nil;
        }
        Ok(LinearProfile { linear: linear.clone(), split, chains, levels })
    }

    pub fn linear(&self) -> &Matrix {
        &self.linear
    }

    pub fn split(&self) -> &FittingSplit {
        &self.split
    }

    pub fn chains(&self) -> Option<&ChainDecomposition> {
        self.chains.as_ref()
    }

    pub fn n1(&self) -> usize {
        self.split.n1
    }

    /// Same as [`tau_vector`] against this linear part.
    pub fn tau_of(&self, alpha: &Vector) -> Result<usize> {
        for (k, level) in self.levels.iter().enumerate() {
            if level.contains(alpha)? {
                return Ok(k);
            }
        }
        Err(Error::VerificationFailed("tau exceeds the eigenvalue-1 exponent"))
    }

    /// Projects onto the eigenvalue-1 component, then rebases the chains around the result.
    pub fn simple_representative(&self, translation: &Vector) -> Result<SimpleRepresentative> {
        let zero = SimpleRepresentative { vector: Vector::zero(self.linear.field(), self.linear.rows()), tau: 0, chains: None };
        let Some(chains) = &self.chains else {
            return Ok(zero);
        };
        if translation.len() != self.linear.rows() {
            return Err(Error::DimensionMismatch("translation length".into()));
        }
        let projected = fitting_project(&self.split, translation);
        let rebased = rebase_chains(chains, &projected)?;
        if rebased.tau == 0 {
            return Ok(zero);
        }
        Ok(SimpleRepresentative { vector: rebased.simple, tau: rebased.tau, chains: Some(rebased.chains) })
    }
}
