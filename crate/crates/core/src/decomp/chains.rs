//! Jordan chains of `N = M - I` on the eigenvalue-1 component, and chain rebasing around a
//! chosen coset representative.

use super::fitting::FittingSplit;
use crate::algebra::{Matrix, Subspace, Vector};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub generator: Vector,
    pub depth: usize,
}

/// A cyclic decomposition of `V1` under `N`: the vectors `N^j g` (`j < depth`) over all chains
/// form a basis of `V1`. Chains are sorted by depth, deepest first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecomposition {
    nilpotent: Matrix,
    chains: Vec<Chain>,
}

/// Output of [`rebase_chains`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rebased {
    pub chains: ChainDecomposition,
    /// Zero, or a generator of one of `chains`.
    pub simple: Vector,
    pub tau: usize,
    /// Index of the chain generated by `simple`.
    pub head: Option<usize>,
}

impl ChainDecomposition {
    pub fn chains(&self) -> &[Chain] {
        &self.chains
    }

    /// `N = M - I` on the ambient space.
    pub fn nilpotent(&self) -> &Matrix {
        &self.nilpotent
    }

    pub fn depths(&self) -> Vec<usize> {
        self.chains.iter().map(|c| c.depth).collect()
    }

    /// `N^j g` for every chain, chain by chain.
    pub fn basis_vectors(&self) -> Vec<Vector> {
        let mut out = Vec::new();
        for c in &self.chains {
            let mut v = c.generator.clone();
            for _ in 0..c.depth {
                let next = self.nilpotent.mul_vec(&v);
                out.push(v);
                v = next;
            }
        }
        out
    }

    pub fn span(&self) -> Subspace {
        Subspace::span(self.nilpotent.field(), self.nilpotent.rows(), &self.basis_vectors())
    }

    /// Coefficients `c[i][j]` with `v = sum c[i][j] N^j g_i`.
    pub fn coordinates(&self, v: &Vector) -> Result<Vec<Vec<crate::algebra::Scalar>>> {
        let field = self.nilpotent.field();
        let basis = Matrix::from_columns(field, self.nilpotent.rows(), &self.basis_vectors());
        let flat = basis.solve(v).map_err(|e| match e {
            Error::NoSolution => Error::VectorNotInV1,
            other => other,
        })?;
        let mut out = Vec::with_capacity(self.chains.len());
        let mut offset = 0;
        for c in &self.chains {
            out.push(flat.entries()[offset..offset + c.depth].to_vec());
            offset += c.depth;
        }
        Ok(out)
    }

    /// Checks both type invariants: exact depths, and a basis of `expected`.
    pub fn verify(&self, expected: &Subspace) -> bool {
        let exact_depths = self.chains.iter().all(|c| {
            let before = self.nilpotent.pow(c.depth - 1).mul_vec(&c.generator);
            !before.is_zero() && self.nilpotent.mul_vec(&before).is_zero()
        });
        let vs = self.basis_vectors();
        exact_depths && vs.len() == expected.dim() && &self.span() == expected
    }
}

/// Smallest `d` with `N^d v = 0`, or `None` if `v` is not killed by any power up to `limit`.
pub(crate) fn nilpotent_depth(nil: &Matrix, v: &Vector, limit: usize) -> Option<usize> {
    let mut cur = v.clone();
    for d in 0..=limit {
        if cur.is_zero() {
            return Some(d);
        }
        cur = nil.mul_vec(&cur);
    }
    None
}

/// Chain tops at level `k` are a complement of `ker N^{k-1} + N ker N^{k+1}` inside `ker N^k`,
/// taken greedily from the RREF basis of `ker N^k`, deepest level first.
pub fn nilpotent_chains(split: &FittingSplit, m: &Matrix) -> Result<ChainDecomposition> {
    Ok(build_chains(split, m, None)?.0)
}

/// Like [`nilpotent_chains`], but forces `head` to be the first chain top at its depth.
/// Fails with [`Error::NotComplemented`] when `<head>` is not a direct summand of `V1`.
/// Returns the decomposition and the index of `head`'s chain.
pub fn chains_through(split: &FittingSplit, m: &Matrix, head: &Vector) -> Result<(ChainDecomposition, usize)> {
    let (dec, idx) = build_chains(split, m, Some(head))?;
    Ok((dec, idx.expect("forced head is always placed")))
}

fn build_chains(
    split: &FittingSplit,
    m: &Matrix,
    head: Option<&Vector>,
) -> Result<(ChainDecomposition, Option<usize>)> {
    if split.n1 == 0 {
        return Err(Error::EmptyV1);
    }
    let field = m.field();
    let n = m.rows();
    let nil = m.minus_identity();
    let n1 = split.n1;

    let forced = match head {
        Some(h) => {
            if !split.v1.contains(h)? {
                return Err(Error::VectorNotInV1);
            }
            match nilpotent_depth(&nil, h, n1) {
                Some(0) | None => return Err(Error::NotComplemented),
                Some(d) => Some((h, d)),
            }
        }
        None => None,
    };

    // kernels[k] = ker N^k for k = 0..=n1+1
    let mut kernels = Vec::with_capacity(n1 + 2);
    let mut power = Matrix::identity(field, n);
    for _ in 0..=n1 + 1 {
        kernels.push(Subspace::kernel(&power));
        power = &power * &nil;
    }

    let mut chains = Vec::new();
    let mut head_index = None;
    for k in (1..=n1).rev() {
        let lower = kernels[k - 1].sum(&kernels[k + 1].map(&nil))?;
        let mut candidates = Vec::new();
        if let Some((h, d)) = forced {
            if d == k {
                candidates.push(h.clone());
            }
        }
        candidates.extend(kernels[k].basis_vectors());
        let tops = lower.extend_with(&candidates);
        if let Some((h, d)) = forced {
            if d == k {
                if tops.first() != Some(h) {
                    return Err(Error::NotComplemented);
                }
                head_index = Some(chains.len());
            }
        }
        chains.extend(tops.into_iter().map(|generator| Chain { generator, depth: k }));
    }

    let dec = ChainDecomposition { nilpotent: nil, chains };
    if !dec.verify(&split.v1) {
        return Err(Error::VerificationFailed("chain vectors do not form a basis of V1"));
    }
    Ok((dec, head_index))
}

/// Rewrites `aprime` (in `V1`) as a chain generator modulo `N V1`.
///
/// With `aprime = sum c[i][j] N^j g_i`, the chains whose leading coefficient `c[i][0]` is
/// nonzero have their generator replaced by their component `a_i`; the deepest of them
/// (first on ties) is replaced by the sum of all those components, which becomes `simple`.
pub fn rebase_chains(chains: &ChainDecomposition, aprime: &Vector) -> Result<Rebased> {
    let nil = &chains.nilpotent;
    let field = nil.field();
    let coords = chains.coordinates(aprime)?;
    let components: Vec<Option<Vector>> = chains
        .chains
        .iter()
        .zip(&coords)
        .map(|(chain, c)| {
            if c[0].is_zero() {
                return None;
            }
            let mut acc = Vector::zero(field, nil.rows());
            let mut v = chain.generator.clone();
            for cj in c {
                acc = &acc + &v.scale(cj);
                v = nil.mul_vec(&v);
            }
            Some(acc)
        })
        .collect();

    let Some(head) = components.iter().position(Option::is_some) else {
        return Ok(Rebased {
            chains: chains.clone(),
            simple: Vector::zero(field, nil.rows()),
            tau: 0,
            head: None,
        });
    };
    let simple = components
        .iter()
        .flatten()
        .fold(Vector::zero(field, nil.rows()), |acc, a| &acc + a);
    let tau = chains.chains[head].depth;

    let new_chains = chains
        .chains
        .iter()
        .zip(components)
        .enumerate()
        .map(|(i, (chain, component))| Chain {
            generator: match (i == head, component) {
                (true, _) => simple.clone(),
                (false, Some(a)) => a,
                (false, None) => chain.generator.clone(),
            },
            depth: chain.depth,
        })
        .collect();
    let rebased = ChainDecomposition { nilpotent: nil.clone(), chains: new_chains };

    let v1 = chains.span();
    if !rebased.verify(&v1) {
        return Err(Error::VerificationFailed("rebased chains are not a decomposition of V1"));
    }
    if !Subspace::image(nil).contains(&(aprime - &simple))? {
        return Err(Error::VerificationFailed("simple representative left the coset"));
    }
    Ok(Rebased { chains: rebased, simple, tau, head: Some(head) })
}
