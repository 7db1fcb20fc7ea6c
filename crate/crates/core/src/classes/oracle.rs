//! Brute-force reference computations over small prime fields.
//!
//! Everything here works on raw residues with its own modular arithmetic and elimination, so
//! it shares no code with the exact-arithmetic layer it is used to check.

use crate::affine::AffineMap;
use crate::error::{Error, Result};

/// Largest number of affine maps the orbit search will enumerate.
pub const MAX_ORBIT_MAPS: u64 = 100_000;
/// Largest number of points the flat search will enumerate.
pub const MAX_FLAT_POINTS: u64 = 81;

/// An `n x n` matrix (row-major) and a translation, entries in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RawMap {
    pub linear: Vec<u32>,
    pub translation: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RawSpace {
    pub n: usize,
    pub p: u32,
}

impl RawSpace {
    pub fn new(n: usize, p: u32) -> Self {
        RawSpace { n, p }
    }

    fn add(self, a: u32, b: u32) -> u32 {
        (a + b) % self.p
    }

    fn sub(self, a: u32, b: u32) -> u32 {
        (a + self.p - b) % self.p
    }

    fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    fn inv(self, a: u32) -> u32 {
        (1..self.p).find(|&x| self.mul(a, x) == 1).expect("nonzero residue has an inverse")
    }

    pub fn point_count(self) -> u64 {
        (self.p as u64).pow(self.n as u32)
    }

    pub fn mat_mul(self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let n = self.n;
        let mut out = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0;
                for k in 0..n {
                    acc = self.add(acc, self.mul(a[i * n + k], b[k * n + j]));
                }
                out[i * n + j] = acc;
            }
        }
        out
    }

    pub fn mat_vec(self, a: &[u32], v: &[u32]) -> Vec<u32> {
        let n = self.n;
        (0..n)
            .map(|i| (0..n).fold(0, |acc, k| self.add(acc, self.mul(a[i * n + k], v[k]))))
            .collect()
    }

    fn vec_add(self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(&x, &y)| self.add(x, y)).collect()
    }

    fn vec_sub(self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(&x, &y)| self.sub(x, y)).collect()
    }

    fn minus_identity(self, a: &[u32]) -> Vec<u32> {
        let mut out = a.to_vec();
        for i in 0..self.n {
            out[i * self.n + i] = self.sub(out[i * self.n + i], 1);
        }
        out
    }

    /// Gauss-Jordan inverse, `None` when singular.
    pub fn mat_inverse(self, a: &[u32]) -> Option<Vec<u32>> {
        let n = self.n;
        let w = 2 * n;
        let mut aug = vec![0; n * w];
        for i in 0..n {
            aug[i * w..i * w + n].copy_from_slice(&a[i * n..i * n + n]);
            aug[i * w + n + i] = 1;
        }
        for col in 0..n {
            let pivot = (col..n).find(|&r| aug[r * w + col] != 0)?;
            for j in 0..w {
                aug.swap(col * w + j, pivot * w + j);
            }
            let s = self.inv(aug[col * w + col]);
            for j in 0..w {
                aug[col * w + j] = self.mul(aug[col * w + j], s);
            }
            for r in 0..n {
                let factor = aug[r * w + col];
                if r != col && factor != 0 {
                    for j in 0..w {
                        let t = self.mul(factor, aug[col * w + j]);
                        aug[r * w + j] = self.sub(aug[r * w + j], t);
                    }
                }
            }
        }
        Some((0..n).flat_map(|i| aug[i * w + n..i * w + w].to_vec()).collect())
    }

    pub fn is_invertible(self, a: &[u32]) -> bool {
        self.mat_inverse(a).is_some()
    }

    /// Every vector of length `len`, in lexicographic order.
    pub fn all_tuples(self, len: usize) -> impl Iterator<Item = Vec<u32>> {
        let p = self.p as u64;
        let count = p.pow(len as u32);
        (0..count).map(move |code| {
            let mut digits = vec![0; len];
            let mut c = code;
            for d in digits.iter_mut().rev() {
                *d = (c % p) as u32;
                c /= p;
            }
            digits
        })
    }

    pub fn all_matrices(self) -> impl Iterator<Item = Vec<u32>> {
        self.all_tuples(self.n * self.n)
    }

    pub fn general_linear_group(self) -> Vec<Vec<u32>> {
        self.all_matrices().filter(|m| self.is_invertible(m)).collect()
    }

    /// Lexicographic position of a tuple among [`RawSpace::all_tuples`].
    pub fn tuple_code(self, t: &[u32]) -> usize {
        t.iter().fold(0usize, |acc, &d| acc * self.p as usize + d as usize)
    }

    /// Maps in lexicographic order of linear entries, then translation.
    pub fn all_maps(self) -> impl Iterator<Item = RawMap> {
        let n = self.n;
        self.all_tuples(n * n + n).map(move |mut t| {
            let translation = t.split_off(n * n);
            RawMap { linear: t, translation }
        })
    }

    pub fn map_code(self, f: &RawMap) -> usize {
        let lin = self.tuple_code(&f.linear);
        lin * (self.p as usize).pow(self.n as u32) + self.tuple_code(&f.translation)
    }

    pub fn affine_group(self) -> Vec<RawMap> {
        let gl = self.general_linear_group();
        let points: Vec<_> = self.all_tuples(self.n).collect();
        gl.iter()
            .flat_map(|t| points.iter().map(move |v| RawMap { linear: t.clone(), translation: v.clone() }))
            .collect()
    }

    pub fn evaluate(self, f: &RawMap, x: &[u32]) -> Vec<u32> {
        self.vec_add(&self.mat_vec(&f.linear, x), &f.translation)
    }

    /// `h ∘ f ∘ h^{-1}`.
    pub fn conjugate(self, h: &RawMap, f: &RawMap) -> RawMap {
        let inv = self.mat_inverse(&h.linear).expect("conjugator must be invertible");
        let linear = self.mat_mul(&self.mat_mul(&h.linear, &f.linear), &inv);
        // h f h^{-1}(0) = h(f(-T^{-1} t))
        let neg_t: Vec<u32> = h.translation.iter().map(|&x| self.sub(0, x)).collect();
        let start = self.mat_vec(&inv, &neg_t);
        let translation = self.evaluate(h, &self.evaluate(f, &start));
        RawMap { linear, translation }
    }

    /// `h ∘ f = g ∘ h`, checked without inverting `h`.
    pub fn conjugates(self, h: &RawMap, f: &RawMap, g: &RawMap) -> bool {
        self.mat_mul(&h.linear, &f.linear) == self.mat_mul(&g.linear, &h.linear)
            && self.evaluate(h, &f.translation) == self.evaluate(g, &h.translation)
    }

    pub fn search_conjugator(self, group: &[RawMap], f: &RawMap, g: &RawMap) -> Option<RawMap> {
        group.iter().find(|h| self.conjugates(h, f, g)).cloned()
    }

    pub fn matrices_conjugate(self, gl: &[Vec<u32>], a: &[u32], b: &[u32]) -> bool {
        gl.iter().any(|p| self.mat_mul(p, a) == self.mat_mul(b, p))
    }
}

/// A conjugacy orbit: its least member and its size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawOrbit {
    pub representative: RawMap,
    pub size: usize,
}

/// Orbits of all affine maps (or only invertible ones) under conjugation by the full affine
/// group, seeded in lexicographic order so each representative is the least map of its orbit.
pub fn raw_orbits(space: RawSpace, invertible_only: bool) -> Result<Vec<RawOrbit>> {
    let n = space.n as u32;
    let total = (space.p as u64).checked_pow(n * n + n).unwrap_or(u64::MAX);
    if total > MAX_ORBIT_MAPS {
        return Err(Error::TooLarge(format!(
            "{total} affine maps over F_{} in dimension {}, limit {MAX_ORBIT_MAPS}",
            space.p, space.n
        )));
    }
    let group = space.affine_group();
    let mut seen = vec![false; total as usize];
    let mut orbits = Vec::new();
    for f in space.all_maps() {
        let code = space.map_code(&f);
        if seen[code] || (invertible_only && !space.is_invertible(&f.linear)) {
            continue;
        }
        let mut size = 0;
        for h in &group {
            let c = space.map_code(&space.conjugate(h, &f));
            if !seen[c] {
                seen[c] = true;
                size += 1;
            }
        }
        orbits.push(RawOrbit { representative: f, size });
    }
    Ok(orbits)
}

/// A subspace given by its RREF basis and its full member list.
#[derive(Clone, Debug)]
pub struct RawSubspace {
    pub basis: Vec<Vec<u32>>,
    /// Indexed by [`RawSpace::tuple_code`].
    pub members: Vec<bool>,
}

impl RawSubspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, space: RawSpace, v: &[u32]) -> bool {
        self.members[space.tuple_code(v)]
    }
}

/// Every subspace of `F_p^n`, one per reduced row echelon basis.
pub fn all_subspaces(space: RawSpace) -> Vec<RawSubspace> {
    let n = space.n;
    let mut out = Vec::new();
    for k in 0..=n {
        for pivots in combinations(n, k) {
            // free slots: row i, column j > pivots[i], j not a pivot
            let slots: Vec<(usize, usize)> = (0..k)
                .flat_map(|i| {
                    let pv = &pivots;
                    (pv[i] + 1..n).filter(move |j| !pv.contains(j)).map(move |j| (i, j))
                })
                .collect();
            for fill in space.all_tuples(slots.len()) {
                let mut basis = vec![vec![0u32; n]; k];
                for (i, &pc) in pivots.iter().enumerate() {
                    basis[i][pc] = 1;
                }
                for (&(i, j), &v) in slots.iter().zip(&fill) {
                    basis[i][j] = v;
                }
                let mut members = vec![false; space.point_count() as usize];
                for coeffs in space.all_tuples(k) {
                    let mut v = vec![0u32; n];
                    for (c, row) in coeffs.iter().zip(&basis) {
                        for (x, &r) in v.iter_mut().zip(row) {
                            *x = space.add(*x, space.mul(*c, r));
                        }
                    }
                    members[space.tuple_code(&v)] = true;
                }
                out.push(RawSubspace { basis, members });
            }
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if k > n {
        return vec![];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for mut rest in combinations(n - first - 1, k - 1) {
            for r in rest.iter_mut() {
                *r += first + 1;
            }
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// An invariant flat found by exhaustive search.
#[derive(Clone, Debug)]
pub struct RawFlat {
    pub point: Vec<u32>,
    pub subspace: usize,
    pub dim: usize,
}

/// Converts a map over a small prime field to residues.
pub fn to_raw(f: &AffineMap) -> Result<(RawSpace, RawMap)> {
    let p = f.field().modulus().ok_or_else(|| Error::TooLarge("exhaustive search needs a finite field".into()))?;
    let residues = |xs: &[crate::algebra::Scalar]| xs.iter().map(|x| x.residue().expect("prime field")).collect();
    Ok((
        RawSpace::new(f.dim(), p),
        RawMap { linear: residues(f.linear().entries()), translation: residues(f.translation().entries()) },
    ))
}

/// Every invariant flat `A + W`: all points `A` against all `M`-invariant subspaces `W`.
pub fn invariant_flats(space: RawSpace, f: &RawMap, subspaces: &[RawSubspace]) -> Vec<RawFlat> {
    let mut out = Vec::new();
    for (idx, w) in subspaces.iter().enumerate() {
        let stable = w.basis.iter().all(|v| w.contains(space, &space.mat_vec(&f.linear, v)));
        if !stable {
            continue;
        }
        for a in space.all_tuples(space.n) {
            let moved = space.vec_sub(&space.evaluate(f, &a), &a);
            if w.contains(space, &moved) {
                out.push(RawFlat { point: a, subspace: idx, dim: w.dim() });
            }
        }
    }
    out
}

/// Least dimension of an invariant flat of `f`, by exhaustive search.
pub fn brute_force_min_flat(f: &AffineMap) -> Result<usize> {
    let (space, raw) = to_raw(f)?;
    check_flat_guard(space)?;
    let subspaces = all_subspaces(space);
    Ok(invariant_flats(space, &raw, &subspaces)
        .iter()
        .map(|fl| fl.dim)
        .min()
        .expect("the whole space is always an invariant flat"))
}

pub fn check_flat_guard(space: RawSpace) -> Result<()> {
    if space.point_count() > MAX_FLAT_POINTS {
        return Err(Error::TooLarge(format!("{} points, limit {MAX_FLAT_POINTS}", space.point_count())));
    }
    Ok(())
}

/// Members of `ker((M - I)^n)`, by testing every vector.
pub fn eigen_one_members(space: RawSpace, linear: &[u32]) -> Vec<bool> {
    let nil = space.minus_identity(linear);
    let mut power = nil.clone();
    for _ in 1..space.n {
        power = space.mat_mul(&power, &nil);
    }
    space.all_tuples(space.n).map(|v| space.n == 0 || space.mat_vec(&power, &v).iter().all(|&x| x == 0)).collect()
}
