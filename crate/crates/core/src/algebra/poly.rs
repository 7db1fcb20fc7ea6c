//! Dense univariate polynomials over a [`FieldSpec`].

use std::fmt;

use super::field::{FieldSpec, Scalar};
use super::matrix::{Matrix, Vector};
use crate::error::{Error, Result};

/// Coefficients in ascending degree with no trailing zeros; zero is the empty list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

/// Output of [`Poly::egcd`]: `r * a + s * b = gcd` with `gcd` monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bezout {
    pub gcd: Poly,
    pub r: Poly,
    pub s: Poly,
}

impl Poly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn from_i64(field: FieldSpec, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: FieldSpec) -> Self {
        Poly { field, coeffs: vec![] }
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::constant(field.one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(c.field(), vec![c])
    }

    pub fn x(field: FieldSpec) -> Self {
        Self::new(field, vec![field.zero(), field.one()])
    }

    /// `X - c`
    pub fn linear_root(c: &Scalar) -> Self {
        Self::new(c.field(), vec![-c, c.field().one()])
    }

    /// `(X - c)^k`
    pub fn root_power(c: &Scalar, k: usize) -> Self {
        let base = Self::linear_root(c);
        (0..k).fold(Self::one(c.field()), |acc, _| &acc * &base)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Scalar::is_one)
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inverse().expect("leading coefficient is nonzero")),
        }
    }

    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let inv = divisor.leading().unwrap().inverse()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = &rem[top] * &inv;
            let shift = top - dd;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = &rem[shift + i] - &(&c * d);
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(Scalar::is_zero) {
                rem.pop();
            }
        }
        Ok((Poly::new(self.field, quot), Poly::new(self.field, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(divisor)?.1)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Extended Euclid. The identity `r*a + s*b = g` is re-checked in debug builds.
    pub fn egcd(a: &Poly, b: &Poly) -> Result<Bezout> {
        if a.field != b.field {
            return Err(Error::FieldMismatch);
        }
        if a.is_zero() && b.is_zero() {
            return Err(Error::BothZero);
        }
        let field = a.field;
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(field), Poly::zero(field));
        let (mut t0, mut t1) = (Poly::zero(field), Poly::one(field));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = r0.leading().unwrap().inverse()?;
        let out = Bezout {
            gcd: r0.scale(&inv),
            r: s0.scale(&inv),
            s: t0.scale(&inv),
        };
        debug_assert_eq!(&(&out.r * a) + &(&out.s * b), out.gcd, "Bezout identity");
        Ok(out)
    }

    pub fn gcd(a: &Poly, b: &Poly) -> Result<Poly> {
        Ok(Self::egcd(a, b)?.gcd)
    }

    /// Monic least common multiple of nonzero polynomials.
    pub fn lcm(a: &Poly, b: &Poly) -> Result<Poly> {
        let g = Self::gcd(a, b)?;
        Ok((a * b).div_rem(&g)?.0.monic())
    }

    /// Multiplicity of `factor` in `self` (nonzero `self`, nonconstant `factor`).
    pub fn multiplicity(&self, factor: &Poly) -> usize {
        let mut k = 0;
        let mut cur = self.clone();
        while !cur.is_zero() && factor.degree().is_some_and(|d| d > 0) {
            let (q, r) = cur.div_rem(factor).expect("nonzero factor");
            if !r.is_zero() {
                break;
            }
            cur = q;
            k += 1;
        }
        k
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    /// `p(M)` by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        self.coeffs.iter().rev().fold(Matrix::zero(self.field, n, n), |acc, c| {
            &(&acc * m) + &Matrix::identity(self.field, n).scale(c)
        })
    }

    /// `p(M) v` without forming `p(M)`.
    pub fn apply(&self, m: &Matrix, v: &Vector) -> Vector {
        self.coeffs
            .iter()
            .rev()
            .fold(Vector::zero(self.field, v.len()), |acc, c| {
                &m.mul_vec(&acc) + &v.scale(c)
            })
    }

    /// Companion matrix: ones on the subdiagonal, last column `-c_0 .. -c_{d-1}`.
    pub fn companion(&self) -> Matrix {
        let monic = self.monic();
        let d = monic.degree().unwrap_or(0);
        let mut c = Matrix::zero(self.field, d, d);
        for i in 1..d {
            c.set(i, i - 1, self.field.one());
        }
        for i in 0..d {
            c.set(i, d - 1, -&monic.coeffs[i]);
        }
        c
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(self.field, (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(self.field, (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(self.field, out)
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "X")?,
                (1, false) => write!(f, "{c}X")?,
                (_, true) => write!(f, "X^{i}")?,
                (_, false) => write!(f, "{c}X^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    #[test]
    fn egcd_examples() {
        let f = f2();
        // X - 1 and X over F_2
        let a = Poly::from_i64(f, &[-1, 1]);
        let b = Poly::x(f);
        let bz = Poly::egcd(&a, &b).unwrap();
        assert_eq!(bz.gcd, Poly::one(f));
        assert_eq!(bz.r, Poly::one(f));
        assert_eq!(bz.s, Poly::one(f));

        let x2 = Poly::from_i64(f, &[0, 0, 1]);
        let bz = Poly::egcd(&x2, &Poly::zero(f)).unwrap();
        assert_eq!((bz.gcd, bz.r, bz.s), (x2.clone(), Poly::one(f), Poly::zero(f)));

        let q = FieldSpec::rationals();
        let xm1 = Poly::linear_root(&q.one());
        let sq = &xm1 * &xm1;
        assert_eq!(Poly::gcd(&sq, &xm1).unwrap(), xm1);

        assert_eq!(Poly::egcd(&Poly::zero(f), &Poly::zero(f)), Err(Error::BothZero));
    }

    #[test]
    fn division_and_multiplicity() {
        let q = FieldSpec::rationals();
        let a = Poly::from_i64(q, &[1, 2, 3, 4]);
        let b = Poly::from_i64(q, &[5, 0, 2]);
        let (qt, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&qt * &b) + &r, a);
        assert!(r.degree().unwrap() < 2);
        let xm1 = Poly::linear_root(&q.one());
        let p = &Poly::root_power(&q.one(), 3) * &b;
        assert_eq!(p.multiplicity(&xm1), 3);
        assert!(a.div_rem(&Poly::zero(q)).is_err());
    }

    #[test]
    fn companion_roundtrip() {
        let f = FieldSpec::prime(5).unwrap();
        let p = Poly::from_i64(f, &[2, 0, 3, 1]);
        let c = p.companion();
        assert!(p.eval_matrix(&c).is_zero());
        assert_eq!(format!("{p}"), "X^3 + 3X^2 + 2");
    }
}
