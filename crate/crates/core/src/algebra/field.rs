//! Prime fields `F_p` and the rationals, with canonical scalar representatives.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Which field the scalars live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Prime(u32),
    Rationals,
}

/// A validated field descriptor. Prime moduli are checked at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec(FieldKind);

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec(FieldKind::Prime(p as u32)))
    }

    pub const fn rationals() -> Self {
        FieldSpec(FieldKind::Rationals)
    }

    pub fn kind(self) -> FieldKind {
        self.0
    }

    /// The characteristic modulus, or `None` for the rationals.
    pub fn modulus(self) -> Option<u32> {
        match self.0 {
            FieldKind::Prime(p) => Some(p),
            FieldKind::Rationals => None,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self.0 {
            FieldKind::Prime(p) => Scalar(Repr::Mod {
                value: v.rem_euclid(p as i64) as u32,
                p,
            }),
            FieldKind::Rationals => Scalar(Repr::Rat(BigRational::from_integer(v.into()))),
        }
    }

    pub fn from_bigint(self, v: &BigInt) -> Scalar {
        match self.0 {
            FieldKind::Prime(p) => {
                let r = ((v % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                let value: u32 = r.try_into().expect("residue fits in u32");
                Scalar(Repr::Mod { value, p })
            }
            FieldKind::Rationals => Scalar(Repr::Rat(BigRational::from_integer(v.clone()))),
        }
    }

    /// `num / den` in this field.
    pub fn from_ratio(self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        match self.0 {
            FieldKind::Prime(_) => self.from_bigint(num).checked_div(&self.from_bigint(den)),
            FieldKind::Rationals => {
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar(Repr::Rat(BigRational::new(num.clone(), den.clone()))))
            }
        }
    }

    /// All elements in increasing residue order. Prime fields only.
    pub fn elements(self) -> Option<impl Iterator<Item = Scalar>> {
        let p = self.modulus()?;
        Some((0..p).map(move |value| Scalar(Repr::Mod { value, p })))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            FieldKind::Prime(p) => write!(f, "F_{p}"),
            FieldKind::Rationals => write!(f, "Q"),
        }
    }
}

/// Deterministic Miller-Rabin; the witnesses {2, 3, 5, 7} are exact below 3.2e9.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7] {
        if n.is_multiple_of(small) {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Mod { value: u32, p: u32 },
    Rat(BigRational),
}

/// An exact field element: a residue in `0..p` or a reduced fraction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

/// The four field operations, for callers that dispatch on an operator value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match &self.0 {
            Repr::Mod { p, .. } => FieldSpec(FieldKind::Prime(*p)),
            Repr::Rat(_) => FieldSpec::rationals(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Mod { value, .. } => *value == 0,
            Repr::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Mod { value, .. } => *value == 1,
            Repr::Rat(r) => r.is_one(),
        }
    }

    /// Residue for prime fields.
    pub fn residue(&self) -> Option<u32> {
        match &self.0 {
            Repr::Mod { value, .. } => Some(*value),
            Repr::Rat(_) => None,
        }
    }

    /// Numerator and (positive) denominator. Prime-field elements report `(residue, 1)`.
    pub fn to_ratio(&self) -> (BigInt, BigInt) {
        match &self.0 {
            Repr::Mod { value, .. } => (BigInt::from(*value), BigInt::one()),
            Repr::Rat(r) => (r.numer().clone(), r.denom().clone()),
        }
    }

    pub fn arith(&self, other: &Scalar, op: ArithOp) -> Result<Scalar> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(match op {
            ArithOp::Add => self + other,
            ArithOp::Sub => self - other,
            ArithOp::Mul => self * other,
            ArithOp::Div => return self.checked_div(other),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inverse()?)
    }

    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Mod { value, p } => Scalar(Repr::Mod {
                value: pow_mod(*value as u64, *p as u64 - 2, *p as u64) as u32,
                p: *p,
            }),
            Repr::Rat(r) => Scalar(Repr::Rat(r.recip())),
        })
    }

    fn zip(&self, other: &Scalar, modular: impl Fn(u64, u64, u64) -> u64, rat: impl Fn(&BigRational, &BigRational) -> BigRational) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Mod { value: a, p }, Repr::Mod { value: b, p: q }) if p == q => Scalar(Repr::Mod {
                value: modular(*a as u64, *b as u64, *p as u64) as u32,
                p: *p,
            }),
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(rat(a, b))),
            _ => panic!("scalar arithmetic across different fields"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Mod { value, .. } => write!(f, "{value}"),
            Repr::Rat(r) => write!(f, "{r}"),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (&self.0, &other.0) {
            (Repr::Mod { value: a, p }, Repr::Mod { value: b, p: q }) if p == q => Some(a.cmp(b)),
            (Repr::Rat(a), Repr::Rat(b)) => Some(a.cmp(b)),
            _ => None,
        }
    }
}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.zip(rhs, |a, b, p| (a + b) % p, |a, b| a + b)
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.zip(rhs, |a, b, p| (a + p - b) % p, |a, b| a - b)
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.zip(rhs, |a, b, p| a * b % p, |a, b| a * b)
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Mod { value, p } => Scalar(Repr::Mod { value: (p - value) % p, p: *p }),
            Repr::Rat(r) => Scalar(Repr::Rat(-r)),
        }
    }
}

impl std::ops::Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl std::ops::Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl std::ops::Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn primality_matches_trial_division() {
        let trial = |n: u64| n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
        for n in 0..5000 {
            assert_eq!(is_prime(n), trial(n), "n = {n}");
        }
        assert!(is_prime(2_147_483_647));
        assert!(!is_prime(2_147_483_649));
        // strong pseudoprime to bases 2 and 3
        assert!(!is_prime(1_373_653));
        assert!(!is_prime(25_326_001));
        assert!(FieldSpec::prime(1 << 31).is_err());
        assert!(FieldSpec::prime(4).is_err());
    }

    #[test]
    fn small_examples() {
        let f5 = fp(5);
        assert_eq!(f5.from_i64(3) * f5.from_i64(4), f5.from_i64(2));

        let f7 = fp(7);
        let q = f7.from_i64(3).checked_div(&f7.from_i64(5)).unwrap();
        let brute: Vec<u32> = (0..7).filter(|x| (5 * x) % 7 == 3).collect();
        assert_eq!(brute, vec![2]);
        assert_eq!(q.residue(), Some(2));

        let rq = FieldSpec::rationals();
        let half = rq.from_ratio(&1.into(), &2.into()).unwrap();
        let third = rq.from_ratio(&1.into(), &3.into()).unwrap();
        assert_eq!(&half + &third, rq.from_ratio(&5.into(), &6.into()).unwrap());
    }

    #[test]
    fn errors() {
        let f3 = fp(3);
        assert_eq!(f3.one().arith(&f3.zero(), ArithOp::Div), Err(Error::DivisionByZero));
        assert_eq!(
            f3.one().arith(&fp(5).one(), ArithOp::Add),
            Err(Error::FieldMismatch)
        );
        assert_eq!(
            FieldSpec::rationals().from_ratio(&1.into(), &0.into()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn canonical_forms() {
        let q = FieldSpec::rationals();
        let x = q.from_ratio(&BigInt::from(4), &BigInt::from(-6)).unwrap();
        assert_eq!(x.to_ratio(), (BigInt::from(-2), BigInt::from(3)));
        assert_eq!(fp(7).from_i64(-1).residue(), Some(6));
        assert_eq!(fp(7).from_ratio(&1.into(), &3.into()).unwrap().residue(), Some(5));
    }

    #[test]
    fn field_axioms_exhaustive_small_primes() {
        for p in [2, 3, 5, 7] {
            let f = fp(p);
            let els: Vec<_> = f.elements().unwrap().collect();
            for a in &els {
                if !a.is_zero() {
                    assert!((a * &a.inverse().unwrap()).is_one());
                }
                for b in &els {
                    assert_eq!(a + b, b + a);
                    assert_eq!(a * b, b * a);
                    assert_eq!(&(a - b) + b, a.clone());
                    for c in &els {
                        assert_eq!(&(a + b) + c, a + &(b + c));
                        assert_eq!(&(a * b) * c, a * &(b * c));
                        assert_eq!(a * &(b + c), &(a * b) + &(a * c));
                    }
                }
            }
        }
    }
}
