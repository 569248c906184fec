use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The ground field of a computation: a prime field F_p or the rationals.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Prime { p: u64 },
    Rationals,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime { p })
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            FieldSpec::Prime { p } if !is_prime(*p) => {
                Err(Error::Invalid(format!("{p} is not prime")))
            }
            _ => Ok(()),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Prime { p } => *p,
            FieldSpec::Rationals => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Prime { p } => Scalar::Fp { p: *p, val: 0 },
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Prime { p } => Scalar::Fp { p: *p, val: 1 },
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Prime { p } => {
                let p = *p;
                let r = n.rem_euclid(p as i64) as u64;
                Scalar::Fp { p, val: r }
            }
            FieldSpec::Rationals => Scalar::Rat(BigRational::from(BigInt::from(n))),
        }
    }
}

/// A canonical element of the ground field: a residue in [0, p) or a reduced
/// fraction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Scalar {
    Fp { p: u64, val: u64 },
    Rat(BigRational),
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Modular inverse by the extended Euclidean algorithm.
fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a == 0 {
        return None;
    }
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(p as i128) as u64)
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Fp { p, .. } => FieldSpec::Prime { p: *p },
            Scalar::Rat(_) => FieldSpec::Rationals,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fp { val, .. } => *val == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Fp { val, .. } => *val == 1,
            Scalar::Rat(r) => r.is_one(),
        }
    }

    fn assert_same_field(&self, other: &Scalar) {
        debug_assert_eq!(
            self.field(),
            other.field(),
            "scalar arithmetic across distinct fields"
        );
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.assert_same_field(other);
        match (self, other) {
            (Scalar::Fp { p, val: a }, Scalar::Fp { val: b, .. }) => Scalar::Fp {
                p: *p,
                val: (a + b) % p,
            },
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Fp { p, val } => Scalar::Fp {
                p: *p,
                val: if *val == 0 { 0 } else { p - val },
            },
            Scalar::Rat(r) => Scalar::Rat(-r),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.assert_same_field(other);
        match (self, other) {
            (Scalar::Fp { p, val: a }, Scalar::Fp { val: b, .. }) => Scalar::Fp {
                p: *p,
                val: mul_mod(*a, *b, *p),
            },
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            _ => unreachable!(),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Fp { p, val } => inv_mod(*val, *p).map(|v| Scalar::Fp { p: *p, val: v }),
            Scalar::Rat(r) => {
                if r.is_zero() {
                    None
                } else {
                    Some(Scalar::Rat(r.recip()))
                }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Option<Scalar> {
        other.inv().map(|i| self.mul(&i))
    }

    pub fn pow(&self, mut n: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    /// Parse from the JSON surface form: integers for either field, or a
    /// "num/den" string over the rationals.
    pub fn from_json(field: &FieldSpec, v: &serde_json::Value) -> Result<Scalar> {
        match v {
            serde_json::Value::Number(n) => {
                let i = n
                    .as_i64()
                    .ok_or_else(|| Error::Parse(format!("scalar out of range: {n}")))?;
                Ok(field.from_i64(i))
            }
            serde_json::Value::String(s) => Scalar::parse(field, s),
            other => Err(Error::Parse(format!("expected scalar, got {other}"))),
        }
    }

    pub fn parse(field: &FieldSpec, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let n: i64 = num
            .parse()
            .map_err(|_| Error::Parse(format!("bad scalar {s:?}")))?;
        match den {
            None => Ok(field.from_i64(n)),
            Some(d) => {
                let d: i64 = d
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad scalar {s:?}")))?;
                if d == 0 {
                    return Err(Error::Parse("zero denominator".into()));
                }
                field
                    .from_i64(n)
                    .div(&field.from_i64(d))
                    .ok_or_else(|| Error::Parse(format!("denominator of {s:?} vanishes in field")))
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Scalar::Fp { val, .. } => serde_json::json!(val),
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    match i64::try_from(r.numer()) {
                        Ok(n) => serde_json::json!(n),
                        Err(_) => serde_json::json!(format!("{r}")),
                    }
                } else {
                    serde_json::json!(format!("{}/{}", r.numer(), r.denom()))
                }
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp { val, .. } => write!(f, "{val}"),
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

/// Ring-element interface shared by scalars, polynomials, and big integers;
/// enough for fraction-free elimination.
pub trait RingElem: Clone + PartialEq + std::fmt::Debug {
    fn ring_zero(&self) -> Self;
    fn ring_one(&self) -> Self;
    fn is_ring_zero(&self) -> bool;
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_sub(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    /// Exact quotient, `None` when the division does not come out exactly.
    fn ring_exact_div(&self, other: &Self) -> Option<Self>;
}

impl RingElem for Scalar {
    fn ring_zero(&self) -> Self {
        self.field().zero()
    }
    fn ring_one(&self) -> Self {
        self.field().one()
    }
    fn is_ring_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn ring_neg(&self) -> Self {
        self.neg()
    }
    fn ring_exact_div(&self, other: &Self) -> Option<Self> {
        self.div(other)
    }
}

impl RingElem for BigInt {
    fn ring_zero(&self) -> Self {
        BigInt::zero()
    }
    fn ring_one(&self) -> Self {
        BigInt::one()
    }
    fn is_ring_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn ring_exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let (q, r) = num::Integer::div_rem(self, other);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_canonical_residues() {
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(f.from_i64(-1), Scalar::Fp { p: 5, val: 4 });
        assert_eq!(f.from_i64(7), Scalar::Fp { p: 5, val: 2 });
        assert!(FieldSpec::prime(6).is_err());
        assert!(FieldSpec::prime(1).is_err());
    }

    #[test]
    fn inverses() {
        let f = FieldSpec::prime(7).unwrap();
        for v in 1..7 {
            let s = f.from_i64(v);
            assert!(s.mul(&s.inv().unwrap()).is_one());
        }
        assert!(f.zero().inv().is_none());
        let q = FieldSpec::Rationals;
        let half = q.from_i64(1).div(&q.from_i64(2)).unwrap();
        assert_eq!(half.add(&half), q.one());
    }

    #[test]
    fn scalar_json_round_trip() {
        let q = FieldSpec::Rationals;
        let half = q.from_i64(-1).div(&q.from_i64(2)).unwrap();
        let j = half.to_json();
        assert_eq!(j, serde_json::json!("-1/2"));
        assert_eq!(Scalar::from_json(&q, &j).unwrap(), half);
    }
}
