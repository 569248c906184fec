//! Multivariate polynomial arithmetic over the ground field; the base ring R
//! of coacted algebras and the coefficient ring of trace matrices.

mod parse;

use crate::error::{Error, Result};
use crate::exact::scalar::{FieldSpec, RingElem, Scalar};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

pub const DEFAULT_DEGREE_CAP: u32 = 512;

/// A polynomial ring F[x_1, ..., x_k] with a hard cap on total degree.
/// Exceeding the cap is an explicit error, never silent truncation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolyRingSpec {
    pub field: FieldSpec,
    pub variables: Vec<String>,
    #[serde(default = "default_cap")]
    pub degree_cap: u32,
}

fn default_cap() -> u32 {
    DEFAULT_DEGREE_CAP
}

impl PartialEq for PolyRingSpec {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.variables == other.variables
    }
}
impl Eq for PolyRingSpec {}

impl PolyRingSpec {
    pub fn new(field: FieldSpec, variables: &[&str]) -> Result<Self> {
        let variables: Vec<String> = variables.iter().map(|s| s.to_string()).collect();
        let spec = PolyRingSpec {
            field,
            variables,
            degree_cap: DEFAULT_DEGREE_CAP,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        self.field.validate()?;
        for (i, v) in self.variables.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::Invalid("empty variable name".into()));
            }
            if self.variables[..i].contains(v) {
                return Err(Error::Invalid(format!("duplicate variable {v:?}")));
            }
        }
        Ok(())
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }
}

/// Sparse polynomial in canonical form: sorted exponent vectors, no stored
/// zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    ring: PolyRingSpec,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl Poly {
    pub fn zero(ring: &PolyRingSpec) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &PolyRingSpec, c: Scalar) -> Poly {
        let mut p = Poly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(vec![0; ring.num_vars()], c);
        }
        p
    }

    pub fn one(ring: &PolyRingSpec) -> Poly {
        Poly::constant(ring, ring.field.one())
    }

    pub fn from_i64(ring: &PolyRingSpec, n: i64) -> Poly {
        Poly::constant(ring, ring.field.from_i64(n))
    }

    pub fn var(ring: &PolyRingSpec, index: usize) -> Result<Poly> {
        if index >= ring.num_vars() {
            return Err(Error::Invalid(format!("no variable with index {index}")));
        }
        let mut exp = vec![0u32; ring.num_vars()];
        exp[index] = 1;
        let mut p = Poly::zero(ring);
        p.terms.insert(exp, ring.field.one());
        Ok(p)
    }

    pub fn monomial(ring: &PolyRingSpec, exp: Vec<u32>, c: Scalar) -> Result<Poly> {
        if exp.len() != ring.num_vars() {
            return Err(Error::Dimension(
                "exponent vector length differs from variable count".into(),
            ));
        }
        let degree: u32 = exp.iter().sum();
        if degree > ring.degree_cap {
            return Err(Error::DegreeCap {
                cap: ring.degree_cap,
                degree,
            });
        }
        let mut p = Poly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        Ok(p)
    }

    pub fn parse(ring: &PolyRingSpec, text: &str) -> Result<Poly> {
        parse::parse_poly(ring, text)
    }

    pub fn ring(&self) -> &PolyRingSpec {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> Scalar {
        let key = vec![0u32; self.ring.num_vars()];
        self.terms
            .get(&key)
            .cloned()
            .unwrap_or_else(|| self.ring.field.zero())
    }

    /// A nonzero constant polynomial; exactly the units of F[x_1..x_k].
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && {
            let (e, _) = self.terms.iter().next().unwrap();
            e.iter().all(|&x| x == 0)
        }
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || self.is_unit()
    }

    fn check_same_ring(&self, other: &Poly) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(
                "polynomials from different rings".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_same_ring(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            match terms.get_mut(e) {
                Some(cur) => {
                    *cur = cur.add(c);
                    if cur.is_zero() {
                        terms.remove(e);
                    }
                }
                None => {
                    terms.insert(e.clone(), c.clone());
                }
            }
        }
        Ok(Poly {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v.mul(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_same_ring(other)?;
        let cap = self.ring.degree_cap;
        let mut terms: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let degree: u32 = e.iter().sum();
                if degree > cap {
                    return Err(Error::DegreeCap { cap, degree });
                }
                let c = c1.mul(c2);
                match terms.get_mut(&e) {
                    Some(cur) => {
                        *cur = cur.add(&c);
                        if cur.is_zero() {
                            terms.remove(&e);
                        }
                    }
                    None => {
                        if !c.is_zero() {
                            terms.insert(e, c);
                        }
                    }
                }
            }
        }
        Ok(Poly {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn pow(&self, n: u32) -> Result<Poly> {
        let mut acc = Poly::one(&self.ring);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.ring.num_vars() {
            return Err(Error::Dimension(format!(
                "point has {} coordinates, ring has {} variables",
                point.len(),
                self.ring.num_vars()
            )));
        }
        for s in point {
            if s.field() != self.ring.field {
                return Err(Error::FieldMismatch(
                    "evaluation point lies in a different field".into(),
                ));
            }
        }
        let mut acc = self.ring.field.zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &ei) in point.iter().zip(e.iter()) {
                if ei > 0 {
                    t = t.mul(&xi.pow(ei as u64));
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Leading term in lex order (largest exponent vector).
    fn leading(&self) -> Option<(&Vec<u32>, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        if self.ring != d.ring || d.is_zero() {
            return None;
        }
        let mut rem = self.clone();
        let mut quot = Poly::zero(&self.ring);
        let (dl_exp, dl_coef) = {
            let (e, c) = d.leading()?;
            (e.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (re, rc) = rem.leading().map(|(e, c)| (e.clone(), c.clone()))?;
            let mut qe = Vec::with_capacity(re.len());
            for (a, b) in re.iter().zip(dl_exp.iter()) {
                if a < b {
                    return None;
                }
                qe.push(a - b);
            }
            let qc = rc.div(&dl_coef)?;
            let qterm = Poly::monomial(&self.ring, qe, qc).ok()?;
            quot = quot.add(&qterm).ok()?;
            rem = rem.sub(&qterm.mul(d).ok()?).ok()?;
        }
        Some(quot)
    }
}

impl RingElem for Poly {
    fn ring_zero(&self) -> Self {
        Poly::zero(&self.ring)
    }
    fn ring_one(&self) -> Self {
        Poly::one(&self.ring)
    }
    fn is_ring_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_add(&self, other: &Self) -> Self {
        self.add(other).expect("ring mismatch in matrix arithmetic")
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self.sub(other).expect("ring mismatch in matrix arithmetic")
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.mul(other).expect("ring mismatch in matrix arithmetic")
    }
    fn ring_neg(&self) -> Self {
        self.neg()
    }
    fn ring_exact_div(&self, other: &Self) -> Option<Self> {
        self.exact_div(other)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // Descending lex so higher-degree terms print first.
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let has_vars = e.iter().any(|&x| x > 0);
            if !has_vars {
                write!(f, "{c}")?;
                continue;
            }
            let mut lead = true;
            if !c.is_one() {
                write!(f, "{c}")?;
                lead = false;
            }
            for (i, &ei) in e.iter().enumerate() {
                if ei == 0 {
                    continue;
                }
                if !lead {
                    write!(f, "*")?;
                }
                lead = false;
                write!(f, "{}", self.ring.variables[i])?;
                if ei > 1 {
                    write!(f, "^{ei}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u64, vars: &[&str]) -> PolyRingSpec {
        PolyRingSpec::new(FieldSpec::prime(p).unwrap(), vars).unwrap()
    }

    #[test]
    fn freshman_dream_over_f2() {
        let r = ring(2, &["x", "y"]);
        let x = Poly::var(&r, 0).unwrap();
        let y = Poly::var(&r, 1).unwrap();
        let s = x.add(&y).unwrap().pow(2).unwrap();
        let expect = x.pow(2).unwrap().add(&y.pow(2).unwrap()).unwrap();
        assert_eq!(s, expect);
    }

    #[test]
    fn multiply_by_zero() {
        let r = ring(5, &["x"]);
        let x = Poly::var(&r, 0).unwrap();
        let z = Poly::zero(&r);
        assert!(x.mul(&z).unwrap().is_zero());
    }

    #[test]
    fn power_arithmetic_in_char_3() {
        let r = ring(3, &["t"]);
        let t = Poly::var(&r, 0).unwrap();
        let t2 = t.pow(2).unwrap();
        assert_eq!(t.mul(&t2).unwrap(), t.pow(3).unwrap());
    }

    #[test]
    fn eval_examples() {
        let r = ring(5, &["x"]);
        let p = Poly::parse(&r, "x^2 + 1").unwrap();
        assert!(p.eval(&[r.field.from_i64(2)]).unwrap().is_zero());

        let c = Poly::from_i64(&r, 3);
        assert_eq!(c.eval(&[r.field.from_i64(4)]).unwrap(), r.field.from_i64(3));

        let r7 = ring(7, &["x", "y", "z"]);
        let q = Poly::parse(&r7, "x*y - z^2").unwrap();
        let pt: Vec<Scalar> = [1, 4, 2].iter().map(|&v| r7.field.from_i64(v)).collect();
        assert!(q.eval(&pt).unwrap().is_zero());
    }

    #[test]
    fn eval_rejects_wrong_arity() {
        let r = ring(5, &["x", "y"]);
        let p = Poly::parse(&r, "x + y").unwrap();
        assert!(matches!(
            p.eval(&[r.field.one()]),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn unit_detection() {
        let r = ring(7, &["x"]);
        assert!(Poly::from_i64(&r, 5).is_unit());
        assert!(!Poly::var(&r, 0).unwrap().is_unit());
        assert!(!Poly::zero(&r).is_unit());
    }

    #[test]
    fn degree_cap_is_enforced() {
        let mut r = ring(3, &["x"]);
        r.degree_cap = 4;
        let x = Poly::var(&r, 0).unwrap();
        assert!(x.pow(4).is_ok());
        assert!(matches!(x.pow(5), Err(Error::DegreeCap { .. })));
    }

    #[test]
    fn exact_division() {
        let r = ring(5, &["x", "y"]);
        let a = Poly::parse(&r, "x^2*y + x*y^2").unwrap();
        let d = Poly::parse(&r, "x*y").unwrap();
        let q = a.exact_div(&d).unwrap();
        assert_eq!(q, Poly::parse(&r, "x + y").unwrap());
        let bad = Poly::parse(&r, "x + 1").unwrap();
        assert!(a.exact_div(&bad).is_none());
    }

    #[test]
    fn display_canonical() {
        let r = ring(7, &["x", "y"]);
        let p = Poly::parse(&r, "1 + 3*x^2*y + y").unwrap();
        assert_eq!(p.to_string(), "3*x^2*y + y + 1");
        assert_eq!(Poly::parse(&r, p.to_string().as_str()).unwrap(), p);
    }
}
