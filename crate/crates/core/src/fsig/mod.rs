//! Splitting numbers a_e and F-signature estimation for affine semigroup
//! rings, plus the numerical verifiers for the transformation rule and the
//! class-group torsion bound.
//!
//! F^e_* R decomposes by residue classes u in Z^d / p^e Z^d; the class is a
//! free summand exactly when its point set is a single translate of the
//! p^e-scaled semigroup. a_e counts the free classes; a_e / p^{ed} tends to
//! the F-signature.

use crate::error::{Error, Result};
use crate::exact::scalar::FieldSpec;
use crate::par;
use crate::toric::{AffineSemigroup, ToricDivisor};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed};
use std::collections::BTreeMap;

/// One residue class of the Frobenius pushforward.
#[derive(Clone, Debug)]
pub struct FrobeniusClass {
    pub residue: Vec<i64>,
    /// Truncated points of the class, lexicographic.
    pub points: Vec<Vec<i64>>,
    /// Minimal module generators over the p^e-scaled semigroup.
    pub min_generators: Vec<Vec<i64>>,
    pub free: bool,
}

#[derive(Clone, Debug)]
pub enum ClassWitness {
    Free { witness: Vec<i64> },
    Generators { generators: Vec<Vec<i64>> },
}

#[derive(Clone, Debug)]
pub struct SplittingReport {
    pub p: u64,
    pub e: u32,
    pub d: usize,
    pub a_e: u64,
    pub total: u128,
    pub ratio: BigRational,
    pub per_class_witness: Option<BTreeMap<String, ClassWitness>>,
}

#[derive(Clone, Debug)]
pub struct FsigEstimate {
    pub reports: Vec<SplittingReport>,
    pub estimate: BigRational,
    /// |ratio(e_max) − ratio(e_max−1)|: the honest error bar.
    pub uncertainty: BigRational,
    pub monotone_nonincreasing: bool,
}

#[derive(Clone, Debug)]
pub struct RuleVerdict {
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub lhs_uncertainty: BigRational,
    pub rhs_uncertainty: BigRational,
    /// Forced to 1 in the graded toric model.
    pub residue_degree: u32,
    pub tolerance: BigRational,
    pub verdict: bool,
}

#[derive(Clone, Debug)]
pub struct TorsionReport {
    pub torsion_orders: Vec<i64>,
    pub estimate: BigRational,
    pub uncertainty: BigRational,
    /// 1/(estimate − uncertainty); None when the interval reaches 0.
    pub threshold: Option<BigRational>,
    pub bound_holds: bool,
}

fn pow_i64(p: u64, e: u32) -> Result<i64> {
    let q = (p as i64).checked_pow(e);
    q.filter(|&q| q <= 1_000_000)
        .ok_or_else(|| Error::Invalid(format!("p^e = {p}^{e} out of range")))
}

fn max_gen_coord(s: &AffineSemigroup) -> i64 {
    s.generators
        .iter()
        .flatten()
        .map(|x| x.abs())
        .max()
        .unwrap_or(1)
        .max(1)
}

/// Minimum admissible truncation for the class decomposition at scale q.
pub fn min_box(s: &AffineSemigroup, p: u64, e: u32) -> Result<i64> {
    Ok(pow_i64(p, e)? * max_gen_coord(s))
}

/// Free-summand test for one class: exactly one minimal generator w and
/// every truncated class point lies in w + q·S. Membership tests are exact
/// (pure ray inequalities), so truncation only limits which points are seen.
pub fn is_free_summand(
    class_points: &[Vec<i64>],
    s: &AffineSemigroup,
    q: i64,
) -> (bool, Vec<Vec<i64>>) {
    let min_gens: Vec<Vec<i64>> = class_points
        .iter()
        .filter(|m| {
            !s.generators.iter().any(|h| {
                let shifted: Vec<i64> = m.iter().zip(h).map(|(a, b)| a - q * b).collect();
                s.membership(&shifted)
            })
        })
        .cloned()
        .collect();
    if min_gens.len() != 1 {
        return (false, min_gens);
    }
    let w = &min_gens[0];
    let free = class_points.iter().all(|m| {
        let scaled: Vec<i64> = m.iter().zip(w).map(|(a, b)| (a - b) / q).collect();
        s.membership(&scaled)
    });
    (free, min_gens)
}

/// Decompose F^e_* R by residue classes within the truncation box.
/// Residue classes are independent; the per-class freeness test runs as a
/// pure parallel map with a deterministic, schedule-independent result.
pub fn frobenius_summands(
    s: &AffineSemigroup,
    p: u64,
    e: u32,
    bound: i64,
    threads: Option<usize>,
) -> Result<Vec<FrobeniusClass>> {
    FieldSpec::prime(p)?;
    if e == 0 {
        return Err(Error::Invalid("e must be at least 1".into()));
    }
    s.validate()?;
    let q = pow_i64(p, e)?;
    let needed = min_box(s, p, e)?;
    if bound < needed {
        return Err(Error::Truncation(format!(
            "box {bound} below the required {needed} = p^e * max generator coordinate"
        )));
    }
    let d = s.rank;
    let n_classes = (q as u128).checked_pow(d as u32).ok_or_else(|| {
        Error::Invalid("too many residue classes".into())
    })?;
    if n_classes > 20_000_000 {
        return Err(Error::Invalid(format!(
            "{n_classes} residue classes exceed the supported range"
        )));
    }
    let n_classes = n_classes as usize;
    par::with_pool(threads, || frobenius_summands_inner(s, q, d, n_classes, bound))
}

fn frobenius_summands_inner(
    s: &AffineSemigroup,
    q: i64,
    d: usize,
    n_classes: usize,
    bound: i64,
) -> Result<Vec<FrobeniusClass>> {
    // Bucket the truncated points by residue.
    let pts = s.enumerate_points(bound);
    let mut buckets: Vec<Vec<Vec<i64>>> = vec![Vec::new(); n_classes];
    let class_index = |m: &[i64]| -> usize {
        let mut idx = 0usize;
        for &c in m {
            idx = idx * q as usize + c.rem_euclid(q) as usize;
        }
        idx
    };
    for m in pts {
        buckets[class_index(&m)].push(m);
    }
    let residue_of_index = |mut idx: usize| -> Vec<i64> {
        let mut r = vec![0i64; d];
        for pos in (0..d).rev() {
            r[pos] = (idx % q as usize) as i64;
            idx /= q as usize;
        }
        r
    };
    let interior = s.interior_point()?;

    let classes: Vec<Result<FrobeniusClass>> = par::map_indexed(n_classes, |idx| {
        let residue = residue_of_index(idx);
        let points = &buckets[idx];
        if points.is_empty() {
            // A full-dimensional saturated cone meets every residue class;
            // find where the smallest witness lives and report accordingly.
            let mut k = 0i64;
            for v in &s.rays {
                let pu: i64 = residue.iter().zip(v).map(|(a, b)| a * b).sum();
                let pz: i64 = interior.iter().zip(v).map(|(a, b)| a * b).sum();
                if pu < 0 {
                    let need = (-pu + q * pz - 1) / (q * pz);
                    k = k.max(need);
                }
            }
            let witness: Vec<i64> = residue
                .iter()
                .zip(&interior)
                .map(|(u, z)| u + q * k * z)
                .collect();
            debug_assert!(s.membership(&witness));
            let inside = witness.iter().all(|x| x.abs() <= bound);
            if inside {
                return Err(Error::Validation(format!(
                    "class {residue:?} enumeration missed witness {witness:?}"
                )));
            }
            return Err(Error::Truncation(format!(
                "class {residue:?} has no points within box {bound}; smallest witness {witness:?}"
            )));
        }
        let (free, min_generators) = is_free_summand(points, s, q);
        Ok(FrobeniusClass {
            residue,
            points: points.clone(),
            min_generators,
            free,
        })
    });
    classes.into_iter().collect()
}

/// a_e and the normalized ratio a_e / p^{ed}.
pub fn splitting_number(
    s: &AffineSemigroup,
    p: u64,
    e: u32,
    bound: i64,
    threads: Option<usize>,
    with_witnesses: bool,
) -> Result<SplittingReport> {
    let classes = frobenius_summands(s, p, e, bound, threads)?;
    let d = s.rank;
    let a_e = classes.iter().filter(|c| c.free).count() as u64;
    let total = (pow_i64(p, e)? as u128).pow(d as u32);
    let ratio = BigRational::new(BigInt::from(a_e), BigInt::from(total));
    let per_class_witness = with_witnesses.then(|| {
        classes
            .iter()
            .map(|c| {
                let key = c
                    .residue
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                let w = if c.free {
                    ClassWitness::Free {
                        witness: c.min_generators[0].clone(),
                    }
                } else {
                    ClassWitness::Generators {
                        generators: c.min_generators.clone(),
                    }
                };
                (key, w)
            })
            .collect()
    });
    Ok(SplittingReport {
        p,
        e,
        d,
        a_e,
        total,
        ratio,
        per_class_witness,
    })
}

/// Splitting reports for e = 1..e_max with the naive extrapolation
/// estimate = ratio(e_max) and its neighbor-difference uncertainty.
pub fn fsig_estimate(
    s: &AffineSemigroup,
    p: u64,
    e_max: u32,
    bound: i64,
    threads: Option<usize>,
) -> Result<FsigEstimate> {
    if e_max < 2 {
        return Err(Error::Invalid("e_max must be at least 2".into()));
    }
    let mut reports = Vec::with_capacity(e_max as usize);
    for e in 1..=e_max {
        reports.push(splitting_number(s, p, e, bound, threads, false)?);
    }
    let estimate = reports[e_max as usize - 1].ratio.clone();
    let prev = reports[e_max as usize - 2].ratio.clone();
    let diff = &estimate - &prev;
    let uncertainty = if diff.is_negative() { -diff } else { diff };
    let monotone_nonincreasing = reports
        .windows(2)
        .all(|w| w[1].ratio <= w[0].ratio);
    Ok(FsigEstimate {
        reports,
        estimate,
        uncertainty,
        monotone_nonincreasing,
    })
}

/// Compare s(C) against n·s(R) for the degree-n Veronese-type cyclic cover
/// C of R along D; the residue degree is 1 in this graded model.
#[allow(clippy::too_many_arguments)]
pub fn verify_transformation_rule(
    s: &AffineSemigroup,
    divisor: &ToricDivisor,
    n: i64,
    p: u64,
    e_max: u32,
    bound: Option<i64>,
    threads: Option<usize>,
    tolerance: BigRational,
) -> Result<(RuleVerdict, FsigEstimate, FsigEstimate)> {
    let (idx, _) = s.divisor_index(divisor, n)?;
    if idx != n {
        return Err(Error::Invalid(format!(
            "divisor has index {idx}, not the requested {n}"
        )));
    }
    let base_box = match bound {
        Some(b) => b,
        None => min_box(s, p, e_max)? + pow_i64(p, e_max)?,
    };
    let cover_spec = s.cyclic_cover(divisor, n, base_box)?;
    let cover_box = match bound {
        Some(b) => b.max(min_box(&cover_spec.cover, p, e_max)?),
        None => min_box(&cover_spec.cover, p, e_max)? + pow_i64(p, e_max)?,
    };
    let est_r = fsig_estimate(s, p, e_max, base_box.max(min_box(s, p, e_max)?), threads)?;
    let est_c = fsig_estimate(&cover_spec.cover, p, e_max, cover_box, threads)?;
    let lhs = est_c.estimate.clone();
    let rhs = BigRational::from(BigInt::from(n)) * est_r.estimate.clone();
    let gap = &lhs - &rhs;
    let gap = if gap.is_negative() { -gap } else { gap };
    let verdict = gap <= tolerance;
    Ok((
        RuleVerdict {
            lhs,
            rhs,
            lhs_uncertainty: est_c.uncertainty.clone(),
            rhs_uncertainty: BigRational::from(BigInt::from(n)) * est_r.uncertainty.clone(),
            residue_degree: 1,
            tolerance,
            verdict,
        },
        est_r,
        est_c,
    ))
}

/// Torsion of the class group against 1/s(R): every torsion order must stay
/// below the reciprocal of the pessimistic end of the estimate interval.
pub fn torsion_bound_check(
    s: &AffineSemigroup,
    p: u64,
    e_max: u32,
    bound: Option<i64>,
    threads: Option<usize>,
) -> Result<(TorsionReport, FsigEstimate)> {
    let cg = s.class_group();
    let box_ = match bound {
        Some(b) => b,
        None => min_box(s, p, e_max)? + pow_i64(p, e_max)?,
    };
    let est = fsig_estimate(s, p, e_max, box_, threads)?;
    let low = &est.estimate - &est.uncertainty;
    let threshold = if low.is_positive() {
        Some(low.recip())
    } else {
        None
    };
    let bound_holds = match &threshold {
        Some(t) => cg
            .torsion_orders
            .iter()
            .all(|&o| BigRational::from(BigInt::from(o)) <= *t),
        None => true,
    };
    Ok((
        TorsionReport {
            torsion_orders: cg.torsion_orders,
            estimate: est.estimate.clone(),
            uncertainty: est.uncertainty.clone(),
            threshold,
            bound_holds,
        },
        est,
    ))
}

/// Render an exact ratio as "num/den" (or "num" for integers).
pub fn ratio_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Ratio as f64 for human-facing summaries only.
pub fn ratio_f64(r: &BigRational) -> f64 {
    let n = r.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
    let d = r.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
    n / d
}
