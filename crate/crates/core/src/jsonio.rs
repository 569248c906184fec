//! JSON schemas for the domain types. Coordinates are row-major scalar
//! lists; prime-field scalars print as integers, rationals as "num/den"
//! strings; polynomials travel as text in the `3*x^2*y + 1` syntax.

use crate::error::{Error, Result};
use crate::exact::scalar::{FieldSpec, Scalar};
use crate::fsig::{ClassWitness, FsigEstimate, RuleVerdict, SplittingReport, TorsionReport};
use crate::gaction::{CoactedAlgebra, CoactionKind, SElem, TraceReport};
use crate::hopf::HopfAlgebra;
use crate::poly::{Poly, PolyRingSpec};
use crate::toric::{AffineSemigroup, CyclicCoverSpec};
use serde_json::{json, Map, Value};

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key)
        .ok_or_else(|| Error::Parse(format!("missing field {key:?}")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("{what} must be an array")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::Parse(format!("{what} must be a non-negative integer")))
}

fn as_i64(v: &Value, what: &str) -> Result<i64> {
    v.as_i64()
        .ok_or_else(|| Error::Parse(format!("{what} must be an integer")))
}

pub fn field_from_json(v: &Value) -> Result<FieldSpec> {
    let f: FieldSpec = serde_json::from_value(v.clone())
        .map_err(|e| Error::Parse(format!("bad field spec: {e}")))?;
    f.validate()?;
    Ok(f)
}

fn scalar_vec(field: &FieldSpec, v: &Value, what: &str) -> Result<Vec<Scalar>> {
    as_array(v, what)?
        .iter()
        .map(|x| Scalar::from_json(field, x))
        .collect()
}

fn scalar_vec_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|s| s.to_json()).collect())
}

// ---- Hopf algebras ---------------------------------------------------------

pub fn hopf_from_json(v: &Value) -> Result<HopfAlgebra> {
    let field = field_from_json(get(v, "field")?)?;
    let dim = as_usize(get(v, "dim")?, "dim")?;
    let basis: Vec<String> = as_array(get(v, "basis")?, "basis")?
        .iter()
        .map(|x| {
            x.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::Parse("basis labels must be strings".into()))
        })
        .collect::<Result<_>>()?;
    if basis.len() != dim {
        return Err(Error::Dimension(format!(
            "dim = {dim} but {} basis labels",
            basis.len()
        )));
    }
    let unit = scalar_vec(&field, get(v, "unit")?, "unit")?;
    let counit = scalar_vec(&field, get(v, "counit")?, "counit")?;
    let product: Vec<Vec<Vec<Scalar>>> = as_array(get(v, "product")?, "product")?
        .iter()
        .map(|row| {
            as_array(row, "product row")?
                .iter()
                .map(|cell| scalar_vec(&field, cell, "product cell"))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let coproduct: Vec<Vec<Vec<Scalar>>> = as_array(get(v, "coproduct")?, "coproduct")?
        .iter()
        .map(|grid| {
            as_array(grid, "coproduct grid")?
                .iter()
                .map(|row| scalar_vec(&field, row, "coproduct row"))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let antipode: Vec<Vec<Scalar>> = as_array(get(v, "antipode")?, "antipode")?
        .iter()
        .map(|row| scalar_vec(&field, row, "antipode row"))
        .collect::<Result<_>>()?;
    HopfAlgebra::from_dense(field, basis, unit, counit, product, coproduct, antipode)
}

pub fn hopf_to_json(h: &HopfAlgebra) -> Value {
    let d = h.dim();
    let field = h.field();
    let dense = |sv: &crate::hopf::SparseVec| -> Vec<Scalar> {
        let mut out = vec![field.zero(); d];
        for (i, c) in sv {
            out[*i] = c.clone();
        }
        out
    };
    let product: Vec<Value> = (0..d)
        .map(|i| {
            Value::Array(
                (0..d)
                    .map(|j| scalar_vec_json(&dense(h.basis_product(i, j))))
                    .collect(),
            )
        })
        .collect();
    let coproduct: Vec<Value> = (0..d)
        .map(|i| {
            let mut grid = vec![vec![field.zero(); d]; d];
            for (j, k, c) in h.coproduct_terms(i) {
                grid[*j][*k] = c.clone();
            }
            Value::Array(grid.iter().map(|row| scalar_vec_json(row)).collect())
        })
        .collect();
    let antipode: Vec<Value> = (0..d)
        .map(|i| scalar_vec_json(&dense(h.antipode_row(i))))
        .collect();
    json!({
        "field": serde_json::to_value(field).expect("field"),
        "dim": d,
        "basis": h.basis_labels(),
        "unit": scalar_vec_json(&h.unit_dense()),
        "product": product,
        "coproduct": coproduct,
        "counit": scalar_vec_json(h.counit_vector()),
        "antipode": antipode,
    })
}

// ---- polynomial rings and coacted algebras ---------------------------------

pub fn ring_from_json(v: &Value) -> Result<PolyRingSpec> {
    let spec: PolyRingSpec = serde_json::from_value(v.clone())
        .map_err(|e| Error::Parse(format!("bad ring spec: {e}")))?;
    spec.validate()?;
    Ok(spec)
}

fn selem_from_json(base: &PolyRingSpec, v: &Value, rank: usize) -> Result<SElem> {
    let arr = as_array(v, "coordinate vector")?;
    if arr.len() != rank {
        return Err(Error::Dimension("coordinate vector length".into()));
    }
    arr.iter()
        .map(|x| match x {
            Value::String(s) => Poly::parse(base, s),
            Value::Number(n) => Ok(Poly::from_i64(
                base,
                n.as_i64()
                    .ok_or_else(|| Error::Parse("coefficient out of range".into()))?,
            )),
            other => Err(Error::Parse(format!("expected polynomial, got {other}"))),
        })
        .collect()
}

fn selem_to_json(e: &SElem) -> Value {
    Value::Array(e.iter().map(|p| json!(p.to_string())).collect())
}

/// Accepts either the builder shorthand
/// `{"base": .., "kind": "cyclic_presentation", "modulus_exponent": n,
///   "modulus_rhs": "x^2*y", "coaction": "kummer"|"additive"}`
/// or the explicit form with `basis`, `mult`, `hopf` (inline or a path
/// resolved by `resolve`), and `coaction` tensors.
pub fn coacted_from_json(
    v: &Value,
    resolve: &dyn Fn(&str) -> Result<Value>,
) -> Result<CoactedAlgebra> {
    let base = ring_from_json(get(v, "base")?)?;
    if v.get("kind").map(|k| k == "cyclic_presentation") == Some(true) {
        let n = as_usize(get(v, "modulus_exponent")?, "modulus_exponent")? as u32;
        let rhs_text = get(v, "modulus_rhs")?
            .as_str()
            .ok_or_else(|| Error::Parse("modulus_rhs must be a string".into()))?;
        let rhs = Poly::parse(&base, rhs_text)?;
        let kind: CoactionKind = serde_json::from_value(get(v, "coaction")?.clone())
            .map_err(|e| Error::Parse(format!("bad coaction kind: {e}")))?;
        return crate::gaction::cyclic_presentation(base, n, rhs, kind);
    }
    let basis: Vec<String> = as_array(get(v, "basis")?, "basis")?
        .iter()
        .map(|x| {
            x.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::Parse("basis labels must be strings".into()))
        })
        .collect::<Result<_>>()?;
    let rank = basis.len();
    let hopf = match get(v, "hopf")? {
        Value::String(path) => hopf_from_json(&resolve(path)?)?,
        inline => hopf_from_json(inline)?,
    };
    let mult: Vec<Vec<SElem>> = as_array(get(v, "mult")?, "mult")?
        .iter()
        .map(|row| {
            as_array(row, "mult row")?
                .iter()
                .map(|cell| selem_from_json(&base, cell, rank))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let coaction: Vec<Vec<SElem>> = as_array(get(v, "coaction")?, "coaction")?
        .iter()
        .map(|row| {
            as_array(row, "coaction row")?
                .iter()
                .map(|cell| selem_from_json(&base, cell, rank))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    CoactedAlgebra::new(base, basis, mult, hopf, coaction)
}

pub fn coacted_to_json(s: &CoactedAlgebra) -> Value {
    let mult: Vec<Value> = s
        .mult_tensor()
        .iter()
        .map(|row| Value::Array(row.iter().map(selem_to_json).collect()))
        .collect();
    let coaction: Vec<Value> = s
        .coaction_matrix()
        .iter()
        .map(|row| Value::Array(row.iter().map(selem_to_json).collect()))
        .collect();
    json!({
        "base": serde_json::to_value(s.base()).expect("ring"),
        "basis": s.basis_labels(),
        "mult": mult,
        "hopf": hopf_to_json(s.hopf()),
        "coaction": coaction,
    })
}

pub fn trace_report_to_json(r: &TraceReport) -> Value {
    let bilinear: Vec<Value> = (0..r.bilinear.rows())
        .map(|i| {
            Value::Array(
                (0..r.bilinear.cols())
                    .map(|j| json!(r.bilinear.at(i, j).to_string()))
                    .collect(),
            )
        })
        .collect();
    json!({
        "trace_values": r.trace_values.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "bilinear": bilinear,
        "disc": r.disc.to_string(),
        "trace_scale_note": r.trace_scale_note,
    })
}

// ---- toric -----------------------------------------------------------------

pub fn semigroup_from_json(v: &Value) -> Result<AffineSemigroup> {
    let rank = as_usize(get(v, "rank")?, "rank")?;
    let vecs = |key: &str| -> Result<Vec<Vec<i64>>> {
        as_array(get(v, key)?, key)?
            .iter()
            .map(|row| {
                as_array(row, "lattice vector")?
                    .iter()
                    .map(|x| as_i64(x, "lattice coordinate"))
                    .collect::<Result<_>>()
            })
            .collect()
    };
    AffineSemigroup::new(rank, vecs("rays")?, vecs("generators")?)
}

pub fn semigroup_to_json(s: &AffineSemigroup) -> Value {
    serde_json::to_value(s).expect("semigroup")
}

pub fn cover_to_json(c: &CyclicCoverSpec) -> Value {
    serde_json::to_value(c).expect("cover spec")
}

// ---- fsig ------------------------------------------------------------------

pub fn splitting_report_to_json(r: &SplittingReport) -> Value {
    let mut m = Map::new();
    m.insert("p".into(), json!(r.p));
    m.insert("e".into(), json!(r.e));
    m.insert("d".into(), json!(r.d));
    m.insert("a_e".into(), json!(r.a_e));
    m.insert("total".into(), json!(r.total.to_string()));
    m.insert("ratio".into(), json!(crate::fsig::ratio_string(&r.ratio)));
    if let Some(per_class) = &r.per_class_witness {
        let mut cm = Map::new();
        for (k, w) in per_class {
            let wv = match w {
                ClassWitness::Free { witness } => json!({"free": true, "witness": witness}),
                ClassWitness::Generators { generators } => {
                    json!({"free": false, "generators": generators})
                }
            };
            cm.insert(k.clone(), wv);
        }
        m.insert("per_class_witness".into(), Value::Object(cm));
    }
    Value::Object(m)
}

pub fn estimate_to_json(e: &FsigEstimate) -> Value {
    json!({
        "reports": e.reports.iter().map(splitting_report_to_json).collect::<Vec<_>>(),
        "estimate": crate::fsig::ratio_string(&e.estimate),
        "estimate_f64": crate::fsig::ratio_f64(&e.estimate),
        "uncertainty": crate::fsig::ratio_string(&e.uncertainty),
        "monotone_nonincreasing": e.monotone_nonincreasing,
    })
}

pub fn rule_verdict_to_json(r: &RuleVerdict) -> Value {
    json!({
        "lhs": crate::fsig::ratio_string(&r.lhs),
        "rhs": crate::fsig::ratio_string(&r.rhs),
        "lhs_f64": crate::fsig::ratio_f64(&r.lhs),
        "rhs_f64": crate::fsig::ratio_f64(&r.rhs),
        "lhs_uncertainty": crate::fsig::ratio_string(&r.lhs_uncertainty),
        "rhs_uncertainty": crate::fsig::ratio_string(&r.rhs_uncertainty),
        "residue_degree": r.residue_degree,
        "tolerance": crate::fsig::ratio_string(&r.tolerance),
        "verdict": r.verdict,
    })
}

pub fn torsion_report_to_json(r: &TorsionReport) -> Value {
    json!({
        "torsion_orders": r.torsion_orders,
        "estimate": crate::fsig::ratio_string(&r.estimate),
        "estimate_f64": crate::fsig::ratio_f64(&r.estimate),
        "uncertainty": crate::fsig::ratio_string(&r.uncertainty),
        "threshold": r.threshold.as_ref().map(crate::fsig::ratio_string),
        "bound_holds": r.bound_holds,
    })
}
