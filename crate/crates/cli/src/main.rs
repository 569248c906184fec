//! `torsor`: exact computations for finite group-scheme quotients.
//!
//! Subcommands mirror the library modules: `hopf` (integrals, duals,
//! traces), `action` (relative traces, discriminants, torsor/tameness
//! tests), `toric` (divisor indices, sections, cyclic covers, class
//! groups, Veronese subrings), `fsig` (splitting numbers and the
//! transformation-rule / torsion-bound verifiers), and `repro` for the
//! pinned worked examples.
//!
//! Every run prints a JSON envelope {"result": ..., "manifest": ...} and
//! exits 0 on success, 1 on malformed JSON, 2 on validation failures, 3 on
//! truncation errors.

mod manifest;

use clap::{Args, Parser, Subcommand};
use manifest::ManifestBuilder;
use num::bigint::BigInt;
use num::rational::BigRational;
use serde_json::{json, Value};
use std::path::PathBuf;
use torsor_core::exact::{FieldSpec, Scalar};
use torsor_core::fsig;
use torsor_core::gaction::{self, CoactedAlgebra, CoactionKind};
use torsor_core::hopf::{build, HopfAlgebra};
use torsor_core::jsonio;
use torsor_core::poly::{Poly, PolyRingSpec};
use torsor_core::toric::{self, AffineSemigroup, ToricDivisor};

#[derive(Parser)]
#[command(name = "torsor", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Also write the JSON envelope to this file.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Cap the parallelism of the splitting-number kernel.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Hopf-algebra operations on O(G).
    Hopf {
        #[command(subcommand)]
        op: HopfOp,
    },
    /// Coacted-algebra operations (trace, discriminant, torsor, tameness).
    Action {
        #[command(subcommand)]
        op: ActionOp,
    },
    /// Affine semigroup rings, divisors, covers, class groups.
    Toric {
        #[command(subcommand)]
        op: ToricOp,
    },
    /// Splitting numbers and F-signature verifiers.
    Fsig {
        #[command(subcommand)]
        op: FsigOp,
    },
    /// Reproduce one of the pinned worked examples.
    Repro {
        /// ex-integral-traces | ex-bad-trace-alpha-p | ex-bad-trace-mu-p |
        /// thm-a-torsor-dichotomy | thm-c-veronese | cor-torsion-picard
        id: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        e: Option<u32>,
        #[arg(long)]
        emax: Option<u32>,
        #[arg(long = "box")]
        box_size: Option<i64>,
        #[arg(long)]
        tolerance: Option<String>,
    },
}

#[derive(Args)]
struct HopfSource {
    /// JSON file with a Hopf algebra (schema: see README).
    #[arg(long)]
    input: Option<PathBuf>,
    /// mu_n | alpha_pe | constant_cyclic
    #[arg(long)]
    builtin: Option<String>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    e: Option<u32>,
}

#[derive(Subcommand)]
enum HopfOp {
    /// Run every Hopf axiom as a named check.
    Validate {
        #[command(flatten)]
        src: HopfSource,
    },
    /// Left integrals of O(G) and of its Cartier dual.
    Integral {
        #[command(flatten)]
        src: HopfSource,
    },
    /// Emit the Cartier dual's structure constants.
    Dual {
        #[command(flatten)]
        src: HopfSource,
    },
    /// The group trace Tr_G and its bilinear matrix T.
    Trace {
        #[command(flatten)]
        src: HopfSource,
    },
}

#[derive(Args)]
struct ActionSource {
    /// JSON file with a coacted algebra (explicit or builder shorthand).
    #[arg(long)]
    input: Option<PathBuf>,
    /// kummer | additive (cyclic presentation R[t]/(t^n - f))
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<u32>,
    /// Right-hand side f of the modulus, e.g. "x*y".
    #[arg(long)]
    modulus: Option<String>,
    #[arg(long)]
    p: Option<u64>,
    /// Base-ring variables, comma separated.
    #[arg(long, default_value = "x,y")]
    vars: String,
}

#[derive(Subcommand)]
enum ActionOp {
    /// Trace values, bilinear matrix (both routes), discriminant.
    Trace {
        #[command(flatten)]
        src: ActionSource,
    },
    /// Discriminant divisor with the det T * (det M)^2 cross-check.
    Disc {
        #[command(flatten)]
        src: ActionSource,
    },
    /// Torsor test, everywhere or at a point.
    Torsor {
        #[command(flatten)]
        src: ActionSource,
        /// Evaluation point, comma separated scalars.
        #[arg(long)]
        point: Option<String>,
    },
    /// Cohomological tameness at the origin.
    Tame {
        #[command(flatten)]
        src: ActionSource,
    },
}

#[derive(Args)]
struct ToricSource {
    /// JSON file with rank/rays/generators.
    #[arg(long, alias = "semigroup")]
    input: Option<PathBuf>,
    /// veronese | plane
    #[arg(long)]
    builtin: Option<String>,
    #[arg(long)]
    n: Option<i64>,
    #[arg(long)]
    dim: Option<usize>,
}

#[derive(Subcommand)]
enum ToricOp {
    /// Divisor index: smallest n with nD principal, plus witness.
    Index {
        #[command(flatten)]
        src: ToricSource,
        #[arg(long)]
        divisor: String,
        #[arg(long, default_value_t = 64)]
        max_n: i64,
    },
    /// Lattice points and module generators of R(iD).
    Sections {
        #[command(flatten)]
        src: ToricSource,
        #[arg(long)]
        divisor: String,
        #[arg(long)]
        i: i64,
        #[arg(long = "box")]
        box_size: Option<i64>,
    },
    /// Veronese-type cyclic cover along a divisor.
    Cover {
        #[command(flatten)]
        src: ToricSource,
        #[arg(long)]
        divisor: String,
        #[arg(long)]
        degree: i64,
        #[arg(long = "box")]
        box_size: Option<i64>,
    },
    /// Divisor class group via Smith normal form.
    Classgroup {
        #[command(flatten)]
        src: ToricSource,
    },
    /// Veronese subring under a grading functional.
    Veronese {
        #[command(flatten)]
        src: ToricSource,
        #[arg(long)]
        degree: i64,
        /// Grading functional, comma separated.
        #[arg(long)]
        grading: String,
        #[arg(long = "box")]
        box_size: Option<i64>,
    },
}

#[derive(Subcommand)]
enum FsigOp {
    /// Splitting numbers a_e for e = 1..emax and the naive estimate.
    Estimate {
        #[command(flatten)]
        src: ToricSource,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        emax: u32,
        #[arg(long = "box")]
        box_size: Option<i64>,
        /// Include the per-class witness map for e = emax.
        #[arg(long, default_value_t = false)]
        witnesses: bool,
    },
    /// Check s(C) = n * s(R) for the index-n cyclic cover.
    VerifyRule {
        #[command(flatten)]
        src: ToricSource,
        #[arg(long)]
        divisor: String,
        /// "auto" (use the computed index) or an explicit degree.
        #[arg(long, default_value = "auto")]
        divisor_index: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        emax: u32,
        #[arg(long = "box")]
        box_size: Option<i64>,
        #[arg(long, default_value = "0.02")]
        tolerance: String,
    },
    /// Class-group torsion against 1/s(R).
    TorsionCheck {
        #[command(flatten)]
        src: ToricSource,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        emax: u32,
        #[arg(long = "box")]
        box_size: Option<i64>,
    },
}

struct CliError {
    code: i32,
    message: String,
}

impl From<torsor_core::Error> for CliError {
    fn from(e: torsor_core::Error) -> Self {
        let code = match e {
            torsor_core::Error::Truncation(_) => 3,
            _ => 2,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn bad_input(msg: impl Into<String>) -> CliError {
    CliError {
        code: 2,
        message: msg.into(),
    }
}

type CliResult<T> = Result<T, CliError>;

fn load_json(path: &PathBuf, m: &mut ManifestBuilder) -> CliResult<Value> {
    let bytes = std::fs::read(path).map_err(|e| CliError {
        code: 1,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    m.input_bytes(&path.display().to_string(), &bytes);
    serde_json::from_slice(&bytes).map_err(|e| CliError {
        code: 1,
        message: format!(
            "malformed JSON in {} at line {}, column {}: {e}",
            path.display(),
            e.line(),
            e.column()
        ),
    })
}

fn default_box() -> Option<i64> {
    std::env::var("TORSOR_BOX").ok().and_then(|v| v.parse().ok())
}

fn parse_rational(s: &str) -> CliResult<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| bad_input("bad rational"))?;
        let d: i64 = d.trim().parse().map_err(|_| bad_input("bad rational"))?;
        if d == 0 {
            return Err(bad_input("zero denominator"));
        }
        return Ok(BigRational::new(BigInt::from(n), BigInt::from(d)));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let int: i64 = if int.is_empty() {
            0
        } else {
            int.parse().map_err(|_| bad_input("bad decimal"))?
        };
        let scale = 10i64.pow(frac.len() as u32);
        let frac_val: i64 = frac.parse().map_err(|_| bad_input("bad decimal"))?;
        let sign = if s.starts_with('-') { -1 } else { 1 };
        return Ok(BigRational::new(
            BigInt::from(int * scale + sign * frac_val),
            BigInt::from(scale),
        ));
    }
    let n: i64 = s.parse().map_err(|_| bad_input("bad rational"))?;
    Ok(BigRational::from(BigInt::from(n)))
}

fn parse_i64_list(s: &str, what: &str) -> CliResult<Vec<i64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| bad_input(format!("bad {what}: {t:?}")))
        })
        .collect()
}

// ---- source resolution ------------------------------------------------------

fn resolve_hopf(src: &HopfSource, m: &mut ManifestBuilder) -> CliResult<HopfAlgebra> {
    if let Some(path) = &src.input {
        let v = load_json(path, m)?;
        return Ok(jsonio::hopf_from_json(&v)?);
    }
    let builtin = src
        .builtin
        .as_deref()
        .ok_or_else(|| bad_input("either --input or --builtin is required"))?;
    let p = src.p.ok_or_else(|| bad_input("--p is required for builtins"))?;
    let field = FieldSpec::prime(p)?;
    let desc = format!("builtin:{builtin},p={p},n={:?},e={:?}", src.n, src.e);
    m.input_desc("hopf", &desc);
    match builtin {
        "mu_n" => {
            let n = src.n.ok_or_else(|| bad_input("--n required for mu_n"))?;
            Ok(build::mu_n(n, field)?)
        }
        "alpha_pe" => {
            let e = src.e.ok_or_else(|| bad_input("--e required for alpha_pe"))?;
            Ok(build::alpha_pe(e, field)?)
        }
        "constant_cyclic" => {
            let n = src
                .n
                .ok_or_else(|| bad_input("--n required for constant_cyclic"))?;
            Ok(build::constant_group(&build::cyclic_table(n as usize), field)?)
        }
        other => Err(bad_input(format!("unknown builtin {other:?}"))),
    }
}

fn resolve_action(src: &ActionSource, m: &mut ManifestBuilder) -> CliResult<CoactedAlgebra> {
    if let Some(path) = &src.input {
        let dir = path.parent().map(|d| d.to_path_buf());
        let v = load_json(path, m)?;
        let resolver = move |rel: &str| -> torsor_core::Result<Value> {
            let p = match &dir {
                Some(d) => d.join(rel),
                None => PathBuf::from(rel),
            };
            let bytes = std::fs::read(&p).map_err(|e| {
                torsor_core::Error::Invalid(format!("cannot read {}: {e}", p.display()))
            })?;
            serde_json::from_slice(&bytes)
                .map_err(|e| torsor_core::Error::Parse(format!("bad JSON in {}: {e}", p.display())))
        };
        return Ok(jsonio::coacted_from_json(&v, &resolver)?);
    }
    let family = src
        .family
        .as_deref()
        .ok_or_else(|| bad_input("either --input or --family is required"))?;
    let n = src.n.ok_or_else(|| bad_input("--n is required"))?;
    let p = src.p.ok_or_else(|| bad_input("--p is required"))?;
    let modulus = src
        .modulus
        .as_deref()
        .ok_or_else(|| bad_input("--modulus is required"))?;
    let vars: Vec<&str> = src.vars.split(',').map(str::trim).collect();
    let base = PolyRingSpec::new(FieldSpec::prime(p)?, &vars)?;
    let rhs = Poly::parse(&base, modulus)?;
    let kind = match family {
        "kummer" => CoactionKind::Kummer,
        "additive" => CoactionKind::Additive,
        other => return Err(bad_input(format!("unknown family {other:?}"))),
    };
    m.input_desc(
        "action",
        &format!("builder:{family},n={n},p={p},modulus={modulus},vars={}", src.vars),
    );
    Ok(gaction::cyclic_presentation(base, n, rhs, kind)?)
}

fn resolve_toric(src: &ToricSource, m: &mut ManifestBuilder) -> CliResult<AffineSemigroup> {
    if let Some(path) = &src.input {
        let v = load_json(path, m)?;
        return Ok(jsonio::semigroup_from_json(&v)?);
    }
    let builtin = src
        .builtin
        .as_deref()
        .ok_or_else(|| bad_input("either --input or --builtin is required"))?;
    m.input_desc(
        "semigroup",
        &format!("builtin:{builtin},n={:?},dim={:?}", src.n, src.dim),
    );
    match builtin {
        "veronese" => {
            let n = src.n.ok_or_else(|| bad_input("--n required for veronese"))?;
            if n < 1 {
                return Err(bad_input("--n must be positive"));
            }
            Ok(toric::veronese_plane(n))
        }
        "plane" => {
            let d = src.dim.unwrap_or(2);
            Ok(toric::plane(d))
        }
        other => Err(bad_input(format!("unknown builtin {other:?}"))),
    }
}

fn parse_point(s: &str, field: FieldSpec) -> CliResult<Vec<Scalar>> {
    s.split(',')
        .map(|t| Scalar::parse(&field, t.trim()).map_err(CliError::from))
        .collect()
}

// ---- command execution -------------------------------------------------------

fn run_hopf(op: &HopfOp, m: &mut ManifestBuilder) -> CliResult<Value> {
    match op {
        HopfOp::Validate { src } => {
            let h = resolve_hopf(src, m)?;
            let report = h.validate_hopf();
            Ok(json!({
                "dim": h.dim(),
                "report": serde_json::to_value(&report).unwrap(),
            }))
        }
        HopfOp::Integral { src } => {
            let h = resolve_hopf(src, m)?;
            let ints = h.left_integrals();
            let dual_ints = h.cartier_dual().left_integrals();
            let to_rows = |b: &Vec<Vec<Scalar>>| -> Value {
                Value::Array(
                    b.iter()
                        .map(|v| Value::Array(v.iter().map(|s| s.to_json()).collect()))
                        .collect(),
                )
            };
            let describe = |b: &Vec<Vec<Scalar>>| -> Value {
                Value::Array(
                    b.iter()
                        .map(|v| {
                            let terms: Vec<String> = v
                                .iter()
                                .enumerate()
                                .filter(|(_, c)| !c.is_zero())
                                .map(|(i, c)| {
                                    if c.is_one() {
                                        h.basis_labels()[i].clone()
                                    } else {
                                        format!("{c}*{}", h.basis_labels()[i])
                                    }
                                })
                                .collect();
                            json!(terms.join(" + "))
                        })
                        .collect(),
                )
            };
            Ok(json!({
                "dimension": ints.dimension(),
                "integral_basis": to_rows(&ints.basis),
                "integral": describe(&ints.basis),
                "dual_integral_basis": to_rows(&dual_ints.basis),
                "is_linearly_reductive": h.is_linearly_reductive()?,
            }))
        }
        HopfOp::Dual { src } => {
            let h = resolve_hopf(src, m)?;
            Ok(jsonio::hopf_to_json(&h.cartier_dual()))
        }
        HopfOp::Trace { src } => {
            let h = resolve_hopf(src, m)?;
            let tr = h.group_trace()?;
            let t = h.trace_bilinear_matrix_with(&tr)?;
            let rows: Vec<Value> = (0..t.rows())
                .map(|i| Value::Array((0..t.cols()).map(|j| t.at(i, j).to_json()).collect()))
                .collect();
            Ok(json!({
                "functional": tr.functional.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
                "normalized": tr.normalized,
                "bilinear_matrix": rows,
                "det": t.determinant()?.to_json(),
            }))
        }
    }
}

fn run_action(op: &ActionOp, m: &mut ManifestBuilder) -> CliResult<Value> {
    match op {
        ActionOp::Trace { src } => {
            let s = resolve_action(src, m)?;
            let validation = s.coaction_validate()?;
            let report = s.trace_map()?;
            Ok(json!({
                "validation": serde_json::to_value(&validation).unwrap(),
                "trace": jsonio::trace_report_to_json(&report),
                "maximal_into_maximal": s.check_maximal_into_maximal()?,
            }))
        }
        ActionOp::Disc { src } => {
            let s = resolve_action(src, m)?;
            let disc = s.discriminant_divisor()?;
            Ok(json!({
                "disc": disc.to_string(),
                "is_unit": disc.is_unit(),
                "factorization_checked": true,
            }))
        }
        ActionOp::Torsor { src, point } => {
            let s = resolve_action(src, m)?;
            let pt = match point {
                Some(text) => Some(parse_point(text, s.base().field)?),
                None => None,
            };
            let verdict = s.torsor_test(pt.as_deref())?;
            let report = s.trace_map()?;
            Ok(json!({
                "verdict": serde_json::to_value(&verdict).unwrap(),
                "disc": report.disc.to_string(),
                "point": point,
            }))
        }
        ActionOp::Tame { src } => {
            let s = resolve_action(src, m)?;
            let t = s.is_tame()?;
            let report = s.trace_map()?;
            Ok(json!({
                "tameness": serde_json::to_value(t).unwrap(),
                "trace_values": report.trace_values.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            }))
        }
    }
}

fn run_toric(op: &ToricOp, m: &mut ManifestBuilder) -> CliResult<Value> {
    match op {
        ToricOp::Index { src, divisor, max_n } => {
            let s = resolve_toric(src, m)?;
            let d = ToricDivisor {
                coeffs: parse_i64_list(divisor, "divisor")?,
            };
            m.config("max_n", json!(max_n));
            let (n, witness) = s.divisor_index(&d, *max_n)?;
            Ok(json!({"index": n, "witness": witness}))
        }
        ToricOp::Sections {
            src,
            divisor,
            i,
            box_size,
        } => {
            let s = resolve_toric(src, m)?;
            let d = ToricDivisor {
                coeffs: parse_i64_list(divisor, "divisor")?,
            };
            let b = box_size.or_else(default_box).unwrap_or(16);
            m.config("box", json!(b));
            let pts = s.sections(&d, *i, b)?;
            let gens = s.section_module_generators(&d, *i, b)?;
            Ok(json!({"i": i, "points": pts, "module_generators": gens}))
        }
        ToricOp::Cover {
            src,
            divisor,
            degree,
            box_size,
        } => {
            let s = resolve_toric(src, m)?;
            let d = ToricDivisor {
                coeffs: parse_i64_list(divisor, "divisor")?,
            };
            let b = box_size.or_else(default_box).unwrap_or(16 * degree.max(&1));
            m.config("box", json!(b));
            let spec = s.cyclic_cover(&d, *degree, b)?;
            Ok(jsonio::cover_to_json(&spec))
        }
        ToricOp::Classgroup { src } => {
            let s = resolve_toric(src, m)?;
            Ok(serde_json::to_value(s.class_group()).unwrap())
        }
        ToricOp::Veronese {
            src,
            degree,
            grading,
            box_size,
        } => {
            let s = resolve_toric(src, m)?;
            let g = parse_i64_list(grading, "grading")?;
            let b = box_size.or_else(default_box).unwrap_or(24);
            m.config("box", json!(b));
            let (sub, basis) = s.veronese(*degree, &g, b)?;
            Ok(json!({
                "semigroup": jsonio::semigroup_to_json(&sub),
                "lattice_basis_columns": basis,
            }))
        }
    }
}

fn run_fsig(op: &FsigOp, threads: Option<usize>, m: &mut ManifestBuilder) -> CliResult<Value> {
    m.config("threads", json!(threads));
    match op {
        FsigOp::Estimate {
            src,
            p,
            emax,
            box_size,
            witnesses,
        } => {
            let s = resolve_toric(src, m)?;
            let b = match box_size.or_else(default_box) {
                Some(b) => b,
                None => fsig::min_box(&s, *p, *emax)? + (*p as i64).pow(*emax),
            };
            m.config("p", json!(p));
            m.config("emax", json!(emax));
            m.config("box", json!(b));
            let mut out = if *emax == 1 {
                // Single report; extrapolation needs two points.
                let r = fsig::splitting_number(&s, *p, 1, b, threads, false)?;
                json!({
                    "reports": [jsonio::splitting_report_to_json(&r)],
                    "estimate": fsig::ratio_string(&r.ratio),
                    "estimate_f64": fsig::ratio_f64(&r.ratio),
                    "uncertainty": Value::Null,
                })
            } else {
                jsonio::estimate_to_json(&fsig::fsig_estimate(&s, *p, *emax, b, threads)?)
            };
            if *witnesses {
                let last = fsig::splitting_number(&s, *p, *emax, b, threads, true)?;
                out["per_class_witness"] =
                    jsonio::splitting_report_to_json(&last)["per_class_witness"].clone();
            }
            Ok(out)
        }
        FsigOp::VerifyRule {
            src,
            divisor,
            divisor_index,
            p,
            emax,
            box_size,
            tolerance,
        } => {
            let s = resolve_toric(src, m)?;
            let d = ToricDivisor {
                coeffs: parse_i64_list(divisor, "divisor")?,
            };
            let tol = parse_rational(tolerance)?;
            let n = if divisor_index == "auto" {
                s.divisor_index(&d, 64)?.0
            } else {
                divisor_index
                    .parse::<i64>()
                    .map_err(|_| bad_input("--divisor-index must be \"auto\" or an integer"))?
            };
            m.config("p", json!(p));
            m.config("emax", json!(emax));
            m.config("n", json!(n));
            m.config("tolerance", json!(fsig::ratio_string(&tol)));
            m.config("box", json!(box_size.or_else(default_box)));
            let (verdict, est_r, est_c) = fsig::verify_transformation_rule(
                &s,
                &d,
                n,
                *p,
                *emax,
                box_size.or_else(default_box),
                threads,
                tol,
            )?;
            Ok(json!({
                "rule": jsonio::rule_verdict_to_json(&verdict),
                "base_estimate": jsonio::estimate_to_json(&est_r),
                "cover_estimate": jsonio::estimate_to_json(&est_c),
            }))
        }
        FsigOp::TorsionCheck {
            src,
            p,
            emax,
            box_size,
        } => {
            let s = resolve_toric(src, m)?;
            m.config("p", json!(p));
            m.config("emax", json!(emax));
            m.config("box", json!(box_size.or_else(default_box)));
            let (report, est) =
                fsig::torsion_bound_check(&s, *p, *emax, box_size.or_else(default_box), threads)?;
            Ok(json!({
                "torsion": jsonio::torsion_report_to_json(&report),
                "estimate": jsonio::estimate_to_json(&est),
            }))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_repro(
    id: &str,
    p: Option<u64>,
    n: Option<i64>,
    e: Option<u32>,
    emax: Option<u32>,
    box_size: Option<i64>,
    tolerance: Option<&str>,
    threads: Option<usize>,
    m: &mut ManifestBuilder,
) -> CliResult<Value> {
    m.input_desc("repro", id);
    match id {
        "ex-integral-traces" => {
            let p = p.unwrap_or(3);
            let e = e.unwrap_or(1);
            let n = n.unwrap_or(4) as u64;
            let field = FieldSpec::prime(p)?;
            let alpha = build::alpha_pe(e, field)?;
            let alpha_ints = alpha.left_integrals();
            let q = (p as usize).pow(e);
            let constant = build::constant_group(&build::cyclic_table(n as usize), field)?;
            let mu = build::mu_n(n, field)?;
            let mu_dual_ints = mu.cartier_dual().left_integrals();
            Ok(json!({
                "alpha": {
                    "p": p, "e": e,
                    "integral": format!("xi^{}", q - 1),
                    "integral_basis": alpha_ints.basis[0].iter().map(|s| s.to_json()).collect::<Vec<_>>(),
                },
                "constant_cyclic": {
                    "n": n,
                    "integral_basis": constant.left_integrals().basis[0].iter().map(|s| s.to_json()).collect::<Vec<_>>(),
                    "note": "delta functional at the identity (dual pattern of the sum over the group)",
                },
                "mu": {
                    "n": n,
                    "integral_basis": mu.left_integrals().basis[0].iter().map(|s| s.to_json()).collect::<Vec<_>>(),
                    "dual_integral_basis": mu_dual_ints.basis[0].iter().map(|s| s.to_json()).collect::<Vec<_>>(),
                    "note": "dual integral = projection onto the coefficient of 1",
                },
            }))
        }
        "ex-bad-trace-alpha-p" => {
            let p = p.unwrap_or(3);
            let base = PolyRingSpec::new(FieldSpec::prime(p)?, &["x", "y"])?;
            let rhs = Poly::parse(&base, "x*y")?;
            let s = gaction::cyclic_presentation(base, p as u32, rhs, CoactionKind::Additive)?;
            let report = s.trace_map()?;
            let verdict = s.torsor_test(None)?;
            let tame = s.is_tame()?;
            Ok(json!({
                "p": p,
                "cover": format!("R[t]/(t^{p} - x*y) with coaction t -> t(x)1 + 1(x)xi"),
                "trace_values": report.trace_values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "Tr(t^(p-1))": report.trace_values[p as usize - 1].to_string(),
                "torsor": serde_json::to_value(&verdict).unwrap(),
                "tameness": serde_json::to_value(tame).unwrap(),
            }))
        }
        "ex-bad-trace-mu-p" => {
            let p = p.unwrap_or(3);
            let base = PolyRingSpec::new(FieldSpec::prime(p)?, &["x", "y"])?;
            let rhs = Poly::parse(&base, "1")?;
            let s = gaction::cyclic_presentation(base, p as u32, rhs, CoactionKind::Kummer)?;
            let report = s.trace_map()?;
            let verdict = s.torsor_test(None)?;
            Ok(json!({
                "p": p,
                "cover": format!("R[t]/(t^{p} - 1) with coaction t -> t(x)zeta"),
                "trace_values": report.trace_values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "torsor": serde_json::to_value(&verdict).unwrap(),
            }))
        }
        "thm-a-torsor-dichotomy" => {
            let p = p.unwrap_or(7);
            let n = n.unwrap_or(3) as u32;
            let base = PolyRingSpec::new(FieldSpec::prime(p)?, &["x", "y"])?;
            let field = base.field;
            let rhs = Poly::parse(&base, "x")?;
            let s = gaction::cyclic_presentation(base, n, rhs, CoactionKind::Kummer)?;
            let everywhere = s.torsor_test(None)?;
            let origin = s.torsor_test(Some(&[field.zero(), field.zero()]))?;
            let generic = s.torsor_test(Some(&[field.one(), field.one()]))?;
            let report = s.trace_map()?;
            Ok(json!({
                "p": p, "n": n,
                "cover": format!("R[t]/(t^{n} - x) with coaction t -> t(x)zeta"),
                "disc": report.disc.to_string(),
                "everywhere": serde_json::to_value(&everywhere).unwrap(),
                "at_origin": serde_json::to_value(&origin).unwrap(),
                "at_(1,1)": serde_json::to_value(&generic).unwrap(),
            }))
        }
        "thm-c-veronese" => {
            let nn = n.unwrap_or(2);
            let p = p.unwrap_or(3);
            let emax = emax.unwrap_or(3);
            let tol = parse_rational(tolerance.unwrap_or("0.03"))?;
            let v = toric::veronese_plane(nn);
            let d = toric::veronese_divisor();
            let (verdict, est_r, est_c) = fsig::verify_transformation_rule(
                &v, &d, nn, p, emax, box_size, threads, tol,
            )?;
            Ok(json!({
                "ring": format!("V_{nn} (degree-{nn} Veronese of the plane)"),
                "p": p, "emax": emax,
                "rule": jsonio::rule_verdict_to_json(&verdict),
                "base_estimate": fsig::ratio_string(&est_r.estimate),
                "cover_estimate": fsig::ratio_string(&est_c.estimate),
            }))
        }
        "cor-torsion-picard" => {
            let nn = n.unwrap_or(2);
            let p = p.unwrap_or(3);
            let emax = emax.unwrap_or(3);
            let v = toric::veronese_plane(nn);
            let (report, _) = fsig::torsion_bound_check(&v, p, emax, box_size, threads)?;
            Ok(json!({
                "ring": format!("V_{nn}"),
                "p": p, "emax": emax,
                "torsion": jsonio::torsion_report_to_json(&report),
            }))
        }
        other => Err(bad_input(format!(
            "unknown repro id {other:?}; known ids: ex-integral-traces, \
             ex-bad-trace-alpha-p, ex-bad-trace-mu-p, thm-a-torsor-dichotomy, \
             thm-c-veronese, cor-torsion-picard"
        ))),
    }
}

fn main() {
    let cli = Cli::parse();
    let mut m = ManifestBuilder::new();
    if let Some(t) = cli.threads {
        m.config("threads", json!(t));
    }
    let result = match &cli.cmd {
        Cmd::Hopf { op } => run_hopf(op, &mut m),
        Cmd::Action { op } => run_action(op, &mut m),
        Cmd::Toric { op } => run_toric(op, &mut m),
        Cmd::Fsig { op } => run_fsig(op, cli.threads, &mut m),
        Cmd::Repro {
            id,
            p,
            n,
            e,
            emax,
            box_size,
            tolerance,
        } => run_repro(
            id,
            *p,
            *n,
            *e,
            *emax,
            *box_size,
            tolerance.as_deref(),
            cli.threads,
            &mut m,
        ),
    };
    match result {
        Ok(value) => {
            let envelope = json!({"result": value, "manifest": m.finish()});
            let text = serde_json::to_string_pretty(&envelope).expect("serialize");
            println!("{text}");
            if let Some(path) = &cli.output {
                if let Err(e) = std::fs::write(path, format!("{text}\n")) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    std::process::exit(2);
                }
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            std::process::exit(e.code);
        }
    }
}
