//! Coacted finite free algebras S over a polynomial base R: the relative
//! trace Tr_{S/R}, its bilinear form and discriminant, and the torsor and
//! tameness diagnostics built on them.

// Tensor arithmetic here walks several structures by one shared index;
// explicit ranges read better than zipped iterators.
#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};
use crate::exact::matrix::Matrix;
use crate::exact::scalar::{FieldSpec, Scalar};
use crate::hopf::{GroupTrace, HopfAlgebra, ValidationReport};
use crate::poly::{Poly, PolyRingSpec};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Element of S in coordinates over the s-basis; entries live in R.
pub type SElem = Vec<Poly>;

/// A free rank-d algebra S over R = F_p[x_1..x_k] together with a coaction
/// of a finite Hopf algebra O(G). The first basis element is 1.
#[derive(Clone, Debug)]
pub struct CoactedAlgebra {
    base: PolyRingSpec,
    rank: usize,
    basis_labels: Vec<String>,
    /// mult[i][j] = coordinates of s_i · s_j.
    mult: Vec<Vec<SElem>>,
    hopf: HopfAlgebra,
    /// coaction[i][m] = a_i^m with α#(s_i) = Σ_m a_i^m ⊗ γ_m.
    coaction: Vec<Vec<SElem>>,
}

/// Which coaction the cyclic-presentation builder installs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoactionKind {
    /// t ↦ t ⊗ ζ over μ_n.
    Kummer,
    /// t ↦ t ⊗ 1 + 1 ⊗ ξ over α_{p^e}.
    Additive,
}

/// Everything the trace map produces in one pass: values on the basis, the
/// bilinear matrix over R (computed two ways and asserted equal), and its
/// determinant.
#[derive(Clone, Debug)]
pub struct TraceReport {
    pub trace_values: Vec<Poly>,
    pub bilinear: Matrix<Poly>,
    pub disc: Poly,
    pub trace_scale_note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TorsorVerdict {
    /// rank d differs from o(G); not a torsor anywhere.
    RankMismatch { rank: usize, order: usize },
    TorsorEverywhere,
    NotTorsorEverywhere,
    TorsorAtPoint,
    NotTorsorAtPoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tameness {
    Tame,
    NotTame,
    Unknown,
}

impl CoactedAlgebra {
    pub fn new(
        base: PolyRingSpec,
        basis_labels: Vec<String>,
        mult: Vec<Vec<SElem>>,
        hopf: HopfAlgebra,
        coaction: Vec<Vec<SElem>>,
    ) -> Result<Self> {
        base.validate()?;
        let rank = basis_labels.len();
        if rank == 0 {
            return Err(Error::Dimension("rank must be at least 1".into()));
        }
        if base.field != hopf.field() {
            return Err(Error::FieldMismatch(
                "base ring and Hopf algebra over different fields".into(),
            ));
        }
        if basis_labels[0] != "1" {
            return Err(Error::Invalid("first basis label must be \"1\"".into()));
        }
        let o = hopf.dim();
        if mult.len() != rank || mult.iter().any(|r| r.len() != rank) {
            return Err(Error::Dimension("mult tensor shape".into()));
        }
        if coaction.len() != rank || coaction.iter().any(|r| r.len() != o) {
            return Err(Error::Dimension("coaction matrix shape".into()));
        }
        for elem in mult.iter().flatten().chain(coaction.iter().flatten()) {
            if elem.len() != rank {
                return Err(Error::Dimension("coordinate vector length".into()));
            }
            for p in elem {
                if p.ring() != &base {
                    return Err(Error::RingMismatch(
                        "coordinate entry from a different base ring".into(),
                    ));
                }
            }
        }
        Ok(CoactedAlgebra {
            base,
            rank,
            basis_labels,
            mult,
            hopf,
            coaction,
        })
    }

    pub fn base(&self) -> &PolyRingSpec {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn mult_tensor(&self) -> &Vec<Vec<SElem>> {
        &self.mult
    }

    pub fn coaction_matrix(&self) -> &Vec<Vec<SElem>> {
        &self.coaction
    }

    pub fn zero_elem(&self) -> SElem {
        vec![Poly::zero(&self.base); self.rank]
    }

    pub fn basis_elem(&self, i: usize) -> SElem {
        let mut e = self.zero_elem();
        e[i] = Poly::one(&self.base);
        e
    }

    pub fn elem_add(&self, x: &SElem, y: &SElem) -> Result<SElem> {
        x.iter().zip(y).map(|(a, b)| a.add(b)).collect()
    }

    pub fn elem_scale(&self, x: &SElem, r: &Poly) -> Result<SElem> {
        x.iter().map(|a| a.mul(r)).collect()
    }

    pub fn elem_scale_scalar(&self, x: &SElem, c: &Scalar) -> SElem {
        x.iter().map(|a| a.scale(c)).collect()
    }

    pub fn elem_is_zero(&self, x: &SElem) -> bool {
        x.iter().all(|p| p.is_zero())
    }

    /// Product in S through the structure tensor.
    pub fn elem_mul(&self, x: &SElem, y: &SElem) -> Result<SElem> {
        let mut out = self.zero_elem();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.mul(yj)?;
                for (k, m) in self.mult[i][j].iter().enumerate() {
                    if !m.is_zero() {
                        out[k] = out[k].add(&c.mul(m)?)?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// α#(x) ∈ S ⊗ O(G) as a vector of S-coordinates per Hopf basis index.
    fn coact(&self, x: &SElem) -> Result<Vec<SElem>> {
        let o = self.hopf.dim();
        let mut out = vec![self.zero_elem(); o];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (m, slot) in out.iter_mut().enumerate() {
                let a = &self.coaction[i][m];
                if !self.elem_is_zero(a) {
                    let scaled = self.elem_scale(a, xi)?;
                    *slot = self.elem_add(slot, &scaled)?;
                }
            }
        }
        Ok(out)
    }

    // ---- validation -----------------------------------------------------

    /// Coaction axioms as named checks: counit axiom, coassociativity,
    /// multiplicativity of α#, and the identity axiom on s_1.
    pub fn coaction_validate(&self) -> Result<ValidationReport> {
        let o = self.hopf.dim();
        let d = self.rank;

        // counit axiom: (id ⊗ e) ∘ α# = id
        let mut counit_ok = true;
        'counit: for i in 0..d {
            let mut acc = self.zero_elem();
            for m in 0..o {
                let e_m = &self.hopf.counit_vector()[m];
                if e_m.is_zero() {
                    continue;
                }
                acc = self.elem_add(&acc, &self.elem_scale_scalar(&self.coaction[i][m], e_m))?;
            }
            if acc != self.basis_elem(i) {
                counit_ok = false;
                break 'counit;
            }
        }

        // coassociativity: (α# ⊗ id) ∘ α# = (id ⊗ ∇) ∘ α#
        let mut coassoc_ok = true;
        'coassoc: for i in 0..d {
            // lhs[j][m] = Σ_k (a_i^m)_k · a_k^j ∈ S
            for m in 0..o {
                for j in 0..o {
                    let mut lhs = self.zero_elem();
                    for (k, coef) in self.coaction[i][m].iter().enumerate() {
                        if coef.is_zero() {
                            continue;
                        }
                        lhs = self.elem_add(&lhs, &self.elem_scale(&self.coaction[k][j], coef)?)?;
                    }
                    // rhs[j][m] = Σ_n a_i^n · (coefficient of γ_j ⊗ γ_m in ∇γ_n)
                    let mut rhs = self.zero_elem();
                    for n in 0..o {
                        for (a, b, c) in self.hopf.coproduct_terms(n) {
                            if *a == j && *b == m {
                                rhs = self.elem_add(
                                    &rhs,
                                    &self.elem_scale_scalar(&self.coaction[i][n], c),
                                )?;
                            }
                        }
                    }
                    if lhs != rhs {
                        coassoc_ok = false;
                        break 'coassoc;
                    }
                }
            }
        }

        // multiplicativity: α#(s_i s_j) = α#(s_i) α#(s_j)
        let mut mult_ok = true;
        'mult: for i in 0..d {
            for j in 0..d {
                let lhs = self.coact(&self.mult[i][j])?;
                let mut rhs = vec![self.zero_elem(); o];
                for m in 0..o {
                    if self.elem_is_zero(&self.coaction[i][m]) {
                        continue;
                    }
                    for n in 0..o {
                        if self.elem_is_zero(&self.coaction[j][n]) {
                            continue;
                        }
                        let prod_s = self.elem_mul(&self.coaction[i][m], &self.coaction[j][n])?;
                        for (l, c) in self.hopf.basis_product(m, n) {
                            rhs[*l] =
                                self.elem_add(&rhs[*l], &self.elem_scale_scalar(&prod_s, c))?;
                        }
                    }
                }
                if lhs != rhs {
                    mult_ok = false;
                    break 'mult;
                }
            }
        }

        // identity axiom: s_1 is the multiplicative identity and
        // α#(s_1) = s_1 ⊗ 1.
        let mut id_ok = true;
        for j in 0..d {
            if self.mult[0][j] != self.basis_elem(j) || self.mult[j][0] != self.basis_elem(j) {
                id_ok = false;
            }
        }
        let unit_dense = self.hopf.unit_dense();
        for m in 0..o {
            let want = self.elem_scale_scalar(&self.basis_elem(0), &unit_dense[m]);
            if self.coaction[0][m] != want {
                id_ok = false;
            }
        }

        Ok(ValidationReport::from_pairs(vec![
            ("counit_axiom", counit_ok),
            ("coassociativity", coassoc_ok),
            ("multiplicativity", mult_ok),
            ("identity_axiom", id_ok),
        ]))
    }

    // ---- trace ----------------------------------------------------------

    /// Apply a functional η on O(G) through the coaction: η·x = (id ⊗ η)(α#(x)).
    pub fn dual_action_apply(&self, eta: &[Scalar], x: &SElem) -> Result<SElem> {
        if eta.len() != self.hopf.dim() {
            return Err(Error::Dimension(format!(
                "functional has length {}, expected o(G) = {}",
                eta.len(),
                self.hopf.dim()
            )));
        }
        let mut out = self.zero_elem();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let mut per_basis = self.zero_elem();
            for (m, c) in eta.iter().enumerate() {
                if !c.is_zero() {
                    per_basis =
                        self.elem_add(&per_basis, &self.elem_scale_scalar(&self.coaction[i][m], c))?;
                }
            }
            out = self.elem_add(&out, &self.elem_scale(&per_basis, xi)?)?;
        }
        Ok(out)
    }

    /// Full invariant subspace, offered only over a field base (no
    /// variables): the coinvariance condition is then a linear system over
    /// the field, solved by the kernel routine. Over a polynomial base use
    /// `is_invariant`, which tests a single element.
    pub fn invariant_subspace(&self) -> Result<Vec<Vec<Scalar>>> {
        if self.base.num_vars() != 0 {
            return Err(Error::Invalid(
                "full invariant computation needs a field base (no variables); \
                 use is_invariant for single elements over polynomial bases"
                    .into(),
            ));
        }
        let field = self.base.field;
        let d = self.rank;
        let o = self.hopf.dim();
        let unit_dense = self.hopf.unit_dense();
        // Unknowns s_0..s_{d-1}; one equation per (hopf index m, coord k):
        //   Σ_i s_i (a_i^m)_k  =  u_m s_k
        let mut data = vec![field.zero(); o * d * d];
        for m in 0..o {
            for k in 0..d {
                let row = m * d + k;
                for i in 0..d {
                    let mut coef = self.coaction[i][m][k].constant_term();
                    if i == k {
                        coef = coef.sub(&unit_dense[m]);
                    }
                    data[row * d + i] = coef;
                }
            }
        }
        let matrix = Matrix::new(o * d, d, data)?;
        matrix.solve_kernel()
    }

    /// x is a coinvariant: α#(x) = x ⊗ 1 exactly.
    pub fn is_invariant(&self, x: &SElem) -> Result<bool> {
        if x.len() != self.rank {
            return Err(Error::Dimension("element coordinate length".into()));
        }
        let image = self.coact(x)?;
        let unit_dense = self.hopf.unit_dense();
        for (m, slot) in image.iter().enumerate() {
            let want = self.elem_scale_scalar(x, &unit_dense[m]);
            if *slot != want {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn trace_map(&self) -> Result<TraceReport> {
        let tr = self.hopf.group_trace()?;
        self.trace_map_with(&tr)
    }

    /// Trace data for an explicit representative of Tr_G (scale covariance
    /// tests rescale here).
    pub fn trace_map_with(&self, tr: &GroupTrace) -> Result<TraceReport> {
        let d = self.rank;
        let o = self.hopf.dim();

        // Tr_{S/R}(s_i) via the dual action of Tr_G; Prop. "image in R" is a
        // theorem, so any escape from the first coordinate is a bug trap.
        let mut trace_values = Vec::with_capacity(d);
        for i in 0..d {
            let v = self.dual_action_apply(&tr.functional, &self.basis_elem(i))?;
            for (k, coord) in v.iter().enumerate().skip(1) {
                if !coord.is_zero() {
                    return Err(Error::Validation(format!(
                        "trace of basis element {i} has a nonzero coordinate at slot {k}; \
                         the coaction does not satisfy the trace-codomain property"
                    )));
                }
            }
            trace_values.push(v[0].clone());
        }

        // Bilinear matrix, route 1: through the multiplication tensor.
        let zero = Poly::zero(&self.base);
        let mut direct = Matrix::filled(d, d, zero.clone());
        for i in 0..d {
            for j in 0..d {
                let mut acc = zero.clone();
                for (k, c) in self.mult[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        acc = acc.add(&c.mul(&trace_values[k])?)?;
                    }
                }
                direct.set(i, j, acc);
            }
        }

        // Route 2: MᵀTM with T over the field and M over S.
        let t_matrix = self.hopf.trace_bilinear_matrix_with(tr)?;
        for i in 0..d {
            for j in 0..d {
                let mut acc = self.zero_elem();
                for m in 0..o {
                    for n in 0..o {
                        let t_mn = t_matrix.at(m, n);
                        if t_mn.is_zero() {
                            continue;
                        }
                        let prod = self.elem_mul(&self.coaction[i][m], &self.coaction[j][n])?;
                        acc = self.elem_add(&acc, &self.elem_scale_scalar(&prod, t_mn))?;
                    }
                }
                for (k, coord) in acc.iter().enumerate() {
                    let want = if k == 0 { direct.at(i, j) } else { &zero };
                    if coord != want {
                        return Err(Error::Validation(format!(
                            "MᵀTM disagrees with the directly computed trace matrix at ({i},{j})"
                        )));
                    }
                }
            }
        }

        if !direct.is_symmetric() {
            return Err(Error::Validation("trace bilinear matrix not symmetric".into()));
        }
        let disc = direct.determinant()?;
        let functional_desc: Vec<String> =
            tr.functional.iter().map(|c| c.to_string()).collect();
        Ok(TraceReport {
            trace_values,
            bilinear: direct,
            disc,
            trace_scale_note: format!(
                "Tr_G representative: normalized={}, functional=[{}]",
                tr.normalized,
                functional_desc.join(", ")
            ),
        })
    }

    /// Determinant of the coaction matrix M = (a_i^m), an element of S.
    /// Laplace expansion with minor memoization; ranks here are small.
    pub fn coaction_determinant(&self) -> Result<SElem> {
        let d = self.rank;
        let o = self.hopf.dim();
        if d != o {
            return Err(Error::Dimension(format!(
                "coaction matrix is {o}x{d}, determinant needs rank = o(G)"
            )));
        }
        if d > 16 {
            return Err(Error::Invalid("rank too large for determinant over S".into()));
        }
        let mut memo: HashMap<u64, SElem> = HashMap::new();
        self.det_minor((1u64 << d) - 1, &mut memo)
    }

    fn det_minor(&self, colmask: u64, memo: &mut HashMap<u64, SElem>) -> Result<SElem> {
        if colmask == 0 {
            let mut one = self.zero_elem();
            one[0] = Poly::one(&self.base);
            return Ok(one);
        }
        if let Some(v) = memo.get(&colmask) {
            return Ok(v.clone());
        }
        let d = self.rank;
        let row = d - colmask.count_ones() as usize; // expand along row index
        let mut acc = self.zero_elem();
        let mut sign_pos = true;
        for col in 0..d {
            if colmask & (1 << col) == 0 {
                continue;
            }
            // entry M[row][col] = a_col^row
            let entry = &self.coaction[col][row];
            if !self.elem_is_zero(entry) {
                let sub = self.det_minor(colmask & !(1 << col), memo)?;
                let term = self.elem_mul(entry, &sub)?;
                let term = if sign_pos {
                    term
                } else {
                    term.iter().map(|p| p.neg()).collect()
                };
                acc = self.elem_add(&acc, &term)?;
            }
            sign_pos = !sign_pos;
        }
        memo.insert(colmask, acc.clone());
        Ok(acc)
    }

    /// The discriminant divisor det(bilinear), recomputed against the
    /// factorization disc = det T · (det M)² on every call.
    pub fn discriminant_divisor(&self) -> Result<Poly> {
        let tr = self.hopf.group_trace()?;
        let report = self.trace_map_with(&tr)?;
        let det_m = self.coaction_determinant()?;
        let det_m_sq = self.elem_mul(&det_m, &det_m)?;
        let t_matrix = self.hopf.trace_bilinear_matrix_with(&tr)?;
        let det_t = t_matrix.determinant()?;
        let rhs = self.elem_scale_scalar(&det_m_sq, &det_t);
        // disc lives in R ⊂ S as (disc, 0, ..., 0)
        let zero = Poly::zero(&self.base);
        for (k, coord) in rhs.iter().enumerate() {
            let want = if k == 0 { &report.disc } else { &zero };
            if coord != want {
                return Err(Error::Validation(
                    "disc != det T · (det M)^2; structure tensors are inconsistent".into(),
                ));
            }
        }
        Ok(report.disc)
    }

    /// Theorem-A test: free of rank o(G) plus nonsingular trace form.
    /// Without a point, decide the everywhere question through unit-ness of
    /// disc; with a point, evaluate disc there.
    pub fn torsor_test(&self, point: Option<&[Scalar]>) -> Result<TorsorVerdict> {
        if self.rank != self.hopf.dim() {
            return Ok(TorsorVerdict::RankMismatch {
                rank: self.rank,
                order: self.hopf.dim(),
            });
        }
        let report = self.trace_map()?;
        match point {
            None => Ok(if report.disc.is_unit() {
                TorsorVerdict::TorsorEverywhere
            } else {
                TorsorVerdict::NotTorsorEverywhere
            }),
            Some(pt) => {
                let v = report.disc.eval(pt)?;
                Ok(if v.is_zero() {
                    TorsorVerdict::NotTorsorAtPoint
                } else {
                    TorsorVerdict::TorsorAtPoint
                })
            }
        }
    }

    /// Cohomological tameness at the origin. Tame when a constant-coefficient
    /// combination of the trace values is exactly 1; not tame when every
    /// trace value lies in the irrelevant ideal; unknown otherwise (deciding
    /// would need polynomial witnesses, i.e. ideal membership).
    pub fn is_tame(&self) -> Result<Tameness> {
        let report = self.trace_map()?;
        if report
            .trace_values
            .iter()
            .all(|v| v.constant_term().is_zero())
        {
            return Ok(Tameness::NotTame);
        }
        // Solve  Σ c_i · tr_i = 1  with c_i in the field: one linear
        // equation per monomial present.
        let field = self.base.field;
        let mut monomials: Vec<Vec<u32>> = Vec::new();
        for v in &report.trace_values {
            for (e, _) in v.terms() {
                if !monomials.contains(e) {
                    monomials.push(e.clone());
                }
            }
        }
        monomials.sort();
        let constant = vec![0u32; self.base.num_vars()];
        if !monomials.contains(&constant) {
            monomials.push(constant.clone());
            monomials.sort();
        }
        let rows = monomials.len();
        let cols = self.rank + 1; // augmented column
        let mut data = vec![field.zero(); rows * cols];
        for (r, mono) in monomials.iter().enumerate() {
            for (i, v) in report.trace_values.iter().enumerate() {
                if let Some((_, c)) = v.terms().find(|(e, _)| *e == mono) {
                    data[r * cols + i] = c.clone();
                }
            }
            if *mono == constant {
                data[r * cols + self.rank] = field.one();
            }
        }
        // Consistency of the augmented system via elimination.
        let m = Matrix::new(rows, cols, data)?;
        if augmented_consistent(&m, self.rank) {
            Ok(Tameness::Tame)
        } else {
            Ok(Tameness::Unknown)
        }
    }

    /// Evidence diagnostic for the open question "does the trace send the
    /// maximal ideal into the maximal ideal": every non-constant basis
    /// element must have its trace in the irrelevant ideal.
    pub fn check_maximal_into_maximal(&self) -> Result<bool> {
        let report = self.trace_map()?;
        Ok(report
            .trace_values
            .iter()
            .skip(1)
            .all(|v| v.constant_term().is_zero()))
    }
}

/// Gaussian elimination on [A | b]: is b in the column space of A?
fn augmented_consistent(m: &Matrix<Scalar>, unknowns: usize) -> bool {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut r = 0;
    for c in 0..unknowns {
        let mut pivot = None;
        for i in r..rows {
            if !a.at(i, c).is_zero() {
                pivot = Some(i);
                break;
            }
        }
        let Some(pi) = pivot else { continue };
        if pi != r {
            for j in 0..cols {
                let tmp = a.at(r, j).clone();
                a.set(r, j, a.at(pi, j).clone());
                a.set(pi, j, tmp);
            }
        }
        let inv = a.at(r, c).inv().expect("nonzero pivot");
        for j in 0..cols {
            a.set(r, j, a.at(r, j).mul(&inv));
        }
        for i in 0..rows {
            if i != r && !a.at(i, c).is_zero() {
                let f = a.at(i, c).clone();
                for j in 0..cols {
                    let v = a.at(i, j).sub(&f.mul(a.at(r, j)));
                    a.set(i, j, v);
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    // Inconsistent iff some row is (0 ... 0 | nonzero).
    for i in 0..rows {
        let lhs_zero = (0..unknowns).all(|j| a.at(i, j).is_zero());
        if lhs_zero && !a.at(i, unknowns).is_zero() {
            return false;
        }
    }
    true
}

// ---- builders ------------------------------------------------------------

/// S = R[t]/(t^n − f) with basis 1, t, ..., t^{n−1}; the multiplication
/// tensor comes from symbolic reduction of t^n.
pub fn cyclic_presentation(
    base: PolyRingSpec,
    n: u32,
    modulus_rhs: Poly,
    kind: CoactionKind,
) -> Result<CoactedAlgebra> {
    if n == 0 {
        return Err(Error::Invalid("modulus exponent must be positive".into()));
    }
    if modulus_rhs.ring() != &base {
        return Err(Error::RingMismatch("modulus is not over the base ring".into()));
    }
    let d = n as usize;
    let labels: Vec<String> = (0..d)
        .map(|i| match i {
            0 => "1".into(),
            1 => "t".into(),
            _ => format!("t^{i}"),
        })
        .collect();

    let zero = Poly::zero(&base);
    let one = Poly::one(&base);
    let mut mult = vec![vec![vec![zero.clone(); d]; d]; d];
    for i in 0..d {
        for j in 0..d {
            let e = i + j;
            if e < d {
                mult[i][j][e] = one.clone();
            } else {
                mult[i][j][e - d] = modulus_rhs.clone();
            }
        }
    }

    let field = base.field;
    let (hopf, coaction) = match kind {
        CoactionKind::Kummer => {
            let hopf = crate::hopf::build::mu_n(n as u64, field)?;
            // α#(t^i) = t^i ⊗ ζ^i
            let mut coaction = vec![vec![vec![zero.clone(); d]; d]; d];
            for (i, row) in coaction.iter_mut().enumerate() {
                row[i][i] = one.clone();
            }
            (hopf, coaction)
        }
        CoactionKind::Additive => {
            let FieldSpec::Prime { p } = field else {
                return Err(Error::Invalid(
                    "additive coaction needs positive characteristic".into(),
                ));
            };
            // n must be p^e
            let mut e = 0u32;
            let mut q = 1u64;
            while q < n as u64 {
                q *= p;
                e += 1;
            }
            if q != n as u64 {
                return Err(Error::Invalid(format!(
                    "additive coaction needs modulus exponent p^e, got {n} with p = {p}"
                )));
            }
            let hopf = crate::hopf::build::alpha_pe(e, field)?;
            // α#(t^i) = (t ⊗ 1 + 1 ⊗ ξ)^i: a_i^m = C(i,m) t^{i−m}
            let mut coaction = vec![vec![vec![zero.clone(); d]; d]; d];
            let mut row: Vec<u64> = vec![1];
            for i in 0..d {
                for (m, &b) in row.iter().enumerate() {
                    let c = field.from_i64(b as i64);
                    if !c.is_zero() {
                        coaction[i][m][i - m] = Poly::constant(&base, c);
                    }
                }
                let mut next = vec![1u64; i + 2];
                for j in 1..=i {
                    next[j] = (row[j - 1] + row[j]) % p;
                }
                row = next;
            }
            (hopf, coaction)
        }
    };
    CoactedAlgebra::new(base, labels, mult, hopf, coaction)
}

/// The trivial torsor S = R ⊗ O(G) with coaction id ⊗ ∇.
pub fn trivial_torsor(base: PolyRingSpec, hopf: HopfAlgebra) -> Result<CoactedAlgebra> {
    let o = hopf.dim();
    let zero = Poly::zero(&base);
    let mut labels: Vec<String> = hopf.basis_labels().to_vec();
    labels[0] = "1".into();
    let mut mult = vec![vec![vec![zero.clone(); o]; o]; o];
    for i in 0..o {
        for j in 0..o {
            for (k, c) in hopf.basis_product(i, j) {
                mult[i][j][*k] = Poly::constant(&base, c.clone());
            }
        }
    }
    // Demand the standard basis with b_0 = 1 so that s_1 = 1 holds on the
    // nose; constructors in this crate satisfy it.
    let unit = hopf.unit_dense();
    let standard_unit = unit[0].is_one() && unit.iter().skip(1).all(|c| c.is_zero());
    if !standard_unit {
        return Err(Error::Invalid(
            "trivial torsor builder needs a Hopf basis whose first element is 1".into(),
        ));
    }
    let mut coaction = vec![vec![vec![zero.clone(); o]; o]; o];
    for i in 0..o {
        for (j, m, c) in hopf.coproduct_terms(i) {
            coaction[i][*m][*j] = Poly::constant(&base, c.clone());
        }
    }
    CoactedAlgebra::new(base, labels, mult, hopf, coaction)
}

/// Install the trivial coaction s ↦ s ⊗ 1 on an existing algebra.
pub fn with_trivial_coaction(
    base: PolyRingSpec,
    basis_labels: Vec<String>,
    mult: Vec<Vec<SElem>>,
    hopf: HopfAlgebra,
) -> Result<CoactedAlgebra> {
    let d = basis_labels.len();
    let o = hopf.dim();
    let zero = Poly::zero(&base);
    let unit = hopf.unit_dense();
    let mut coaction = vec![vec![vec![zero.clone(); d]; o]; d];
    for (i, row) in coaction.iter_mut().enumerate() {
        for (m, slot) in row.iter_mut().enumerate() {
            slot[i] = Poly::constant(&base, unit[m].clone());
        }
    }
    CoactedAlgebra::new(base, basis_labels, mult, hopf, coaction)
}
