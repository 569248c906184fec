//! Finite-dimensional Hopf algebras by structure constants: axiom
//! validation, Cartier duality, left integrals, and the group trace Tr_G.
//!
//! Convention (matching the docs elsewhere in this crate): Δ and u are the
//! product and unit of the underlying algebra, ∇ and e the coproduct and
//! counit, ι the antipode. A finite group-scheme G enters as its function
//! algebra O(G); o(G) = dim O(G).

pub mod build;

use crate::error::{Error, Result};
use crate::exact::matrix::{ExactMatrix, Matrix};
use crate::exact::scalar::{FieldSpec, Scalar};
use crate::par;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Sparse coordinate vector, sorted by index, no zero entries.
pub type SparseVec = Vec<(usize, Scalar)>;
/// One coproduct summand: coefficient of b_j ⊗ b_k.
pub type CoprodTerm = (usize, usize, Scalar);

pub(crate) fn sv_from_map(m: BTreeMap<usize, Scalar>) -> SparseVec {
    m.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

pub(crate) fn sv_add_into(m: &mut BTreeMap<usize, Scalar>, idx: usize, c: &Scalar) {
    match m.get_mut(&idx) {
        Some(cur) => {
            *cur = cur.add(c);
            if cur.is_zero() {
                m.remove(&idx);
            }
        }
        None => {
            if !c.is_zero() {
                m.insert(idx, c.clone());
            }
        }
    }
}

fn sv_unit(index: usize, field: &FieldSpec) -> SparseVec {
    vec![(index, field.one())]
}

fn sv_to_dense(v: &SparseVec, dim: usize, field: &FieldSpec) -> Vec<Scalar> {
    let mut out = vec![field.zero(); dim];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

fn dense_to_sv(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// A finite-dimensional Hopf algebra over the ground field, stored sparsely.
#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    field: FieldSpec,
    dim: usize,
    basis_labels: Vec<String>,
    /// Coordinates of 1.
    unit: SparseVec,
    /// e(b_i), dense.
    counit: Vec<Scalar>,
    /// product[i * dim + j] = coordinates of b_i · b_j.
    product: Vec<SparseVec>,
    /// coproduct[i] = terms of ∇(b_i).
    coproduct: Vec<Vec<CoprodTerm>>,
    /// antipode[i] = coordinates of ι(b_i).
    antipode: Vec<SparseVec>,
}

/// Outcome of one named axiom check.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NamedCheck {
    pub name: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ValidationReport {
    pub checks: Vec<NamedCheck>,
    pub all_pass: bool,
}

impl ValidationReport {
    pub fn check(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.pass)
    }

    pub(crate) fn from_pairs(pairs: Vec<(&str, bool)>) -> Self {
        let checks: Vec<NamedCheck> = pairs
            .into_iter()
            .map(|(name, pass)| NamedCheck {
                name: name.to_string(),
                pass,
            })
            .collect();
        let all_pass = checks.iter().all(|c| c.pass);
        ValidationReport { checks, all_pass }
    }
}

/// Basis of the left-integral space { t : h·t = e(h)·t }.
#[derive(Clone, Debug)]
pub struct IntegralSpace {
    pub basis: Vec<Vec<Scalar>>,
}

impl IntegralSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// The trace functional Tr_G: a generator of the left integrals of O(G)^∨,
/// normalized to Tr_G(1) = 1 when possible.
#[derive(Clone, Debug)]
pub struct GroupTrace {
    pub functional: Vec<Scalar>,
    pub normalized: bool,
}

impl GroupTrace {
    pub fn apply_sparse(&self, v: &SparseVec) -> Scalar {
        let field = self.functional[0].field();
        let mut acc = field.zero();
        for (i, c) in v {
            acc = acc.add(&self.functional[*i].mul(c));
        }
        acc
    }

    pub fn apply_dense(&self, v: &[Scalar]) -> Scalar {
        let field = self.functional[0].field();
        let mut acc = field.zero();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&self.functional[i].mul(c));
            }
        }
        acc
    }

    /// Rescaled representative c·Tr_G (used by scale-covariance checks).
    pub fn scaled(&self, c: &Scalar) -> GroupTrace {
        GroupTrace {
            functional: self.functional.iter().map(|f| f.mul(c)).collect(),
            normalized: false,
        }
    }
}

impl HopfAlgebra {
    /// Assemble from dense structure-constant tensors, checking shapes.
    /// Axioms are NOT checked here; call `validate_hopf`.
    #[allow(clippy::too_many_arguments)]
    pub fn from_dense(
        field: FieldSpec,
        basis_labels: Vec<String>,
        unit: Vec<Scalar>,
        counit: Vec<Scalar>,
        product: Vec<Vec<Vec<Scalar>>>,
        coproduct: Vec<Vec<Vec<Scalar>>>,
        antipode: Vec<Vec<Scalar>>,
    ) -> Result<Self> {
        field.validate()?;
        let dim = basis_labels.len();
        if dim == 0 {
            return Err(Error::Dimension("dim must be at least 1".into()));
        }
        let want = |len: usize, what: &str| -> Result<()> {
            if len != dim {
                Err(Error::Dimension(format!(
                    "{what} has length {len}, expected {dim}"
                )))
            } else {
                Ok(())
            }
        };
        want(unit.len(), "unit vector")?;
        want(counit.len(), "counit vector")?;
        want(product.len(), "product tensor")?;
        want(coproduct.len(), "coproduct tensor")?;
        want(antipode.len(), "antipode matrix")?;
        for row in &product {
            want(row.len(), "product tensor row")?;
            for v in row {
                want(v.len(), "product coordinate vector")?;
            }
        }
        for grid in &coproduct {
            want(grid.len(), "coproduct grid")?;
            for v in grid {
                want(v.len(), "coproduct grid row")?;
            }
        }
        for v in &antipode {
            want(v.len(), "antipode row")?;
        }
        let all = unit
            .iter()
            .chain(counit.iter())
            .chain(product.iter().flatten().flatten())
            .chain(coproduct.iter().flatten().flatten())
            .chain(antipode.iter().flatten());
        for s in all {
            if s.field() != field {
                return Err(Error::FieldMismatch(
                    "structure constant outside the declared field".into(),
                ));
            }
        }
        if unit.iter().all(|c| c.is_zero()) {
            return Err(Error::Validation("unit vector is zero".into()));
        }

        let mut sparse_product = Vec::with_capacity(dim * dim);
        for row in &product {
            for v in row {
                sparse_product.push(dense_to_sv(v));
            }
        }
        let mut sparse_coprod = Vec::with_capacity(dim);
        for grid in &coproduct {
            let mut terms = Vec::new();
            for (j, row) in grid.iter().enumerate() {
                for (k, c) in row.iter().enumerate() {
                    if !c.is_zero() {
                        terms.push((j, k, c.clone()));
                    }
                }
            }
            sparse_coprod.push(terms);
        }
        Ok(HopfAlgebra {
            field,
            dim,
            basis_labels,
            unit: dense_to_sv(&unit),
            counit,
            product: sparse_product,
            coproduct: sparse_coprod,
            antipode: antipode.iter().map(|v| dense_to_sv(v)).collect(),
        })
    }

    pub(crate) fn from_sparse_parts(
        field: FieldSpec,
        basis_labels: Vec<String>,
        unit: SparseVec,
        counit: Vec<Scalar>,
        product: Vec<SparseVec>,
        coproduct: Vec<Vec<CoprodTerm>>,
        antipode: Vec<SparseVec>,
    ) -> Self {
        let dim = basis_labels.len();
        debug_assert_eq!(product.len(), dim * dim);
        debug_assert_eq!(coproduct.len(), dim);
        HopfAlgebra {
            field,
            dim,
            basis_labels,
            unit,
            counit,
            product,
            coproduct,
            antipode,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// o(G) = dim_k O(G).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn unit_vector(&self) -> &SparseVec {
        &self.unit
    }

    pub fn unit_dense(&self) -> Vec<Scalar> {
        sv_to_dense(&self.unit, self.dim, &self.field)
    }

    pub fn counit_vector(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.product[i * self.dim + j]
    }

    pub fn coproduct_terms(&self, i: usize) -> &[CoprodTerm] {
        &self.coproduct[i]
    }

    pub fn antipode_row(&self, i: usize) -> &SparseVec {
        &self.antipode[i]
    }

    /// Product of two coordinate vectors.
    pub fn mul_sparse(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, ci) in x {
            for (j, cj) in y {
                let c = ci.mul(cj);
                for (k, ck) in self.basis_product(*i, *j) {
                    sv_add_into(&mut acc, *k, &c.mul(ck));
                }
            }
        }
        sv_from_map(acc)
    }

    fn counit_of(&self, v: &SparseVec) -> Scalar {
        let mut acc = self.field.zero();
        for (i, c) in v {
            acc = acc.add(&self.counit[*i].mul(c));
        }
        acc
    }

    // ---- axiom validation ---------------------------------------------

    /// Run every Hopf axiom as a named pass/fail check.
    pub fn validate_hopf(&self) -> ValidationReport {
        let unit_ok = self.check_unit();
        let assoc_ok = self.check_associativity();
        let coassoc_ok = self.check_coassociativity();
        let counit_ok = self.check_counit();
        let bialg_ok = self.check_bialgebra();
        let (anti_l, anti_r) = self.check_antipode();
        ValidationReport::from_pairs(vec![
            ("associativity", assoc_ok),
            ("unit", unit_ok),
            ("coassociativity", coassoc_ok),
            ("counit", counit_ok),
            ("bialgebra_compatibility", bialg_ok),
            ("antipode_left", anti_l),
            ("antipode_right", anti_r),
        ])
    }

    fn check_unit(&self) -> bool {
        par::all_indexed(self.dim, |i| {
            let e_i = sv_unit(i, &self.field);
            self.mul_sparse(&self.unit, &e_i) == e_i && self.mul_sparse(&e_i, &self.unit) == e_i
        })
    }

    fn check_associativity(&self) -> bool {
        let d = self.dim;
        par::all_indexed(d * d, |ij| {
            let (i, j) = (ij / d, ij % d);
            let left = self.basis_product(i, j).clone();
            for k in 0..d {
                // (b_i b_j) b_k
                let mut lhs: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (l, c) in &left {
                    for (m, cm) in self.basis_product(*l, k) {
                        sv_add_into(&mut lhs, *m, &c.mul(cm));
                    }
                }
                // b_i (b_j b_k)
                let mut rhs: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (l, c) in self.basis_product(j, k) {
                    for (m, cm) in self.basis_product(i, *l) {
                        sv_add_into(&mut rhs, *m, &c.mul(cm));
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
            true
        })
    }

    fn check_coassociativity(&self) -> bool {
        par::all_indexed(self.dim, |i| {
            let mut lhs: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            let mut rhs: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            for (j, k, c) in &self.coproduct[i] {
                for (a, b, c2) in &self.coproduct[*j] {
                    let key = (*a, *b, *k);
                    let v = c.mul(c2);
                    match lhs.get_mut(&key) {
                        Some(cur) => {
                            *cur = cur.add(&v);
                            if cur.is_zero() {
                                lhs.remove(&key);
                            }
                        }
                        None => {
                            if !v.is_zero() {
                                lhs.insert(key, v);
                            }
                        }
                    }
                }
                for (a, b, c2) in &self.coproduct[*k] {
                    let key = (*j, *a, *b);
                    let v = c.mul(c2);
                    match rhs.get_mut(&key) {
                        Some(cur) => {
                            *cur = cur.add(&v);
                            if cur.is_zero() {
                                rhs.remove(&key);
                            }
                        }
                        None => {
                            if !v.is_zero() {
                                rhs.insert(key, v);
                            }
                        }
                    }
                }
            }
            lhs == rhs
        })
    }

    fn check_counit(&self) -> bool {
        par::all_indexed(self.dim, |i| {
            let mut left: BTreeMap<usize, Scalar> = BTreeMap::new();
            let mut right: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (j, k, c) in &self.coproduct[i] {
                sv_add_into(&mut left, *k, &self.counit[*j].mul(c));
                sv_add_into(&mut right, *j, &self.counit[*k].mul(c));
            }
            let e_i = sv_unit(i, &self.field);
            sv_from_map(left) == e_i && sv_from_map(right) == e_i
        })
    }

    /// ∇ and e are algebra morphisms.
    fn check_bialgebra(&self) -> bool {
        // ∇(1) = 1 ⊗ 1 and e(1) = 1
        let mut nabla_unit: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (u, cu) in &self.unit {
            for (j, k, c) in &self.coproduct[*u] {
                let key = (*j, *k);
                let v = cu.mul(c);
                match nabla_unit.get_mut(&key) {
                    Some(cur) => {
                        *cur = cur.add(&v);
                        if cur.is_zero() {
                            nabla_unit.remove(&key);
                        }
                    }
                    None => {
                        if !v.is_zero() {
                            nabla_unit.insert(key, v);
                        }
                    }
                }
            }
        }
        let mut unit_outer: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (a, ca) in &self.unit {
            for (b, cb) in &self.unit {
                unit_outer.insert((*a, *b), ca.mul(cb));
            }
        }
        if nabla_unit != unit_outer {
            return false;
        }
        if !self.counit_of(&self.unit).is_one() {
            return false;
        }

        let d = self.dim;
        par::all_indexed(d * d, |ij| {
            let (i, j) = (ij / d, ij % d);
            let prod = self.basis_product(i, j);
            // e(b_i b_j) = e(b_i) e(b_j)
            if self.counit_of(prod) != self.counit[i].mul(&self.counit[j]) {
                return false;
            }
            // ∇(b_i b_j) = ∇(b_i) ∇(b_j), accumulated flat then merged.
            let cap = self.coproduct[i].len() * self.coproduct[j].len();
            let mut rhs: Vec<(u64, Scalar)> = Vec::with_capacity(cap);
            for (a1, b1, c1) in &self.coproduct[i] {
                for (a2, b2, c2) in &self.coproduct[j] {
                    let c12 = c1.mul(c2);
                    for (u, cu) in self.basis_product(*a1, *a2) {
                        let cu12 = c12.mul(cu);
                        for (v, cv) in self.basis_product(*b1, *b2) {
                            rhs.push(((*u as u64) << 32 | *v as u64, cu12.mul(cv)));
                        }
                    }
                }
            }
            rhs.sort_unstable_by_key(|(k, _)| *k);
            let mut merged: Vec<(u64, Scalar)> = Vec::new();
            for (k, c) in rhs {
                match merged.last_mut() {
                    Some((lk, lc)) if *lk == k => {
                        *lc = lc.add(&c);
                    }
                    _ => merged.push((k, c)),
                }
            }
            merged.retain(|(_, c)| !c.is_zero());

            let mut lhs: BTreeMap<u64, Scalar> = BTreeMap::new();
            for (l, cl) in prod {
                for (a, b, c) in &self.coproduct[*l] {
                    let key = (*a as u64) << 32 | *b as u64;
                    let v = cl.mul(c);
                    match lhs.get_mut(&key) {
                        Some(cur) => {
                            *cur = cur.add(&v);
                            if cur.is_zero() {
                                lhs.remove(&key);
                            }
                        }
                        None => {
                            if !v.is_zero() {
                                lhs.insert(key, v);
                            }
                        }
                    }
                }
            }
            if lhs.len() != merged.len() {
                return false;
            }
            lhs.into_iter().zip(merged).all(|((k1, c1), (k2, c2))| k1 == k2 && c1 == c2)
        })
    }

    /// Both antipode identities Δ∘(ι⊗id)∘∇ = u∘e = Δ∘(id⊗ι)∘∇.
    fn check_antipode(&self) -> (bool, bool) {
        let left = par::all_indexed(self.dim, |i| {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (j, k, c) in &self.coproduct[i] {
                for (l, cl) in &self.antipode[*j] {
                    for (m, cm) in self.basis_product(*l, *k) {
                        sv_add_into(&mut acc, *m, &c.mul(cl).mul(cm));
                    }
                }
            }
            let want: BTreeMap<usize, Scalar> = self
                .unit
                .iter()
                .map(|(u, cu)| (*u, cu.mul(&self.counit[i])))
                .filter(|(_, c)| !c.is_zero())
                .collect();
            acc == want
        });
        let right = par::all_indexed(self.dim, |i| {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (j, k, c) in &self.coproduct[i] {
                for (l, cl) in &self.antipode[*k] {
                    for (m, cm) in self.basis_product(*j, *l) {
                        sv_add_into(&mut acc, *m, &c.mul(cl).mul(cm));
                    }
                }
            }
            let want: BTreeMap<usize, Scalar> = self
                .unit
                .iter()
                .map(|(u, cu)| (*u, cu.mul(&self.counit[i])))
                .filter(|(_, c)| !c.is_zero())
                .collect();
            acc == want
        });
        (left, right)
    }

    // ---- duality, integrals, traces ------------------------------------

    /// Cartier dual: algebra and coalgebra structures interchanged under
    /// linear duality.
    pub fn cartier_dual(&self) -> HopfAlgebra {
        let d = self.dim;
        let mut product: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); d * d];
        for i in 0..d {
            for (j, k, c) in &self.coproduct[i] {
                sv_add_into(&mut product[*j * d + *k], i, c);
            }
        }
        let mut coproduct: Vec<Vec<CoprodTerm>> = vec![Vec::new(); d];
        for i in 0..d {
            for j in 0..d {
                for (k, c) in self.basis_product(i, j) {
                    coproduct[*k].push((i, j, c.clone()));
                }
            }
        }
        for terms in &mut coproduct {
            terms.sort_by_key(|(j, k, _)| (*j, *k));
        }
        let antipode: Vec<SparseVec> = (0..d)
            .map(|i| {
                let mut col: Vec<(usize, Scalar)> = Vec::new();
                for (j, row) in self.antipode.iter().enumerate() {
                    for (k, c) in row {
                        if *k == i {
                            col.push((j, c.clone()));
                        }
                    }
                }
                col.sort_by_key(|(j, _)| *j);
                col
            })
            .collect();
        let labels = self
            .basis_labels
            .iter()
            .map(|l| match l.strip_suffix('^') {
                Some(base) => base.to_string(),
                None => format!("{l}^"),
            })
            .collect();
        HopfAlgebra {
            field: self.field,
            dim: d,
            basis_labels: labels,
            unit: dense_to_sv(&self.counit),
            counit: sv_to_dense(&self.unit, d, &self.field),
            product: product.into_iter().map(sv_from_map).collect(),
            coproduct,
            antipode,
        }
    }

    /// Structure constants agree with `other` (labels ignored).
    pub fn same_structure(&self, other: &HopfAlgebra) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.unit == other.unit
            && self.counit == other.counit
            && self.product == other.product
            && self.coproduct == other.coproduct
            && self.antipode == other.antipode
    }

    /// Left integrals { t : b_i·t = e(b_i)·t for all i }, computed by
    /// intersecting kernels one algebra generator at a time.
    pub fn left_integrals(&self) -> IntegralSpace {
        let d = self.dim;
        let field = self.field;
        // Columns spanning the current candidate space.
        let mut basis: Vec<Vec<Scalar>> = (0..d)
            .map(|i| {
                let mut v = vec![field.zero(); d];
                v[i] = field.one();
                v
            })
            .collect();
        for i in 0..d {
            if basis.is_empty() {
                break;
            }
            // Constraint matrix C with C[:, c] = b_i * basis[c] - e(b_i) basis[c].
            let mut data = vec![field.zero(); d * basis.len()];
            for (c, col) in basis.iter().enumerate() {
                let mut out = vec![field.zero(); d];
                for (t, ct) in col.iter().enumerate() {
                    if ct.is_zero() {
                        continue;
                    }
                    for (k, ck) in self.basis_product(i, t) {
                        out[*k] = out[*k].add(&ct.mul(ck));
                    }
                }
                let e_i = &self.counit[i];
                for (r, o) in out.iter().enumerate() {
                    data[r * basis.len() + c] = o.sub(&e_i.mul(&col[r]));
                }
            }
            let cm = Matrix::new(d, basis.len(), data).expect("shape");
            let ker = cm.solve_kernel().expect("uniform field");
            basis = ker
                .iter()
                .map(|kv| {
                    let mut v = vec![field.zero(); d];
                    for (c, coef) in kv.iter().enumerate() {
                        if coef.is_zero() {
                            continue;
                        }
                        for (r, b) in basis[c].iter().enumerate() {
                            v[r] = v[r].add(&coef.mul(b));
                        }
                    }
                    v
                })
                .collect();
        }
        // Deterministic representatives: first nonzero coordinate = 1.
        for v in &mut basis {
            if let Some(first) = v.iter().find(|c| !c.is_zero()) {
                let inv = first.inv().expect("nonzero");
                for c in v.iter_mut() {
                    *c = c.mul(&inv);
                }
            }
        }
        IntegralSpace { basis }
    }

    /// Tr_G: the distinguished generator of the left integrals of O(G)^∨.
    /// Rescaled so Tr_G(1) = 1 when that value is nonzero; otherwise the
    /// first nonzero coordinate is pinned to 1.
    pub fn group_trace(&self) -> Result<GroupTrace> {
        let dual = self.cartier_dual();
        let ints = dual.left_integrals();
        if ints.dimension() != 1 {
            return Err(Error::Validation(format!(
                "left-integral space of the dual has dimension {}, expected 1 (corrupt input?)",
                ints.dimension()
            )));
        }
        let mut functional = ints.basis[0].clone();
        let mut at_one = self.field.zero();
        for (u, cu) in &self.unit {
            at_one = at_one.add(&functional[*u].mul(cu));
        }
        let normalized = !at_one.is_zero();
        if normalized {
            let inv = at_one.inv().expect("nonzero");
            for c in &mut functional {
                *c = c.mul(&inv);
            }
        }
        Ok(GroupTrace {
            functional,
            normalized,
        })
    }

    /// Maschke test: true iff the unnormalized integral of O(G)^∨ does not
    /// kill 1.
    pub fn is_linearly_reductive(&self) -> Result<bool> {
        Ok(self.group_trace()?.normalized)
    }

    /// T = (Tr_G(γ_m γ_n))_{m,n}: symmetric and nonsingular for genuine
    /// group-scheme function algebras.
    pub fn trace_bilinear_matrix(&self) -> Result<ExactMatrix> {
        let tr = self.group_trace()?;
        self.trace_bilinear_matrix_with(&tr)
    }

    pub fn trace_bilinear_matrix_with(&self, tr: &GroupTrace) -> Result<ExactMatrix> {
        let d = self.dim;
        let mut m = Matrix::filled(d, d, self.field.zero());
        for i in 0..d {
            for j in 0..d {
                m.set(i, j, tr.apply_sparse(self.basis_product(i, j)));
            }
        }
        if !m.is_symmetric() {
            return Err(Error::Validation(
                "trace bilinear form is not symmetric (non-commutative input?)".into(),
            ));
        }
        if m.determinant()?.is_zero() {
            return Err(Error::Validation(
                "trace bilinear form is singular (input is not a Hopf algebra of a group-scheme)"
                    .into(),
            ));
        }
        Ok(m)
    }

    /// (id ⊗ Tr_G)(∇(γ)) as a coordinate vector; used by the invariance
    /// check Tr_G(γ)·1 = (id ⊗ Tr_G)(∇(γ)).
    pub fn id_tensor_trace(&self, tr: &GroupTrace, i: usize) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (j, k, c) in &self.coproduct[i] {
            out[*j] = out[*j].add(&c.mul(&tr.functional[*k]));
        }
        out
    }
}
