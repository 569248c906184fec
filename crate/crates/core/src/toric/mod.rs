//! Normal affine semigroup rings given by cone rays, torus-invariant Weil
//! divisors, section modules R(iD), Veronese-type cyclic covers, Veronese
//! subrings, and divisor class groups.
//!
//! The semigroup of record is the saturated one: all lattice points of Z^d
//! meeting every ray inequality. The generator list is Hilbert-basis
//! metadata used by module-generator computations.

use crate::error::{Error, Result};
use crate::exact::matrix::Matrix;
use crate::exact::snf::{smith_normal_form, IntMatrix};
use num::bigint::BigInt;
use num::{Integer, Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineSemigroup {
    pub rank: usize,
    /// Primitive inner normals of the dual cone.
    pub rays: Vec<Vec<i64>>,
    /// Hilbert generators of the semigroup.
    pub generators: Vec<Vec<i64>>,
}

/// Torus-invariant Weil divisor: one integer coefficient per ray.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToricDivisor {
    pub coeffs: Vec<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CyclicCoverSpec {
    pub divisor: ToricDivisor,
    pub n: i64,
    /// m0 with <m0, v_rho> = -n * d_rho for every ray.
    pub principal_witness: Vec<i64>,
    pub cover: AffineSemigroup,
    /// d x (d+1) projection onto cover coordinates; kills (m0, n).
    pub lattice_projection: Vec<Vec<i64>>,
    /// (d+1) x d section with projection * section = identity.
    pub lattice_section: Vec<Vec<i64>>,
    pub kummer_type: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassGroupReport {
    /// Invariant factors of the cokernel of the ray-pairing map; 0 encodes
    /// a free Z factor, units are dropped.
    pub invariant_factors: Vec<i64>,
    pub torsion_orders: Vec<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LocalGradedReport {
    pub holds: bool,
    /// (i, f, j, g) with f ∈ R(iD), g ∈ R(jD), f + g = m0.
    pub witness: Option<(i64, Vec<i64>, i64, Vec<i64>)>,
}

fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |acc, &x| acc.gcd(&x))
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn to_int_matrix(rows: &[Vec<i64>]) -> IntMatrix {
    let r = rows.len();
    let c = rows.first().map(|v| v.len()).unwrap_or(0);
    let data: Vec<BigInt> = rows.iter().flatten().map(|&v| BigInt::from(v)).collect();
    Matrix::new(r, c, data).expect("rectangular")
}

fn big_to_i64(b: &BigInt) -> Result<i64> {
    i64::try_from(b).map_err(|_| Error::Invalid("integer overflow in lattice computation".into()))
}

/// Solve M x = b over the integers via Smith normal form.
fn solve_integer(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let (u, d, v) = smith_normal_form(m);
    let ub: Vec<BigInt> = (0..u.rows())
        .map(|i| (0..u.cols()).map(|j| u.at(i, j) * &b[j]).sum())
        .collect();
    let k = m.rows().min(m.cols());
    let mut y = vec![BigInt::zero(); m.cols()];
    for i in 0..u.rows() {
        if i < k && !d.at(i, i).is_zero() {
            let (q, r) = ub[i].div_rem(d.at(i, i));
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !ub[i].is_zero() {
            return None;
        }
    }
    let x: Vec<BigInt> = (0..v.rows())
        .map(|i| (0..v.cols()).map(|j| v.at(i, j) * &y[j]).sum())
        .collect();
    Some(x)
}

impl AffineSemigroup {
    pub fn new(rank: usize, rays: Vec<Vec<i64>>, generators: Vec<Vec<i64>>) -> Result<Self> {
        let s = AffineSemigroup {
            rank,
            rays,
            generators,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if self.rank == 0 {
            return Err(Error::Invalid("lattice rank must be positive".into()));
        }
        if self.rays.is_empty() {
            return Err(Error::Invalid("at least one ray required".into()));
        }
        for v in &self.rays {
            if v.len() != self.rank {
                return Err(Error::Dimension("ray length differs from rank".into()));
            }
            let g = gcd_all(v);
            if g == 0 {
                return Err(Error::Invalid("zero ray".into()));
            }
            if g != 1 {
                return Err(Error::Invalid(format!("ray {v:?} is not primitive")));
            }
        }
        for m in &self.generators {
            if m.len() != self.rank {
                return Err(Error::Dimension("generator length differs from rank".into()));
            }
            for v in &self.rays {
                if dot(m, v) < 0 {
                    return Err(Error::Invalid(format!(
                        "generator {m:?} violates ray {v:?}"
                    )));
                }
            }
        }
        // Pointedness of the dual cone: rays span, so the only lattice point
        // pairing to zero against every ray is the origin.
        let ray_mat = to_int_matrix(&self.rays);
        let (_, d, _) = smith_normal_form(&ray_mat);
        let rank = (0..self.rank.min(self.rays.len()))
            .filter(|&i| !d.at(i, i).is_zero())
            .count();
        if rank != self.rank {
            return Err(Error::Invalid(
                "cone is not pointed/full-dimensional: rays do not span".into(),
            ));
        }
        // Full-dimensionality: an interior vector must exist.
        self.interior_point()?;
        Ok(())
    }

    pub fn membership(&self, m: &[i64]) -> bool {
        self.rays.iter().all(|v| dot(m, v) >= 0)
    }

    /// Strictly positive pairing against every ray; grading used to order
    /// Hilbert-basis searches, and the witness for class nonemptiness.
    pub fn interior_point(&self) -> Result<Vec<i64>> {
        let mut cand = vec![0i64; self.rank];
        for g in &self.generators {
            for (c, x) in cand.iter_mut().zip(g) {
                *c += x;
            }
        }
        if !cand.is_empty() && self.rays.iter().all(|v| dot(&cand, v) > 0) {
            return Ok(cand);
        }
        // Small box search as a fallback.
        let bound = 6i64;
        let mut best: Option<Vec<i64>> = None;
        let mut cur = vec![-bound; self.rank];
        loop {
            if self.rays.iter().all(|v| dot(&cur, v) > 0) {
                let norm: i64 = cur.iter().map(|x| x.abs()).sum();
                if best
                    .as_ref()
                    .map(|b| norm < b.iter().map(|x| x.abs()).sum())
                    .unwrap_or(true)
                {
                    best = Some(cur.clone());
                }
            }
            let mut pos = 0;
            loop {
                if pos == self.rank {
                    return best.ok_or_else(|| {
                        Error::Invalid("cone interior is empty: not full-dimensional".into())
                    });
                }
                cur[pos] += 1;
                if cur[pos] <= bound {
                    break;
                }
                cur[pos] = -bound;
                pos += 1;
            }
        }
    }

    /// All semigroup points with every coordinate in [-bound, bound],
    /// lexicographically ordered. Slices of the box along the first
    /// coordinate are enumerated in parallel and concatenated in order.
    pub fn enumerate_points(&self, bound: i64) -> Vec<Vec<i64>> {
        let width = (2 * bound + 1) as usize;
        let slices = crate::par::map_indexed(width, |i| {
            let first = -bound + i as i64;
            self.enumerate_slice(first, bound)
        });
        slices.into_iter().flatten().collect()
    }

    fn enumerate_slice(&self, first: i64, bound: i64) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        if self.rank == 1 {
            let cur = vec![first];
            if self.membership(&cur) {
                out.push(cur);
            }
            return out;
        }
        let mut cur = vec![-bound; self.rank];
        cur[0] = first;
        'outer: loop {
            if self.membership(&cur) {
                out.push(cur.clone());
            }
            let mut pos = self.rank;
            loop {
                if pos == 1 {
                    break 'outer;
                }
                pos -= 1;
                cur[pos] += 1;
                if cur[pos] <= bound {
                    break;
                }
                cur[pos] = -bound;
            }
        }
        out
    }

    /// Lattice points of the section module R(iD) within the box:
    /// <m, v_rho> + i*d_rho >= 0 for every ray.
    pub fn sections(&self, divisor: &ToricDivisor, i: i64, bound: i64) -> Result<Vec<Vec<i64>>> {
        self.check_divisor(divisor)?;
        if bound <= 0 {
            return Err(Error::Invalid("degree bound must be positive".into()));
        }
        let mut out = Vec::new();
        let mut cur = vec![-bound; self.rank];
        'outer: loop {
            if self.section_membership(divisor, i, &cur) {
                out.push(cur.clone());
            }
            let mut pos = self.rank;
            loop {
                if pos == 0 {
                    break 'outer;
                }
                pos -= 1;
                cur[pos] += 1;
                if cur[pos] <= bound {
                    break;
                }
                cur[pos] = -bound;
            }
        }
        Ok(out)
    }

    pub fn section_membership(&self, divisor: &ToricDivisor, i: i64, m: &[i64]) -> bool {
        self.rays
            .iter()
            .zip(&divisor.coeffs)
            .all(|(v, d)| dot(m, v) + i * d >= 0)
    }

    fn check_divisor(&self, divisor: &ToricDivisor) -> Result<()> {
        if divisor.coeffs.len() != self.rays.len() {
            return Err(Error::Dimension(
                "divisor coefficient count differs from ray count".into(),
            ));
        }
        Ok(())
    }

    /// Minimal generators of R(iD) as a module over the semigroup ring,
    /// within the box. A point is minimal when no Hilbert generator can be
    /// subtracted without leaving the module (an exact test).
    pub fn section_module_generators(
        &self,
        divisor: &ToricDivisor,
        i: i64,
        bound: i64,
    ) -> Result<Vec<Vec<i64>>> {
        let pts = self.sections(divisor, i, bound)?;
        Ok(pts
            .into_iter()
            .filter(|m| {
                !self.generators.iter().any(|h| {
                    let diff: Vec<i64> = m.iter().zip(h).map(|(a, b)| a - b).collect();
                    self.section_membership(divisor, i, &diff)
                })
            })
            .collect())
    }

    /// Smallest n >= 1 with nD principal, together with an integer witness
    /// m0 solving <m0, v_rho> = -n*d_rho.
    pub fn divisor_index(
        &self,
        divisor: &ToricDivisor,
        max_n: i64,
    ) -> Result<(i64, Vec<i64>)> {
        self.check_divisor(divisor)?;
        if max_n < 1 {
            return Err(Error::Invalid("max_n must be at least 1".into()));
        }
        let ray_mat = to_int_matrix(&self.rays);
        for n in 1..=max_n {
            let b: Vec<BigInt> = divisor
                .coeffs
                .iter()
                .map(|&d| BigInt::from(-n * d))
                .collect();
            if let Some(x) = solve_integer(&ray_mat, &b) {
                let m0: Result<Vec<i64>> = x.iter().map(big_to_i64).collect();
                return Ok((n, m0?));
            }
        }
        Err(Error::Invalid(format!(
            "divisor index exceeds max_n = {max_n}"
        )))
    }

    /// Cl = Z^{rays} / image of the character lattice, by Smith normal form
    /// of the ray-pairing matrix.
    pub fn class_group(&self) -> ClassGroupReport {
        let p = to_int_matrix(&self.rays); // rows: rays, cols: lattice
        let (_, d, _) = smith_normal_form(&p);
        let k = p.rows().min(p.cols());
        let mut invariant_factors = Vec::new();
        let mut rank_im = 0;
        for i in 0..k {
            let di = d.at(i, i);
            if di.is_zero() {
                continue;
            }
            rank_im += 1;
            let v = i64::try_from(di).unwrap_or(i64::MAX);
            if v != 1 {
                invariant_factors.push(v);
            }
        }
        let free = self.rays.len() - rank_im;
        invariant_factors.extend(std::iter::repeat_n(0, free));
        let torsion_orders: Vec<i64> = invariant_factors
            .iter()
            .copied()
            .filter(|&f| f > 1)
            .collect();
        ClassGroupReport {
            invariant_factors,
            torsion_orders,
        }
    }

    /// Hilbert generators recomputed by minimality within the box. Complete
    /// whenever the box comfortably exceeds the generator degrees.
    pub fn hilbert_generators(&self, bound: i64) -> Vec<Vec<i64>> {
        let mut pts: Vec<Vec<i64>> = self
            .enumerate_points(bound)
            .into_iter()
            .filter(|m| m.iter().any(|&x| x != 0))
            .collect();
        let grade = |m: &Vec<i64>| -> i64 { self.rays.iter().map(|v| dot(m, v)).sum() };
        pts.sort_by_key(|m| (grade(m), m.clone()));
        let mut gens: Vec<Vec<i64>> = Vec::new();
        'next: for p in pts {
            for g in &gens {
                let diff: Vec<i64> = p.iter().zip(g).map(|(a, b)| a - b).collect();
                if diff.iter().any(|&x| x != 0) && self.membership(&diff) {
                    continue 'next;
                }
            }
            gens.push(p);
        }
        gens
    }

    /// Every box point is reachable from the stated generators (saturation/
    /// generation diagnostic used by tests).
    pub fn generators_complete_within(&self, bound: i64) -> bool {
        let pts = self.enumerate_points(bound);
        'next: for p in pts {
            if p.iter().all(|&x| x == 0) {
                continue;
            }
            if self.generators.contains(&p) {
                continue;
            }
            for g in &self.generators {
                let diff: Vec<i64> = p.iter().zip(g).map(|(a, b)| a - b).collect();
                if self.membership(&diff) {
                    continue 'next;
                }
            }
            return false;
        }
        true
    }

    /// The n-th Veronese under an integer grading functional that is
    /// positive on every generator. Returns the re-coordinatized subring
    /// and the lattice basis (columns) embedding new coordinates into old.
    pub fn veronese(
        &self,
        n: i64,
        grading: &[i64],
        bound: i64,
    ) -> Result<(AffineSemigroup, Vec<Vec<i64>>)> {
        if grading.len() != self.rank {
            return Err(Error::Dimension("grading length differs from rank".into()));
        }
        if n < 1 {
            return Err(Error::Invalid("veronese degree must be positive".into()));
        }
        for g in &self.generators {
            if dot(g, grading) <= 0 {
                return Err(Error::Invalid(format!(
                    "grading not positive on generator {g:?}"
                )));
            }
        }
        if n == 1 {
            let id: Vec<Vec<i64>> = (0..self.rank)
                .map(|i| (0..self.rank).map(|j| i64::from(i == j)).collect())
                .collect();
            return Ok((self.clone(), id));
        }
        // Sublattice L' = { m : <grading, m> ≡ 0 mod n } via the Smith form
        // of the 1 x d grading matrix.
        let w = to_int_matrix(&[grading.to_vec()]);
        let (_, d, v) = smith_normal_form(&w);
        let g = d.at(0, 0).clone();
        let scale = if g.is_zero() {
            BigInt::from(1)
        } else {
            BigInt::from(n) / g.gcd(&BigInt::from(n))
        };
        // Columns of V, first one scaled.
        let mut basis: Vec<Vec<i64>> = Vec::with_capacity(self.rank);
        for col in 0..self.rank {
            let mut b = Vec::with_capacity(self.rank);
            for row in 0..self.rank {
                let val = if col == 0 {
                    v.at(row, col) * &scale
                } else {
                    v.at(row, col).clone()
                };
                b.push(big_to_i64(&val)?);
            }
            basis.push(b);
        }
        // New rays: pairing of basis columns with each old ray, primitivized.
        let mut new_rays = Vec::new();
        for ray in &self.rays {
            let mut nr: Vec<i64> = basis.iter().map(|b| dot(b, ray)).collect();
            let g = gcd_all(&nr);
            if g > 1 {
                for x in &mut nr {
                    *x /= g;
                }
            }
            if !new_rays.contains(&nr) {
                new_rays.push(nr);
            }
        }
        let mut sub = AffineSemigroup {
            rank: self.rank,
            rays: new_rays,
            generators: vec![],
        };
        sub.generators = sub.hilbert_generators(bound);
        sub.validate()?;
        Ok((sub, basis))
    }

    /// Veronese-type cyclic cover C(D; a, n) realized in the quotient of
    /// Z^{d+1} by the relation identifying the level-n piece with the
    /// principal witness.
    pub fn cyclic_cover(
        &self,
        divisor: &ToricDivisor,
        n: i64,
        bound: i64,
    ) -> Result<CyclicCoverSpec> {
        self.check_divisor(divisor)?;
        if n < 1 {
            return Err(Error::Invalid("cover degree must be positive".into()));
        }
        let (idx, idx_witness) = self.divisor_index(divisor, n).map_err(|_| {
            Error::Invalid(format!(
                "n'D is not principal for any n' <= {n}; no cyclic cover of degree {n}"
            ))
        })?;
        if idx != n {
            // The witness for nD is forced to be (n/idx) times the index
            // witness, so (m0, n) has content n/idx > 1.
            return Err(Error::Invalid(format!(
                "({:?}, {n}) is not primitive: the divisor has index {idx} < {n}, so the \
                 degree-{n} cover is non-reduced; take n equal to the index",
                idx_witness.iter().map(|x| x * (n / idx)).collect::<Vec<_>>()
            )));
        }
        let m0 = idx_witness;
        let kummer_type = idx == 1;
        for (v, dcoef) in self.rays.iter().zip(&divisor.coeffs) {
            if dot(&m0, v) != -n * dcoef {
                return Err(Error::Validation("witness equation failed".into()));
            }
        }
        let d = self.rank;
        // relation vector (m0, n) in Z^{d+1}
        let mut rel: Vec<i64> = m0.clone();
        rel.push(n);
        if gcd_all(&rel) != 1 {
            return Err(Error::Invalid(format!(
                "({rel:?}) is not primitive; non-minimal n gives a non-reduced cover"
            )));
        }

        // Projection P: Z^{d+1} -> Z^d with kernel Z*rel, and a section S.
        let (projection, section) = if n == 1 {
            let mut p: Vec<Vec<i64>> = Vec::with_capacity(d);
            for i in 0..d {
                let mut row = vec![0i64; d + 1];
                row[i] = 1;
                row[d] = -m0[i];
                p.push(row);
            }
            let mut s: Vec<Vec<i64>> = Vec::with_capacity(d + 1);
            for i in 0..d {
                let mut row = vec![0i64; d];
                row[i] = 1;
                s.push(row);
            }
            s.push(vec![0i64; d]);
            (p, s)
        } else {
            let rel_col = to_int_matrix(&rel.iter().map(|&x| vec![x]).collect::<Vec<_>>());
            let (u, dd, _) = smith_normal_form(&rel_col);
            if dd.at(0, 0) != &BigInt::from(1) {
                return Err(Error::Invalid("relation vector not primitive".into()));
            }
            // U * rel = ±e1; normalize sign so U * rel = e1.
            let mut u_rows: Vec<Vec<i64>> = (0..=d)
                .map(|i| (0..=d).map(|j| big_to_i64(u.at(i, j)).unwrap_or(i64::MAX)).collect())
                .collect();
            if dot(&u_rows[0], &rel) == -1 {
                for x in &mut u_rows[0] {
                    *x = -*x;
                }
            }
            debug_assert_eq!(dot(&u_rows[0], &rel), 1);
            let u_fixed = to_int_matrix(&u_rows);
            let u_inv = invert_unimodular(&u_fixed)?;
            let projection: Vec<Vec<i64>> = u_rows[1..].to_vec();
            // Section: columns 1..=d of U^{-1}.
            let mut section: Vec<Vec<i64>> = Vec::with_capacity(d + 1);
            for i in 0..=d {
                let mut row = Vec::with_capacity(d);
                for j in 1..=d {
                    row.push(big_to_i64(u_inv.at(i, j))?);
                }
                section.push(row);
            }
            (projection, section)
        };

        // Transported rays: pair the section with the extended rays
        // (v_rho, d_rho); the witness equation makes this class-independent.
        let mut new_rays: Vec<Vec<i64>> = Vec::new();
        for (v, dcoef) in self.rays.iter().zip(&divisor.coeffs) {
            let mut ext = v.clone();
            ext.push(*dcoef);
            debug_assert_eq!(dot(&rel, &ext), 0);
            let mut nr: Vec<i64> = (0..d)
                .map(|j| (0..=d).map(|i| section[i][j] * ext[i]).sum())
                .collect();
            let g = gcd_all(&nr);
            if g == 0 {
                return Err(Error::Invalid("degenerate transported ray".into()));
            }
            if g > 1 {
                for x in &mut nr {
                    *x /= g;
                }
            }
            if !new_rays.contains(&nr) {
                new_rays.push(nr);
            }
        }

        // Transport generating sections of each graded piece and minimalize.
        let mut cover = AffineSemigroup {
            rank: d,
            rays: new_rays,
            generators: vec![],
        };
        let mut candidates: Vec<Vec<i64>> = Vec::new();
        for i in 0..n {
            // Level 0 contributes the Hilbert basis of R; positive levels
            // contribute the module generators of R(iD).
            let level_gens = if i == 0 {
                self.generators.clone()
            } else {
                self.section_module_generators(divisor, i, bound)?
            };
            for gsec in level_gens {
                let mut ext = gsec.clone();
                ext.push(i);
                let y: Vec<i64> = projection.iter().map(|row| dot(row, &ext)).collect();
                if y.iter().any(|&x| x != 0) && !candidates.contains(&y) {
                    debug_assert!(cover.membership(&y));
                    candidates.push(y);
                }
            }
        }
        let grade = |m: &Vec<i64>, rays: &Vec<Vec<i64>>| -> i64 {
            rays.iter().map(|v| dot(m, v)).sum()
        };
        candidates.sort_by_key(|m| (grade(m, &cover.rays), m.clone()));
        let mut gens: Vec<Vec<i64>> = Vec::new();
        'cand: for p in candidates {
            for g in &gens {
                let diff: Vec<i64> = p.iter().zip(g).map(|(a, b)| a - b).collect();
                if diff.iter().any(|&x| x != 0) && cover.membership(&diff) {
                    continue 'cand;
                }
            }
            gens.push(p);
        }
        cover.generators = gens;
        cover.validate()?;

        Ok(CyclicCoverSpec {
            divisor: divisor.clone(),
            n,
            principal_witness: m0,
            cover,
            lattice_projection: projection,
            lattice_section: section,
            kummer_type,
        })
    }

    /// Locality of the graded cover: no product of positive-degree section
    /// generators lands on the principal witness exactly.
    pub fn check_local_graded(
        &self,
        divisor: &ToricDivisor,
        n: i64,
        bound: i64,
    ) -> Result<LocalGradedReport> {
        self.check_divisor(divisor)?;
        let ray_mat = to_int_matrix(&self.rays);
        let b: Vec<BigInt> = divisor
            .coeffs
            .iter()
            .map(|&d| BigInt::from(-n * d))
            .collect();
        let m0: Vec<i64> = match solve_integer(&ray_mat, &b) {
            Some(x) => x.iter().map(big_to_i64).collect::<Result<_>>()?,
            None => {
                return Err(Error::Invalid(format!("{n}D is not principal")));
            }
        };
        for i in 1..n {
            let j = n - i;
            let fs = self.section_module_generators(divisor, i, bound)?;
            let gs = self.section_module_generators(divisor, j, bound)?;
            for f in &fs {
                for g in &gs {
                    let sum: Vec<i64> = f.iter().zip(g).map(|(a, b)| a + b).collect();
                    if sum == m0 {
                        return Ok(LocalGradedReport {
                            holds: false,
                            witness: Some((i, f.clone(), j, g.clone())),
                        });
                    }
                }
            }
        }
        Ok(LocalGradedReport {
            holds: true,
            witness: None,
        })
    }
}

/// Inverse of a unimodular integer matrix via the adjugate.
fn invert_unimodular(m: &IntMatrix) -> Result<IntMatrix> {
    let n = m.rows();
    if n != m.cols() {
        return Err(Error::NonSquare {
            rows: n,
            cols: m.cols(),
        });
    }
    let det = m.determinant()?;
    let one = BigInt::from(1);
    if det.abs() != one {
        return Err(Error::Invalid("matrix is not unimodular".into()));
    }
    let mut inv = Matrix::filled(n, n, BigInt::zero());
    for i in 0..n {
        for j in 0..n {
            // cofactor expansion: inv[j][i] = (-1)^{i+j} det(minor_ij) / det
            let mut minor_data = Vec::with_capacity((n - 1) * (n - 1));
            for r in 0..n {
                if r == i {
                    continue;
                }
                for c in 0..n {
                    if c == j {
                        continue;
                    }
                    minor_data.push(m.at(r, c).clone());
                }
            }
            let minor = Matrix::new(n - 1, n - 1, minor_data)?;
            let mut cof = if n == 1 {
                one.clone()
            } else {
                minor.determinant()?
            };
            if (i + j) % 2 == 1 {
                cof = -cof;
            }
            // divide by det (±1)
            let val = if det == one { cof } else { -cof };
            inv.set(j, i, val);
        }
    }
    Ok(inv)
}

// ---- builtins --------------------------------------------------------------

/// Z^d_{>=0}: the polynomial ring.
pub fn plane(rank: usize) -> AffineSemigroup {
    let rays: Vec<Vec<i64>> = (0..rank)
        .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
        .collect();
    AffineSemigroup {
        rank,
        rays: rays.clone(),
        generators: rays,
    }
}

/// The n-th Veronese of the plane: points (a, b) with 0 <= a <= n*b, the
/// cone over the degree-n rational normal curve.
pub fn veronese_plane(n: i64) -> AffineSemigroup {
    AffineSemigroup {
        rank: 2,
        rays: vec![vec![1, 0], vec![-1, n]],
        generators: (0..=n).map(|i| vec![i, 1]).collect(),
    }
}

/// The index-n divisor on `veronese_plane(n)` used throughout the test
/// fixtures: coefficient 1 on the first ray.
pub fn veronese_divisor() -> ToricDivisor {
    ToricDivisor {
        coeffs: vec![1, 0],
    }
}

/// Product of two semigroups in the orthogonal sum of their lattices.
pub fn product(a: &AffineSemigroup, b: &AffineSemigroup) -> AffineSemigroup {
    let rank = a.rank + b.rank;
    let mut rays = Vec::new();
    for v in &a.rays {
        let mut e = v.clone();
        e.extend(std::iter::repeat_n(0, b.rank));
        rays.push(e);
    }
    for v in &b.rays {
        let mut e = vec![0; a.rank];
        e.extend(v.iter().copied());
        rays.push(e);
    }
    let mut generators = Vec::new();
    for g in &a.generators {
        let mut e = g.clone();
        e.extend(std::iter::repeat_n(0, b.rank));
        generators.push(e);
    }
    for g in &b.generators {
        let mut e = vec![0; a.rank];
        e.extend(g.iter().copied());
        generators.push(e);
    }
    AffineSemigroup {
        rank,
        rays,
        generators,
    }
}
