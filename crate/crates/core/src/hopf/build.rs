//! Constructors for the standard finite group-schemes: constant groups,
//! diagonalizable groups, μ_n, α_{p^e}, and products.

use super::{CoprodTerm, HopfAlgebra, SparseVec};
use crate::error::{Error, Result};
use crate::exact::scalar::FieldSpec;

/// O(G) = Hom_Set(G, k) for a finite discrete group given by its
/// multiplication table. Basis: indicator functions of group elements.
pub fn constant_group(table: &[Vec<usize>], field: FieldSpec) -> Result<HopfAlgebra> {
    field.validate()?;
    let n = table.len();
    if n == 0 {
        return Err(Error::Invalid("empty multiplication table".into()));
    }
    for row in table {
        if row.len() != n || row.iter().any(|&v| v >= n) {
            return Err(Error::Invalid("multiplication table is not square".into()));
        }
    }
    // group axioms
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::Invalid("multiplication table is not associative".into()));
                }
            }
        }
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
        .ok_or_else(|| Error::Invalid("multiplication table has no identity".into()))?;
    let mut inverse = vec![usize::MAX; n];
    for a in 0..n {
        inverse[a] = (0..n)
            .find(|&b| table[a][b] == identity && table[b][a] == identity)
            .ok_or_else(|| Error::Invalid(format!("element {a} has no inverse")))?;
    }

    let one = field.one();
    let labels: Vec<String> = (0..n).map(|i| format!("d{i}")).collect();
    // pointwise product: δ_g · δ_h = [g = h] δ_g
    let mut product: Vec<SparseVec> = vec![Vec::new(); n * n];
    for g in 0..n {
        product[g * n + g] = vec![(g, one.clone())];
    }
    // ∇(δ_g) = Σ_{ab = g} δ_a ⊗ δ_b
    let mut coproduct: Vec<Vec<CoprodTerm>> = vec![Vec::new(); n];
    for a in 0..n {
        for b in 0..n {
            coproduct[table[a][b]].push((a, b, one.clone()));
        }
    }
    for t in &mut coproduct {
        t.sort_by_key(|(j, k, _)| (*j, *k));
    }
    let unit: SparseVec = (0..n).map(|i| (i, one.clone())).collect();
    let mut counit = vec![field.zero(); n];
    counit[identity] = one.clone();
    let antipode: Vec<SparseVec> = (0..n).map(|g| vec![(inverse[g], one.clone())]).collect();
    Ok(HopfAlgebra::from_sparse_parts(
        field, labels, unit, counit, product, coproduct, antipode,
    ))
}

/// Multiplication table of Z/nZ, convenience for the constant constructor.
pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// O(D(G)) = k[G], the group algebra of G = Z/n_1 x ... x Z/n_r.
/// Basis: group elements, grouplike under the coproduct.
pub fn diagonalizable(cyclic_orders: &[u64], field: FieldSpec) -> Result<HopfAlgebra> {
    field.validate()?;
    if cyclic_orders.contains(&0) {
        return Err(Error::Invalid("cyclic orders must be positive".into()));
    }
    let dims: Vec<usize> = cyclic_orders.iter().map(|&n| n as usize).collect();
    let total: usize = dims.iter().product();
    if total == 0 || total > 1_000_000 {
        return Err(Error::Invalid(format!("group order {total} out of range")));
    }
    let index_of = |tuple: &[usize]| -> usize {
        let mut idx = 0;
        for (t, d) in tuple.iter().zip(&dims) {
            idx = idx * d + t;
        }
        idx
    };
    let tuple_of = |mut idx: usize| -> Vec<usize> {
        let mut t = vec![0; dims.len()];
        for pos in (0..dims.len()).rev() {
            t[pos] = idx % dims[pos];
            idx /= dims[pos];
        }
        t
    };
    let label_of = |t: &[usize]| -> String {
        if t.iter().all(|&x| x == 0) {
            return "1".into();
        }
        let parts: Vec<String> = t
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .map(|(i, &x)| {
                let v = if dims.len() == 1 {
                    "zeta".to_string()
                } else {
                    format!("z{i}")
                };
                if x == 1 {
                    v
                } else {
                    format!("{v}^{x}")
                }
            })
            .collect();
        parts.join("*")
    };

    let one = field.one();
    let labels: Vec<String> = (0..total).map(|i| label_of(&tuple_of(i))).collect();
    let mut product: Vec<SparseVec> = vec![Vec::new(); total * total];
    for a in 0..total {
        let ta = tuple_of(a);
        for b in 0..total {
            let tb = tuple_of(b);
            let sum: Vec<usize> = ta
                .iter()
                .zip(&tb)
                .zip(&dims)
                .map(|((x, y), d)| (x + y) % d)
                .collect();
            product[a * total + b] = vec![(index_of(&sum), one.clone())];
        }
    }
    let coproduct: Vec<Vec<CoprodTerm>> = (0..total).map(|g| vec![(g, g, one.clone())]).collect();
    let counit = vec![one.clone(); total];
    let antipode: Vec<SparseVec> = (0..total)
        .map(|g| {
            let t = tuple_of(g);
            let neg: Vec<usize> = t
                .iter()
                .zip(&dims)
                .map(|(x, d)| if *x == 0 { 0 } else { d - x })
                .collect();
            vec![(index_of(&neg), one.clone())]
        })
        .collect();
    Ok(HopfAlgebra::from_sparse_parts(
        field,
        labels,
        vec![(0, one)],
        counit,
        product,
        coproduct,
        antipode,
    ))
}

/// O(μ_n) = k[ζ]/(ζ^n − 1).
pub fn mu_n(n: u64, field: FieldSpec) -> Result<HopfAlgebra> {
    if n == 0 {
        return Err(Error::Invalid("mu_n requires n >= 1".into()));
    }
    diagonalizable(&[n], field)
}

/// O(α_{p^e}) = k[ξ]/ξ^{p^e} with ξ primitive: ∇(ξ) = ξ⊗1 + 1⊗ξ.
pub fn alpha_pe(e: u32, field: FieldSpec) -> Result<HopfAlgebra> {
    let FieldSpec::Prime { p } = field else {
        return Err(Error::Invalid(
            "alpha_{p^e} only exists in positive characteristic".into(),
        ));
    };
    field.validate()?;
    if e == 0 {
        return Err(Error::Invalid("alpha_pe requires e >= 1".into()));
    }
    let q = (p as u128).checked_pow(e).filter(|&q| q <= 100_000).ok_or_else(|| {
        Error::Invalid(format!("p^e = {p}^{e} too large"))
    })? as usize;

    let one = field.one();
    let labels: Vec<String> = (0..q)
        .map(|i| match i {
            0 => "1".into(),
            1 => "xi".into(),
            _ => format!("xi^{i}"),
        })
        .collect();
    let mut product: Vec<SparseVec> = vec![Vec::new(); q * q];
    for a in 0..q {
        for b in 0..q {
            if a + b < q {
                product[a * q + b] = vec![(a + b, one.clone())];
            }
        }
    }
    // Pascal rows mod p give ∇(ξ^i) = Σ_j C(i,j) ξ^j ⊗ ξ^{i−j}.
    let mut coproduct: Vec<Vec<CoprodTerm>> = Vec::with_capacity(q);
    let mut row: Vec<u64> = vec![1];
    for i in 0..q {
        let mut terms = Vec::new();
        for (j, &c) in row.iter().enumerate() {
            if c != 0 {
                terms.push((j, i - j, field.from_i64(c as i64)));
            }
        }
        coproduct.push(terms);
        let mut next = vec![1u64; i + 2];
        for j in 1..=i {
            next[j] = (row[j - 1] + row[j]) % p;
        }
        row = next;
    }
    let mut counit = vec![field.zero(); q];
    counit[0] = one.clone();
    let antipode: Vec<SparseVec> = (0..q)
        .map(|i| {
            let c = if i % 2 == 0 { one.clone() } else { one.neg() };
            vec![(i, c)]
        })
        .collect();
    Ok(HopfAlgebra::from_sparse_parts(
        field,
        labels,
        vec![(0, one)],
        counit,
        product,
        coproduct,
        antipode,
    ))
}

/// Product group-scheme: the tensor-product Hopf structure.
pub fn tensor_product(h1: &HopfAlgebra, h2: &HopfAlgebra) -> Result<HopfAlgebra> {
    if h1.field() != h2.field() {
        return Err(Error::FieldMismatch(
            "tensor factors over different fields".into(),
        ));
    }
    let (d1, d2) = (h1.dim(), h2.dim());
    let d = d1 * d2;
    let enc = |i1: usize, i2: usize| i1 * d2 + i2;
    let field = h1.field();

    let labels: Vec<String> = (0..d)
        .map(|i| format!("{}*{}", h1.basis_labels()[i / d2], h2.basis_labels()[i % d2]))
        .collect();

    let outer = |x: &SparseVec, y: &SparseVec| -> SparseVec {
        let mut out = Vec::with_capacity(x.len() * y.len());
        for (a, ca) in x {
            for (b, cb) in y {
                out.push((enc(*a, *b), ca.mul(cb)));
            }
        }
        out.sort_by_key(|(i, _)| *i);
        out
    };

    let mut product: Vec<SparseVec> = vec![Vec::new(); d * d];
    for i1 in 0..d1 {
        for j1 in 0..d1 {
            let p1 = h1.basis_product(i1, j1);
            for i2 in 0..d2 {
                for j2 in 0..d2 {
                    let p2 = h2.basis_product(i2, j2);
                    product[enc(i1, i2) * d + enc(j1, j2)] = outer(p1, p2);
                }
            }
        }
    }
    let mut coproduct: Vec<Vec<CoprodTerm>> = Vec::with_capacity(d);
    for i1 in 0..d1 {
        for i2 in 0..d2 {
            let mut terms = Vec::new();
            for (a1, b1, c1) in h1.coproduct_terms(i1) {
                for (a2, b2, c2) in h2.coproduct_terms(i2) {
                    terms.push((enc(*a1, *a2), enc(*b1, *b2), c1.mul(c2)));
                }
            }
            terms.sort_by_key(|(j, k, _)| (*j, *k));
            coproduct.push(terms);
        }
    }
    let unit = outer(h1.unit_vector(), h2.unit_vector());
    let mut counit = vec![field.zero(); d];
    for (i, c) in counit.iter_mut().enumerate() {
        *c = h1.counit_vector()[i / d2].mul(&h2.counit_vector()[i % d2]);
    }
    let antipode: Vec<SparseVec> = (0..d)
        .map(|i| outer(h1.antipode_row(i / d2), h2.antipode_row(i % d2)))
        .collect();
    Ok(HopfAlgebra::from_sparse_parts(
        field, labels, unit, counit, product, coproduct, antipode,
    ))
}
