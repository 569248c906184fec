use torsor_core::exact::{FieldSpec, Scalar};
use torsor_core::hopf::build::{
    alpha_pe, constant_group, cyclic_table, diagonalizable, mu_n, tensor_product,
};
use torsor_core::jsonio;

fn fp(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

fn sc(f: FieldSpec, v: i64) -> Scalar {
    f.from_i64(v)
}

#[test]
fn mu2_over_f3_validates() {
    let h = mu_n(2, fp(3)).unwrap();
    let report = h.validate_hopf();
    assert!(report.all_pass, "{report:?}");
    assert_eq!(h.dim(), 2);
}

#[test]
fn alpha_p_with_negated_antipode_validates() {
    // p = 3, e = 1: ι(ξ) = −ξ
    let h = alpha_pe(1, fp(3)).unwrap();
    assert!(h.validate_hopf().all_pass);
    assert_eq!(h.antipode_row(1), &[(1usize, sc(fp(3), -1))]);
}

#[test]
fn corrupted_counit_fails_named_check() {
    let h = mu_n(2, fp(3)).unwrap();
    let mut v = jsonio::hopf_to_json(&h);
    // counit was [1, 1]; corrupt e(zeta) to 0
    v["counit"] = serde_json::json!([1, 0]);
    let bad = jsonio::hopf_from_json(&v).unwrap();
    let report = bad.validate_hopf();
    assert_eq!(report.check("counit"), Some(false));
    assert!(!report.all_pass);
}

#[test]
fn corrupted_product_fails_associativity() {
    let h = mu_n(3, fp(5)).unwrap();
    let mut v = jsonio::hopf_to_json(&h);
    // zeta * zeta should be zeta^2; corrupt it to 1
    v["product"][1][1] = serde_json::json!([1, 0, 0]);
    let bad = jsonio::hopf_from_json(&v).unwrap();
    let report = bad.validate_hopf();
    assert!(!report.all_pass);
}

#[test]
fn alpha_pe_dimension_and_primitive_coproduct() {
    let h = alpha_pe(1, fp(3)).unwrap();
    assert_eq!(h.dim(), 3);
    // ∇(ξ) = ξ⊗1 + 1⊗ξ
    let terms = h.coproduct_terms(1);
    assert_eq!(terms.len(), 2);
    assert!(terms.contains(&(0, 1, fp(3).one())));
    assert!(terms.contains(&(1, 0, fp(3).one())));
}

#[test]
fn mu_1_is_the_trivial_group_scheme() {
    let h = mu_n(1, fp(5)).unwrap();
    assert_eq!(h.dim(), 1);
    assert!(h.validate_hopf().all_pass);
    assert!(h.is_linearly_reductive().unwrap());
}

#[test]
fn tensor_product_mu2_mu3_over_f5() {
    let h = tensor_product(&mu_n(2, fp(5)).unwrap(), &mu_n(3, fp(5)).unwrap()).unwrap();
    assert_eq!(h.dim(), 6);
    assert!(h.validate_hopf().all_pass);
    assert!(h.is_linearly_reductive().unwrap());
}

#[test]
fn constant_group_rejects_non_group_tables() {
    // Not associative / no identity: latin square of a quasigroup.
    let bad = vec![vec![1usize, 0], vec![0, 0]];
    assert!(constant_group(&bad, fp(3)).is_err());
}

#[test]
fn dual_of_constant_cyclic_is_mu_n() {
    for n in [2usize, 3, 4, 6] {
        let constant = constant_group(&cyclic_table(n), fp(5)).unwrap();
        let dual = constant.cartier_dual();
        let mu = mu_n(n as u64, fp(5)).unwrap();
        assert!(dual.same_structure(&mu), "n = {n}");
    }
}

#[test]
fn double_dual_is_identity_on_structure_constants() {
    let f = fp(3);
    let algebras = vec![
        mu_n(4, f).unwrap(),
        alpha_pe(2, f).unwrap(),
        constant_group(&cyclic_table(3), f).unwrap(),
        diagonalizable(&[2, 2], f).unwrap(),
    ];
    for h in algebras {
        assert!(h.cartier_dual().cartier_dual().same_structure(&h));
    }
}

#[test]
fn dual_of_alpha_p_is_alpha_p_like() {
    // Self-dual up to basis rescaling: the dual validates and carries a
    // primitive generator in degree 1.
    for p in [2u64, 3, 5] {
        let h = alpha_pe(1, fp(p)).unwrap();
        let dual = h.cartier_dual();
        assert!(dual.validate_hopf().all_pass, "p = {p}");
        let terms = dual.coproduct_terms(1);
        assert_eq!(terms.len(), 2, "p = {p}");
        assert!(terms.contains(&(0, 1, fp(p).one())));
        assert!(terms.contains(&(1, 0, fp(p).one())));
    }
}

#[test]
fn integrals_of_group_algebra_span_sum_of_group() {
    // t = Σ_g g, normalized to leading coefficient 1: the all-ones vector.
    for (n, p) in [(3u64, 5u64), (4, 2), (5, 5)] {
        let h = diagonalizable(&[n], fp(p)).unwrap();
        let ints = h.left_integrals();
        assert_eq!(ints.dimension(), 1);
        let ones: Vec<Scalar> = (0..n).map(|_| fp(p).one()).collect();
        assert_eq!(ints.basis[0], ones);
    }
}

#[test]
fn integrals_of_alpha_pe_span_top_power() {
    for (p, e) in [(2u64, 1u32), (2, 2), (3, 1), (3, 2), (5, 1)] {
        let h = alpha_pe(e, fp(p)).unwrap();
        let ints = h.left_integrals();
        assert_eq!(ints.dimension(), 1);
        let q = (p as usize).pow(e);
        let mut expect = vec![fp(p).zero(); q];
        expect[q - 1] = fp(p).one();
        assert_eq!(ints.basis[0], expect, "p={p} e={e}");
    }
}

#[test]
fn integrals_of_functions_on_constant_group_are_delta_at_identity() {
    let h = constant_group(&cyclic_table(2), fp(5)).unwrap();
    let ints = h.left_integrals();
    assert_eq!(ints.dimension(), 1);
    assert_eq!(ints.basis[0], vec![fp(5).one(), fp(5).zero()]);
}

#[test]
fn trace_of_constant_group_sums_values_normalized() {
    // p = 5, G = Z/3: Tr(γ) = (1/3) Σ_g γ(g), so every coordinate is 1/3.
    let h = constant_group(&cyclic_table(3), fp(5)).unwrap();
    let tr = h.group_trace().unwrap();
    assert!(tr.normalized);
    let third = sc(fp(5), 1).div(&sc(fp(5), 3)).unwrap();
    assert_eq!(tr.functional, vec![third.clone(), third.clone(), third]);
}

#[test]
fn trace_of_mu_n_projects_onto_coefficient_of_one() {
    for (n, p) in [(2u64, 3u64), (3, 3), (5, 5), (4, 2)] {
        let h = mu_n(n, fp(p)).unwrap();
        let tr = h.group_trace().unwrap();
        assert!(tr.normalized, "n={n} p={p}");
        let mut expect = vec![fp(p).zero(); n as usize];
        expect[0] = fp(p).one();
        assert_eq!(tr.functional, expect);
    }
}

#[test]
fn trace_of_alpha_pe_projects_onto_top_power_unnormalized() {
    for (p, e) in [(2u64, 2u32), (3, 1), (5, 1)] {
        let h = alpha_pe(e, fp(p)).unwrap();
        let tr = h.group_trace().unwrap();
        assert!(!tr.normalized, "Tr(1) = 0 for alpha");
        let q = (p as usize).pow(e);
        let mut expect = vec![fp(p).zero(); q];
        expect[q - 1] = fp(p).one();
        assert_eq!(tr.functional, expect);
    }
}

#[test]
fn maschke_dichotomy() {
    // μ_n always linearly reductive, α_p never, constant Z/nZ iff p ∤ n.
    for p in [2u64, 3, 5] {
        for n in 1..=6u64 {
            assert!(mu_n(n, fp(p)).unwrap().is_linearly_reductive().unwrap());
        }
        assert!(!alpha_pe(1, fp(p)).unwrap().is_linearly_reductive().unwrap());
        for n in 2..=6usize {
            let h = constant_group(&cyclic_table(n), fp(p)).unwrap();
            assert_eq!(
                h.is_linearly_reductive().unwrap(),
                !(n as u64).is_multiple_of(p),
                "p={p} n={n}"
            );
        }
    }
}

#[test]
fn bilinear_matrix_examples() {
    // μ_2 at p = 3 in basis (1, ζ): T = I.
    let h = mu_n(2, fp(3)).unwrap();
    let t = h.trace_bilinear_matrix().unwrap();
    assert_eq!(*t.at(0, 0), fp(3).one());
    assert_eq!(*t.at(1, 1), fp(3).one());
    assert!(t.at(0, 1).is_zero());

    // α_2 at p = 2 in basis (1, ξ): T = antidiagonal.
    let h = alpha_pe(1, fp(2)).unwrap();
    let t = h.trace_bilinear_matrix().unwrap();
    assert!(t.at(0, 0).is_zero());
    assert_eq!(*t.at(0, 1), fp(2).one());
    assert_eq!(*t.at(1, 0), fp(2).one());
    assert!(t.at(1, 1).is_zero());
}

#[test]
fn trace_invariance_diagram_on_small_grid() {
    // (id ⊗ Tr_G)(∇(γ)) = Tr_G(γ)·1 for every basis γ.
    let f = fp(3);
    let algebras = vec![
        mu_n(4, f).unwrap(),
        alpha_pe(2, f).unwrap(),
        constant_group(&cyclic_table(4), f).unwrap(),
        tensor_product(&mu_n(2, f).unwrap(), &alpha_pe(1, f).unwrap()).unwrap(),
    ];
    for h in algebras {
        let tr = h.group_trace().unwrap();
        let unit = h.unit_dense();
        for i in 0..h.dim() {
            let lhs = h.id_tensor_trace(&tr, i);
            let ti = tr.functional[i].clone();
            let rhs: Vec<Scalar> = unit.iter().map(|u| u.mul(&ti)).collect();
            assert_eq!(lhs, rhs, "basis element {i}");
        }
    }
}

#[test]
fn hopf_json_round_trip_is_bit_exact() {
    let h = mu_n(2, fp(3)).unwrap();
    let v = jsonio::hopf_to_json(&h);
    // Spot-check the documented shape.
    assert_eq!(v["field"], serde_json::json!({"kind":"prime","p":3}));
    assert_eq!(v["dim"], serde_json::json!(2));
    assert_eq!(v["basis"], serde_json::json!(["1", "zeta"]));
    assert_eq!(v["unit"], serde_json::json!([1, 0]));
    assert_eq!(
        v["product"],
        serde_json::json!([[[1, 0], [0, 1]], [[0, 1], [1, 0]]])
    );
    assert_eq!(v["counit"], serde_json::json!([1, 1]));
    let h2 = jsonio::hopf_from_json(&v).unwrap();
    assert!(h.same_structure(&h2));
    assert_eq!(jsonio::hopf_to_json(&h2), v);
}

#[test]
fn group_trace_rejects_corrupt_integral_space() {
    // Corrupting the unit of μ_2 to 1 + ζ forces both dual idempotents to
    // fix any integral, so the dual integral space collapses to dimension 0
    // and group_trace must refuse.
    let h = mu_n(2, fp(3)).unwrap();
    let mut v = jsonio::hopf_to_json(&h);
    v["unit"] = serde_json::json!([1, 1]);
    let bad = jsonio::hopf_from_json(&v).unwrap();
    assert!(!bad.validate_hopf().all_pass);
    assert!(bad.group_trace().is_err());
}
