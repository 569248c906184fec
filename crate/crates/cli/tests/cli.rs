//! End-to-end CLI checks: every repro target pinned bit-exactly,
//! idempotence of the JSON envelope modulo wall time, thread-count
//! independence, and the exit-code contract.

use serde_json::Value;
use std::process::Command;

fn torsor(args: &[&str]) -> (Value, i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_torsor"))
        .args(args)
        .output()
        .expect("spawn torsor");
    let code = out.status.code().unwrap_or(-1);
    let stderr = String::from_utf8_lossy(&out.stderr).to_string();
    let v = if out.stdout.is_empty() {
        Value::Null
    } else {
        serde_json::from_slice(&out.stdout).expect("stdout is JSON")
    };
    (v, code, stderr)
}

fn result_of(args: &[&str]) -> Value {
    let (v, code, stderr) = torsor(args);
    assert_eq!(code, 0, "torsor {args:?}: {stderr}");
    v["result"].clone()
}

fn strip_wall_time(mut v: Value) -> Value {
    if let Some(m) = v.get_mut("manifest") {
        if let Some(obj) = m.as_object_mut() {
            obj.remove("wall_time_ms");
        }
    }
    v
}

#[test]
fn repro_ex_bad_trace_alpha_p() {
    for (p, values) in [(3u64, vec!["0", "0", "1"]), (5, vec!["0", "0", "0", "0", "1"])] {
        let r = result_of(&["repro", "ex-bad-trace-alpha-p", "--p", &p.to_string()]);
        assert_eq!(r["Tr(t^(p-1))"], serde_json::json!("1"));
        assert_eq!(r["trace_values"], serde_json::json!(values));
        assert_eq!(r["torsor"], serde_json::json!("torsor_everywhere"));
        assert_eq!(r["tameness"], serde_json::json!("tame"));
    }
}

#[test]
fn repro_ex_bad_trace_mu_p() {
    let r = result_of(&["repro", "ex-bad-trace-mu-p", "--p", "3"]);
    assert_eq!(r["torsor"], serde_json::json!("torsor_everywhere"));
    assert_eq!(r["trace_values"], serde_json::json!(["1", "0", "0"]));
}

#[test]
fn repro_ex_integral_traces() {
    let r = result_of(&[
        "repro",
        "ex-integral-traces",
        "--p",
        "2",
        "--e",
        "2",
        "--n",
        "3",
    ]);
    assert_eq!(r["alpha"]["integral"], serde_json::json!("xi^3"));
    assert_eq!(r["alpha"]["integral_basis"], serde_json::json!([0, 0, 0, 1]));
    assert_eq!(
        r["constant_cyclic"]["integral_basis"],
        serde_json::json!([1, 0, 0])
    );
    assert_eq!(r["mu"]["integral_basis"], serde_json::json!([1, 1, 1]));
    assert_eq!(r["mu"]["dual_integral_basis"], serde_json::json!([1, 0, 0]));
}

#[test]
fn repro_thm_a_torsor_dichotomy() {
    let r = result_of(&["repro", "thm-a-torsor-dichotomy", "--p", "7", "--n", "3"]);
    assert_eq!(r["disc"], serde_json::json!("6*x^2"));
    assert_eq!(r["everywhere"], serde_json::json!("not_torsor_everywhere"));
    assert_eq!(r["at_origin"], serde_json::json!("not_torsor_at_point"));
    assert_eq!(r["at_(1,1)"], serde_json::json!("torsor_at_point"));
}

#[test]
fn repro_thm_c_veronese() {
    let r = result_of(&[
        "repro",
        "thm-c-veronese",
        "--n",
        "2",
        "--p",
        "3",
        "--emax",
        "2",
    ]);
    assert_eq!(r["rule"]["verdict"], serde_json::json!(true));
    assert_eq!(r["rule"]["lhs"], serde_json::json!("1"));
    assert_eq!(r["rule"]["rhs"], serde_json::json!("82/81"));
    assert_eq!(r["base_estimate"], serde_json::json!("41/81"));
    assert_eq!(r["cover_estimate"], serde_json::json!("1"));
}

#[test]
fn repro_cor_torsion_picard() {
    let r = result_of(&[
        "repro",
        "cor-torsion-picard",
        "--n",
        "2",
        "--p",
        "3",
        "--emax",
        "3",
    ]);
    assert_eq!(r["torsion"]["torsion_orders"], serde_json::json!([2]));
    assert_eq!(r["torsion"]["bound_holds"], serde_json::json!(true));
    assert_eq!(r["torsion"]["estimate"], serde_json::json!("365/729"));
}

#[test]
fn repro_rejects_unknown_id() {
    let (_, code, stderr) = torsor(&["repro", "no-such-example"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown repro id"));
}

#[test]
fn envelope_is_idempotent_modulo_wall_time() {
    let args = [
        "fsig",
        "estimate",
        "--builtin",
        "veronese",
        "--n",
        "2",
        "--p",
        "3",
        "--emax",
        "2",
        "--box",
        "18",
    ];
    let (a, code_a, _) = torsor(&args);
    let (b, code_b, _) = torsor(&args);
    assert_eq!(code_a, 0);
    assert_eq!(code_b, 0);
    assert_eq!(strip_wall_time(a), strip_wall_time(b));
}

#[test]
fn fsig_results_are_thread_count_independent() {
    let base = [
        "fsig", "estimate", "--builtin", "veronese", "--n", "3", "--p", "2", "--emax", "3",
        "--box", "24",
    ];
    let single: Vec<&str> = base.iter().copied().chain(["--threads", "1"]).collect();
    let a = result_of(&single);
    let b = result_of(&base);
    assert_eq!(a, b);
}

#[test]
fn fsig_estimate_accepts_emax_one_and_semigroup_alias() {
    let r = result_of(&[
        "fsig", "estimate", "--builtin", "veronese", "--n", "2", "--p", "3", "--emax", "1",
    ]);
    assert_eq!(r["reports"][0]["a_e"], serde_json::json!(5));
    assert_eq!(r["uncertainty"], serde_json::Value::Null);

    // --semigroup is an accepted alias for --input
    let dir = std::env::temp_dir();
    let path = dir.join("torsor_cli_test_v2.json");
    std::fs::write(
        &path,
        "{\"rank\":2,\"rays\":[[1,0],[-1,2]],\"generators\":[[0,1],[1,1],[2,1]]}",
    )
    .unwrap();
    let r = result_of(&[
        "fsig", "estimate", "--semigroup", path.to_str().unwrap(), "--p", "3", "--emax", "2",
        "--box", "18",
    ]);
    assert_eq!(r["estimate"], serde_json::json!("41/81"));
}

#[test]
fn exit_codes_follow_the_contract() {
    // malformed JSON: exit 1 with a line/column diagnostic
    let dir = std::env::temp_dir();
    let bad = dir.join("torsor_cli_test_bad.json");
    std::fs::write(&bad, "{\"rank\": 2,\n  \"rays\": [[1,").unwrap();
    let (_, code, stderr) = torsor(&["toric", "classgroup", "--input", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stderr.contains("line") && stderr.contains("column"), "{stderr}");

    // validation failure: exit 2
    let invalid = dir.join("torsor_cli_test_invalid.json");
    std::fs::write(
        &invalid,
        "{\"rank\":2,\"rays\":[[2,0],[0,1]],\"generators\":[]}",
    )
    .unwrap();
    let (_, code, _) = torsor(&["toric", "classgroup", "--input", invalid.to_str().unwrap()]);
    assert_eq!(code, 2);

    // truncation: exit 3
    let (_, code, _) = torsor(&[
        "fsig", "estimate", "--builtin", "veronese", "--n", "2", "--p", "3", "--emax", "2",
        "--box", "2",
    ]);
    assert_eq!(code, 3);
}

#[test]
fn hopf_json_emitted_and_reingested_bit_exactly() {
    let dir = std::env::temp_dir();
    let path = dir.join("torsor_cli_test_mu2.json");
    // write the dual of constant Z/2 (which is μ_2) to a file, re-ingest,
    // and validate.
    let (v, code, _) = torsor(&["hopf", "dual", "--builtin", "constant_cyclic", "--p", "3", "--n", "2"]);
    assert_eq!(code, 0);
    std::fs::write(&path, serde_json::to_string(&v["result"]).unwrap()).unwrap();
    let r = result_of(&["hopf", "validate", "--input", path.to_str().unwrap()]);
    assert_eq!(r["report"]["all_pass"], serde_json::json!(true));
    // and the emitted dual of THAT is byte-identical to the builtin μ_2's
    // double dual, i.e. reemission is stable
    let again = result_of(&["hopf", "dual", "--input", path.to_str().unwrap()]);
    let (direct, _, _) = torsor(&["hopf", "dual", "--builtin", "mu_n", "--p", "3", "--n", "2"]);
    // double dual of constant Z/2 = dual of μ_2: same structure constants
    assert_eq!(again["product"], direct["result"]["product"]);
    assert_eq!(again["coproduct"], direct["result"]["coproduct"]);
    assert_eq!(again["unit"], direct["result"]["unit"]);
    assert_eq!(again["counit"], direct["result"]["counit"]);
    assert_eq!(again["antipode"], direct["result"]["antipode"]);
}

#[test]
fn action_subcommands_accept_files_with_hopf_by_path() {
    let dir = std::env::temp_dir();
    let hopf_path = dir.join("torsor_cli_test_hopf_mu3.json");
    let (v, _, _) = torsor(&["hopf", "dual", "--builtin", "constant_cyclic", "--p", "7", "--n", "3"]);
    std::fs::write(&hopf_path, serde_json::to_string(&v["result"]).unwrap()).unwrap();

    // Explicit coacted algebra referencing the Hopf algebra by path:
    // S = R[t]/(t^3 − x) with the Kummer coaction.
    let coacted = serde_json::json!({
        "base": {"field": {"kind": "prime", "p": 7}, "variables": ["x", "y"]},
        "basis": ["1", "t", "t^2"],
        "mult": [
            [["1","0","0"], ["0","1","0"], ["0","0","1"]],
            [["0","1","0"], ["0","0","1"], ["x","0","0"]],
            [["0","0","1"], ["x","0","0"], ["0","x","0"]]
        ],
        "hopf": "torsor_cli_test_hopf_mu3.json",
        "coaction": [
            [["1","0","0"], ["0","0","0"], ["0","0","0"]],
            [["0","0","0"], ["0","1","0"], ["0","0","0"]],
            [["0","0","0"], ["0","0","0"], ["0","0","1"]]
        ]
    });
    let path = dir.join("torsor_cli_test_coacted.json");
    std::fs::write(&path, serde_json::to_string(&coacted).unwrap()).unwrap();
    let r = result_of(&["action", "trace", "--input", path.to_str().unwrap()]);
    assert_eq!(r["validation"]["all_pass"], serde_json::json!(true));
    assert_eq!(
        r["trace"]["trace_values"],
        serde_json::json!(["1", "0", "0"])
    );
    assert_eq!(r["trace"]["disc"], serde_json::json!("6*x^2"));
}

#[test]
fn toric_cover_cli_round_trip() {
    let r = result_of(&[
        "toric", "cover", "--builtin", "veronese", "--n", "2", "--divisor", "1,0", "--degree",
        "2", "--box", "12",
    ]);
    assert_eq!(r["principal_witness"], serde_json::json!([-2, -1]));
    assert_eq!(r["kummer_type"], serde_json::json!(false));
    let gens = r["cover"]["generators"].as_array().unwrap();
    assert_eq!(gens.len(), 2);
    // the cover is smooth: re-ingest and ask for its class group
    let dir = std::env::temp_dir();
    let path = dir.join("torsor_cli_test_cover.json");
    std::fs::write(&path, serde_json::to_string(&r["cover"]).unwrap()).unwrap();
    let cg = result_of(&["toric", "classgroup", "--input", path.to_str().unwrap()]);
    assert_eq!(cg["torsion_orders"], serde_json::json!([]));
}

#[test]
fn toric_index_and_veronese_cli() {
    let r = result_of(&[
        "toric", "index", "--builtin", "veronese", "--n", "6", "--divisor", "1,0",
    ]);
    assert_eq!(r["index"], serde_json::json!(6));
    assert_eq!(r["witness"], serde_json::json!([-6, -1]));

    let r = result_of(&[
        "toric", "veronese", "--builtin", "plane", "--dim", "2", "--degree", "2", "--grading",
        "1,1", "--box", "12",
    ]);
    let cg = r["semigroup"]["rays"].as_array().unwrap();
    assert_eq!(cg.len(), 2);
}
