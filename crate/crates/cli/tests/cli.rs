use std::process::Command;

use serde_json::Value;

use clawfree_core::schema::DecomposeDoc;
use clawfree_core::{parse_graph_literal, ForbCertificate};

fn run(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_clawfree"))
        .args(args)
        .output()
        .unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (
        out.status.code().unwrap(),
        json,
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn classify_outputs_revalidate() {
    for literal in [
        "P9",
        "A6bar",
        "claw",
        "clawbar",
        "cycle:7",
        "E6",
        "H{S{aSf",
        "5;0 1;1 2",
    ] {
        let (code, json, _) = run(&["classify", literal]);
        assert_eq!(code, 0, "{literal}");
        let cert: ForbCertificate = serde_json::from_value(json).unwrap();
        cert.validate(&parse_graph_literal(literal).unwrap())
            .unwrap();
    }
    let (_, json, _) = run(&["classify", "P9"]);
    assert_eq!(json["verdict"], "member");
    assert_eq!(json["case"], "p9_embedding");
    let (code, json, _) = run(&["classify", "claw"]);
    assert_eq!(code, 0);
    assert_eq!(json["verdict"], "non_member");
    assert_eq!(json["witness"]["in"], "U");
    let (_, json, _) = run(&["classify", "clawbar"]);
    assert_eq!(json["witness"]["in"], "complement");
}

#[test]
fn decompose_outputs_revalidate() {
    let (code, json, _) = run(&["decompose", "cycle:5"]);
    assert_eq!(code, 0);
    assert_eq!(json["obstruction"]["in"], "S(U)");
    assert_eq!(
        json["obstruction"]["odd_cycle"].as_array().unwrap().len(),
        5
    );

    for literal in ["cycle:5", "cycle:6", "P9", "B5", "claw", "A6"] {
        let (_, json, _) = run(&["decompose", literal]);
        let doc: DecomposeDoc = serde_json::from_value(json).unwrap();
        doc.validate(&parse_graph_literal(literal).unwrap())
            .unwrap();
    }
    let (_, json, _) = run(&["decompose", "cycle:4"]);
    for key in ["G", "G2", "A1", "A2", "B1", "B2", "flips"] {
        assert!(json.get(key).is_some(), "{key}");
    }
    let (code, json, _) = run(&["decompose", "cycle:4", "--all"]);
    assert_eq!(code, 0);
    assert_eq!(json["count"], 4);
    let (_, json, _) = run(&["decompose", "cycle:4", "--all", "--keep-swaps"]);
    assert_eq!(json["count"], 8);
}

#[test]
fn h3_and_edge_graph() {
    let (_, json, _) = run(&["h3", "3;0 1;1 2;0 2"]);
    assert_eq!(json["hyperedges"], serde_json::json!([[0, 1, 2]]));
    let (_, json, _) = run(&["h3", "cycle:4"]);
    assert_eq!(json["hyperedges"], serde_json::json!([]));
    let (_, json, _) = run(&["edge-graph", "cycle:4"]);
    assert_eq!(json["bipartite"], true);
    assert_eq!(json["coloring"]["color"], serde_json::json!([0, 1, 1, 0]));
    let (_, json, _) = run(&["edge-graph", "claw"]);
    assert_eq!(json["bipartite"], false);
    assert_eq!(json["adjacency"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_reports() {
    let (code, json, _) = run(&["verify", "theorem1", "--n", "6"]);
    assert_eq!(code, 0);
    assert_eq!(json["checked"], 32768);
    assert_eq!(json["mismatches"], serde_json::json!([]));
    assert!(json.get("wall_ms").is_none());
    let (_, json, _) = run(&["verify", "formula1", "--n", "5", "--timing"]);
    assert_eq!(json["checked"], 1024);
    assert!(json["wall_ms"].is_u64());
    // sampled runs echo their seed
    let (_, json, _) = run(&[
        "verify", "parity", "--n", "8", "--sample", "1000", "--seed", "5",
    ]);
    assert_eq!(
        (json["seed"].clone(), json["sample"].clone()),
        (5.into(), 1000.into())
    );
}

#[test]
fn check_replays_single_graphs() {
    let (code, json, _) = run(&["check", "theorem2", "mask:5:1023"]);
    assert_eq!(code, 0);
    assert_eq!(json["passed"], true);
    let (code, _, _) = run(&["check", "lemma_ggu", "cycle:4", "4;0 1"]);
    assert_eq!(code, 0);
    let (code, _, err) = run(&["check", "lemma_ggu", "cycle:4"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn recon_commands() {
    let (code, json, _) = run(&["recon", "reconstructible", "--v", "4", "--k", "3"]);
    assert_eq!(code, 0);
    assert!(json["non_reconstructible"].as_u64().unwrap() > 0);
    let (_, json, _) = run(&["recon", "reconstructible", "--graph", "cycle:5", "--k", "4"]);
    assert_eq!(json["reconstructible"], true);
    let (_, json, _) = run(&["recon", "hypomorphic", "B5", "g6:DqK", "--k", "3"]);
    assert!(json["result"].is_boolean());
    let (code, json, _) = run(&[
        "recon", "propdown", "--v", "6", "--k", "3", "--t", "2", "--sample", "2000", "--seed", "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(json["seed"], 1);
}

#[test]
fn file_literals() {
    let dir = std::env::temp_dir().join(format!("clawfree-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let el = dir.join("k3.txt");
    std::fs::write(&el, "# a triangle\n3\n0 1\n1 2\n0 2\n").unwrap();
    let g6 = dir.join("p9.g6");
    std::fs::write(&g6, "H{S{aSf\n").unwrap();
    let (_, json, _) = run(&["h3", &format!("@{}", el.display())]);
    assert_eq!(json["hyperedges"], serde_json::json!([[0, 1, 2]]));
    let (_, json, _) = run(&["classify", &format!("@{}", g6.display())]);
    assert_eq!(json["verdict"], "member");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_and_parse_errors_exit_2() {
    for args in [
        &["classify", "nonsense_name"][..],
        &["classify", "3;0 0"],
        &["classify", "@/nonexistent/file"],
        &["verify", "theorem9", "--n", "4"],
        &["verify", "theorem1", "--n", "12", "--sample", "5"],
        &["recon", "reconstructible", "--v", "7", "--k", "3"],
        &["recon", "propdown", "--v", "5", "--k", "3", "--t", "3"],
        &["frobnicate"],
        &[],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
    let (_, _, err) = run(&["classify", "3;0 0"]);
    assert!(err.contains("line 2"), "{err}");
}
