//! Acceptance criteria, one PASS/FAIL line each. Sweeps go through the
//! `clawfree` binary so the command lines are the ones users run.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use serde_json::Value;

use clawfree_core::edge_graph::edge_graph;
use clawfree_core::{find_induced_embedding, is_isomorphic, named, Graph, Name};

const BIN: &str = env!("CARGO_BIN_EXE_clawfree");

// time limits
const THEOREM1_N6: Duration = Duration::from_secs(10);
const THEOREM1_N7: Duration = Duration::from_secs(5 * 60);
const RECON_ALL: Duration = Duration::from_secs(2 * 60);
const PROPDOWN: Duration = Duration::from_secs(5 * 60);

// sweep sizes
const LARGE_SAMPLE: u64 = 1_000_000;
const PAIR_SAMPLE: u64 = 100_000;
const SEED: u64 = 20_240_601;
/// Labelled bulls on five vertices: 5! / |Aut(bull)| = 120 / 2.
const LABELLED_BULLS: u64 = 60;

type Criterion = fn() -> Result<String, String>;

struct Run {
    json: Value,
    stdout: String,
    code: i32,
    elapsed: Duration,
}

fn clawfree(args: &[&str]) -> Run {
    let start = Instant::now();
    let out = Command::new(BIN).args(args).output().expect("run clawfree");
    let elapsed = start.elapsed();
    let stdout = String::from_utf8(out.stdout).expect("utf-8 output");
    let json = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    Run {
        json,
        stdout,
        code: out.status.code().unwrap_or(-1),
        elapsed,
    }
}

fn verify(property: &str, n: usize, extra: &[&str]) -> Run {
    let n = n.to_string();
    let mut args = vec!["verify", property, "--n", &n];
    args.extend_from_slice(extra);
    clawfree(&args)
}

/// Exit 0, zero mismatches, and the expected number of checks.
fn clean(run: &Run, checked: u64) -> Result<(), String> {
    let j = &run.json;
    if run.code != 0 || j["mismatch_count"] != 0 || j["checked"] != checked {
        return Err(format!("exit {} report {}", run.code, run.stdout.trim()));
    }
    Ok(())
}

fn within(run: &Run, limit: Duration, what: &str) -> Result<(), String> {
    if run.elapsed > limit {
        return Err(format!("{what} took {:?} (limit {limit:?})", run.elapsed));
    }
    Ok(())
}

fn check(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn all_graphs(n: usize) -> u64 {
    1 << (n * (n - 1) / 2)
}

fn sample_args(sample: u64) -> Vec<String> {
    vec![
        "--sample".into(),
        sample.to_string(),
        "--seed".into(),
        SEED.to_string(),
    ]
}

fn sampled(property: &str, n: usize, sample: u64) -> Run {
    let args = sample_args(sample);
    verify(
        property,
        n,
        &args.iter().map(String::as_str).collect::<Vec<_>>(),
    )
}

fn theorem1() -> Result<String, String> {
    let r6 = verify("theorem1", 6, &[]);
    clean(&r6, 32_768)?;
    within(&r6, THEOREM1_N6, "n=6")?;
    let r7 = verify("theorem1", 7, &["--jobs", "4"]);
    clean(&r7, 2_097_152)?;
    within(&r7, THEOREM1_N7, "n=7")?;
    for n in [8, 9] {
        clean(&sampled("theorem1", n, LARGE_SAMPLE), LARGE_SAMPLE)?;
    }
    Ok(format!(
        "n=6 in {:?}, n=7 in {:?}, 10^6 samples at n=8,9",
        r6.elapsed, r7.elapsed
    ))
}

fn formula1() -> Result<String, String> {
    clean(&verify("formula1", 6, &[]), 32_768)?;
    Ok("32768 graphs".into())
}

fn named_graph_facts() -> Result<String, String> {
    let g = |name| named(name).unwrap();
    let s_graph = |u: &Graph| {
        let s = edge_graph(u);
        Graph::from_edges(s.vertex_count(), &s.adjacent_pairs().collect::<Vec<_>>()).unwrap()
    };
    check(
        is_isomorphic(&s_graph(&g(Name::A6)), &g(Name::Cycle(9))).is_some(),
        "S(A6) is not C9",
    )?;
    for n in 4..=12 {
        let c = g(Name::Cycle(n));
        check(
            is_isomorphic(&s_graph(&c), &c).is_some(),
            format!("S(C{n}) is not C{n}"),
        )?;
    }
    let p9 = g(Name::P9);
    let k3 = Graph::complete(3).unwrap();
    check(
        is_isomorphic(&p9, &p9.complement()).is_some(),
        "P9 not self-complementary",
    )?;
    check(
        is_isomorphic(&p9, &k3.cartesian_product(&k3).unwrap()).is_some(),
        "P9 is not K3 x K3",
    )?;
    for name in [Name::B5, Name::P9MinusV] {
        check(
            is_isomorphic(&g(name), &g(name).complement()).is_some(),
            format!("{name} not self-complementary"),
        )?;
    }
    for name in [
        Name::B5,
        Name::E6,
        Name::E6Bar,
        Name::P9MinusEdge,
        Name::P9MinusEdgeBar,
        Name::P9MinusV,
    ] {
        check(
            find_induced_embedding(&g(name), &p9).is_some(),
            format!("{name} does not embed in P9"),
        )?;
    }
    check(
        find_induced_embedding(&g(Name::A6), &p9).is_none(),
        "A6 embeds in P9",
    )?;
    Ok("edge-graphs, self-complementarity, embeddings".into())
}

fn theorem2() -> Result<String, String> {
    clean(&verify("theorem2", 6, &[]), 32_768)?;
    Ok("32768 graphs".into())
}

fn case_analysis() -> Result<String, String> {
    let r5 = verify("caseanalysis", 5, &[]);
    clean(&r5, 1024)?;
    let tallies = &r5.json["tallies"];
    check(
        tallies.as_object().map(|t| t.len()) == Some(1) && tallies["B5"] == LABELLED_BULLS,
        format!("n=5 tallies {tallies}"),
    )?;
    for n in [6, 7] {
        clean(&verify("caseanalysis", n, &[]), all_graphs(n))?;
    }
    for n in [8, 9] {
        clean(&sampled("caseanalysis", n, LARGE_SAMPLE), LARGE_SAMPLE)?;
    }
    Ok("exhaustive n=5..7, sampled n=8,9; n=5 only bulls".into())
}

fn claims() -> Result<String, String> {
    clean(&verify("claims", 7, &[]), 2_097_152)?;
    Ok("2097152 graphs".into())
}

fn lemma_ggu() -> Result<String, String> {
    let mut true_pairs = 0;
    for n in 2..=5 {
        let r = verify("lemma_ggu", n, &[]);
        clean(&r, all_graphs(n) * all_graphs(n))?;
        true_pairs += r.json["tallies"]["equivalent_true"].as_u64().unwrap_or(0);
    }
    for n in [6, 7] {
        clean(&sampled("lemma_ggu", n, PAIR_SAMPLE), PAIR_SAMPLE)?;
    }
    check(true_pairs > 0, "no pair satisfied the conditions")?;
    Ok(format!(
        "all pairs n<=5 ({true_pairs} satisfying), 10^5 sampled at n=6,7"
    ))
}

fn thm2_consequences() -> Result<String, String> {
    for n in 1..=7 {
        clean(&verify("thm2_consequences", n, &[]), all_graphs(n))?;
    }
    Ok("exhaustive n<=7".into())
}

fn reconstruction() -> Result<String, String> {
    let start = Instant::now();
    let v5 = clawfree(&["recon", "reconstructible", "--v", "5", "--k", "4"]);
    check(
        v5.code == 0 && v5.json["checked"] == 1024 && v5.json["non_reconstructible"] == 0,
        format!("v=5 k=4: {}", v5.stdout.trim()),
    )?;
    for (v, k) in [("4", "3"), ("3", "2")] {
        let r = clawfree(&["recon", "reconstructible", "--v", v, "--k", k]);
        check(
            r.code == 0 && r.json["first_counterexample"].is_array(),
            format!("v={v} k={k}: {}", r.stdout.trim()),
        )?;
        // replay the counterexample through the pairwise commands
        let pair = &r.json["first_counterexample"];
        let g = format!("mask:{v}:{}", pair[0]);
        let h = format!("mask:{v}:{}", pair[1]);
        let hypo = clawfree(&["recon", "hypomorphic", &g, &h, "--k", k]);
        let full = clawfree(&["recon", "hypomorphic", &g, &h, "--k", v]);
        check(
            hypo.json["result"] == true && full.json["result"] == false,
            format!("v={v} k={k}: counterexample does not replay"),
        )?;
    }
    let elapsed = start.elapsed();
    check(elapsed <= RECON_ALL, format!("took {elapsed:?}"))?;
    Ok(format!(
        "v=5 reconstructible, v=3,4 counterexamples, {elapsed:?}"
    ))
}

fn prop_down() -> Result<String, String> {
    let r = clawfree(&[
        "recon", "propdown", "--v", "5", "--k", "3", "--t", "2", "--jobs", "4",
    ]);
    check(
        r.code == 0
            && r.json["pairs_checked"] == 1_048_576u64
            && r.json["violations"]
                .as_array()
                .is_some_and(|v| v.is_empty()),
        r.stdout.trim().to_string(),
    )?;
    within(&r, PROPDOWN, "propdown")?;
    Ok(format!("1048576 pairs in {:?}", r.elapsed))
}

fn determinism() -> Result<String, String> {
    let cases: [(&str, usize, Vec<String>); 3] = [
        ("theorem1", 8, sample_args(50_000)),
        ("theorem2", 6, Vec::new()),
        ("lemma_ggu", 7, sample_args(20_000)),
    ];
    for (property, n, extra) in cases {
        let mut outputs = Vec::new();
        for jobs in ["1", "1", "4"] {
            let mut args: Vec<&str> = extra.iter().map(String::as_str).collect();
            args.extend(["--jobs", jobs]);
            outputs.push(verify(property, n, &args).stdout);
        }
        check(
            outputs.iter().all(|o| *o == outputs[0]) && !outputs[0].is_empty(),
            format!("{property} n={n}: reports differ"),
        )?;
    }
    Ok("serial, repeated and 4-job reports byte-identical".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 11] = [
        ("1 theorem 1 oracle equivalence", theorem1),
        ("2 claw-free iff S(U) triangle-free", formula1),
        ("3 named-graph facts", named_graph_facts),
        ("4 theorem 2 three-way equivalence", theorem2),
        ("5 case analysis", case_analysis),
        ("6 claims suite", claims),
        ("7 boolean sum lemma", lemma_ggu),
        ("8 theorem 2 consequences", thm2_consequences),
        ("9 reconstruction", reconstruction),
        ("10 proposition down", prop_down),
        ("11 determinism", determinism),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
