use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_resmatch"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn resmatch")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn compute_p5() {
    let out = run(&["compute", "--input", path_str(&fixture("p5.graph"))]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["nu"], 2);
    assert_eq!(v["ell"], 1);
    assert_eq!(v["L"], 2);
    assert_eq!(v["achieved"], serde_json::json!([1, 2]));
    assert_eq!(v["connected"], true);
}

#[test]
fn compute_twin_spider() {
    let out = run(&["compute", "--input", path_str(&fixture("twin_spider.graph"))]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!((v["nu"].as_u64(), v["nu2"].as_u64(), v["L"].as_u64()), (Some(5), Some(8), Some(2)));
    assert_eq!(v["matchings_enumerated"], 1);
}

#[test]
fn compute_disconnected_and_problem1() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("two.graph");
    fs::write(&g, "p mg 4 2\ne 1 2\ne 3 4\n").unwrap();
    let out = run(&["compute", "--input", path_str(&g), "--k", "0", "--f", "const:1"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["connected"], false);
    // removing the unique perfect matching leaves nothing
    assert_eq!(v["problem1"]["answer"], "yes");
    assert_eq!(v["problem1"]["residual"], 0);
}

#[test]
fn compute_reports_truncation_with_failure_status() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("k4.graph");
    fs::write(&g, "p mg 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n").unwrap();
    let out = run(&["compute", "--input", path_str(&g), "--cap", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["truncated"], true);
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for p in [&a, &b] {
        let out = run(&["compute", "--input", path_str(&fixture("twin_spider.graph")), "--trials", "5", "--output", path_str(p)]);
        assert!(out.status.success());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn reduce_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.graph");
    let out = run(&["reduce", "--input", path_str(&fixture("single_clause.cnf")), "--output", path_str(&graph), "--exhaustive"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let cert_path = dir.path().join("g.graph.cert.json");
    let cert: Value = serde_json::from_str(&fs::read_to_string(&cert_path).unwrap()).unwrap();
    assert_eq!(cert["k_param"], 10);
    assert_eq!(cert["structure"]["vertices"], 32);
    assert_eq!(cert["rows"].as_array().unwrap().len(), 8);

    let out = run(&[
        "verify",
        "--input",
        path_str(&graph),
        "--cnf",
        path_str(&fixture("single_clause.cnf")),
        "--certificate",
        path_str(&cert_path),
        "--exhaustive",
        "--enumerate",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["discrepancies"], serde_json::json!([]));

    // drop one gadget edge
    let text = fs::read_to_string(&graph).unwrap();
    let victim = text.lines().rfind(|l| l.starts_with("e ")).unwrap().to_string();
    let tampered: String = text
        .lines()
        .filter(|l| *l != victim)
        .map(|l| if l.starts_with("p mg") { "p mg 32 35".to_string() } else { l.to_string() })
        .map(|l| l + "\n")
        .collect();
    let bad = dir.path().join("bad.graph");
    fs::write(&bad, tampered).unwrap();
    let out = run(&[
        "verify",
        "--input",
        path_str(&bad),
        "--cnf",
        path_str(&fixture("single_clause.cnf")),
        "--certificate",
        path_str(&cert_path),
        "--exhaustive",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let issues = json(&out)["discrepancies"].to_string();
    assert!(issues.contains("edge count 35 != 36"), "{issues}");
}

#[test]
fn reduce_ell_variant_two_clauses() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.graph");
    let out = run(&[
        "reduce",
        "--input",
        path_str(&fixture("two_clauses.cnf")),
        "--variant",
        "ell",
        "--output",
        path_str(&graph),
        "--exhaustive",
        "--enumerate",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(&graph).unwrap();
    assert!(text.starts_with("p mg 56 61\n"));
}

#[test]
fn reduce_rejects_repeated_variable() {
    let dir = tempfile::tempdir().unwrap();
    let cnf = dir.path().join("bad.cnf");
    fs::write(&cnf, "p cnf 3 1\n1 1 2 0\n").unwrap();
    let out = run(&["reduce", "--input", path_str(&cnf), "--output", path_str(&dir.path().join("o.graph"))]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("repeated variable 1"));
    assert!(!dir.path().join("o.graph").exists());
}

#[test]
fn bench_p5_and_cycles() {
    let out = run(&["bench", "--family", "path:5", "--seeds", "10"]);
    assert!(out.status.success());
    let csv = String::from_utf8(out.stdout).unwrap();
    assert_eq!(csv.lines().count(), 11);
    let summary: Value = serde_json::from_slice(out.stderr.trim_ascii()).unwrap();
    assert_eq!(summary["observed_ratio_ell"], serde_json::json!(["1", "2"]));

    let out = run(&["bench", "--family", "even-cycles:14"]);
    assert!(out.status.success());
    let summary: Value = serde_json::from_slice(out.stderr.trim_ascii()).unwrap();
    assert_eq!(summary["observed_ratio_ell"], serde_json::json!(["1"]));
    assert_eq!(summary["observed_ratio_L"], serde_json::json!(["1"]));
}

#[test]
fn bench_random_bipartite_csv_file() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("b.csv");
    let out = run(&["bench", "--family", "bipartite:10", "--trials", "30", "--seed", "9", "--output", path_str(&csv)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("graph,vertices,edges,nu,ell,L,seed,residual,ratio_ell,ratio_L,truncated\n"));
    assert_eq!(text.lines().count(), 1 + 30 * 10);
}

#[test]
fn calibrate_values() {
    let v = json(&run(&["calibrate", "--variant", "L", "--epsilon", "1/176"]));
    assert_eq!(v["delta"], "1/16");
    let v = json(&run(&["calibrate", "--c", "1/300", "--epsilon", "1/100"]));
    assert_eq!(v["separates"], true);
    assert_eq!(v["threshold"], "23/6400");
    let v = json(&run(&["calibrate", "--c", "1/512", "--epsilon", "1/16"]));
    assert_eq!(v["separates"], false);
    assert_eq!(run(&["calibrate", "--variant", "ell", "--epsilon", "1/80"]).status.code(), Some(2));
    assert_eq!(run(&["calibrate", "--epsilon", "0.5"]).status.code(), Some(2));
}
