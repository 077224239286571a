use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn sigdim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sigdim"))
        .args(args)
        .output()
        .unwrap()
}

fn text(bytes: &[u8]) -> String {
    String::from_utf8(bytes.to_vec()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn embed_prints_golden_json() {
    for name in ["k2", "c3", "k13", "2k2"] {
        let out = sigdim(&["embed", path(&fixture(&format!("{name}.graph")))]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let golden = std::fs::read_to_string(fixture(&format!("{name}.embedding.json"))).unwrap();
        assert_eq!(text(&out.stdout), golden, "{name}");
        assert!(text(&out.stderr).ends_with("verdict pass\n"));
    }
}

#[test]
fn embed_writes_file_and_report() {
    let dir = TempDir::new().unwrap();
    let out_path = dir.path().join("k13.json");
    let report = dir.path().join("report.json");
    let trace = dir.path().join("trace.json");
    let out = sigdim(&[
        "embed",
        path(&fixture("k13.graph")),
        "-o",
        path(&out_path),
        "--report",
        path(&report),
        "--trace",
        path(&trace),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        text(&out.stdout),
        "n = 4, d = 3, bound 4, refined 4, verdict pass\n"
    );
    let rep: Value = serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(rep["verdict"], "pass");
    assert_eq!(rep["sig_equal"], true);
    let tr: Value = serde_json::from_str(&std::fs::read_to_string(trace).unwrap()).unwrap();
    assert_eq!(tr["picks"].as_array().unwrap().len(), 2);
    assert_eq!(tr["picks"][1]["step"], 32);
}

#[test]
fn input_errors_exit_one_and_name_the_vertex() {
    let out = sigdim(&["embed", path(&fixture("isolated.graph"))]);
    assert_eq!(out.status.code(), Some(1));
    assert!(text(&out.stderr).contains("vertex 2 is isolated"));
    let out = sigdim(&["embed", path(&fixture("self_loop.graph"))]);
    assert_eq!(out.status.code(), Some(1));
    assert!(text(&out.stderr).contains("self-loop at vertex 2"));
    let out = sigdim(&["embed", "/nonexistent/graph"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn sig_of_points() {
    let dir = TempDir::new().unwrap();
    let points = dir.path().join("line.json");
    std::fs::write(&points, "[[0], [1], [10]]").unwrap();
    let out = sigdim(&["sig", path(&points)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(text(&out.stdout), "3 2\n0 1\n1 2\n");
    std::fs::write(&points, "[[0], [0]]").unwrap();
    assert_eq!(sigdim(&["sig", path(&points)]).status.code(), Some(1));
}

#[test]
fn verify_round_trip_and_corruption() {
    let dir = TempDir::new().unwrap();
    let emb = dir.path().join("c3.json");
    let graph = fixture("c3.graph");
    assert_eq!(
        sigdim(&["embed", path(&graph), "-o", path(&emb)])
            .status
            .code(),
        Some(0)
    );
    let out = sigdim(&["verify", path(&graph), path(&emb), "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(text(&out.stdout).starts_with("n = 3, d = 2"));

    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&emb).unwrap()).unwrap();
    v["coords"][0][0] = Value::from(40);
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, v.to_string()).unwrap();
    let out = sigdim(&["verify", path(&graph), path(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    let rep: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rep["verdict"], "fail");
    assert_eq!(rep["missing_edges"], serde_json::json!([[0, 1]]));
}

#[test]
fn documented_counterexample_exits_two() {
    let out = sigdim(&["embed", path(&fixture("residual_gap.graph"))]);
    assert_eq!(out.status.code(), Some(2));
    assert!(text(&out.stderr)
        .contains("block 4 (II, step 27): family 2 fails on 9-0: lhs 140, rhs 144"));
}

#[test]
fn oracle_realizes() {
    let out = sigdim(&["oracle", path(&fixture("k13.graph"))]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["realizes"], true);
    assert_eq!(v["d"], 4);
    assert_eq!(v["coords"][0], serde_json::json!([2, 1, 1, 1]));
}

#[test]
fn fuzz_is_deterministic() {
    let args = [
        "fuzz", "--n-min", "8", "--n-max", "14", "--p", "1/10,1/2", "--seed", "9", "--count", "20",
    ];
    let a = sigdim(&args);
    let b = sigdim(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["cases"].as_array().unwrap().len(), 20);
    assert_eq!(v["config"]["seed"], 9);
}

#[test]
fn exhaustive_text_summary() {
    let out = sigdim(&["exhaustive", "--max-n", "4", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(text(&out.stdout).starts_with("n=2: 1 graphs, 1 pass"));
}

#[test]
fn fuzz_bundles_reproduce() {
    let args = |dir: &Path| {
        sigdim(&[
            "fuzz",
            "--n-min",
            "10",
            "--n-max",
            "16",
            "--p",
            "1/10",
            "--seed",
            "1",
            "--count",
            "200",
            "--out-dir",
            path(dir),
        ])
    };
    let (a, b) = (TempDir::new().unwrap(), TempDir::new().unwrap());
    let out = args(a.path());
    assert_eq!(out.status.code(), Some(0));
    args(b.path());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["fail"], 1);
    assert_eq!(v["failures"]["verify:II:family2"], 1);

    let read = |d: &TempDir, f: &str| std::fs::read_to_string(d.path().join(f)).unwrap();
    assert_eq!(read(&a, "bundle-0.json"), read(&b, "bundle-0.json"));
    let bundle: Value = serde_json::from_str(&read(&a, "bundle-0.json")).unwrap();
    assert_eq!(bundle["failure"], "verify:II:family2");
    assert_eq!(bundle["original_n"], 12);

    let graph = a.path().join("bundle-0.graph");
    assert!(read(&a, "bundle-0.graph").starts_with("12 8\n"));
    let rerun = sigdim(&["embed", path(&graph)]);
    assert_eq!(rerun.status.code(), Some(2));
    assert!(text(&rerun.stderr).contains("(II, step 27): family 2 fails"));
}
