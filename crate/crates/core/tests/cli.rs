use std::process::Command;

use hilbmon::cli::run;
use hilbmon::HilbertData;

const EXAMPLE_PRESENTATION: &str = "1,0,1;0,6,0;0,3,1;0,0,2";

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hilbmon").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn fixture_path() -> String {
    format!(
        "{}/fixtures/paper_example.jsonl",
        env!("CARGO_MANIFEST_DIR")
    )
}

#[test]
fn hilbert_json() {
    let (code, out, _) = call(&["hilbert", "--gens", "6,7,15", "--json"]);
    assert_eq!(code, 0);
    let d: HilbertData = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(d.hilbert, vec![1, 3, 4, 5, 5, 6]);
    assert!(!d.depth_positive);
    // parse and re-serialize is idempotent
    assert_eq!(serde_json::to_string(&d).unwrap(), out.trim());
}

#[test]
fn hilbert_direct_sum() {
    let (code, out, _) = call(&[
        "hilbert", "--gens", "6,7,15", "--ideal", "0", "--ideal", "0,1", "--json",
    ]);
    assert_eq!(code, 0);
    let d: HilbertData = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(d.e0, 12);
    assert_eq!(d.mu, 3);
}

#[test]
fn human_tables() {
    let (code, out, _) = call(&["hilbert", "--gens", "3,4,5", "--ideal", "0,1,2"]);
    assert_eq!(code, 0);
    assert!(out.contains("h-polynomial   3"));
    let (code, out, _) = call(&["depth", "--gens", "6,7,15"]);
    assert_eq!(code, 0);
    assert!(out.contains("t^29 in degree 3"));
    let (code, out, _) = call(&["info", "--gens", "6,7,15"]);
    assert_eq!(code, 0);
    assert!(out.contains("frobenius      23"));
}

#[test]
fn crosscheck_exit_codes() {
    let (code, out, _) = call(&[
        "crosscheck",
        "--gens",
        "6,7,15",
        "--presentation",
        EXAMPLE_PRESENTATION,
        "--upto",
        "20",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("equal"));
    let (code, out, _) = call(&[
        "crosscheck",
        "--gens",
        "6,7,15",
        "--presentation",
        "1,0,1;0,5,0;0,3,1;0,0,2",
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("mismatch at n = 5"));
    let (code, _, _) = call(&[
        "crosscheck",
        "--gens",
        "1",
        "--presentation",
        "",
        "--vars",
        "1",
        "--upto",
        "5",
    ]);
    assert_eq!(code, 0);
}

#[test]
fn monomial_hf_json() {
    let (code, out, _) = call(&[
        "monomial-hf",
        "--presentation",
        EXAMPLE_PRESENTATION,
        "--upto",
        "6",
        "--socle",
        "0,2,1",
        "--json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["hf"], serde_json::json!([1, 3, 4, 5, 5, 6, 6]));
    assert_eq!(v["socle"]["is_witness"], true);
}

#[test]
fn usage_errors_exit_2() {
    let (code, _, err) = call(&["info", "--gens", "4,6"]);
    assert_eq!(code, 2);
    assert!(err.contains("not coprime"), "{err}");
    let (code, _, err) = call(&["hilbert"]);
    assert_eq!(code, 2);
    assert!(err.contains("--gens"), "{err}");
    let (code, _, err) = call(&["hilbert", "--gens", "6,x"]);
    assert_eq!(code, 2);
    assert!(err.contains("--gens"), "{err}");
    let (code, _, _) = call(&["scan", "--symmetric-only"]);
    assert_eq!(code, 2);
    let (code, _, err) = call(&["scan", "--max-genus", "3", "--checks", "bogus"]);
    assert_eq!(code, 2);
    assert!(err.contains("--checks"), "{err}");
    let (code, _, _) = call(&["monomial-hf", "--presentation", "1,0;1"]);
    assert_eq!(code, 2);
    let (code, _, _) = call(&["frobnicate"]);
    assert_eq!(code, 2);
    let (code, _, _) = call(&["--help"]);
    assert_eq!(code, 0);
}

#[test]
fn verify_shipped_fixtures() {
    let (code, out, _) = call(&["verify", &fixture_path()]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().filter(|l| l.starts_with("PASS")).count() >= 1);
    assert!(!out.contains("FAIL"));
}

#[test]
fn verify_negative_control_and_edge_cases() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.jsonl");
    std::fs::write(&bad, "{\"gens\":[6,7,15],\"expect\":{\"h\":[1,2,1,1,1]}}\n").unwrap();
    let (code, out, _) = call(&["verify", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL"));
    assert!(out.contains("h: expected [1,2,1,1,1] got [1,2,1,1,0,1]"));

    let empty = dir.path().join("empty.jsonl");
    std::fs::write(&empty, "").unwrap();
    let (code, out, err) = call(&["verify", empty.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("PASS"));
    assert!(err.contains("warning"));

    let broken = dir.path().join("broken.jsonl");
    std::fs::write(&broken, "{\"gens\":[2,3]}\nnot json\n").unwrap();
    let (code, _, err) = call(&["verify", broken.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains(":2:"), "{err}");

    let (code, _, _) = call(&["verify", dir.path().join("missing.jsonl").to_str().unwrap()]);
    assert_eq!(code, 2);
}

#[test]
fn scan_and_sweep_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.jsonl");
    let b = dir.path().join("b.jsonl");
    for (jobs, path) in [("1", &a), ("8", &b)] {
        let (code, _, _) = call(&[
            "sweep",
            "--gens",
            "6,7,15",
            "--ideal-window",
            "29",
            "--jobs",
            jobs,
            "--no-timing",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    let (code, out, _) = call(&[
        "scan",
        "--max-frobenius",
        "25",
        "--embdim-max",
        "3",
        "--checks",
        "monotone",
        "--json",
    ]);
    assert_eq!(code, 0);
    let summary: serde_json::Value = serde_json::from_str(out.lines().last().unwrap()).unwrap();
    assert_eq!(summary["record"], "summary");
    assert_eq!(summary["findings"], 0);
    assert!(summary["elapsed_ms"].is_u64());

    // unrestricted scans do find non-monotone rings of large embedding dimension
    let (code, out, _) = call(&[
        "scan",
        "--max-frobenius",
        "30",
        "--checks",
        "monotone",
        "--json",
        "--no-timing",
    ]);
    assert_eq!(code, 1);
    let first: serde_json::Value = serde_json::from_str(out.lines().next().unwrap()).unwrap();
    assert_eq!(first["kind"], "nonmonotone");
    let gens: Vec<usize> = serde_json::from_value(first["generators"].clone()).unwrap();
    assert!(gens.len() > 4);
}

#[test]
fn safety_cap_env_override() {
    let bin = env!("CARGO_BIN_EXE_hilbmon");
    let out = Command::new(bin)
        .args(["scan", "--max-genus", "12"])
        .env("HILBMON_SAFETY_CAP", "50")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("safety cap"));

    let out = Command::new(bin)
        .args(["scan", "--max-genus", "3"])
        .env("HILBMON_SAFETY_CAP", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
