use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_braceforge"));
    cmd.args(args).env_remove("BRACEFORGE_CAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn validate_reports_the_type() {
    let o = run(&["validate", path(&data("funny.json"))]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "valid skew left brace, order 16, abelian type\n");
}

#[test]
fn invalid_and_missing_files() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"order":2,"add":[[0,1],[1,0]],"circle":[[0,1],[1,1]]}"#).unwrap();
    let o = run(&["validate", path(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("invalid:"));

    let missing = dir.path().join("missing.json");
    let o = run(&["info", path(&missing)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("missing.json"));
}

#[test]
fn strong_series_sizes() {
    let o = run(&["series", "--kind", "strong", path(&data("funny.json"))]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("sizes 16,8,4,2,2,1"));

    let o = run(&["--json", "series", "--kind", "socle", path(&data("funny.json"))]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["mpl"], 4);
}

#[test]
fn laws_pass_and_are_deterministic() {
    let o = run(&["laws", "--orders", "1..8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).trim_end().ends_with("all laws passed"));

    let a = run(&["--json", "laws", "--orders", "1..6", "--scan-questions"]);
    let b = run(&[
        "--json",
        "--sequential",
        "laws",
        "--orders",
        "1..=6",
        "--scan-questions",
    ]);
    assert_eq!(a.status.code(), Some(0));
    let (va, vb): (serde_json::Value, serde_json::Value) = (
        serde_json::from_slice(&a.stdout).unwrap(),
        serde_json::from_slice(&b.stdout).unwrap(),
    );
    assert_eq!(va["laws"], vb["laws"]);
    assert_eq!(va["question_scan"], vb["question_scan"]);
    assert_eq!(va["all_passed"], true);
    assert_eq!(va["brace_count"], 14);
}

#[test]
fn usage_errors_exit_two() {
    let o = run(&["laws", "--orders", "1..20"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--orders"));
    let o = run(&["laws", "--orders", "x"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["window", "--kind", "nope", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--kind"));
    let o = run(&["enumerate", "--order", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("BRACEFORGE_CAP"));
    let o = run_env(&["enumerate", "--order", "4"], &[("BRACEFORGE_CAP", "lots")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn enumerate_writes_files_that_laws_accept() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["enumerate", "--order", "4", "--out", path(dir.path())]);
    assert_eq!(o.status.code(), Some(0));
    for i in 1..=4 {
        assert!(dir.path().join(format!("brace_4_{i}.json")).exists());
    }
    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["count"], 4);
    assert_eq!(manifest["braces"][0]["file"], "brace_4_1.json");

    let o = run(&["--json", "laws", "--dir", path(dir.path())]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["brace_count"], 4);

    let o = run_env(&["--json", "enumerate", "--order", "9"], &[("BRACEFORGE_CAP", "9")]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], 4);
}

#[test]
fn cocycle_rebuilds_the_data_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("b.json");
    let o = run(&["cocycle", path(&data("funny_cocycle.json")), "--out", path(&out)]);
    assert_eq!(o.status.code(), Some(0));
    let ours: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let stored: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(data("funny.json")).unwrap()).unwrap();
    assert_eq!(ours, stored);
}

#[test]
fn solutions_orbits_and_restriction() {
    let dir = tempfile::tempdir().unwrap();
    let sol = dir.path().join("s.json");
    let o = run(&["ybe", path(&data("funny.json")), "--out", path(&sol)]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["--json", "ybe", "--check", path(&sol)]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["report"]["involutive"], true);

    let o = run(&["--json", "orbits", path(&sol)]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let orbits = v["orbits"].as_array().unwrap();
    let second: Vec<String> = orbits[1].as_array().unwrap().iter().map(|x| x.to_string()).collect();
    let o = run(&["--json", "restrict", path(&sol), "--subset", &second.join(",")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["report"]["ybe"], true);

    let o = run(&["restrict", path(&data("funny.json")), "--subset", "1,2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("not invariant"));
}

#[test]
fn window_reports() {
    let o = run(&["--json", "window", "--kind", "rump", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["triples_checked"], 11 * 11 * 11);
    assert_eq!(v["failure_count"], 0);
}
