use std::path::Path;

use rounding::cli::{exit, main_with_args};

fn run(args: &[&str]) -> i32 {
    main_with_args(std::iter::once("rounding").chain(args.iter().copied()))
}

fn run_to(dir: &Path, file: &str, args: &[&str]) -> (i32, String) {
    let out = dir.join(file);
    let mut full = args.to_vec();
    let p = out.to_str().unwrap().to_string();
    full.extend(["--out", &p]);
    let code = run(&full);
    (code, std::fs::read_to_string(&out).unwrap_or_default())
}

fn column(csv: &str, name: &str) -> Vec<f64> {
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let k = header.iter().position(|h| *h == name).unwrap();
    lines.map(|l| l.split(',').nth(k).unwrap().parse().unwrap()).collect()
}

#[test]
fn beta_tables() {
    let dir = tempfile::tempdir().unwrap();
    let (code, csv) = run_to(dir.path(), "g.csv", &["beta", "--dist", "gumbel:1.442695", "--m", "1", "--grid", "64"]);
    assert_eq!(code, exit::OK);
    assert!(csv.starts_with("alpha,beta_m,truncation_n\n"));
    let b = column(&csv, "beta_m");
    assert_eq!(b.len(), 64);
    assert!(b.iter().all(|v| v.abs() < 1.6e-6));

    let (_, csv) = run_to(dir.path(), "u.csv", &["beta", "--dist", "uniform:3", "--m", "1", "--grid", "16"]);
    assert!(column(&csv, "beta_m").iter().all(|v| v.abs() < 1e-12));
    let (_, csv) = run_to(dir.path(), "w.csv", &["beta", "--dist", "uniform2u:2", "--m", "3", "--grid", "16"]);
    assert!(column(&csv, "beta_m").iter().any(|v| v.abs() > 1e-4));
}

#[test]
fn variance_moments_and_charfn() {
    let dir = tempfile::tempdir().unwrap();
    let (code, csv) = run_to(dir.path(), "v.csv", &["variance-profile", "--dist", "patricia", "--grid", "64"]);
    assert_eq!(code, exit::OK);
    let v = column(&csv, "value");
    assert_eq!(v.len(), 64);
    assert!(v.iter().all(|x| (x - 1.0).abs() < 1e-9));

    let (code, json) = run_to(dir.path(), "m.json", &["moments", "--dist", "aldous", "--m", "1", "--alpha", "0", "--format", "json"]);
    assert_eq!(code, exit::OK);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let frac = v["summary"]["fractional_part_mean"].as_f64().unwrap();
    assert!((frac - 11.0 / 24.0).abs() < 1e-12);

    let (_, csv) = run_to(dir.path(), "c.csv", &["charfn", "--dist", "uniform:1", "--t", "0", "--alpha", "0.7"]);
    assert!(csv.starts_with("t,alpha,re,im"));
    assert_eq!(column(&csv, "re"), vec![1.0; column(&csv, "re").len()]);
    assert!(column(&csv, "im").iter().all(|x| *x == 0.0));
}

#[test]
fn converge_and_unknown_process() {
    let dir = tempfile::tempdir().unwrap();
    let (code, csv) = run_to(dir.path(), "a.csv", &["converge", "--process", "approx-counting", "--n", "16..16384", "geometric"]);
    assert_eq!(code, exit::OK);
    assert!(csv.starts_with("n,a_n,tv_distance\n"));
    let tv = column(&csv, "tv_distance");
    assert_eq!(tv.len(), 11);
    assert!(tv.windows(2).all(|w| w[1] < w[0]));

    let (code, csv) = run_to(dir.path(), "t.csv", &["converge", "--process", "trie-depth:2", "--n", "16..4096"]);
    assert_eq!(code, exit::OK);
    assert!(column(&csv, "tv_distance").windows(2).all(|w| w[1] < w[0]));

    let (code, _) = run_to(dir.path(), "bad.csv", &["converge", "--process", "nonexistent"]);
    assert_eq!(code, exit::BAD_NAME);
    assert!(!dir.path().join("bad.csv").exists());
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run_to(dir.path(), "x.csv", &["beta", "--dist", "cauchy"]).0, exit::BAD_NAME);
    assert_eq!(run_to(dir.path(), "x.csv", &["beta", "--dist", "aldous", "--m", "3"]).0, exit::UNSUPPORTED);
    assert_eq!(run_to(dir.path(), "x.csv", &["beta", "--dist", "aldous", "--tol", "0"]).0, exit::UNSUPPORTED);
    let missing = dir.path().join("no/such/dir/out.csv");
    assert_eq!(run(&["beta", "--dist", "aldous", "--out", missing.to_str().unwrap()]), exit::IO);
    assert_eq!(run(&["frobnicate"]), exit::BAD_NAME);
}

#[test]
fn checks_report() {
    let dir = tempfile::tempdir().unwrap();
    let (code, json) = run_to(dir.path(), "p.json", &["checks", "--only", "prodinger"]);
    assert_eq!(code, exit::OK);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let rows = v.as_array().unwrap();
    assert!(!rows.is_empty());
    for r in rows {
        assert_eq!(r["check"], "prodinger");
        assert_eq!(r["status"], "pass");
        assert!(r["value"].is_f64() && r["tolerance"].is_f64());
    }
    let (code, json) = run_to(dir.path(), "t.json", &["checks", "--only", "parseval", "--tamper", "parseval"]);
    assert_eq!(code, exit::CHECK_FAILED);
    assert!(json.contains("\"fail\""));
    assert_eq!(run_to(dir.path(), "n.json", &["checks", "--only", "bogus"]).0, exit::BAD_NAME);
}

#[test]
fn output_is_reproducible_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["variance-profile", "--dist", "approx-counting", "--grid", "32"];
    let (_, a) = run_to(dir.path(), "a.csv", &args);
    let (_, b) = run_to(dir.path(), "b.csv", &args);
    assert_eq!(a, b);
    for line in a.lines().skip(1) {
        for cell in line.split(',') {
            let x: f64 = cell.parse().unwrap();
            assert_eq!(rounding::cli::format_f64(x), cell);
        }
    }
    let h = ["converge", "--process", "trie-height:2", "--n", "64,128", "--trials", "2000", "--seed", "3"];
    assert_eq!(run_to(dir.path(), "h1.csv", &h).1, run_to(dir.path(), "h2.csv", &h).1);
}

#[test]
fn default_output_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    std::env::set_var(rounding::cli::OUT_DIR_ENV, dir.path());
    let code = run(&["beta", "--dist", "uniform:1", "--grid", "4"]);
    std::env::remove_var(rounding::cli::OUT_DIR_ENV);
    assert_eq!(code, exit::OK);
    let csv = std::fs::read_to_string(dir.path().join("beta.csv")).unwrap();
    assert_eq!(csv.lines().count(), 5);
}
