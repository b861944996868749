use std::path::PathBuf;
use std::process::{Command, Output};

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ccr-lab-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn ccr_lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ccr-lab")).args(args).output().unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn kernel_default_grid_succeeds_with_csv_and_summary() {
    let dir = scratch("kernel");
    let o = ccr_lab(&["kernel", "--m", "1", "--grid", "default", "--out", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let csv = std::fs::read_to_string(dir.join("kernel.csv")).unwrap();
    assert!(csv.starts_with("dt,r,re,im,"));
    assert_eq!(csv.lines().count(), 101);
    let summary: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("kernel_summary.json")).unwrap()).unwrap();
    assert_eq!(summary["passed"], true);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let (a, b) = (scratch("det-a"), scratch("det-b"));
    for dir in [&a, &b] {
        let o = ccr_lab(&["wf", "--seed", "7", "--legs", "20", "--out", dir.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let o = ccr_lab(&["kernel", "--out", dir.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    }
    for f in ["wf.json", "kernel.csv", "kernel_summary.json"] {
        assert_eq!(std::fs::read(a.join(f)).unwrap(), std::fs::read(b.join(f)).unwrap(), "{f}");
    }
}

#[test]
fn cfl_violation_is_a_validation_failure() {
    let o = ccr_lab(&["lattice", "--a", "0.01", "--dt", "0.02"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("CFL"), "{}", stderr(&o));
}

#[test]
fn config_file_runs_and_schema_errors_name_the_key() {
    let dir = scratch("config");
    let good = dir.join("good.json");
    std::fs::write(&good, r#"{"version": 1, "seed": 3, "command": {"kernel": {"m": 1.0, "grid": "ladder"}}}"#).unwrap();
    let o = ccr_lab(&["--config", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));

    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"version": 1, "command": {"kernel": {"m": "heavy"}}}"#).unwrap();
    let o = ccr_lab(&["--config", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("command.kernel.m"), "{}", stderr(&o));

    let stale = dir.join("stale.json");
    std::fs::write(&stale, r#"{"version": 9, "command": {"kernel": {}}}"#).unwrap();
    let o = ccr_lab(&["--config", stale.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("version"), "{}", stderr(&o));
}

#[test]
fn phase_purity_reports_a_verdict() {
    let dir = scratch("phase");
    let mu = dir.join("mu.json");
    let tau = dir.join("tau.json");
    std::fs::write(&tau, "[[0.0, 1.0], [-1.0, 0.0]]").unwrap();
    for (diag, pure) in [("0.5", true), ("1.0", false)] {
        std::fs::write(&mu, format!("[[{diag}, 0.0], [0.0, {diag}]]")).unwrap();
        let o = ccr_lab(&["phase", "--mu", mu.to_str().unwrap(), "--tau", tau.to_str().unwrap(), "--check", "purity"]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["pure"], pure);
    }
}

#[test]
fn algebra_and_wick_order_on_exact_inputs() {
    let o = ccr_lab(&["algebra", "--expr", "phi(2)phi(1)", "--symplectic", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["degree"], 2);

    let dir = scratch("wick");
    let k = dir.join("k.json");
    std::fs::write(&k, r#"{"n": 2, "omega": [["1/2", "0+1/2*i"], ["0-1/2*i", "1/2"]]}"#).unwrap();
    let o = ccr_lab(&["wick", "--mode", "order", "--expr", "phi(1)phi(1)", "--kernel", k.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = ccr_lab(&["npoint", "--kernel", k.to_str().unwrap(), "--indices", "1,2", "--indices", "1,2,1,2", "--exact"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(String::from_utf8_lossy(&o.stdout).lines().count(), 3);
}

#[test]
fn bad_thread_count_is_rejected() {
    let o = Command::new(env!("CARGO_BIN_EXE_ccr-lab"))
        .args(["kernel"])
        .env("CCR_LAB_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
