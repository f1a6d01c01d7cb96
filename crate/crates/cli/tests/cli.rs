use std::collections::BTreeSet;
use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use sha2::{Digest, Sha256};
use tempfile::TempDir;

fn dg_lab(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dg-lab"))
        .current_dir(dir)
        .env_remove("DG_LAB_OUT")
        .args(args)
        .output()
        .expect("binary runs")
}

fn manifest(dir: &Path) -> Value {
    serde_json::from_slice(&fs::read(dir.join("manifest.json")).unwrap()).unwrap()
}

fn files_under(root: &Path) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    let mut stack = vec![root.to_path_buf()];
    while let Some(d) = stack.pop() {
        for entry in fs::read_dir(d).unwrap() {
            let p = entry.unwrap().path();
            if p.is_dir() {
                stack.push(p);
            } else {
                let rel = p.strip_prefix(root).unwrap().to_string_lossy().replace('\\', "/");
                out.insert(rel);
            }
        }
    }
    out
}

fn assert_manifest_complete(dir: &Path) {
    let m = manifest(dir);
    let mut listed = BTreeSet::new();
    for f in m["files"].as_array().unwrap() {
        let rel = f["path"].as_str().unwrap();
        let data = fs::read(dir.join(rel)).unwrap();
        assert_eq!(f["bytes"].as_u64().unwrap(), data.len() as u64, "{rel}");
        let hex: String = Sha256::digest(&data).iter().map(|b| format!("{b:02x}")).collect();
        assert_eq!(f["sha256"].as_str().unwrap(), hex, "{rel}");
        listed.insert(rel.to_string());
    }
    let mut on_disk = files_under(dir);
    on_disk.remove("manifest.json");
    assert_eq!(listed, on_disk);
}

fn csv_column(path: &Path, name: &str) -> Vec<f64> {
    let text = fs::read_to_string(path).unwrap();
    let mut lines = text.lines();
    let idx = lines.next().unwrap().split(',').position(|h| h == name).unwrap();
    lines.map(|l| l.split(',').nth(idx).unwrap().parse().unwrap()).collect()
}

#[test]
fn oracle_table_matches_closed_form() {
    let tmp = TempDir::new().unwrap();
    let out = dg_lab(tmp.path(), &["oracle", "--model", "clm", "--init", "cos", "--t", "0.5", "--out", "o"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let dir = tmp.path().join("o");
    let theta = csv_column(&dir.join("table.csv"), "theta");
    let exact = csv_column(&dir.join("table.csv"), "exact");
    let projected = csv_column(&dir.join("table.csv"), "projected");
    for ((&th, &e), &p) in theta.iter().zip(&exact).zip(&projected) {
        // cos θ evolves to Re[e^{iθ}/(1 + (i/2) t e^{iθ})]
        let z = num_complex::Complex::from_polar(1.0, th);
        let want = (z / (1.0 + num_complex::Complex::new(0.0, 0.25) * z)).re;
        assert!((e - want).abs() < 1e-14, "theta {th}");
        assert!((p - want).abs() < 1e-12, "theta {th}");
    }
    let report: Value = serde_json::from_slice(&fs::read(dir.join("report.json")).unwrap()).unwrap();
    assert!((report["blowup_time"].as_f64().unwrap() - 2.0).abs() < 1e-12);
    assert_manifest_complete(&dir);
}

#[test]
fn simulate_is_deterministic_and_complete() {
    let tmp = TempDir::new().unwrap();
    let args = |out: &'static str| {
        vec![
            "simulate", "--model", "dg", "--init", "-sin+0.1sin2", "--n", "32", "--dt", "1e-2",
            "--t", "0.5", "--record-every", "5", "--snapshot-every", "2", "--track-invariants",
            "--out", out,
        ]
    };
    for out in ["a", "b"] {
        let o = dg_lab(tmp.path(), &args(out));
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    }
    let (a, b) = (tmp.path().join("a"), tmp.path().join("b"));
    for csv in ["timeseries.csv", "invariants.csv", "snapshots.csv"] {
        assert_eq!(fs::read(a.join(csv)).unwrap(), fs::read(b.join(csv)).unwrap(), "{csv}");
    }
    assert_manifest_complete(&a);
    assert!(a.join("snapshots/snap_00000.dgf1").exists());
    let t = csv_column(&a.join("timeseries.csv"), "t");
    assert_eq!(t.len(), 11);
    assert!((t[10] - 0.5).abs() < 1e-12);
    let m = manifest(&a);
    assert_eq!(m["status"], "ok");
    assert_eq!(m["config"]["n"], 32);
    assert_eq!(m["version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn blow_up_exits_three_with_partial_manifest() {
    let tmp = TempDir::new().unwrap();
    let out = dg_lab(
        tmp.path(),
        &["simulate", "--model", "clm", "--init", "cos", "--n", "32", "--dt", "1e-2", "--t", "3",
          "--sup-ceiling", "1e3", "--out", "b"],
    );
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("blew up"));
    let dir = tmp.path().join("b");
    let m = manifest(&dir);
    assert_eq!(m["status"], "numerical-failure");
    assert_manifest_complete(&dir);
    let t = csv_column(&dir.join("timeseries.csv"), "t");
    assert!(*t.last().unwrap() < 3.0 && t.len() > 1);
}

#[test]
fn usage_errors_exit_two() {
    let tmp = TempDir::new().unwrap();
    let unknown = dg_lab(tmp.path(), &["simulate", "--no-such-flag"]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(!unknown.stderr.is_empty());

    fs::write(tmp.path().join("bad.dgf1"), b"DGF1\x01\x00\x00\x00short").unwrap();
    let bad = dg_lab(tmp.path(), &["invariants", "--input", "bad.dgf1", "--out", "i"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("bad.dgf1"));

    let missing = dg_lab(tmp.path(), &["oracle", "--config", "nope.cfg"]);
    assert_eq!(missing.status.code(), Some(2));

    fs::write(tmp.path().join("k.cfg"), "colour = blue\n").unwrap();
    let key = dg_lab(tmp.path(), &["oracle", "--config", "k.cfg", "--out", "k"]);
    assert_eq!(key.status.code(), Some(2));

    let init = dg_lab(tmp.path(), &["oracle", "--init", "tan 2", "--out", "j"]);
    assert_eq!(init.status.code(), Some(2));
}

#[test]
fn flags_override_config_and_env_sets_root() {
    let tmp = TempDir::new().unwrap();
    fs::write(
        tmp.path().join("run.cfg"),
        "# oracle settings\nmodel = transport\ninit = sin 2\nt = 1.0\nn = 16\npoints = 8\n",
    )
    .unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_dg-lab"))
        .current_dir(tmp.path())
        .env("DG_LAB_OUT", tmp.path().join("root"))
        .args(["oracle", "--config", "run.cfg", "--n", "48", "--out", "r"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let dir = tmp.path().join("root/r");
    let m = manifest(&dir);
    assert_eq!(m["config"]["n"], 48);
    assert_eq!(m["config"]["points"], 8);
    assert_eq!(m["config"]["model"], "transport");
    let exact = csv_column(&dir.join("table.csv"), "exact");
    let projected = csv_column(&dir.join("table.csv"), "projected");
    assert_eq!(exact.len(), 8);
    for (e, p) in exact.iter().zip(&projected) {
        assert!((e - p).abs() < 1e-10);
    }
}

#[test]
fn eigen_sweep_is_independent_of_jobs() {
    let tmp = TempDir::new().unwrap();
    for (jobs, out) in [("1", "one"), ("3", "three")] {
        let o = dg_lab(
            tmp.path(),
            &["eigen", "--s-grid", "0.5:0.5:1.5", "--k", "800", "--dump", "--jobs", jobs, "--out", out],
        );
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    }
    let one = tmp.path().join("one");
    assert_eq!(
        fs::read(one.join("connection.csv")).unwrap(),
        fs::read(tmp.path().join("three/connection.csv")).unwrap()
    );
    let s = csv_column(&one.join("connection.csv"), "s");
    assert_eq!(s, vec![0.5, 1.0, 1.5]);
    for p in csv_column(&one.join("connection.csv"), "tail_exponent") {
        assert!((p + 2.0).abs() < 0.1, "tail exponent {p}");
    }
    let series = dg_lab::io::read_series(&mut fs::File::open(one.join("series/s_0001.eig1")).unwrap()).unwrap();
    assert_eq!(series.k_max(), 800);
    assert_eq!(series.lambda, num_complex::Complex::new(0.0, 1.0));
    assert_manifest_complete(&one);
}

#[test]
fn invariants_of_a_snapshot() {
    let tmp = TempDir::new().unwrap();
    let field = dg_lab::Field::from_trig(
        8,
        &[dg_lab::spectral::Trig::Sin(1, -1.0), dg_lab::spectral::Trig::Sin(2, 0.1)],
    )
    .unwrap();
    let mut buf = Vec::new();
    dg_lab::io::write_field(&mut buf, &field).unwrap();
    fs::write(tmp.path().join("f.dgf1"), buf).unwrap();
    let o = dg_lab(tmp.path(), &["invariants", "--input", "f.dgf1", "--out", "inv"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let report: Value =
        serde_json::from_slice(&fs::read(tmp.path().join("inv/report.json")).unwrap()).unwrap();
    let zeros = report["invariants"]["zeros"].as_array().unwrap();
    assert_eq!(zeros.len(), 2);
    // -sin θ + 0.1 sin 2θ has slopes -0.8 at 0 and 1.2 at π
    assert!((zeros[0]["deriv"].as_f64().unwrap() + 0.8).abs() < 1e-9);
    assert!((report["predicted_amplitudes"]["plus"].as_f64().unwrap() - 0.8).abs() < 1e-9);
    assert_eq!(report["norms"]["y0"], "divergent");
}

#[test]
fn linear_run_conserves_energy() {
    let tmp = TempDir::new().unwrap();
    let o = dg_lab(
        tmp.path(),
        &["linear", "--init", "cos 2", "--k", "64", "--dt", "1e-2", "--t", "2", "--sample-every", "10",
          "--modes", "2,5", "--out", "lin"],
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let dir = tmp.path().join("lin");
    let report: Value = serde_json::from_slice(&fs::read(dir.join("report.json")).unwrap()).unwrap();
    assert!(report["relative_energy_drift"].as_f64().unwrap() < 1e-8);
    let e = csv_column(&dir.join("trajectory.csv"), "energy");
    assert_eq!(e.len(), 21);
    assert!((e[0] - 0.75).abs() < 1e-15);
    assert_eq!(csv_column(&dir.join("trajectory.csv"), "abs_eta_2")[0], 0.5);
    assert_manifest_complete(&dir);
}
