use std::process::{Command, Output};

fn qdisc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdisc"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn verify_writes_identical_reports_without_timings() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (path, threads) in [(&a, "1"), (&b, "3")] {
        let status = Command::new(env!("CARGO_BIN_EXE_qdisc"))
            .args(["verify", "--check", "theorem1", "--no-timings", "--out"])
            .arg(path)
            .env("QDISC_THREADS", threads)
            .status()
            .unwrap();
        assert!(status.success());
    }
    let first = std::fs::read(&a).unwrap();
    assert_eq!(first, std::fs::read(&b).unwrap());
    let json: serde_json::Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(json["schema_version"], 1);
    assert_eq!(json["records"][0]["check"], "convex-zeta-bound");
    assert!(json["records"][0].get("wall_time_ms").is_none());
}

#[test]
fn expected_failure_counts_as_expected() {
    let out = qdisc(&["verify", "--check", "starlike-counterexample", "--zeta", "1", "--no-timings"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let record = &json["records"][0];
    assert_eq!(record["status"], "AS_EXPECTED");
    assert_eq!(record["report"]["verdict"], "FAIL");
}

#[test]
fn exit_codes_separate_bad_input_from_unexpected_verdicts() {
    assert_eq!(qdisc(&["verify", "--check", "nope"]).status.code(), Some(2));
    assert_eq!(qdisc(&["verify", "--order", "4"]).status.code(), Some(2));
    assert_eq!(qdisc(&["frobnicate"]).status.code(), Some(2));
    // koebe is not convex: the convex-only check refuses it.
    assert_eq!(qdisc(&["verify", "--check", "q-class", "--function", "koebe"]).status.code(), Some(3));
    // On |z| <= 0.5 with zeta = 0.5, z + z^2/2 satisfies the bound, so the
    // expected violation is missing.
    assert_eq!(
        qdisc(&["verify", "--check", "starlike-counterexample", "--zeta", "0.5", "--rmax", "0.5"]).status.code(),
        Some(1)
    );
}

#[test]
fn listings_and_identity_mode() {
    let out = qdisc(&["list-catalog", "--json"]);
    assert!(out.status.success());
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 7);

    let out = qdisc(&["list-checks"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("theorem1"));
    assert!(text.contains("conjecture"));

    let out = qdisc(&["identity", "--samples", "50", "--no-timings"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["records"][0]["report"]["type"], "identity");
    assert_eq!(qdisc(&["identity", "--check", "q-class"]).status.code(), Some(2));
}

#[test]
fn config_file_is_merged_under_flags() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("run.toml");
    let out = dir.path().join("explore.csv");
    std::fs::write(
        &config,
        format!(
            "zeta_moduli = [0.3]\nzeta_args = 8\ntimings = false\nout = {:?}\n[grid]\nr_max = 0.9\nangles = 64\n",
            out
        ),
    )
    .unwrap();
    let status = qdisc(&["explore", "--config", config.to_str().unwrap(), "--zeta-args", "16"]).status;
    assert_eq!(status.code(), Some(0));
    let csv = std::fs::read_to_string(&out).unwrap();
    assert!(csv.starts_with("function,zeta_re"));
    // three convex functions times sixteen arguments from the flag
    assert_eq!(csv.lines().count(), 1 + 3 * 16);

    std::fs::write(&config, "bogus = 1\n").unwrap();
    assert_eq!(qdisc(&["verify", "--config", config.to_str().unwrap()]).status.code(), Some(2));
}
