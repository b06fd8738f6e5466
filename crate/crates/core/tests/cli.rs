use std::path::Path;
use std::process::{Command, Output};

use purcell::io::{read_trajectory_csv, write_trajectory_rows};

fn purcell(dir: &Path, command: &str, config: &str) -> Output {
    let cfg = dir.join("config.json");
    std::fs::write(&cfg, config).unwrap();
    Command::new(env!("CARGO_BIN_EXE_purcell"))
        .args([command, "--config"])
        .arg(&cfg)
        .arg("--output")
        .arg(dir.join("out"))
        .output()
        .unwrap()
}

fn read(dir: &Path, name: &str) -> String {
    std::fs::read_to_string(dir.join("out").join(name)).unwrap()
}

#[test]
fn field_row_at_the_origin() {
    let tmp = tempfile::tempdir().unwrap();
    let out = purcell(
        tmp.path(),
        "field",
        r#"{"command":"field","grid":{"min":[-1,-1],"max":[1,1],"counts":[3,3]}}"#,
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).contains("field.csv"));
    let csv = read(tmp.path(), "field.csv");
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "alpha1,alpha2,A11,A12,A21,A22,A31,A32");
    let origin: Vec<f64> = lines[5].split(',').map(|v| v.parse().unwrap()).collect();
    let want = [0.0, 0.0, 0.0, 0.0, -1.0 / 3.0, -1.0 / 3.0, 7.0 / 27.0, -7.0 / 27.0];
    for (got, want) in origin.iter().zip(want) {
        assert!((got - want).abs() <= 1e-16, "{got} vs {want}");
    }
    let third = format!("{:.16e}", -1.0_f64 / 3.0);
    assert!(lines[5].contains(&third));
}

#[test]
fn simulate_writes_trajectory_and_summary() {
    let tmp = tempfile::tempdir().unwrap();
    let out = purcell(
        tmp.path(),
        "simulate",
        r#"{"command":"simulate","gait":{"kind":"square","amplitude":0.0,"period":1.0},"steps_per_cycle":16,"cycles":2}"#,
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let summary: serde_json::Value = serde_json::from_str(&read(tmp.path(), "summary.json")).unwrap();
    assert_eq!(summary["holonomy"]["dx"], 0.0);
    assert_eq!(summary["holonomy"]["dy"], 0.0);
    assert_eq!(summary["holonomy"]["dtheta"], 0.0);
    assert_eq!(summary["cycles"], 2);
    assert_eq!(summary["steps"], 32);
    let traj = read(tmp.path(), "trajectory.csv");
    assert_eq!(
        traj.lines().next().unwrap(),
        "t,x,y,theta,alpha1,alpha2,xix,xiy,xitheta"
    );
    assert_eq!(traj.lines().count(), 34);
}

#[test]
fn trajectory_csv_round_trips_bytewise() {
    let tmp = tempfile::tempdir().unwrap();
    let out = purcell(
        tmp.path(),
        "simulate",
        r#"{"command":"simulate","gait":{"kind":"ellipse","amplitudes":[0.6,0.3],"center":[0.1,0.0],"period":2.0,"direction":-1},"steps_per_cycle":200}"#,
    );
    assert!(out.status.success());
    let original = read(tmp.path(), "trajectory.csv");
    let rows = read_trajectory_csv(original.as_bytes()).unwrap();
    let mut again = Vec::new();
    write_trajectory_rows(&rows, &mut again).unwrap();
    assert_eq!(original.as_bytes(), again.as_slice());
}

#[test]
fn verify_reports_a_single_winner() {
    let tmp = tempfile::tempdir().unwrap();
    let out = purcell(
        tmp.path(),
        "verify",
        r#"{"command":"verify","verify":{"samples":200},"seed":7}"#,
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_str(&read(tmp.path(), "errata.json")).unwrap();
    assert_eq!(report["passing_combinations"], 1);
    assert_eq!(report["winner"]["drag_mode"], "corrected");
    assert_eq!(report["winner"]["geometry"], "derived");
    assert_eq!(report["winner"]["sign"], 1);
    assert_eq!(report["errata"].as_array().unwrap().len(), 6);
    let table = read(tmp.path(), "verify_summary.csv");
    assert_eq!(table.lines().count(), 1 + 8 * 6);
    assert!(table.starts_with("drag_mode,geometry,sign,entry,max_deviation,mean_deviation\n"));
}

#[test]
fn config_errors_exit_nonzero_with_a_name() {
    let tmp = tempfile::tempdir().unwrap();
    let out = purcell(tmp.path(), "field", r#"{"command":"field","gird":{}}"#);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.starts_with("ConfigError"), "{err}");
    assert!(err.contains("gird"));
}

#[test]
fn command_must_match_config() {
    let tmp = tempfile::tempdir().unwrap();
    let out = purcell(tmp.path(), "simulate", r#"{"command":"verify"}"#);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("ConfigError"));
}

#[test]
fn quiet_and_stdin() {
    use std::io::Write;
    use std::process::Stdio;
    let tmp = tempfile::tempdir().unwrap();
    let mut child = Command::new(env!("CARGO_BIN_EXE_purcell"))
        .args(["field", "--config", "-", "--quiet", "--output"])
        .arg(tmp.path())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"command":"field","grid":{"min":[0,0],"max":[0.5,0.5],"counts":[2,2]}}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert!(tmp.path().join("field.csv").exists());
}
