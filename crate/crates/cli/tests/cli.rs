use std::process::{Command, Output};

use rootjones_cli::RunReport;

fn rootjones(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rootjones"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> RunReport {
    let out = rootjones(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json report")
}

#[test]
fn stats_of_trefoil_and_identity() {
    let r = report(&["stats", "1 1 1"]);
    let o = &r.outputs;
    assert_eq!(
        (&o["girth"], &o["crossings"], &o["components"], &o["seifert_circles"], &o["genus"]),
        (&4.into(), &3.into(), &1.into(), &2.into(), &1.into())
    );
    let r = report(&["stats", "", "--strands", "3"]);
    assert_eq!(r.outputs["girth"], 6);
    assert_eq!(r.outputs["seifert_circles"], 3);
    assert_eq!(r.outputs["seifert_bound"]["holds"], true);
}

#[test]
fn jones_of_unknot_and_trefoil() {
    let unknot = r#"{"events":[{"type":"cup","pos":0},{"type":"cap","pos":0}]}"#;
    let r = report(&["jones", unknot, "--r", "5"]);
    let d = 2.0 * (std::f64::consts::PI / 5.0).cos();
    assert!((r.outputs["bracket"]["re"].as_f64().unwrap() - d).abs() < 1e-12);
    let r = report(&["jones", "1 1 1"]);
    assert_eq!(r.outputs["oracle_equal"], true);
    assert_eq!(
        r.outputs["bracket"]["coefficients"],
        serde_json::json!(["-1", "0", "0", "0", "-2", "0", "0", "0"])
    );
}

#[test]
fn diagram_files_are_read() {
    let dir = std::env::temp_dir().join(format!("rootjones-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("hopf.txt");
    std::fs::write(&path, "1 1\n").unwrap();
    let r = report(&["stats", path.to_str().unwrap()]);
    assert_eq!(r.outputs["components"], 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bad_roots_are_rejected() {
    for r in ["6", "4", "x"] {
        let out = rootjones(&["jones", "1 1 1", "--r", r]);
        assert!(!out.status.success());
    }
    let out = rootjones(&["jones", "1 1 1", "--r", "7"]);
    assert!(out.status.success());
}

#[test]
fn vogel_and_twist_commands() {
    let r = report(&["vogel", "1 -2 1"]);
    assert_eq!(r.outputs["braided_input"], true);
    assert_eq!(r.outputs["rii_moves"], 0);
    let r = report(&["vogel", "1 2 -3 2", "--closure", "plat"]);
    assert_eq!(r.outputs["bracket_equal"], true);
    assert_eq!(r.outputs["move_bound_holds"], true);
    assert_eq!(r.outputs["seifert_circles_before"], r.outputs["seifert_circles_after"]);
    let r = report(&["twist", "1 1 1", "--m", "2"]);
    assert_eq!(r.outputs["check"]["equal"], true);
    let r = report(&["twist", "1 -2 1", "--m", "3", "--k", "-20"]);
    assert_eq!(r.outputs["expected_crossing_delta"], 120);
    assert_eq!(r.outputs["check"]["equal"], true);
}

#[test]
fn simulations_meet_their_contract() {
    for cmd in ["simulate-plat", "simulate-dqc1", "pipeline"] {
        let r = report(&[cmd, "1 1 1", "--reps", "40", "--seed", "5"]);
        let success = r.outputs["estimate"]["empirical_success"].as_f64().unwrap();
        assert!(success >= 0.75, "{cmd}: {success}");
    }
    let r = report(&["pipeline", "1 1 1", "--reps", "20"]);
    assert!(r.outputs["direct_agreement"].as_f64().unwrap() >= 0.75);
    assert!(r.outputs["estimate"]["rescale"]["factor"].as_f64().is_some());
    assert!(!rootjones(&["simulate-plat", "1 2"]).status.success());
    assert!(!rootjones(&["simulate-dqc1", "1", "--eps", "0"]).status.success());
}

#[test]
fn reports_are_deterministic_given_seed() {
    let a = report(&["simulate-dqc1", "1 -2 1", "--reps", "5", "--seed", "9"]);
    let b = report(&["simulate-dqc1", "1 -2 1", "--reps", "5", "--seed", "9"]);
    assert!(a.same_result(&b));
    let c = report(&["simulate-dqc1", "1 -2 1", "--reps", "5", "--seed", "10"]);
    assert!(!a.same_result(&c));
}

#[test]
fn verify_passes_fails_on_corruption_and_is_stable() {
    let args = ["verify", "--suite", "2-4,7,9,10"];
    let a = report(&args);
    assert_eq!(a.outputs["passed"], true);
    let b = report(&args);
    assert!(a.same_result(&b));
    let out = rootjones(&["verify", "--suite", "2", "--corrupt-constant"]);
    assert_eq!(out.status.code(), Some(1));
    let bad: RunReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(bad.outputs["passed"], false);
    assert_eq!(rootjones(&["verify", "--suite", "12"]).status.code(), Some(2));
}

#[test]
fn text_format() {
    let out = rootjones(&["stats", "1 1 1", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("outputs.crossings: 3"));
    assert!(text.starts_with("command: stats"));
}
