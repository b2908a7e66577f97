use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn flaghull(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flaghull"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn check_diamond() {
    let out = flaghull(&["check", "--input", fixture("diamond.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("4 elements, 4 covers, rank 2, 2 flags"), "{text}");
    assert!(text.contains("semimodular: true"));
}

#[test]
fn pentagon_is_reported_and_skipped() {
    let path = fixture("n5.json");
    let out = flaghull(&["check", "--input", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["semimodular"], false);

    let out = flaghull(&["verify", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("skipped: not semimodular"));
}

#[test]
fn cyclic_input_exits_with_two() {
    let out = flaghull(&["check", "--input", fixture("cyclic.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("cyclic.json"), "{err}");
}

#[test]
fn bad_flag_exits_with_two() {
    let out = flaghull(&["hull", "--gen", "boolean:3", "--flag-c", "0,1", "--flag-d", "0,3,6,7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("--flag-c"));
}

#[test]
fn distance_with_witness() {
    let out = flaghull(&[
        "distance", "--gen", "boolean:3", "--flag-c", "0,1,4,7", "--flag-d", "0,3,6,7", "--witness",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("sigma = (3 2 1)"));
    assert!(text.contains("inversions = 3"));
    assert!(text.contains("gallery distance = 3"));
    assert_eq!(text.lines().filter(|l| l.starts_with("  ")).count(), 4);
}

#[test]
fn hull_json_names_the_family() {
    let out = flaghull(&[
        "hull", "--gen", "boolean:2", "--flag-c", "0,1,3", "--flag-d", "0,2,3", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["sigma"], serde_json::json!([2, 1]));
    assert_eq!(json["family"], serde_json::json!([[], [1], [2], [1, 2]]));
    assert_eq!(json["family_is_antimatroid"], true);
}

#[test]
fn gen_round_trips_through_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pi4.json");
    let out = flaghull(&["gen", "partition:4", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = flaghull(&["check", "--input", path.to_str().unwrap()]);
    assert!(stdout(&out).contains("15 elements, 31 covers, rank 3, 18 flags"));
}

#[test]
fn render_outputs_are_deterministic_dot() {
    let args = ["render", "--gen", "boolean:3", "--what", "kstar", "--flag-c", "0,1,4,7", "--flag-d", "0,1,5,7"];
    let a = flaghull(&args);
    let b = flaghull(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("digraph \"K*\""));

    let lattice = flaghull(&["render", "--gen", "chain:2"]);
    assert_eq!(stdout(&lattice).matches("->").count(), 2);

    let missing = flaghull(&["render", "--gen", "chain:2", "--what", "hull"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn verify_single_lattice_json() {
    let out = flaghull(&["verify", "--gen", "partition:3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["total_failures"], 0);
    assert!(json.to_string().find("wall_time").is_none());
}

#[test]
fn verify_corpus_option_applies_budgets() {
    let out = flaghull(&["verify", "--corpus", "boolean:3@5,chain:2", "--seed", "7", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let first = &json["lattices"][0]["reports"][0];
    assert_eq!(first["flag_pair_count"], 5);
    assert_eq!(first["exhaustive"], false);
    assert_eq!(json["lattices"][1]["reports"][0]["exhaustive"], true);
}
