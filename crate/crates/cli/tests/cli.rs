//! End-to-end tests of the `fliptwist` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fliptwist"))
}

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn run(args: &[&str]) -> Output {
    bin()
        .args(args)
        .current_dir(root())
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn all_verifications_pass() {
    for name in [
        "pentagon",
        "handle-swap",
        "rotation",
        "reflection",
        "z2-invariance",
        "hexagon-orbits-strict",
        "hexagon-orbits-labeled",
        "labeled-graph-connectivity",
        "general-position",
    ] {
        let out = run(&["verify", name]);
        assert!(
            out.status.success(),
            "{name} failed: {}{}",
            stdout(&out),
            stderr(&out)
        );
        assert!(stdout(&out).contains("pass"), "{name}: {}", stdout(&out));
    }
}

#[test]
fn unknown_verification_is_usage_error() {
    let out = run(&["verify", "unknown-name"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("unknown verification"));
}

#[test]
fn failed_verification_exits_nonzero() {
    // a depth cap below the pentagon's length makes the search come up empty
    let out = run(&["verify", "pentagon", "--max-depth", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"), "{}", stdout(&out));
}

#[test]
fn verify_json_is_deterministic() {
    let dir = tempdir("verify-json");
    let a = dir.join("a.json");
    let b = dir.join("b.json");
    for path in [&a, &b] {
        let out = run(&[
            "verify",
            "hexagon-orbits-labeled",
            "--json",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let ja = std::fs::read(&a).unwrap();
    let jb = std::fs::read(&b).unwrap();
    assert_eq!(ja, jb, "repeated runs must be byte-identical");
    let parsed: serde_json::Value = serde_json::from_slice(&ja).unwrap();
    assert_eq!(parsed["schema"], 1);
    assert_eq!(parsed["status"], "pass");
    assert!(
        parsed.get("wall_time").is_none(),
        "wall time stays out of the payload"
    );
}

#[test]
fn replay_rotation_on_hexagon_model() {
    let out = run(&[
        "replay",
        "hexagon",
        "states/hexagon-reference.txt",
        "scripts/fig11.rotation",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(
        stdout(&out).contains("labeled 6,1,4,2,5,3"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn replay_handle_swap_on_torus_model() {
    let out = run(&[
        "replay",
        "torus",
        "states/torus-handle.txt",
        "scripts/fig9.handle-swap",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("1: 0/1"), "{text}");
    assert!(text.contains("2: 1/0"), "{text}");
}

#[test]
fn replay_empty_script_echoes_state() {
    let dir = tempdir("empty-script");
    let script = dir.join("empty.txt");
    std::fs::write(&script, "# nothing\n").unwrap();
    let out = run(&[
        "replay",
        "graph",
        "states/graph-0-5.txt",
        script.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let original = std::fs::read_to_string(root().join("states/graph-0-5.txt")).unwrap();
    for line in original
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
    {
        assert!(text.contains(line.trim()), "missing {line:?} in {text}");
    }
}

#[test]
fn replay_switch_in_strict_mode_is_an_error() {
    let dir = tempdir("strict-switch");
    let script = dir.join("switch.txt");
    std::fs::write(&script, "switch 1\n").unwrap();
    let out = run(&[
        "replay",
        "hexagon",
        "states/hexagon-strict.txt",
        script.to_str().unwrap(),
    ]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("move 1"), "{}", stderr(&out));
}

#[test]
fn replay_parse_error_reports_line() {
    let dir = tempdir("parse-error");
    let script = dir.join("bad.txt");
    std::fs::write(&script, "twist 1 +\nwobble\n").unwrap();
    let out = run(&[
        "replay",
        "torus",
        "states/torus-handle.txt",
        script.to_str().unwrap(),
    ]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));
}

#[test]
fn replayed_graph_state_reparses() {
    // the emitted final state is itself a valid state file
    let dir = tempdir("round-trip");
    let first = run(&[
        "replay",
        "graph",
        "states/graph-0-5.txt",
        "scripts/fig7.pentagon",
    ]);
    assert!(first.status.success());
    let state2 = dir.join("after.txt");
    std::fs::write(&state2, stdout(&first)).unwrap();
    let script = dir.join("empty.txt");
    std::fs::write(&script, "").unwrap();
    let second = run(&[
        "replay",
        "graph",
        state2.to_str().unwrap(),
        script.to_str().unwrap(),
    ]);
    assert!(second.status.success());
    assert_eq!(stdout(&first), stdout(&second));
}

#[test]
fn replay_reflection_on_homology_model() {
    let dir = tempdir("homology-replay");
    let json = dir.join("final.json");
    let out = run(&[
        "replay",
        "homology",
        "states/hexagon-classes.json",
        "scripts/fig12.reflection",
        "--json",
        json.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let payload: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    // reversal: label 6 ends on the class that label 1 started with (e1),
    // label 1 on b2's class (f1)
    assert_eq!(payload["classes"]["6"], serde_json::json!([1, 0, 0, 0]));
    assert_eq!(payload["classes"]["1"], serde_json::json!([0, 1, 0, 0]));
}

#[test]
fn census_graphs_two_zero() {
    let dir = tempdir("census-graphs");
    let dot = dir.join("types.dot");
    let out = run(&["census", "graphs", "2", "0", "--dot", dot.to_str().unwrap()]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["type_count"], 2);
    let dot_text = std::fs::read_to_string(&dot).unwrap();
    assert!(dot_text.contains("graph type0 {"));
    assert!(dot_text.contains("graph type1 {"));
}

#[test]
fn census_hexagon_labeled() {
    let out = run(&["census", "hexagon", "labeled"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["orbit_count"], 15);
    assert_eq!(parsed["state_count"], 720);
    let orbits = parsed["orbits"].as_array().unwrap();
    assert_eq!(orbits.len(), 15);
    assert!(orbits.iter().all(|o| o["size"] == 48));
}

#[test]
fn census_labeled_orbits() {
    let out = run(&["census", "labeled-orbits", "1", "2"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["orbit_count"], 1);
}

#[test]
fn census_is_deterministic() {
    let a = run(&["census", "hexagon", "strict"]);
    let b = run(&["census", "hexagon", "strict"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn census_refuses_above_bound() {
    let out = run(&["census", "graphs", "0", "9", "--bound", "6"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("bound 6"), "{}", stderr(&out));
}

fn tempdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fliptwist-test-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
