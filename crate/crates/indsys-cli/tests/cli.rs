//! Behavior tests for the binary: exit codes, file validation, output shape.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn workspace_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .ancestors()
        .nth(2)
        .unwrap()
        .to_path_buf()
}

fn data(name: &str) -> String {
    workspace_root().join("data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_indsys"))
        .args(args)
        .current_dir(workspace_root())
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

#[test]
fn analyze_reports_the_auxiliary_sets() {
    let out = run(&["analyze", &data("explicit_small.json"), "--solution", "0"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("W(π): {0,1}"), "{text}");
    assert!(text.contains("S(π): {2}"));
    assert!(text.contains("R(π): {1}"));
    assert!(text.contains("objective: 1"));
    assert!(text.contains("support: false"));
}

#[test]
fn analyze_json_envelope() {
    let out = run(&[
        "analyze",
        &data("explicit_small.json"),
        "--solution",
        "0",
        "--json",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["command"], "analyze");
    assert_eq!(v["label"], "explicit-small");
    assert_eq!(v["result"]["closure_union"], serde_json::json!([0, 1]));
    assert_eq!(v["result"]["adjoint"], serde_json::json!([2]));
    assert_eq!(v["result"]["residual"], serde_json::json!([1]));
    assert_eq!(v["result"]["support"], false);
    assert_eq!(v["exit_status"], 0);
}

#[test]
fn analyze_infeasible_solution_is_an_input_error() {
    let out = run(&["analyze", &data("explicit_small.json"), "--solution", "0,2"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn empty_solution_is_accepted() {
    let out = run(&["analyze", &data("explicit_small.json"), "--solution", ""]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("R(π): {0,1,2}"));
}

#[test]
fn enumerate_lists_both_supports() {
    let out = run(&["enumerate", &data("explicit_small.json")]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("support: {0,1} (f = 3)"));
    assert!(text.contains("support: {2} (f = 3)"));
    assert!(text.contains("Card(B) = 2"));
}

#[test]
fn greedy_senses_disagree_on_the_small_instance() {
    let max = run(&["greedy", &data("explicit_small.json"), "--sense", "max"]);
    assert!(stdout(&max).contains("support: {2} (f = 3)"));
    let min = run(&["greedy", &data("explicit_small.json"), "--sense", "min"]);
    assert!(stdout(&min).contains("support: {0,1} (f = 3)"));
}

#[test]
fn target_found_and_not_found_exit_codes() {
    let hit = run(&["target", &data("explicit_small.json"), "--value", "3"]);
    assert_eq!(code(&hit), 0);
    assert!(stdout(&hit).contains("{0,1}"));
    let miss = run(&["target", &data("explicit_small.json"), "--value", "4"]);
    assert_eq!(code(&miss), 1);
    assert!(stdout(&miss).contains("none"));
}

#[test]
fn frontier_layer_widths() {
    let out = run(&["frontier", &data("explicit_small.json"), "--stats-only"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("layer 0: 1"));
    assert!(text.contains("layer 1: 3"));
    assert!(text.contains("layer 2: 1"));
    assert!(text.contains("supports: 2"));
}

#[test]
fn check_prints_three_pass_lines() {
    let out = run(&[
        "check",
        &data("explicit_small.json"),
        "--theorems",
        "1,2,3",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("theorem 1: PASS"));
    assert!(text.contains("theorem 2: PASS"));
    assert!(text.contains("theorem 3: PASS"));
    assert!(text.contains("{0,1}") && text.contains("{2}"), "{text}");
}

#[test]
fn coloring_file_becomes_a_six_element_system() {
    let out = run(&["analyze", &data("triangle_k2.json"), "--solution", "", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["n"], 6);
}

#[test]
fn digraph_files_expose_the_arc_selection_system() {
    let out = run(&["enumerate", &data("diamond_dag.json")]);
    assert_eq!(code(&out), 0);
    // Elements are the five closure arcs of the diamond.
    assert!(stdout(&out).contains("->"));
}

#[test]
fn profile_growth_table() {
    let out = run(&[
        "profile",
        "--family",
        "power",
        "--sizes",
        "2..5",
        "--json",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = v["result"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    for row in rows {
        assert_eq!(row["support_count"], 1);
    }
}

#[test]
fn profile_rejects_unknown_family() {
    let out = run(&["profile", "--family", "nope", "--sizes", "2..3"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn hamiltonian_verdicts_and_exit_codes() {
    for (file, expected_exit, verdict) in [
        ("c4.json", 0, "hamiltonian: true"),
        ("c5.json", 0, "hamiltonian: true"),
        ("k4.json", 0, "hamiltonian: true"),
        ("p3.json", 1, "hamiltonian: false"),
        ("p4.json", 1, "hamiltonian: false"),
        ("star4.json", 1, "hamiltonian: false"),
    ] {
        let out = run(&["hamiltonian", &data(file)]);
        assert_eq!(code(&out), expected_exit, "{file}");
        assert!(stdout(&out).contains(verdict), "{file}");
    }
}

#[test]
fn p4_partitions_into_two_edges() {
    let out = run(&["hamiltonian", &data("p4.json"), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["part_count"], 2);
    assert_eq!(v["result"]["feasible"], true);
    assert_eq!(v["result"]["hamiltonian"], false);
}

#[test]
fn malformed_files_exit_2_with_position_info() {
    let dir = std::env::temp_dir().join("indsys-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();

    let bad_json = dir.join("bad.json");
    std::fs::write(&bad_json, "{\"kind\": \"explicit\",").unwrap();
    let out = run(&["analyze", bad_json.to_str().unwrap(), "--solution", "0"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line"), "{err}");

    let unknown_key = dir.join("unknown_key.json");
    std::fs::write(
        &unknown_key,
        r#"{"kind": "explicit", "n": 2, "maximal_feasible": [[0]], "extra": 1}"#,
    )
    .unwrap();
    let out = run(&["analyze", unknown_key.to_str().unwrap(), "--solution", "0"]);
    assert_eq!(code(&out), 2);

    let not_antichain = dir.join("not_antichain.json");
    std::fs::write(
        &not_antichain,
        r#"{"kind": "explicit", "n": 2, "maximal_feasible": [[0, 1], [0]]}"#,
    )
    .unwrap();
    let out = run(&["analyze", not_antichain.to_str().unwrap(), "--solution", "0"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("antichain"), "{err}");

    let duplicate_arc = dir.join("duplicate_arc.json");
    std::fs::write(
        &duplicate_arc,
        r#"{"kind": "digraph", "vertices": 3, "arcs": [[0, 1], [0, 1]]}"#,
    )
    .unwrap();
    let out = run(&["mcp", duplicate_arc.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn unknown_flag_exits_2() {
    let out = run(&["enumerate", &data("explicit_small.json"), "--bogus"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn cyclic_digraph_is_an_input_error_naming_a_cycle() {
    let dir = std::env::temp_dir().join("indsys-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let cyclic = dir.join("cyclic.json");
    std::fs::write(
        &cyclic,
        r#"{"kind": "digraph", "vertices": 3, "arcs": [[0, 1], [1, 2], [2, 0]]}"#,
    )
    .unwrap();
    let out = run(&["mcp", cyclic.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("cycle"), "{err}");
}

#[test]
fn lookahead_classifies_the_bundled_instances() {
    for file in ["explicit_small.json", "triangle_k2.json", "diamond_dag.json"] {
        let out = run(&["lookahead", &data(file)]);
        assert_eq!(code(&out), 0, "{file}");
        assert!(
            stdout(&out).contains("classification: no-lookahead (operational)"),
            "{file}"
        );
    }
}

#[test]
fn parse_serialize_parse_roundtrip() {
    use indsys_cli::instance_file::parse_file;
    let dir = std::env::temp_dir().join("indsys-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    for name in [
        "explicit_small.json",
        "triangle_k2.json",
        "mcp10.json",
        "c4.json",
    ] {
        let original = parse_file(Path::new(&data(name))).unwrap();
        let canonical = original.to_canonical_json();
        let reserialized = dir.join(format!("roundtrip_{name}"));
        std::fs::write(&reserialized, serde_json::to_string(&canonical).unwrap()).unwrap();
        let reparsed = parse_file(&reserialized).unwrap();
        assert_eq!(
            canonical,
            reparsed.to_canonical_json(),
            "round-trip changed {name}"
        );
        assert_eq!(original.label(), reparsed.label());
    }
}
