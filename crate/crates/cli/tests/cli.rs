use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(path).expect("golden file")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tensoralg"))
        .args(args)
        .env_remove("TENSORALG_MAX_DIM")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

const L2: &str = "builtin:pair_full(nonabelian2)";
const H1_CENTER: &str = "builtin:pair_center(heisenberg(1))";

#[test]
fn verify_text_report_matches_golden() {
    let output = run(&["verify", L2]);
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    assert_eq!(stdout(&output), golden("verify_l2.txt"));
}

#[test]
fn verify_machine_report_matches_golden() {
    let output = run(&["--machine", "verify", L2]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), golden("verify_l2.json"));
}

#[test]
fn machine_output_is_deterministic() {
    let args = ["--machine", "verify", L2, H1_CENTER, "builtin:pair_full(abelian(2))"];
    let first = stdout(&run(&args));
    let second = stdout(&run(&args));
    assert_eq!(first, second);
    let reordered = stdout(&run(&[
        "--machine",
        "verify",
        "builtin:pair_full(abelian(2))",
        H1_CENTER,
        L2,
    ]));
    assert_eq!(first, reordered);
}

#[test]
fn tensor_of_heisenberg_center() {
    let output = run(&["tensor", H1_CENTER]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("(2,0,2,2,2)"), "{}", stdout(&output));

    let machine = run(&["--machine", "tensor", H1_CENTER]);
    let value: serde_json::Value = serde_json::from_slice(&machine.stdout).unwrap();
    let dims = &value["dims"];
    assert_eq!(dims["tensor"], 2);
    assert_eq!(dims["square"], 0);
    assert_eq!(dims["exterior"], 2);
    assert_eq!(dims["j2"], 2);
    assert_eq!(dims["multiplier"], 2);
}

#[test]
fn tensor_of_document_pair_matches_builtin() {
    let path = fixture("heisenberg1_center.json");
    let from_file = run(&["--machine", "tensor", path.to_str().unwrap()]);
    assert_eq!(from_file.status.code(), Some(0), "{}", stderr(&from_file));
    let from_file: serde_json::Value = serde_json::from_slice(&from_file.stdout).unwrap();
    let builtin: serde_json::Value =
        serde_json::from_slice(&run(&["--machine", "tensor", H1_CENTER]).stdout).unwrap();
    assert_eq!(from_file["dims"], builtin["dims"]);
    assert_eq!(from_file["bases"], builtin["bases"]);
}

#[test]
fn validate_accepts_algebra_and_pair() {
    for name in ["heisenberg1.json", "heisenberg1_center.json"] {
        let output = run(&["validate", fixture(name).to_str().unwrap()]);
        assert_eq!(output.status.code(), Some(0), "{name}: {}", stderr(&output));
    }
}

#[test]
fn validate_reports_jacobi_witness() {
    let output = run(&["validate", fixture("jacobi_violation.json").to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(1));
    let text = stdout(&output) + &stderr(&output);
    assert!(text.contains("Jacobi"), "{text}");
    assert!(text.contains("(0,1,2)"), "{text}");
    assert!(text.contains("component 3"), "{text}");
}

#[test]
fn validate_rejects_non_ideal() {
    let output = run(&["validate", fixture("not_an_ideal.json").to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(1));
    assert!((stdout(&output) + &stderr(&output)).contains("not an ideal"));
}

#[test]
fn syntax_errors_carry_position_and_exit_two() {
    let output = run(&["validate", fixture("unordered_key.json").to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("line 2"), "{}", stderr(&output));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "builtin:no_such_thing(1)"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "/nonexistent/pair.json"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--theorems", "bogus", L2]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn dimension_cap_is_enforced() {
    let output = Command::new(env!("CARGO_BIN_EXE_tensoralg"))
        .args(["tensor", "builtin:pair_full(heisenberg(1))"])
        .env("TENSORALG_MAX_DIM", "2")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("2"), "{}", stderr(&output));
}

#[test]
fn theorem_selection_limits_records() {
    let output = run(&["--machine", "verify", "--theorems", "psi", L2]);
    assert_eq!(output.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let checks: Vec<&str> = value["records"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["check"].as_str().unwrap())
        .collect();
    assert_eq!(
        checks,
        [
            "diagonal-law",
            "gamma-row-exact",
            "psi-image",
            "psi-injective",
            "psi-well-defined"
        ]
    );
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let output = run(&["--out", path.to_str().unwrap(), "verify", L2]);
    assert_eq!(output.status.code(), Some(0));
    assert!(output.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), golden("verify_l2.txt"));
}

#[test]
fn kunneth_reports_gated_identities() {
    let output = run(&["--machine", "kunneth", H1_CENTER, "builtin:pair_full(abelian(1))"]);
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    let value: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let records = value["records"].as_array().unwrap();
    let find = |check: &str| {
        records
            .iter()
            .find(|r| r["check"] == check)
            .unwrap_or_else(|| panic!("missing {check}"))
    };
    assert_eq!(find("gamma-sum")["status"], "pass");
    assert_eq!(find("multiplier-sum")["status"], "pass");
    assert_eq!(find("pair-j2-sum")["asserted"], false);
}

#[test]
fn catalog_lists_builtins_and_pairs() {
    let output = run(&["catalog"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    for name in ["abelian", "nonabelian2", "heisenberg", "pair_center"] {
        assert!(text.contains(name), "missing {name}");
    }
}
