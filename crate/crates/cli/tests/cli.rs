use std::process::{Command, Output};

fn coxring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxring")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

#[test]
fn transfer_square_of_gamma_vanishes() {
    let o = coxring(&["eval", "g1_1 o g1_1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "0");
}

#[test]
fn json_basis_of_b2_in_degree_two() {
    let o = coxring(&["basis", "--ring", "B", "--n", "2", "--deg", "2", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["ring"], "B");
    assert_eq!(v["component"], 2);
    assert_eq!(v["degree"], 2);
    let ms = v["monomials"].as_array().unwrap();
    assert_eq!(ms.len(), 3);
    for m in ms {
        assert!(m["charge"].is_null());
        assert!(!m["blocks"].as_array().unwrap().is_empty());
    }
}

#[test]
fn betti_suite_passes() {
    let o = coxring(&["verify", "betti", "--max-n", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn parse_errors_exit_two_with_a_position() {
    let o = coxring(&["eval", "d1 + G+1_1"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("position 6"), "{err}");
    let o = coxring(&["eval", "d1 o (g1_1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unknown_verb_is_a_usage_error() {
    assert_eq!(coxring(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["eval", "--op", "coprod", "d2 * g1_1 + d1^2 o d1"];
    let a = coxring(&args);
    let b = coxring(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let a = coxring(&["basis", "--ring", "D", "--n", "4", "--deg", "4"]);
    let b = coxring(&["basis", "--ring", "D", "--n", "4", "--deg", "4"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn printed_results_evaluate_to_themselves() {
    for expr in ["G+1_1^3", "d2 * g1_1 + d1^2 o d1", "D3_1 o G-1_1", "u2 o d1"] {
        let first = stdout(&coxring(&["eval", expr]));
        let again = stdout(&coxring(&["eval", &first]));
        assert_eq!(first, again, "{expr}");
    }
}

#[test]
fn squares_and_restrictions() {
    let o = coxring(&["sq", "--i", "1", "d1"]);
    assert_eq!(stdout(&o), "d1^2");
    let o = coxring(&["restrict", "--site", "B:(2)", "g1_1"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(!stdout(&o).is_empty());
}

#[test]
fn cache_dir_is_written_and_reused() {
    let dir = std::env::temp_dir().join(format!("coxring-cache-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    let d = dir.to_str().unwrap();
    let first = coxring(&["--cache-dir", d, "verify", "oracle", "--max-n", "3", "--max-deg", "4"]);
    assert_eq!(first.status.code(), Some(0), "{}", stdout(&first));
    assert!(std::fs::read_dir(&dir).unwrap().next().is_some());
    let second = coxring(&["--cache-dir", d, "verify", "oracle", "--max-n", "3", "--max-deg", "4"]);
    assert_eq!(second.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let _ = std::fs::remove_dir_all(&dir);
}
