//! End-to-end checks of the command-line interface: output formats, the
//! JSON golden files, and the exit-code contract.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pythagen"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn analyze_human_output() {
    let out = run(&["analyze", "3", "4", "5"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("pair from leg 3: x = 1, y = 2  (integer)"), "{text}");
    assert!(
        text.contains("pair from leg 4: x = 1/2*sqrt(2), y = 3/2*sqrt(2)  (irrational)"),
        "{text}"
    );
}

#[test]
fn analyze_accepts_sides_in_any_order() {
    let sorted = run(&["analyze", "3", "4", "5", "--json"]);
    let shuffled = run(&["analyze", "5", "3", "4", "--json"]);
    assert_eq!(stdout(&sorted), stdout(&shuffled));
}

#[test]
fn analyze_golden_json() {
    for (args, golden) in [
        (
            ["analyze", "3", "4", "5", "--json"],
            include_str!("golden/analyze_3_4_5.json"),
        ),
        (
            ["analyze", "9", "12", "15", "--json"],
            include_str!("golden/analyze_9_12_15.json"),
        ),
    ] {
        let out = run(&args);
        assert_eq!(code(&out), 0);
        assert_eq!(stdout(&out).trim(), golden.trim());
        // and structurally, so a reformatted golden file still compares
        let got: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
        let want: serde_json::Value = serde_json::from_str(golden).unwrap();
        assert_eq!(got, want);
    }
}

#[test]
fn analyze_json_schema_fields() {
    let out = run(&["analyze", "6", "8", "10", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    for field in ["triple", "beta", "primitive_part", "pairs", "identities", "violations"] {
        assert!(v.get(field).is_some(), "missing {field}");
    }
    assert_eq!(v["beta"], "2");
    assert_eq!(v["pairs"].as_array().unwrap().len(), 2);
    assert_eq!(v["pairs"][1]["kind"], "integer");
    assert_eq!(v["pairs"][1]["x"], "1");
    assert_eq!(v["pairs"][1]["y"], "3");
    assert_eq!(v["violations"], serde_json::json!([]));
}

#[test]
fn analyze_rejects_bad_input() {
    assert_eq!(code(&run(&["analyze", "3", "4", "6"])), 2);
    assert_eq!(code(&run(&["analyze", "0", "4", "4"])), 2);
    assert_eq!(code(&run(&["analyze", "3", "4", "x"])), 2);
}

#[test]
fn pair_round_trips() {
    let out = run(&["pair", "1", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "4 3 5");

    let out = run(&["pair", "1/2*sqrt(2)", "3/2*sqrt(2)"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "3 4 5");
}

#[test]
fn pair_exit_codes() {
    // non-integer sides
    assert_eq!(code(&run(&["pair", "1", "3/2"])), 3);
    // parse error
    assert_eq!(code(&run(&["pair", "1", "sqrt("])), 2);
    // mixed radicands rejected as input error
    assert_eq!(code(&run(&["pair", "sqrt(2)", "sqrt(3)"])), 2);
    // unknown flag comes back as a usage error from the parser
    assert_eq!(code(&run(&["pair", "1", "2", "--frobnicate"])), 2);
}

#[test]
fn generate_output() {
    let out = run(&["generate", "--max-c", "5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "3 4 5 integer irrational");

    let out = run(&["generate", "--max-c", "15"]);
    let text = stdout(&out);
    assert!(text.contains("6 8 10"));
    assert!(text.contains("9 12 15"));

    assert_eq!(code(&run(&["generate", "--max-c", "4"])), 2);
}

#[test]
fn generate_json_lines() {
    let out = run(&["generate", "--max-c", "15", "--json"]);
    for line in stdout(&out).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["a"].is_string());
        assert_eq!(v["kinds"].as_array().unwrap().len(), 2);
    }
}

#[test]
fn sweep_output_and_exit_codes() {
    let out = run(&["sweep", "--max-c", "100"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("violations: 0"), "{text}");
    assert!(String::from_utf8_lossy(&out.stderr).contains("elapsed"));

    assert_eq!(code(&run(&["sweep", "--max-c", "4"])), 2);
    assert_eq!(code(&run(&["sweep", "--max-c", "100", "--jobs", "0"])), 2);
}

#[test]
fn sweep_json() {
    let out = run(&["sweep", "--max-c", "100", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["max_c"], "100");
    assert_eq!(v["violations"], serde_json::json!([]));
    let triples = v["triples"].as_u64().unwrap();
    assert_eq!(v["checks"]["hypotenuse_relation"].as_u64().unwrap(), triples);
}
