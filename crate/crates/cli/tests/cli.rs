use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(args)
        .output()
        .expect("spawn schubert")
}

fn solve(name: &str, extra: &[&str]) -> Output {
    let path = fixture(name);
    let mut args = vec!["solve", "--input", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad json ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn fixture_counts() {
    for (name, expected) in [
        ("real_planes_r8.json", "2"),
        ("real_planes_r16.json", "6"),
        ("real_degeneracy_r8.json", "32"),
        ("quaternionic_lines.json", "2"),
        ("complex_planes_c8.json", "6"),
    ] {
        let out = solve(name, &[]);
        assert_eq!(
            code(&out),
            0,
            "{name}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert_eq!(
            json(&out)["result"],
            Value::String(expected.into()),
            "{name}"
        );
    }
}

#[test]
fn schema_errors_exit_2() {
    let out = solve("odd_real_dims.json", &[]);
    assert_eq!(code(&out), 2);
    assert!(out.stdout.is_empty());

    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(
        f,
        r#"{{"space": {{"type": "complex_grassmannian", "k": 2, "n": 4}}, "bogus": 1}}"#
    )
    .unwrap();
    let out = run(&["solve", "--input", f.path().to_str().unwrap()]);
    assert_eq!(code(&out), 2, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn problem_errors_exit_3() {
    let out = solve("dimension_mismatch.json", &[]);
    assert_eq!(code(&out), 3);
    let out = solve("undoubled_index.json", &[]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("(condition 1)"));
}

#[test]
fn missing_input_exits_1() {
    let out = run(&["solve", "--input", "/nonexistent/problem.json"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn output_is_byte_identical_across_runs() {
    for format in ["json", "text"] {
        let a = run(&[
            "--format",
            format,
            "solve",
            "--input",
            fixture("batch.json").to_str().unwrap(),
        ]);
        let b = run(&[
            "--format",
            format,
            "solve",
            "--input",
            fixture("batch.json").to_str().unwrap(),
        ]);
        assert_eq!(code(&a), 0);
        assert_eq!(a.stdout, b.stdout, "format {format}");
    }
}

#[test]
fn batch_order_does_not_depend_on_jobs() {
    let one = solve("batch.json", &["--jobs", "1"]);
    let four = solve("batch.json", &["--jobs", "4"]);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
    let results: Vec<Value> = json(&one)
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["result"].clone())
        .collect();
    assert_eq!(results.len(), 5);
    assert_eq!(results[0], Value::String("2".into()));
    assert_eq!(results[1], Value::String("1".into()));
    assert_eq!(results[2], Value::String("1".into()));
}

#[test]
fn lr_coefficient() {
    let out = run(&["lr", "1", "1", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["coefficient"], Value::String("1".into()));
    let out = run(&["lr", "[2,1]", "[2,1]", "[3,2,1]"]);
    assert_eq!(json(&out)["coefficient"], Value::String("2".into()));
}

#[test]
fn porteous_count() {
    let out = run(&[
        "porteous",
        "--space",
        r#"{"type":"complex_grassmannian","k":2,"n":4}"#,
        "2",
        "2",
        "1",
        "4",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["count"], Value::String("32".into()));
}

#[test]
fn kappa_of_unit_is_unit() {
    let out = run(&[
        "kappa",
        "--space",
        r#"{"type":"real_even_grassmannian","k":4,"n":8}"#,
        "[]",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let terms = &json(&out)["kappa"]["terms"];
    assert_eq!(terms.as_array().unwrap().len(), 1);
    assert_eq!(terms[0]["coeff"], Value::String("1".into()));
    assert_eq!(terms[0]["partition"], Value::Array(vec![]));
}

#[test]
fn selftest_levels_pass() {
    assert_eq!(code(&run(&["selftest", "quick"])), 0);
    assert_eq!(code(&run(&["selftest", "full"])), 0);
}

#[test]
fn selftest_catches_injected_fault() {
    let out = run(&["selftest", "full", "--inject-fault", "lr-sign"]);
    assert_ne!(code(&out), 0);
}

#[test]
fn mult_accepts_bare_and_json_indices() {
    let gr = r#"{"type":"complex_grassmannian","k":2,"n":4}"#;
    let bare = run(&["--format", "text", "mult", "--space", gr, "1", "1"]);
    let json_form = run(&["--format", "text", "mult", "--space", gr, "[1]", "[1]"]);
    assert_eq!(code(&bare), 0);
    assert_eq!(bare.stdout, json_form.stdout);
    assert_eq!(
        String::from_utf8_lossy(&bare.stdout).trim(),
        "σ(1,1) + σ(2)"
    );

    let fl = r#"{"type":"complex_flag","dims":[1,1,1]}"#;
    let out = run(&["--format", "text", "mult", "--space", fl, "2,1,3", "1,3,2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        "σ({2},{3},{1}) + σ({3},{1},{2})"
    );
}
