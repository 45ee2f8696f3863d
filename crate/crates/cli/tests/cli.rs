use std::process::{Command, Output};

fn kappa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kappa")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = kappa(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn markdown_table_matches_golden() {
    let golden = include_str!("golden/table.md");
    // The table is symbolic in λ, so both orientations render the same cells.
    assert_eq!(stdout(&["table", "--format", "markdown"]), golden);
    assert_eq!(stdout(&["table", "--lambda", "-1", "--format", "markdown"]), golden);
}

#[test]
fn table_formats_agree_on_a_cell() {
    // row λ e_z e_∞, column λ e_x e_y
    let csv = stdout(&["table", "--format", "csv"]);
    let row: Vec<&str> = csv.lines().nth(7).unwrap().split(',').collect();
    assert_eq!(row[0], "λ e_z e_∞");
    assert_eq!(row[2], "I₃ e_∞");

    let json: serde_json::Value = serde_json::from_str(&stdout(&["table", "--format", "json"])).unwrap();
    let cell = &json["cells"][6][1];
    assert_eq!(cell["index"], 7);
    assert_eq!(cell["sign"], 1);
    assert_eq!(cell["label"], "I₃ e_∞");

    assert!(stdout(&["table", "--lambda", "-1"]).starts_with("lambda = -1\n"));
}

#[test]
fn verify_json_is_byte_stable() {
    let args = ["verify", "--trials", "10", "--seed", "42", "--field", "both", "--format", "json"];
    let a = stdout(&args);
    let b = stdout(&args);
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 21);
    for line in a.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["passed"], true, "{line}");
        assert!(v.get("elapsed").is_none());
    }
    assert_ne!(a, stdout(&["verify", "--trials", "10", "--seed", "43", "--field", "both", "--format", "json"]));
}

#[test]
fn verify_report_file_matches_stdout() {
    let path = std::env::temp_dir().join(format!("kappa-report-{}.jsonl", std::process::id()));
    let p = path.to_str().unwrap();
    let printed = stdout(&["verify", "--trials", "5", "--suite", "composition", "--format", "json", "--report", p]);
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(printed, written);
}

#[test]
fn zero_divisor_suite_reports_constraint_values() {
    let out = stdout(&["verify", "--suite", "zero-divisor"]);
    assert!(out.starts_with("PASS  zero-divisor"), "{out}");
    assert!(out.contains("f_K(X) = 1/2"));
    assert!(out.contains("f_K(Y) = -1/2"));
    assert!(out.contains("||XY|| = 0"));
}

#[test]
fn verify_text_summary() {
    let out = stdout(&["verify", "--trials", "10", "--suite", "table", "--suite", "tower"]);
    assert!(out.contains("lambda 1: 64/64 cells match"));
    assert!(out.ends_with("2/2 suites passed\n"), "{out}");
}

#[test]
fn sample_is_seeded_and_on_the_sphere() {
    let args = ["sample", "-n", "5", "--seed", "11", "--rho", "2", "--lambda", "-1"];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    assert_eq!(a.lines().count(), 5);
    for line in a.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["lambda"], -1);
        let c: Vec<f64> = v["coeffs"].as_array().unwrap().iter().map(|s| s.as_str().unwrap().parse().unwrap()).collect();
        let norm = c.iter().map(|x| x * x).sum::<f64>().sqrt();
        assert!((norm - 2.0).abs() < 1e-12);
        let f = -c[0] * c[7] - (c[1] * c[6] + c[2] * c[5] + c[3] * c[4]);
        assert!(f.abs() < 1e-13, "f_K = {f}");
    }
    assert_ne!(a, stdout(&["sample", "-n", "5", "--seed", "12", "--rho", "2", "--lambda", "-1"]));
}

#[test]
fn eval_constrained_and_unconstrained() {
    let ok = stdout(&["eval", "--element", r#"{"lambda":1,"coeffs":["1","0","0","0","0","0","0","0"]}"#, "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&ok).unwrap();
    assert_eq!(v["norm_a"], 1.0);
    assert_eq!(v["norm_b"], 1.0);
    assert_eq!(v["constraint_f"], "0");
    assert_eq!(v["q_r"], serde_json::json!(["1", "0", "0", "0"]));

    let bad = stdout(&["eval", "--element", r#"{"lambda":1,"coeffs":["1/2","0","0","0","0","0","0","1/2"]}"#]);
    assert!(bad.contains("norm_b       undefined: X X† = 1/2 + (-1/2) ε"), "{bad}");
    assert!(bad.contains("f_K          -1/4"));
}

#[test]
fn eval_reads_stdin() {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_kappa"))
        .args(["eval", "--field", "float", "--format", "json"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"{\"lambda\":-1,\"coeffs\":[0,0,0,0,0,0,0,2]}\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["norm_a"], 2.0);
    assert_eq!(v["q_d"][0], "-2");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "--bogus"][..],
        &["table", "--lambda", "2"],
        &["verify", "--suite", "nope"],
        &["sample", "--rho", "-1"],
        &["sample", "--rho", "nan"],
        &["eval", "--element", "{\"coeffs\":[1,2"],
        &["eval", "--element", "{\"coeffs\":[1,2,3]}"],
        &["eval", "--element", "{\"lambda\":3,\"coeffs\":[0,0,0,0,0,0,0,0]}"],
        &["eval", "--element", "{\"coeffs\":[\"x\",0,0,0,0,0,0,0]}"],
    ] {
        let out = kappa(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let err = String::from_utf8(kappa(&["eval", "--element", "{\"coeffs\":[1,2"]).stderr).unwrap();
    assert!(err.contains("line 1, column"), "{err}");
}
