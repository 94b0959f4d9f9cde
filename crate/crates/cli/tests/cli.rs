use std::process::{Command, Output};

fn qhankel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhankel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn family_prints_canonical_text() {
    let out = qhankel(&["family", "--name", "phi", "--n", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "x^3 + 2*x^2 + q*x^2 + x\n");
    let out = qhankel(&[
        "family",
        "--name",
        "phi",
        "--n",
        "3",
        "--route",
        "recurrence",
    ]);
    assert_eq!(stdout(&out), "x^3 + 2*x^2 + q*x^2 + x\n");
}

#[test]
fn det_of_rogers_szego() {
    let out = qhankel(&["det", "--family", "rs", "--n", "2", "--shift", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "-x + q*x\n");
    let out = qhankel(&["det", "--family", "rs", "--n", "2", "--alg", "cofactor"]);
    assert_eq!(stdout(&out), "-x + q*x\n");
}

#[test]
fn trivial_suite_passes() {
    let out = qhankel(&["verify", "--suite", "all", "--n-max", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 15);
    assert!(text.ends_with("all: 15 passed, 0 failed\n"));
}

#[test]
fn json_report_schema() {
    let out = qhankel(&[
        "verify", "--id", "T1a,PSI", "--n-max", "3", "--c", "1,2", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["suite"], "T1a,PSI");
    let cases = v["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 9);
    for case in cases {
        let obj = case.as_object().unwrap();
        let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        keys.sort();
        assert_eq!(keys, ["c", "equal", "id", "lhs", "millis", "n", "rhs"]);
        assert!(case["id"].is_string() && case["lhs"].is_string() && case["rhs"].is_string());
        assert!(case["n"].is_u64() && case["c"].is_u64() && case["millis"].is_u64());
        assert_eq!(case["equal"], true);
    }
    assert_eq!(v["summary"]["passed"], 9);
    assert_eq!(v["summary"]["failed"], 0);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = [
        "verify", "--suite", "all", "--n-max", "3", "--c", "1,2", "--format", "json",
    ];
    let a = qhankel(&args);
    let b = qhankel(&args);
    assert_eq!(a.stdout, b.stdout);
    let args = ["verify", "--suite", "all", "--n-max", "3"];
    assert_eq!(qhankel(&args).stdout, qhankel(&args).stdout);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        qhankel(&["verify", "--id", "T9", "--n-max", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qhankel(&["verify", "--n-max", "2", "--c", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(qhankel(&["verify", "--n-max", "0"]).status.code(), Some(2));
    assert_eq!(
        qhankel(&["family", "--name", "nope", "--n", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(qhankel(&["bogus"]).status.code(), Some(2));
}

#[test]
fn jfraction_and_table() {
    let out = qhankel(&["jfraction", "--family", "hermite", "--depth", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "s(0) = x\ns(1) = q*x\nt(0) = -1\n");
    let out = qhankel(&["table", "--name", "hermite", "--depth", "2"]);
    assert_eq!(stdout(&out), "0: 1\n1: x | 1\n2: x^2 - 1 | x + q*x | 1\n");
}

#[test]
fn unwritable_output_exits_three() {
    let out = qhankel(&[
        "family",
        "--name",
        "phi",
        "--n",
        "1",
        "--out",
        "/nonexistent/dir/out.txt",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("qhankel-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = qhankel(&[
        "verify",
        "--id",
        "HERM",
        "--n-max",
        "2",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["cases"][1]["lhs"], "-1");
    std::fs::remove_dir_all(dir).unwrap();
}
