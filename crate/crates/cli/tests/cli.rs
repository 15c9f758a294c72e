//! End-to-end tests against the compiled binary.

use std::process::{Command, Output};

fn ttk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ttk"))
        .args(args)
        .env_remove("TTK_JSON")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn slope_prints_the_integer() {
    let out = ttk(&["slope", "17", "5", "2", "-1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "81");

    let out = ttk(&["slope", "5", "-3", "2", "-1"]);
    assert_eq!(stdout(&out).trim(), "-19");
}

#[test]
fn eq_decides_the_full_twist_spellings() {
    let descending = r#"{"strands":5,"word":[4,3,2,1,4,3,2,1,4,3,2,1,4,3,2,1,4,3,2,1]}"#;
    let ascending = r#"{"strands":5,"word":[1,2,3,4,1,2,3,4,1,2,3,4,1,2,3,4,1,2,3,4]}"#;
    let out = ttk(&["eq", descending, ascending]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "true");

    let out = ttk(&["eq", r#"{"strands":3,"word":[1]}"#, r#"{"strands":3,"word":[2]}"#]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out).trim(), "false");
}

#[test]
fn conj_checks_an_explicit_conjugator() {
    let beta1 = r#"{"strands":5,"word":[4,3,2,1,4,3,2,1,-1,-1]}"#;
    let beta2 = r#"{"strands":5,"word":[4,3,2,1,4,3,2,1,4,3,2,1,-1,-2,-1,-2,-1,-2]}"#;
    let conjugator = r#"{"strands":5,"word":[1,3,4,3]}"#;
    let out = ttk(&["conj", beta1, beta2, conjugator]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "true");

    let identity = r#"{"strands":5,"word":[]}"#;
    let out = ttk(&["conj", beta1, beta2, identity]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn emitted_braid_json_feeds_back_into_commands() {
    let braid = stdout(&ttk(&["braid", "12", "5", "2", "-1"]));
    let braid = braid.trim();

    let comps = ttk(&["components", braid]);
    assert_eq!(stdout(&comps).trim(), "1");

    // identical inputs produce identical normal forms
    let nf1 = stdout(&ttk(&["--json", "nf", braid]));
    let nf2 = stdout(&ttk(&["--json", "nf", braid]));
    assert_eq!(nf1, nf2);
    assert!(nf1.contains(r#""inf":"#));

    // the braid of the slope-81 knot closes to the announced slope
    let slope = stdout(&ttk(&["slope", "12", "5", "2", "-1"]));
    assert_eq!(slope.trim(), "56");
}

#[test]
fn alexander_of_the_trefoil() {
    let out = ttk(&["alex", r#"{"strands":2,"word":[1,1,1]}"#]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1 - t + t^2");

    let json = ttk(&["--json", "alex", r#"{"strands":2,"word":[1,1,1]}"#]);
    assert_eq!(
        stdout(&json).trim(),
        r#"{"min_degree":0,"coeffs":[1,-1,1]}"#
    );

    // a two-component closure is an input error
    let link = ttk(&["alex", r#"{"strands":2,"word":[1,1]}"#]);
    assert_eq!(link.status.code(), Some(2));
}

#[test]
fn verify_reports_agree_between_text_and_json() {
    let text = ttk(&["verify", "chain", "--range", "2..3"]);
    assert!(text.status.success());
    let text_out = stdout(&text);
    assert!(text_out.contains("18 verified, 0 falsified, 0 inconclusive"));

    let json = ttk(&["--json", "verify", "chain", "--range", "2..3"]);
    assert!(json.status.success());
    let reports: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 18);
    assert!(reports
        .iter()
        .all(|r| r["status"].as_str() == Some("verified")));
}

#[test]
fn verify_p1_range_produces_seven_reports() {
    let json = ttk(&["--json", "verify", "p1", "--range", "2..8"]);
    assert!(json.status.success());
    let reports: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(reports.as_array().unwrap().len(), 7);
}

#[test]
fn sweep_contains_the_slope_81_knot() {
    let out = ttk(&["--json", "sweep", "--p-max", "18", "--q-max", "5"]);
    assert!(out.status.success());
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let found = rows.as_array().unwrap().iter().any(|row| {
        row["p"] == 17
            && row["q"] == 5
            && row["r"] == 2
            && row["n"] == -1
            && row["verdict"] == "PrimitiveSeifert"
            && row["surgery"] == "S2(3,2,-3)"
            && row["components"] == 1
    });
    assert!(found, "expected the classified row in the sweep output");
}

#[test]
fn malformed_input_is_a_usage_error() {
    let out = ttk(&["nf", "{broken"]);
    assert_eq!(out.status.code(), Some(2));

    let out = ttk(&["eq", r#"{"strands":3,"word":[1]}"#, r#"{"strands":4,"word":[1]}"#]);
    assert_eq!(out.status.code(), Some(2));

    let out = ttk(&["verify", "p1", "--range", "0..3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn env_variables_override_flags() {
    let out = Command::new(env!("CARGO_BIN_EXE_ttk"))
        .args(["slope", "17", "5", "2", "-1"])
        .env("TTK_JSON", "true")
        .output()
        .unwrap();
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["slope"], 81);

    let out = Command::new(env!("CARGO_BIN_EXE_ttk"))
        .args(["nf", r#"{"strands":12,"word":[1]}"#])
        .env("TTK_STRANDS_CAP", "8")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn braid_file_input() {
    let dir = std::env::temp_dir().join("ttk-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("braid.json");
    std::fs::write(&path, r#"{"strands":3,"word":[1,2,1]}"#).unwrap();
    let arg = format!("@{}", path.display());
    let out = ttk(&["components", &arg]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "2");
}
