use std::process::{Command, Output};

fn unipieces(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unipieces")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_sp4_group_char_two() {
    let o = unipieces(&["enumerate", "--type", "C", "--rank", "2", "--char", "2", "--variety", "group"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 5);
    assert!(stdout(&o).contains("2^2 [eps 2:0]"));
}

#[test]
fn enumerate_json_parses() {
    let o = unipieces(&["enumerate", "--type", "D", "--rank", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    // 3^1 1^1, 2^2 twice, 1^4
    assert_eq!(v.as_array().unwrap().len(), 4);
}

#[test]
fn pieces_sp4_lie_has_four_blocks() {
    let o = unipieces(&[
        "pieces",
        "--type",
        "C",
        "--rank",
        "2",
        "--char",
        "2",
        "--variety",
        "lie",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pieces"].as_array().unwrap().len(), 4);
}

#[test]
fn lie_algebra_in_char_one_is_a_usage_error() {
    let o = unipieces(&["enumerate", "--type", "C", "--rank", "2", "--char", "1", "--variety", "lie"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unipotent classes"));
}

#[test]
fn bad_flags_exit_two() {
    assert_eq!(unipieces(&["enumerate", "--type", "E", "--rank", "2"]).status.code(), Some(2));
    assert_eq!(unipieces(&["enumerate", "--type", "D", "--rank", "1"]).status.code(), Some(2));
    assert_eq!(unipieces(&["verify", "--checks", "no-such-check"]).status.code(), Some(2));
    assert_eq!(
        unipieces(&["pieces", "--type", "B", "--rank", "1", "--format", "dot"]).status.code(),
        Some(2)
    );
}

#[test]
fn psi_and_gamma_round_trip() {
    let class = r#"{"lambda":[2,1],"epsilon":{"0":1,"2":1}}"#;
    let o = unipieces(&["psi", "--type", "B", "--rank", "1", "--char", "2", "--class", class]);
    assert_eq!(stdout(&o).trim(), r#"{"deg":null,"lambda":[3]}"#);

    let o = unipieces(&["gamma", "--type", "B", "--rank", "1", "--char", "2", "--class", class]);
    let w = stdout(&o);
    let o = unipieces(&["gamma", "--type", "B", "--rank", "1", "--char", "2", "--weyl", w.trim()]);
    let back: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(back["lambda"], serde_json::json!([2, 1]));
}

#[test]
fn phi_of_a_char_two_label() {
    let o = unipieces(&[
        "phi",
        "--type",
        "C",
        "--rank",
        "2",
        "--char",
        "2",
        "--weyl",
        r#"{"alpha":[],"beta":[2]}"#,
    ]);
    assert_eq!(stdout(&o).trim(), r#"{"alpha":[1],"beta":[1],"deg":null}"#);
}

#[test]
fn upsilon_matches_char_one() {
    let o = unipieces(&[
        "upsilon",
        "--type",
        "D",
        "--rank",
        "3",
        "--char",
        "2",
        "--format",
        "json",
        "--class",
        r#"{"lambda":[4,2],"epsilon":{"0":0,"2":1,"4":1}}"#,
    ]);
    let p = unipieces(&[
        "upsilon",
        "--type",
        "D",
        "--rank",
        "3",
        "--format",
        "json",
        "--class",
        r#"{"lambda":[5,1]}"#,
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), stdout(&p));
}

#[test]
fn hasse_is_dot_and_deterministic() {
    let args = ["hasse", "--type", "D", "--rank", "3", "--char", "2"];
    let a = stdout(&unipieces(&args));
    assert!(a.starts_with("digraph"));
    assert!(a.contains("subgraph cluster_0"));
    assert_eq!(a, stdout(&unipieces(&args)));
}

#[test]
fn out_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("unipieces-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pieces.txt");
    let o = unipieces(&["special-pieces", "--type", "B", "--rank", "2", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert!(!std::fs::read_to_string(&path).unwrap().is_empty());
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_passes() {
    let o = unipieces(&["verify", "--max-rank", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("ok\t")));
}

#[test]
fn verify_selected_checks() {
    let o = unipieces(&[
        "verify",
        "--max-rank",
        "4",
        "--checks",
        "commutation,sigma-equals-psi",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(v[0]["check"], "commutation");
}
