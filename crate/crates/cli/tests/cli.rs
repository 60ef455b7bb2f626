use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const EXAMPLE_MU: &str = "(2,1,1);(3,2,2,1);(4,3,1)";
const EXAMPLE_PARAMS: &str = "1|1,1|2,1|3";
const EXAMPLE_WORD: &str = "1,3,2,4,6,7,9,2,2,5,4,7,8,6,5,7,3,4,6,8";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superfrob"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json_of(args: &[&str]) -> Value {
    let o = run(args);
    assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

fn assert_schema(name: &str, v: &Value) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/schemas").join(name);
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).expect("schema compiles");
    let msgs: Vec<String> = match compiled.validate(v) {
        Ok(()) => Vec::new(),
        Err(errors) => errors.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    };
    assert!(msgs.is_empty(), "{name}: {msgs:?}");
}

#[test]
fn smallest_frobenius_run_passes() {
    let o = run(&["verify", "--m", "1", "--n", "2", "--suite", "frobenius"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("PASS frobenius"));
}

#[test]
fn diagnostic_weight_of_the_long_example() {
    let o = run(&[
        "weight", "--mu", EXAMPLE_MU, "--params", EXAMPLE_PARAMS, "--sequence", EXAMPLE_WORD, "--diagnostic",
    ]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("wt_mu = 0\n"));
    assert!(out.contains("8,6,5,7 is not up-down"));
    assert!(out.contains("local factor product = q^-2*Q1^3*Q2^4*Q3^13"));
    assert!(out.contains("T_SW = [1,5,6,15,17,18]"));
    assert!(out.contains("T_NE = [8,10,13,14]"));
}

#[test]
fn literal_examples_reproduce() {
    let o = run(&[
        "rsk", "--strategy", "literal", "--sequence", "y1,x2,x2,x1,x3,y1,y1,y3,y2", "--m", "1", "--params", "3|3",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "S = (x1 x2 x2 y1 y2 / x3 y1 y3 / y1)\nT = (1 2 3 4 8 / 5 6 9 / 7)\n");
    let o = run(&[
        "rsk",
        "--strategy",
        "literal",
        "--params",
        "2|2,1|1",
        "--sequence",
        "x1.1,y1.1,x1.2,x2.1,x2.1,x1.2,y1.2,y1.2,y1.1,y2.1",
    ]);
    assert_eq!(
        stdout(&o),
        "S = (x1.1 x2.1 y1.1 y2.1 / x2.1 y1.1);(x1.2 x1.2 y1.2 / y1.2)\nT = (1 2 5 10 / 4 9);(3 6 7 / 8)\n"
    );
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["qmu", "--mu", "(1,2)", "--params", "1|1"],
        vec!["qmu", "--mu", "(1)", "--params", "1-1"],
        vec!["rsk", "--params", "1|1"],
        vec!["rsk", "--params", "1|1", "--sequence", "1,3"],
        vec!["rsk", "--params", "1|1", "--m", "2", "--sequence", "1"],
        vec!["chartable", "--m", "2", "--n", "2", "--params", "1|1"],
        vec!["verify", "--m", "1", "--n", "2", "--suite", "everything"],
        vec!["weight", "--mu", "(2)", "--params", "1|1", "--sequence", "1"],
        vec!["frobnicate"],
    ] {
        let o = run(&args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn guards_refuse_with_exit_3_unless_forced() {
    let o = run(&["verify", "--m", "3", "--n", "5", "--suite", "bijection"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--force"));
    let o = run(&["enum", "--multipartitions", "18", "--m", "2"]);
    assert_eq!(code(&o), 3);
    let o = run(&["enum", "--multipartitions", "18", "--m", "2", "--force", "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], 12230);
}

#[test]
fn verification_failures_exit_1() {
    let o = run(&["verify", "--m", "1", "--n", "2", "--params", "1|1", "--strategy", "literal", "--suite", "bijection"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("1,2 and 2,1 collide"));
    let o = run(&["verify", "--m", "2", "--n", "2", "--suite", "transport"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("FAIL transport"));
    let o = run(&["verify", "--m", "1", "--n", "3", "--params", "1|1"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(), 4);
}

#[test]
fn json_outputs_match_schemas() {
    assert_schema("chartable.schema.json", &json_of(&["chartable", "--m", "2", "--n", "2", "--json"]));
    assert_schema(
        "chartable.schema.json",
        &json_of(&["chartable", "--m", "1", "--n", "3", "--route", "oracle", "--json"]),
    );
    assert_schema(
        "specialized.schema.json",
        &json_of(&["chartable", "--m", "3", "--n", "2", "--specialize", "--json"]),
    );
    assert_schema("mpoly.schema.json", &json_of(&["qmu", "--mu", "(2);(1)", "--params", "1|1,1|1", "--json"]));
    assert_schema(
        "trace.schema.json",
        &json_of(&["rsk", "--params", "2|2,1|1", "--sequence", "1,5,2,6,4", "--trace"]),
    );
    assert_schema("rsk.schema.json", &json_of(&["rsk", "--params", "2|2", "--sequence", "4,1,3", "--json"]));
    assert_schema(
        "weight.schema.json",
        &json_of(&[
            "weight", "--mu", EXAMPLE_MU, "--params", EXAMPLE_PARAMS, "--sequence", EXAMPLE_WORD, "--diagnostic",
            "--json",
        ]),
    );
    assert_schema("enum.schema.json", &json_of(&["enum", "--std", "(2,1);(1)", "--json"]));
    assert_schema("enum.schema.json", &json_of(&["enum", "--sstd", "(2,1)", "--params", "1|1", "--json"]));
    assert_schema("verify.schema.json", &json_of(&["verify", "--m", "1", "--n", "2", "--json"]));
}

#[test]
fn text_and_json_tables_carry_the_same_entries() {
    let v = json_of(&["chartable", "--m", "1", "--n", "3", "--json"]);
    let text = stdout(&run(&["chartable", "--m", "1", "--n", "3"]));
    let rows: Vec<Vec<String>> = text
        .lines()
        .skip(2)
        .map(|l| l.split('|').skip(1).map(|c| c.trim().to_string()).collect())
        .collect();
    let entries: Vec<Vec<String>> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(|e| e.as_str().unwrap().to_string()).collect())
        .collect();
    assert_eq!(rows, entries);
}

#[test]
fn tables_are_cached_by_key() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let first = run(&["chartable", "--m", "1", "--n", "2", "--cache-dir", d]);
    assert_eq!(code(&first), 0);
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), 1);
    let name = files[0].file_name().unwrap().to_str().unwrap().to_string();
    assert!(name.contains("m1-n2") && name.contains("rsk-corrected"), "{name}");
    // a hand-edited entry proves the second run reads the file
    let text = std::fs::read_to_string(&files[0]).unwrap().replace("-q^-1*Q1", "7*Q1");
    std::fs::write(&files[0], text).unwrap();
    let second = run(&["chartable", "--m", "1", "--n", "2", "--cache-dir", d]);
    assert!(stdout(&second).contains("7*Q1"));
    let other = run(&["chartable", "--m", "1", "--n", "2", "--route", "oracle", "--cache-dir", d]);
    assert!(!stdout(&other).contains("7*Q1"));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 2);
    std::fs::write(&files[0], "not json").unwrap();
    let third = run(&["chartable", "--m", "1", "--n", "2", "--cache-dir", d]);
    assert_eq!(code(&third), 0);
    assert_eq!(stdout(&third), stdout(&first));
}

#[test]
fn runs_are_deterministic() {
    let args = ["verify", "--m", "2", "--n", "2", "--params", "1|1,1|1", "--suite", "roundtrip", "--seed", "7"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a), stdout(&b));
    let t1 = stdout(&run(&["chartable", "--m", "2", "--n", "3", "--json"]));
    let t2 = stdout(&run(&["chartable", "--m", "2", "--n", "3", "--json"]));
    assert_eq!(t1, t2);
}

#[test]
fn enumerations() {
    let out = stdout(&run(&["enum", "--multipartitions", "2", "--m", "2"]));
    assert_eq!(out, "(2);-\n(1,1);-\n(1);(1)\n-;(2)\n-;(1,1)\n");
    let out = stdout(&run(&["enum", "--sstd", "(1,1)", "--params", "1|1"]));
    assert_eq!(out, "(x1 / y1)\n(y1 / y1)\n");
    let out = stdout(&run(&["enum", "--std", "(1);(1)"]));
    assert_eq!(out.lines().count(), 2);
    let out = stdout(&run(&["enum", "--sstd", "(1,1)", "--params", "1|0"]));
    assert!(out.is_empty());
}
