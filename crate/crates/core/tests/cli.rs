use std::fs;
use std::path::{Path, PathBuf};

use saxl_lab::cli::{cache_path, dispatch, encode_table, Outcome};
use serde_json::Value;

fn run(args: &[&str]) -> Outcome {
    let mut argv = vec!["saxl-lab"];
    argv.extend_from_slice(args);
    dispatch(argv)
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn schema_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas")
}

fn assert_valid(schema: &str, doc: &Value) {
    let text = fs::read_to_string(schema_dir().join(format!("{schema}.schema.json"))).unwrap();
    let schema_value: Value = serde_json::from_str(&text).unwrap();
    let validator = jsonschema::validator_for(&schema_value).unwrap();
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema}: {errors:?}\n{doc:#}");
}

#[test]
fn documented_examples() {
    assert_eq!(json(&["kron", "[1,1,1,1]", "[2,2]", "[2,2]"])["g"], "1");
    assert_eq!(json(&["char", "[5,1]", "[5,1]"])["value"], "0");
    let saxl = json(&["saxl", "--family", "staircase", "--k", "4", "--exact"]);
    assert_eq!(saxl["conjecture_holds"], true);
    let phi = json(&["phi", "[2,2]"]);
    let keys: Vec<&String> = phi["multiplicities"].as_object().unwrap().keys().collect();
    assert_eq!(keys, ["[4]", "[2,2]", "[1,1,1,1]"]);
}

#[test]
fn every_subcommand_matches_its_schema() {
    let cases: &[(&str, &[&str])] = &[
        ("char", &["char", "[3,2,1]", "[3,3]"]),
        ("kron", &["kron", "[3,2,1]", "[3,2,1]", "[4,2]"]),
        ("table", &["table", "6"]),
        ("phi", &["phi", "[3,2,1]"]),
        ("certify", &["certify", "[4,1,1]", "[3,2,1]"]),
        ("certify-all", &["certify", "--all", "[3,3,2]"]),
        ("saxl", &["saxl", "--family", "chopped", "--k", "3"]),
        ("saxl", &["saxl", "--family", "caret", "--k", "2", "--exact"]),
        ("counts-series", &["counts", "pi", "30"]),
        ("counts-series", &["counts", "pik", "3", "8"]),
        ("counts-series", &["counts", "pprime", "--set", "5,7,9,11"]),
        ("counts-series", &["counts", "pprime", "--a", "5", "--m", "2", "42"]),
        ("counts-series", &["counts", "pprime", "--a", "5", "--m", "4", "--steps", "3"]),
        ("counts-threshold", &["counts", "threshold", "--set", "5,7,9,11,13,15,17,19,21,23,25,27,29,31,33,35,37,39,41,43,45,47,49,51,53,55,57,59,61"]),
        ("counts-hr", &["counts", "hr", "100"]),
        ("stats-zeros", &["stats", "zeros", "8", "--values", "1,-1,2"]),
        ("stats-caret", &["stats", "caret", "2"]),
        ("stats-random", &["stats", "random", "12", "--trials", "50", "--mode", "unrestricted"]),
        ("families", &["families", "--k", "4"]),
    ];
    for (schema, args) in cases {
        assert_valid(schema, &json(args));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["char", "[5,1]", "[5]"]).code, 1);
    assert_eq!(run(&["phi", "[3,1]"]).code, 0);
    assert_eq!(run(&["certify", "[3,1]", "[3,1]"]).code, 1, "not self-conjugate");
    assert_eq!(run(&["char", "[2,x]", "[2]"]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["certify", "[2,1]"]).code, 2);
    assert_eq!(run(&["saxl", "--family", "square", "--k", "3"]).code, 2);
    let over = run(&["table", "30"]);
    assert_eq!(over.code, 3);
    assert!(over.stderr.contains("budget"), "{}", over.stderr);
    assert_eq!(run(&["saxl", "--family", "caret", "--k", "3", "--max-partitions", "100"]).code, 3);
    let help = run(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("saxl"));
}

#[test]
fn malformed_partitions_say_how_to_fix_them() {
    let out = run(&["char", "[3,4]", "[7]"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("[4,2,1]"), "{}", out.stderr);
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        &["phi", "[3,3,2]"][..],
        &["stats", "random", "15", "--trials", "200", "--seed", "9"][..],
        &["saxl", "--family", "staircase", "--k", "4"][..],
    ] {
        let a = run(args);
        let mut with_one = args.to_vec();
        with_one.extend(["--workers", "1"]);
        let b = run(&with_one);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn tsv_output() {
    let out = run(&["table", "4", "--format", "tsv"]);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 1 + 25);
    assert_eq!(lines[0], "lambda\tnu\tvalue");
    assert!(lines.contains(&"[2,2]\t[3,1]\t-1"));
    let counts = run(&["counts", "pi", "5", "--format", "tsv"]);
    assert!(counts.stdout.ends_with("5\t7\n"));
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    fs::write(&cfg, r#"{"format": "tsv", "seed": 5}"#).unwrap();
    let cfg_arg = cfg.to_str().unwrap();
    let tsv = run(&["char", "[2,1]", "[3]", "--config", cfg_arg]);
    assert!(tsv.stdout.starts_with("lambda\tnu\tvalue"));
    let forced = run(&["char", "[2,1]", "[3]", "--config", cfg_arg, "--format", "json"]);
    assert!(forced.stdout.starts_with('{'));

    let seeded = run(&["stats", "random", "10", "--trials", "30", "--config", cfg_arg, "--format", "json"]);
    let v: Value = serde_json::from_str(&seeded.stdout).unwrap();
    assert_eq!(v["seed"], 5);

    fs::write(&cfg, r#"{"formt": "tsv"}"#).unwrap();
    assert_eq!(run(&["char", "[1]", "[1]", "--config", cfg_arg]).code, 2);
    assert_eq!(run(&["char", "[1]", "[1]", "--config", "/nonexistent/cfg.json"]).code, 2);
}

#[test]
fn cache_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = cache_path(dir.path(), 10);

    // this process may already hold the table, so the file is written directly
    let table = saxl_lab::character::char_table(10);
    assert_eq!(table.dim(), 42);
    fs::write(&path, encode_table(&table)).unwrap();
    let loaded = saxl_lab::cli::cache_load(dir.path(), 10).unwrap().unwrap();
    assert_eq!(loaded.values(), table.values());

    let bytes = fs::read(&path).unwrap();
    fs::write(&path, &bytes[..bytes.len() / 2]).unwrap();
    assert!(saxl_lab::cli::cache_load(dir.path(), 10).is_err());
}
