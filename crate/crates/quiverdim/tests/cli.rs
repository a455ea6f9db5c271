use std::path::PathBuf;
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quiverdim")).args(args).current_dir(root()).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_codes_follow_verification_status() {
    assert_eq!(run(&["mutate", "scripts/d4.mut"]).status.code(), Some(0));
    let e6 = run(&["mutate", "scripts/e6.mut"]);
    assert_eq!(e6.status.code(), Some(1));
    assert!(stdout(&e6).contains("FAIL"));
    assert_eq!(run(&["reproduce", "examples-8"]).status.code(), Some(2));
    assert_eq!(run(&["reproduce", "coxeter"]).status.code(), Some(0));
}

#[test]
fn errors_exit_with_one_and_a_message() {
    let o = run(&["algebra", "--catalog", "no_such_algebra"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!o.stderr.is_empty());
    assert_eq!(run(&["algebra"]).status.code(), Some(1));
}

#[test]
fn file_input_matches_the_catalog() {
    let file = run(&["algebra", "--file", "data/a3-zero-relation.toml", "--format", "csv"]);
    let cat = run(&["algebra", "--catalog", "example_8_1", "--format", "csv"]);
    assert_eq!(file.status.code(), Some(0));
    let computed = |o: &Output| {
        let text = stdout(o);
        let mut r = csv::Reader::from_reader(text.as_bytes());
        r.records().map(|x| x.unwrap()[5].to_string()).collect::<Vec<_>>()
    };
    assert_eq!(computed(&file), computed(&cat));
}

#[test]
fn serre_dim_expectations_on_a_cyclic_file() {
    let o = run(&["serre-dim", "--file", "data/two-cycle.toml", "--expect-ls", "0", "--expect-us", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let bad = run(&["serre-dim", "--file", "data/two-cycle.toml", "--expect-ls", "1"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn csv_output_is_deterministic_and_written_to_out() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let a = run(&["reproduce", "bmn", "--format", "csv", "--out", out]);
    let b = run(&["reproduce", "bmn", "--format", "csv"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let written = std::fs::read_to_string(dir.path().join("bmn.csv")).unwrap();
    assert_eq!(written, stdout(&a));
    assert!(dir.path().join("bmn.md").exists());
}

#[test]
fn prime_field_flag() {
    let o = run(&["fcy", "--catalog", "dynkin:D4", "--field", "fp:32003"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(6,4)"));
    assert_eq!(run(&["fcy", "--catalog", "dynkin:D4", "--field", "fp:4"]).status.code(), Some(1));
}
