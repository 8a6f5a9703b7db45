//! End-to-end runs of the `hamcert` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn hamcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hamcert")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn solve_and_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("s4.cert");
    let o = hamcert(&["solve", "--group", "S4", "--gens", "(1,2),(2,3,4)", "--out", path(&cert)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = fs::read_to_string(&cert).unwrap();
    assert!(text.starts_with("group S4\norder 24\n"), "{text}");

    let o = hamcert(&["verify", path(&cert)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).contains("24 steps"));

    // swap one step of the word for another generator
    let tampered = dir.path().join("bad.cert");
    let word = text.lines().find(|l| l.starts_with("word ")).unwrap();
    let mut steps: Vec<String> = word.split_whitespace().skip(1).map(String::from).collect();
    steps[2] = if steps[2] == "1" { "2".into() } else { "1".into() };
    fs::write(&tampered, text.replace(word, &format!("word {}", steps.join(" ")))).unwrap();
    let o = hamcert(&["verify", path(&tampered)]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("step"), "{}", stderr(&o));
}

#[test]
fn solve_from_a_table_file() {
    let dir = tempfile::tempdir().unwrap();
    let o = hamcert(&["catalog", "show", "D8", "--table"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let table: String = out.lines().skip_while(|l| l.parse::<usize>().is_err()).map(|l| format!("{l}\n")).collect();
    let file = dir.path().join("g.tbl");
    fs::write(&file, table).unwrap();
    let o = hamcert(&["solve", "--table", path(&file), "--gens", "1,4"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).contains("order 8"));
}

#[test]
fn unsupported_and_budget_exit_codes() {
    let o = hamcert(&["solve", "--group", "order96-anything", "--gens", "1"]);
    assert_eq!(code(&o), 2, "{}", stderr(&o));
    let o = hamcert(&["solve", "--group", "C64", "--gens", "1"]);
    assert_eq!(code(&o), 2, "{}", stderr(&o));

    let dir = tempfile::tempdir().unwrap();
    let petersen = dir.path().join("petersen.txt");
    let mut edges = String::from("# GP(5, 2)\n");
    for i in 0..5 {
        edges += &format!("{} {}\n{} {}\n{} {}\n", i, (i + 1) % 5, i, i + 5, i + 5, (i + 2) % 5 + 5);
    }
    fs::write(&petersen, edges).unwrap();
    let o = hamcert(&["oracle", path(&petersen), "--max-nodes", "2"]);
    assert_eq!(code(&o), 3, "{}", stderr(&o));
    let o = hamcert(&["oracle", path(&petersen)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("complete search"));
}

#[test]
fn oracle_finds_a_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("k4.txt");
    fs::write(&file, "0 1\n1 2\n2 3\n3 0\n0 2\n1 3\n").unwrap();
    let o = hamcert(&["oracle", path(&file)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("cycle "));
}

#[test]
fn sweep_of_order_24() {
    let o = hamcert(&["sweep", "--orders", "24", "--max-gens", "2"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let report = stdout(&o);
    let mut groups: Vec<&str> = report.lines().skip(1).map(|l| l.split('\t').next().unwrap()).collect();
    groups.dedup();
    assert!(report.lines().skip(1).all(|l| l.split('\t').nth(6) == Some("1")));
    // two of the fifteen groups need three generators
    let noted = stderr(&o).matches("needs more than 2 generators").count();
    assert_eq!((groups.len(), noted), (13, 2));
}

#[test]
fn empty_sweep_range() {
    let o = hamcert(&["sweep", "--orders", "10..9"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn sweep_is_reproducible() {
    let a = hamcert(&["sweep", "--orders", "12..16"]);
    let b = hamcert(&["sweep", "--orders", "12..16", "--jobs", "2"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn quotient_of_the_three_p_squared_group() {
    let o = hamcert(&["quotient", "--group", "Z3:Z5^2", "--gens", "25,5", "--subgroup", "25"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("cosets 25 of a subgroup of order 3"));
    assert!(out.trim_end().ends_with("2 double edges"));
}

#[test]
fn catalog_commands() {
    let o = hamcert(&["catalog", "list", "--order", "8"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 1 + 5);
    let o = hamcert(&["catalog", "show", "S4"]);
    assert!(stdout(&o).contains("order 24"));
    let o = hamcert(&["catalog", "show", "nonsense"]);
    assert_eq!(code(&o), 1);
}
