use std::io::Write;
use std::process::{Command, Output};

use kocalc::presfile::parse_polynomial;
use kocalc_core::polynomial::{Monomial, Polynomial};
use proptest::prelude::*;

fn kocalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kocalc"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn file_space_matches_catalog() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(
        f,
        "space X\ndimc 2\ngen x 2\nrel x^3\nsq2 x = x^2\ntwist O1 = x"
    )
    .unwrap();
    let spec = format!("file:{}", f.path().display());
    let from_file = kocalc(&["--space", &spec, "--twist", "all", "--format", "csv"]);
    assert!(from_file.status.success());
    let catalog = kocalc(&["--space", "cp:2", "--twist", "all", "--format", "csv"]);
    // twist, t0, t1, s0..s3
    let numbers = |s: String| -> Vec<String> {
        s.lines()
            .skip(1)
            .map(|l| l.split(',').skip(1).take(7).collect::<Vec<_>>().join(","))
            .collect()
    };
    assert_eq!(numbers(stdout(&from_file)), numbers(stdout(&catalog)));
    // files are conditional on degeneration, catalog spaces are not
    assert!(stdout(&from_file)
        .lines()
        .nth(1)
        .unwrap()
        .ends_with(",true"));
    assert!(stdout(&catalog).lines().nth(1).unwrap().ends_with(",false"));
}

#[test]
fn invalid_file_reports_line() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "space Y\ndimc 3\ngen y 3").unwrap();
    let o = kocalc(&["--space", &format!("file:{}", f.path().display())]);
    assert!(!o.status.success());
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(
        err.contains("line 3") && err.contains("even degrees only"),
        "{err}"
    );
}

#[test]
fn out_of_range_spec_fails() {
    let o = kocalc(&["--space", "quadric:2"]);
    assert!(!o.status.success());
    assert!(String::from_utf8(o.stderr).unwrap().contains("n >= 3"));
}

#[test]
fn batch_keeps_input_order_and_checks() {
    let o = kocalc(&[
        "--space", "cp", "--range", "1..16", "--twist", "all", "--format", "csv", "--check",
    ]);
    assert!(o.status.success());
    let spaces: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap().to_string())
        .collect();
    let expected: Vec<String> = (1..=16)
        .flat_map(|n| [format!("cp:{n}"), format!("cp:{n}")])
        .collect();
    assert_eq!(spaces, expected);
}

#[test]
fn json_lines_schema() {
    let o = kocalc(&["--space", "evii", "--twist", "all", "--format", "json"]);
    let rows: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows.len(), 2);
    for key in [
        "space",
        "twist",
        "t0",
        "t1",
        "s",
        "groups",
        "degeneration_assumed",
        "citation",
    ] {
        assert!(rows[0].get(key).is_some(), "missing {key}");
    }
    assert_eq!(rows[0]["groups"]["W1"], "(Z/2)^3");
    assert_eq!(rows[1]["s"], serde_json::json!([0, 0, 0, 0]));
}

#[test]
fn betti_and_representatives() {
    let o = kocalc(&["--space", "quadric:4", "--betti"]);
    assert_eq!(stdout(&o), "quadric:4  0:1 2:1 4:2 6:1 8:1\n");
    let o = kocalc(&["--space", "cp:2 --twist O(1)", "--representatives"]);
    assert_eq!(stdout(&o), "cp:2 twist O1 H^4: x^2\n");
}

#[test]
fn unknown_twist_fails() {
    let o = kocalc(&["--space", "cp:3", "--twist", "L"]);
    assert!(!o.status.success());
    assert!(String::from_utf8(o.stderr)
        .unwrap()
        .contains("unknown twist `L`"));
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(prop::collection::vec(0u32..4, 3), 0..6)
        .prop_map(|terms| Polynomial::from_terms(terms.into_iter().map(Monomial::new)))
}

proptest! {
    #[test]
    fn polynomial_text_round_trips(p in polynomial()) {
        let names = ["a1", "b", "c_2"];
        let text = p.to_text(&names);
        prop_assert_eq!(parse_polynomial(&text, &names).unwrap(), p);
    }
}
