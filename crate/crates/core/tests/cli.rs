use std::process::{Command, Output};

use catb2::poly::bp_from_text;
use serde_json::Value;

fn catb2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catb2"))
        .args(args)
        .output()
        .expect("failed to launch catb2")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn theorem_grid_passes() {
    let o = catb2(&[
        "verify", "--i", "0..2", "--m", "0..2", "--checks", "theorem",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 9);
    assert!(lines
        .iter()
        .all(|l| l.starts_with("CHECK=theorem ") && l.ends_with(" RESULT=PASS")));
    assert_eq!(lines[5], "CHECK=theorem i=1 m=2 RESULT=PASS");
}

#[test]
fn unknown_check_is_a_usage_error() {
    let o = catb2(&["verify", "--checks", "nosuch"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("nosuch") && err.contains("Usage"), "{err}");
}

#[test]
fn malformed_flags_exit_2() {
    for args in [
        &["verify", "--i", "3..1"][..],
        &["verify", "--m", "x"],
        &["verify", "--format", "xml"],
        &["verify", "--jobs", "0"],
        &["verify", "--bogus"],
        &["verify", "--perturb", "1,2"],
        &["basis"],
        &["frobnicate"],
    ] {
        let o = catb2(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn saito_json_record() {
    let o = catb2(&[
        "verify", "--i", "0..0", "--m", "0..0", "--checks", "saito", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 1);
    let rec: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(rec["C"], "-1/3");
    assert_eq!(rec["check"], "saito");
    assert_eq!(rec["result"], "PASS");
}

#[test]
fn skip_lines_for_excluded_cells() {
    let o = catb2(&[
        "verify",
        "--i",
        "0..1",
        "--m",
        "0..0",
        "--checks",
        "prop1,lemma1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(
        out,
        "CHECK=lemma1 i=0 m=0 l=0 RESULT=SKIP\n\
         CHECK=lemma1 i=0 m=0 l=1 RESULT=SKIP\n\
         CHECK=lemma1 i=1 m=0 l=0 RESULT=PASS\n\
         CHECK=lemma1 i=1 m=0 l=1 RESULT=PASS\n\
         CHECK=prop1 i=0 m=0 RESULT=SKIP\n\
         CHECK=prop1 i=1 m=0 RESULT=PASS\n"
    );
}

#[test]
fn basis_text_m0() {
    let o = catb2(&["basis", "--m", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("f0=1 * x^1\n"));
    assert!(out.contains("f1=1/3 * x^3 + -1/3 * x^1\n"));
    assert!(out.contains("C=-1/3\n"));
    assert!(out.contains("A0=2\n") && out.contains("B0=2\n"));
}

#[test]
fn basis_json_round_trips() {
    for m in ["0", "1"] {
        let o = catb2(&["basis", "--m", m, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0));
        let rec: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
        for key in ["f0", "f1"] {
            let text = rec[key].as_str().unwrap();
            let p = bp_from_text(text).unwrap();
            assert_eq!(catb2::poly::bp_to_text(&p), text);
        }
        for key in ["C", "A0", "A1", "B0", "B1"] {
            rec[key].as_str().unwrap().parse::<catb2::Rat>().unwrap();
        }
    }
    let o = catb2(&["basis", "--m", "1", "--format", "json"]);
    let rec: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(rec["C"], "4/105");
}

#[test]
fn output_is_independent_of_jobs() {
    let base = [
        "verify",
        "--i",
        "0..2",
        "--m",
        "0..2",
        "--k-extra",
        "1",
        "--format",
        "json",
    ];
    let seq = catb2(&[&base[..], &["--jobs", "1"]].concat());
    let par = catb2(&[&base[..], &["--jobs", "3"]].concat());
    assert_eq!(seq.status.code(), Some(0));
    assert_eq!(par.status.code(), Some(0));
    assert_eq!(seq.stdout, par.stdout);
    for line in stdout(&seq).lines() {
        let rec: Value = serde_json::from_str(line).unwrap();
        assert!(rec["check"].is_string() && rec["params"].is_object());
    }
}

#[test]
fn perturbation_fails_with_witness() {
    let o = catb2(&[
        "verify",
        "--i",
        "0..1",
        "--m",
        "0..1",
        "--checks",
        "expansion",
        "--perturb",
        "1,1,0,-2/3",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let failing: Vec<&str> = out.lines().filter(|l| l.contains("RESULT=FAIL")).collect();
    assert_eq!(failing.len(), 1);
    assert!(failing[0].starts_with("CHECK=expansion i=1 m=1 RESULT=FAIL WITNESS="));
    let w = failing[0].split_once("WITNESS=").unwrap().1;
    assert!(!bp_from_text(w).unwrap().is_zero());
}
