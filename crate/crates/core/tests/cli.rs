use std::path::PathBuf;

use tautilt::cli::run;

fn algebra() -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data/example.alg")
        .display()
        .to_string()
}

fn tautilt(args: &[&str]) -> tautilt::cli::Outcome {
    run(std::iter::once("tautilt").chain(args.iter().copied()))
}

#[test]
fn indec_lists_five_modules() {
    let o = tautilt(&["indec", &algebra()]);
    assert_eq!(o.status, 0);
    assert!(o.output.contains("5 indecomposables, complete: true"));
}

#[test]
fn stautilt_true_and_false() {
    let a = algebra();
    let yes = tautilt(&["stautilt", &a, "--ambient", "fac:2+2/3+1/2", "1+2/3+1/2"]);
    assert_eq!(yes.status, 0, "{}", yes.output);
    assert!(yes.output.contains("support τ-tilting: YES"));
    let no = tautilt(&["stautilt", &a, "--ambient", "fac:2+2/3+1/2", "1/2+1"]);
    assert_eq!(no.status, 1, "{}", no.output);
    assert!(no.output.contains("condition (A) fails at projective 2/3"));
}

#[test]
fn taurigid_rejects_nonrigid() {
    let o = tautilt(&["taurigid", &algebra(), "2+3"]);
    assert_eq!(o.status, 1, "{}", o.output);
    assert!(o.output.contains("τ-rigid: NO"));
}

#[test]
fn hasse_writes_golden_dot() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e.dot");
    let o = tautilt(&[
        "hasse",
        &algebra(),
        "--ambient",
        "fac:2+2/3+1/2",
        "--dot",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status, 0, "{}", o.output);
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, include_str!("golden/e_hasse.dot"));
}

#[test]
fn cotorsion_and_restrict_and_bb_succeed() {
    let a = algebra();
    let amb = ["--ambient", "fac:2+2/3+1/2"];
    assert_eq!(tautilt(&["cotorsion", &a, amb[0], amb[1]]).status, 0);
    assert_eq!(
        tautilt(&["restrict", &a, amb[0], amb[1], "2+2/3"]).status,
        0
    );
    assert_eq!(
        tautilt(&["complete", &a, amb[0], amb[1], "2/3+1/2"]).status,
        0
    );
    let bb = tautilt(&["bb", &a, "2+2/3+1/2"]);
    assert_eq!(bb.status, 0, "{}", bb.output);
    assert!(bb.output.contains("equivalence: YES"));
}

#[test]
fn check_all_passes() {
    let o = tautilt(&["check-all"]);
    assert_eq!(o.status, 0, "{}", o.output);
    assert_eq!(
        o.output.lines().filter(|l| l.starts_with("PASS")).count(),
        10
    );
}

#[test]
fn errors_exit_with_two() {
    let a = algebra();
    assert_eq!(tautilt(&["stautilt", &a, "9/9"]).status, 2);
    assert_eq!(tautilt(&["stautilt", "/nonexistent.alg", "1"]).status, 2);
    assert_eq!(tautilt(&["hasse", &a, "--ambient", "sub:1"]).status, 2);
    assert_eq!(tautilt(&["frobnicate"]).status, 2);
    assert_eq!(tautilt(&["--help"]).status, 0);
}

#[test]
fn malformed_algebra_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.alg");
    std::fs::write(&path, "vertices: 2\narrow: a 1 7\n").unwrap();
    let o = tautilt(&["indec", path.to_str().unwrap()]);
    assert_eq!(o.status, 2);
    assert!(o.output.starts_with("error:"));
}
