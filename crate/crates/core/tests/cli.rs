use std::process::Command;

use pedestal_lab::cli::run_command;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["pedestal-lab".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_command(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn syt_count() {
    assert_eq!(
        run(&["syt", "count", "--shape", "3,2"]),
        (0, "5\n".into(), String::new())
    );
    assert_eq!(run(&["syt", "--shape", "2,2/1"]).1, "2\n");
}

#[test]
fn plinth_generating_function() {
    assert_eq!(run(&["gf", "plinth", "--shape", "2,1"]).1, "{\"coeffs\":[0,1,1]}\n");
    assert_eq!(
        run(&["gf", "plinth", "--shape", "2,1", "--format", "text"]).1,
        "q + q^2\n"
    );
}

#[test]
fn series_outputs() {
    let (code, out, _) = run(&["gf", "ssyt", "--shape", "1,1", "--series-degree", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"coeffs\":[0,1,1,2,2],\"truncation_degree\":4}\n");
    let stanley = run(&["gf", "stanley", "--shape", "1,1", "--series-degree", "4"]).1;
    assert_eq!(stanley, out);
    let pedestal = run(&["gf", "pedestal", "--shape", "1,1", "--series-degree", "4"]).1;
    assert_eq!(pedestal, out);
    let text = run(&[
        "gf",
        "xpart",
        "--shape",
        "2",
        "--series-degree",
        "3",
        "--format",
        "text",
    ])
    .1;
    assert_eq!(text, "1 + q + 2*q^2 + 2*q^3 + O(q^4)\n");
}

#[test]
fn eigen_report_names_the_eigenvalues() {
    let (code, out, _) = run(&["verify", "eigen", "--shape", "3,2", "--format", "text"]);
    assert_eq!(code, 0);
    for e in [
        "1 + q + q^2 + q^3 + q^4",
        "1 - q^2",
        "1 - q - q^3 + q^4",
        "1 + q - q^3 - q^4",
        "1 - q + q^3 - q^4",
    ] {
        assert!(out.contains(&format!("eigenvalue {e} =")), "{e} missing from {out}");
    }
}

#[test]
fn matrix_against_reference() {
    let (code, out, _) = run(&[
        "matrix",
        "--shape",
        "3,2",
        "--reference",
        &data("reference_matrix_3_2.json"),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("\"reference_permutation\":[4,2,3,1,0]"), "{out}");
    assert!(out.contains("\"dim\":5"));
    let (code, out, _) = run(&[
        "matrix",
        "--shape",
        "2,2",
        "--reference",
        &data("reference_matrix_3_2.json"),
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("\"reference_permutation\":null"));
}

#[test]
fn poset_file_inputs() {
    let diamond = data("posets/diamond.json");
    assert_eq!(run(&["syt", "count", "--poset", &diamond]).1, "2\n");
    let (code, out, _) = run(&["pedestal", "polynomial", "--poset", &diamond]);
    assert_eq!(code, 0);
    assert!(out.contains("\"polynomial\":{\"coeffs\":[1,0,1]}"), "{out}");
    assert!(out.contains("\"shift\":4"), "{out}");
    assert_eq!(run(&["verify", "pedestal-independence", "--poset", &diamond]).0, 0);
    assert_eq!(run(&["eigen", "--poset", &diamond]).0, 0);
    let dir = data("posets");
    let (code, out, _) = run(&["verify", "pedestal-independence", "--poset", &dir]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn rsk_verbs() {
    let (code, out, _) = run(&["rsk", "insert", "--perm", "2,3,1", "--format", "text"]);
    assert_eq!(code, 0);
    assert_eq!(out, "P: 1 3 / 2\nQ: 1 2 / 3\n");
    let out = run(&["rsk", "sch", "--shape", "2,1", "--format", "text"]).1;
    assert_eq!(out, "1 2 / 3 -> 1 3 / 2\n1 3 / 2 -> 1 2 / 3\n");
}

#[test]
fn verification_failure_exits_one_with_replayable_case() {
    let (code, out, _) = run(&["verify", "mahonian-row-filter", "--shape", "2,2/1"]);
    assert_eq!(code, 1);
    assert!(out.contains("\"case\":\"2,2/1\""));
    assert!(out.contains("\"passed\":false"));
}

#[test]
fn input_errors_exit_two() {
    for args in [
        &["syt", "count", "--shape", "2,3"][..],
        &["syt", "count"],
        &["verify", "nope"],
        &["gf", "nope", "--shape", "1"],
        &["frobnicate"],
        &["syt", "--shape", "1", "--poset", "x.json"],
        &["verify", "stanley", "--poset", "missing.json"],
        &["rsk", "insert", "--perm", "1,1"],
        &["pedestal", "--poset", "x.json", "--filter", "row"],
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }
}

#[test]
fn output_is_byte_stable() {
    let args = ["verify", "minimal-element", "--max-cells", "4", "--seed", "7"];
    assert_eq!(run(&args), run(&args));
    let args = ["eigen", "--shape", "3,1,1"];
    assert_eq!(run(&args), run(&args));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_pedestal-lab");
    let ok = Command::new(bin)
        .args(["syt", "count", "--shape", "3,2"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(ok.stdout, b"5\n");
    let bad = Command::new(bin)
        .args(["syt", "count", "--shape", "x"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let help = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
}
