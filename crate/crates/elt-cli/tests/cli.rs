//! Black-box tests of the binary: exit codes, determinism, and the report
//! round trip.

use std::path::PathBuf;
use std::process::{Command, Output};

fn elt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_elt"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("elt-cli-test-{}-{name}", std::process::id()));
    path
}

const C7: &str = "FhCKG";

#[test]
fn analyze_inline_exits_clean() {
    let out = elt(&["analyze", "--inline", C7, "--no-timing"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("alpha=3"));
    assert!(stdout.contains("split (2, 2)"));
}

#[test]
fn analyze_rejects_bad_word() {
    let out = elt(&["analyze", "--inline", "not a graph6 word"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_corpus_is_an_io_error() {
    let out = elt(&["verify-lemma", "--corpus", "/nonexistent/corpus.g6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn corpus_with_bad_line_reports_the_line() {
    let corpus = tmp("bad.g6");
    std::fs::write(&corpus, "A_\n~oops\n").unwrap();
    let out = elt(&["verify-lemma", "--corpus", corpus.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    std::fs::remove_file(&corpus).ok();
}

#[test]
fn gen_verify_roundtrip_is_deterministic() {
    let corpus = tmp("lemma.g6");
    let r1 = tmp("r1.json");
    let r2 = tmp("r2.json");
    let out = elt(&[
        "gen",
        "lemma",
        "--alpha",
        "3",
        "--count",
        "12",
        "--seed",
        "7",
        "--out",
        corpus.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    for path in [&r1, &r2] {
        let out = elt(&[
            "verify-lemma",
            "--corpus",
            corpus.to_str().unwrap(),
            "--format",
            "json",
            "--no-timing",
            "--seed",
            "7",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    let a = std::fs::read(&r1).unwrap();
    let b = std::fs::read(&r2).unwrap();
    assert_eq!(a, b, "reports differ between identical runs");

    // reload and re-validate every embedded certificate
    let out = elt(&[
        "report",
        "--input",
        r1.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(String::from_utf8_lossy(&out.stderr).contains("0 failures"));

    for path in [&corpus, &r1, &r2] {
        std::fs::remove_file(path).ok();
    }
}

#[test]
fn verify_theorem_on_generated_random_corpus() {
    let corpus = tmp("random.g6");
    let out = elt(&[
        "gen",
        "random",
        "--n",
        "9",
        "--p",
        "0.4",
        "--count",
        "40",
        "--seed",
        "3",
        "--out",
        corpus.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = elt(&[
        "verify-theorem",
        "--corpus",
        corpus.to_str().unwrap(),
        "--no-timing",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("summary: parsed=40"));
    assert!(stdout.contains("flagged=0"));
    std::fs::remove_file(&corpus).ok();
}

#[test]
fn empty_corpus_gives_zero_counts() {
    let corpus = tmp("empty.g6");
    std::fs::write(&corpus, "# nothing here\n\n").unwrap();
    let out = elt(&[
        "verify-theorem", "--corpus", corpus.to_str().unwrap(), "--no-timing", "--jobs", "1",
    ]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("summary: parsed=0 skipped=0 hypothesis_passers=0 certified=0 flagged=0"));
    std::fs::remove_file(&corpus).ok();
}

#[test]
fn gen_all_counts_and_canonical_counts() {
    let out = elt(&["gen", "all", "--n", "4"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 64);

    let out = elt(&["gen", "canonical", "--n", "6", "--exact"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 156);
}

#[test]
fn edge_list_input_is_detected() {
    let input = tmp("path.edges");
    std::fs::write(&input, "4 3\n0 1\n1 2\n2 3\n").unwrap();
    let out = elt(&["analyze", "--input", input.to_str().unwrap(), "--no-timing"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("n=4 m=3"));
    assert!(stdout.contains("perfect: yes"));
    std::fs::remove_file(&input).ok();
}

#[test]
fn tampered_report_fails_revalidation() {
    let corpus = tmp("c7.g6");
    let saved = tmp("tamper.json");
    std::fs::write(&corpus, format!("{C7}\n")).unwrap();
    let out = elt(&[
        "verify-theorem",
        "--corpus",
        corpus.to_str().unwrap(),
        "--format",
        "json",
        "--no-timing",
        "--out",
        saved.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    // corrupt an embedded certificate: move a vertex across the split
    let text = std::fs::read_to_string(&saved).unwrap();
    let tampered = text.replace(
        "\"s_side\": [\n              0,\n              1\n            ]",
        "\"s_side\": [\n              0,\n              2\n            ]",
    );
    assert_ne!(text, tampered, "tamper target not found in report");
    std::fs::write(&saved, tampered).unwrap();
    let out = elt(&["report", "--input", saved.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    for path in [&corpus, &saved] {
        std::fs::remove_file(path).ok();
    }
}
