//! Acceptance gate: one test per criterion, each printing a pass/fail line.
//! Run with `--nocapture` to see the lines for passing criteria too.

use std::path::PathBuf;

use toricdeg_cli::accept;

const SEED: u64 = 42;

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn gate(label: &str, name: &str, result: Result<String, String>) {
    match result {
        Ok(detail) => println!("criterion {label} ({name}): pass — {detail}"),
        Err(detail) => {
            println!("criterion {label} ({name}): FAIL — {detail}");
            panic!("criterion {label} failed: {detail}");
        }
    }
}

fn check(label: &str) {
    let o = accept::run_criterion(label, SEED, 4).expect("criterion exists");
    gate(
        &o.label,
        o.name,
        if o.passed {
            Ok(o.detail.clone())
        } else {
            Err(o.detail.clone())
        },
    );
}

#[test]
fn criterion_01_theorem_main_equality() {
    check("1");
}

#[test]
fn criterion_02_numerical_betti_sets() {
    check("2");
}

#[test]
fn criterion_03_scroll_basis_and_betti() {
    check("3");
}

#[test]
fn criterion_04_saturation_dichotomy() {
    check("4");
}

#[test]
fn criterion_05_interval_family_cases() {
    check("5");
}

#[test]
fn criterion_06_betti_lifting_and_bound() {
    check("6");
}

#[test]
fn criterion_07_approximation_certificates() {
    check("7");
}

#[test]
fn criterion_08_moebius_agreement() {
    check("8");
}

#[test]
fn criterion_09_lawrence_unique_presentation() {
    check("9");
}

#[test]
fn criterion_10_oracle_sweeps() {
    check("10");
}

#[test]
fn corpus_matches_sidecars() {
    for (name, result) in accept::check_corpus(&corpus_dir()).expect("corpus readable") {
        gate(&format!("corpus:{name}"), "sidecar agreement", result.map(|()| "ok".into()));
    }
}
