//! One test per acceptance criterion. Each prints its `[PASS]`/`[FAIL]`
//! line straight to stdout, so the lines show up even when output is captured.

use std::io::Write;

use dpcascade::acceptance::run_criterion;

fn criterion(n: u8) {
    let report = run_criterion(n).expect("known criterion");
    let mut out = std::io::stdout().lock();
    writeln!(out, "{report}").unwrap();
    for f in &report.failures {
        writeln!(out, "    failed: {f}").unwrap();
    }
    for note in &report.notes {
        writeln!(out, "    note: {note}").unwrap();
    }
    drop(out);
    assert!(report.passed, "criterion {n}: {} failures", report.failures.len());
}

#[test]
fn ac01_root_counts() {
    criterion(1);
}

#[test]
fn ac02_root_types() {
    criterion(2);
}

#[test]
fn ac03_index_of_connectedness() {
    criterion(3);
}

#[test]
fn ac04_hilbert_numerators() {
    criterion(4);
}

#[test]
fn ac05_laurent_inversion() {
    criterion(5);
}

#[test]
fn ac06_quasismoothness() {
    criterion(6);
}

#[test]
fn ac07_polygon_invariants() {
    criterion(7);
}

#[test]
fn ac08_mutations_and_quivers() {
    criterion(8);
}

#[test]
fn ac09_property_suites() {
    criterion(9);
}
