//! One test per release criterion. Each runs a verification suite at the
//! bounds the criterion demands and prints a single pass/fail line, so the
//! test list doubles as the release checklist.

use hopfgraph::verify::{run_suite, CheckStatus, RunReport, SuiteParams};

fn run(criterion: &str, suite: &str, max_vertices: usize, max_edges: usize) -> RunReport {
    let params = SuiteParams { max_vertices, max_edges };
    let report = run_suite(suite, &params).expect("suite name is known");
    let status = if report.passed { "PASS" } else { "FAIL" };
    println!(
        "{criterion}: {status} ({suite} suite, n <= {max_vertices}, |E| <= {max_edges}, {} ms)",
        report.total_millis
    );
    for check in report.checks.iter().filter(|c| c.status == CheckStatus::Fail) {
        println!(
            "  failing check {}: {} (counterexample {:?})",
            check.name, check.detail, check.counterexample
        );
    }
    assert!(report.passed, "{criterion} failed");
    report
}

fn assert_ran(report: &RunReport, names: &[&str]) {
    for name in names {
        let check = report
            .checks
            .iter()
            .find(|c| c.name == *name)
            .unwrap_or_else(|| panic!("check {name} missing from suite {}", report.suite));
        assert_eq!(check.status, CheckStatus::Pass, "check {name} did not pass");
    }
}

#[test]
fn criterion_01_axiom_suite() {
    let report = run("criterion 01", "axioms", 5, 15);
    assert_ran(
        &report,
        &[
            "bipartition-coassociative",
            "bipartition-cocommutative",
            "bipartition-counits",
            "contraction-coassociative",
            "contraction-counits",
            "coproduct-compatibility",
        ],
    );
}

#[test]
fn criterion_02_antipode_equivalence() {
    let report = run("criterion 02", "antipode", 6, 10);
    assert_ran(&report, &["antipode-orientation-formula"]);
}

#[test]
fn criterion_03_tutte_oracle() {
    let report = run("criterion 03", "specializations", 6, 15);
    assert_ran(&report, &["tutte-oracle-equivalence"]);
}

#[test]
fn criterion_04_zeta_factorizations() {
    let report = run("criterion 04", "morphisms", 5, 15);
    assert_ran(&report, &["zeta-factorizations"]);
}

#[test]
fn criterion_05_specializations() {
    let report = run("criterion 05", "specializations", 6, 15);
    assert_ran(
        &report,
        &[
            "partition-function-at-minus-one",
            "partition-function-at-zero",
            "tutte-covering-count",
            "tutte-covering-forest-count",
            "tutte-spanning-forest-count",
            "tutte-strong-orientation-count",
            "stanley-acyclic-count",
        ],
    );
}

#[test]
fn criterion_06_coloring_identities() {
    let report = run("criterion 06", "colorings", 5, 15);
    assert_ran(
        &report,
        &["pair-count-identity", "pair-signed-identity", "opc-identities"],
    );
}

#[test]
fn criterion_07_character_identities() {
    let report = run("criterion 07", "orientations", 5, 15);
    assert_ran(
        &report,
        &[
            "mu0-star-inverse",
            "mu-factorization",
            "alpha-bipartition-inverse",
            "strong-character-inverse",
        ],
    );
}

#[test]
fn criterion_08_theta_morphism() {
    let report = run("criterion 08", "morphisms", 5, 15);
    assert_ran(&report, &["theta-bipartition-morphism", "theta-contraction-defect"]);
}

#[test]
fn criterion_09_universal_morphism() {
    let report = run("criterion 09", "morphisms", 5, 15);
    assert_ran(&report, &["chromatic-universal", "counit-section"]);
}

#[test]
fn criterion_10_z_antipode() {
    let report = run("criterion 10", "orientations", 5, 15);
    assert_ran(&report, &["z-antipode-identity"]);
}
