//! Acceptance suite: one test per criterion, each printing its pass/fail
//! line (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Criterion 8 asserts the second-difference trace certificate in its
//! printed form.  That form is provably violated by any function with a
//! nonzero linear dyadic mode (the mode contributes t/2^(m+k), which c/4^k
//! cannot dominate once k − m grows), so the test is expected to stay red;
//! the exact-coefficient certificate that the traces do satisfy is asserted
//! separately below.

use kannappan::verify::{self, CriterionOutcome};

fn check(outcome: kannappan::Result<CriterionOutcome>) {
    let o = outcome.expect("criterion must run to completion");
    println!("{}", o.line());
    assert!(
        o.passed,
        "criterion {} ({}) failed: {} [{} ms of {} ms budget]",
        o.id, o.name, o.details, o.elapsed_ms, o.budget_ms
    );
}

#[test]
fn criterion_01_instability_witness() {
    check(verify::criterion_1());
}

#[test]
fn criterion_02_counter_defect_bound() {
    check(verify::criterion_2());
}

#[test]
fn criterion_03_superadditivity_window() {
    check(verify::criterion_3());
}

#[test]
fn criterion_04_doubling_equals_brute_force() {
    check(verify::criterion_4());
}

#[test]
fn criterion_05_nfold_inequality() {
    check(verify::criterion_5());
}

#[test]
fn criterion_06_power_and_square_compose_bounds() {
    check(verify::criterion_6());
}

#[test]
fn criterion_07_limit_homogeneity_laws() {
    check(verify::criterion_7());
}

#[test]
fn criterion_08_trace_certificate_printed_form() {
    check(verify::criterion_8());
}

/// Companion to criterion 8: the inequality the hat traces actually
/// satisfy, with the finite-n coefficients of the power inequality kept in
/// place.  This is the certificate that justifies convergence; it holds on
/// every recorded pair for every corpus point.
#[test]
fn criterion_08_companion_exact_coefficient_certificate() {
    use kannappan::limits::{
        exact_second_difference_certificate, hat_limit_iterative, LimitParams,
    };
    use kannappan::realfn::RealFn;
    use kannappan::value::Value;
    use kannappan::Element;

    let eta = RealFn::eta();
    let params = LimitParams {
        n_max: 26,
        tol: 0.0,
    };
    let c = Value::from_int(5);
    for w in ["aabb", "bbaa", "aabbaabbaabb", "abab", "babbaab", "aabbab"] {
        let hat = hat_limit_iterative(&eta, &Element::word(w), &params).unwrap();
        let cert = exact_second_difference_certificate(&hat.trace, &c, 20);
        println!(
            "exact-coefficient certificate at {w}: sup = {} over {} pairs",
            cert.max_normalized, cert.pairs
        );
        assert!(cert.holds, "exact certificate failed at {w}");
    }
}

#[test]
fn criterion_09_decomposition_reconstruction() {
    check(verify::criterion_9());
}

#[test]
fn criterion_10_periodic_collapse() {
    check(verify::criterion_10());
}

#[test]
fn criterion_11_abelian_probe_fit() {
    check(verify::criterion_11());
}

#[test]
fn criterion_12_noisy_quadratic_recovery() {
    check(verify::criterion_12());
}

#[test]
fn criterion_13_zero_adjunction_identity() {
    check(verify::criterion_13());
}

#[test]
fn criterion_14_wreath_identities() {
    check(verify::criterion_14());
}

#[test]
fn criterion_15_quadratic_exchange_residuals() {
    check(verify::criterion_15());
}
