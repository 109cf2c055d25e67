use preinforce::family::{build_block, BlockKind};
use preinforce::verifier::{
    figure1_values, run_theorem_suite, run_theorem_suite_with, structural_property_checks,
    CheckStatus, SuiteOptions, CLAIMS,
};
use preinforce::Error;

#[test]
fn suite_examples() {
    for (claim, p, n) in [
        ("thm-1.2", 2, 12),
        ("thm-2.2", 2, 9),
        ("thm-4.4", 3, 12),
        ("thm-3.2", 3, 12),
    ] {
        let report = run_theorem_suite(claim, p, n, 2).unwrap();
        assert!(report.passed(), "{claim}: {:?}", report.violations);
        assert!(report.checked > 0);
    }
}

#[test]
fn structural_checks_on_blocks() {
    for (kind, t) in [
        (BlockKind::F, None),
        (BlockKind::Ft, Some(3)),
        (BlockKind::DoubleStar, None),
    ] {
        let block = build_block(kind, 3, t).unwrap();
        let checks = structural_property_checks(&block.tree, 3).unwrap();
        assert!(!checks.is_empty());
        for c in &checks {
            assert!(
                matches!(c.status, CheckStatus::Pass | CheckStatus::Vacuous),
                "{kind:?}: {c:?}"
            );
        }
        assert!(checks
            .iter()
            .any(|c| c.claim == "thm-3.3" && c.status == CheckStatus::Pass));
    }
}

#[test]
fn figure1_component_counts() {
    let v = figure1_values().unwrap();
    assert_eq!((v.set_in_t1, v.set_in_t2), (7, 9));
    assert_eq!((v.d_in_t1, v.d_in_t2), (8, 8));
    assert_eq!(v.lemma_status, CheckStatus::ExpectedCounterexample);
}

#[test]
fn reports_are_reproducible() {
    let one = run_theorem_suite("thm-2.4", 2, 9, 1).unwrap();
    let two = run_theorem_suite("thm-2.4", 2, 9, 3).unwrap();
    assert_eq!(one.to_json_without_timing(), two.to_json_without_timing());

    let opts = SuiteOptions {
        seed: 5,
        samples: 30,
        ..Default::default()
    };
    let a = run_theorem_suite_with("thm-2.2-graphs", 2, 7, &opts).unwrap();
    let b =
        run_theorem_suite_with("thm-2.2-graphs", 2, 7, &SuiteOptions { jobs: 2, ..opts }).unwrap();
    assert_eq!(a.to_json_without_timing(), b.to_json_without_timing());
    assert_eq!(a.checked, 30);
}

#[test]
fn report_json_shape() {
    let report = run_theorem_suite("thm-4.4", 3, 10, 1).unwrap();
    let value: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    for key in [
        "claim",
        "p",
        "n_max",
        "checked",
        "violations",
        "census",
        "elapsed_ms",
    ] {
        assert!(value.get(key).is_some(), "{key}");
    }
    assert_eq!(value["census"]["7"], 1);
    assert_eq!(value["census"]["10"], 2);
}

#[test]
fn bad_requests() {
    assert!(matches!(
        run_theorem_suite("thm-9.9", 3, 8, 1),
        Err(Error::UnknownClaim(_))
    ));
    assert!(run_theorem_suite("thm-4.4", 2, 8, 1).is_err());
    assert!(matches!(
        run_theorem_suite("thm-2.2", 2, 40, 1),
        Err(Error::GuardExceeded { .. })
    ));
    assert!(CLAIMS.contains(&"figure-1"));
}
