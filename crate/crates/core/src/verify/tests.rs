use super::*;
use crate::wha::{CrossingSign, RFormReading};

fn all_checks() -> Vec<&'static Check> {
    registry().iter().collect()
}

fn run(level: u32, names: &[&str], samples: usize, seed: u64) -> VerificationReport {
    let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    let checks = resolve(&names).unwrap();
    let ctx = Context::for_level(level, Conventions::default()).unwrap();
    run_suite(&ctx, &default_specs(&checks, level, samples, seed)).unwrap()
}

#[test]
fn registry_names_are_unique_and_sorted() {
    let names: Vec<&str> = registry().iter().map(|c| c.name).collect();
    assert!(names.windows(2).all(|w| w[0] < w[1]));
    assert!(names.iter().all(|n| n.contains('.')));
    for suite in [
        "recoupling",
        "wba",
        "wha",
        "structure",
        "coquasi",
        "coribbon",
        "pivotal",
        "modularity",
        "comodule",
    ] {
        assert!(suite_names().contains(&suite), "{suite}");
    }
}

#[test]
fn everything_holds_at_level_two() {
    let ctx = Context::for_level(2, Conventions::default()).unwrap();
    let report = run_suite(&ctx, &default_specs(&all_checks(), 2, 50, 7)).unwrap();
    let failed: Vec<String> = report.failures().map(|c| c.check.clone()).collect();
    assert!(failed.is_empty(), "{failed:?}");
    assert!(report.checks.iter().all(|c| c.scope == Scope::Exhaustive));
}

#[test]
fn algebraic_suites_hold_exhaustively_at_level_three() {
    let report = run(
        3,
        &["wba", "wha", "structure", "coquasi", "coribbon"],
        100,
        1,
    );
    for c in &report.checks {
        assert_eq!(c.status, Status::Pass, "{}: {:?}", c.check, c.witness);
        assert_eq!(c.scope, Scope::Exhaustive);
    }
    assert_eq!(report.get("wba.associativity").unwrap().cases, 8 * 8 * 8);
}

#[test]
fn sampled_scope_at_level_five() {
    let report = run(5, &["wba.associativity", "wba.eq_wba2"], 500, 42);
    for c in &report.checks {
        assert_eq!(c.status, Status::Pass, "{}", c.check);
        assert_eq!(
            c.scope,
            Scope::Sampled {
                count: 500,
                seed: 42
            }
        );
        assert_eq!(c.cases, 500);
    }
}

#[test]
fn literal_pivotal_orientation_fails_from_level_four() {
    // At r = 3 every quantum dimension is 1 and both orientations agree.
    let report = run(3, &["pivotal"], 100, 1);
    assert!(report.all_passed());
    let report = run(4, &["pivotal"], 100, 1);
    let literal = report.get("pivotal.eq_pivotal").unwrap();
    assert_eq!(literal.status, Status::Fail);
    let witness = literal.witness.as_ref().unwrap();
    assert_eq!(witness.case, "([01|01]_1)");
    assert_eq!(
        report.get("pivotal.conjugation").unwrap().status,
        Status::Pass
    );
    assert_eq!(
        report.get("pivotal.drinfeld_elements").unwrap().status,
        Status::Pass
    );
}

#[test]
fn reports_are_deterministic() {
    let a = run(4, &["coribbon", "wha.eq_wha2"], 40, 9);
    let b = run(4, &["coribbon", "wha.eq_wha2"], 40, 9);
    assert_eq!(a.payload_json(), b.payload_json());
    let c = run(4, &["coribbon", "wha.eq_wha2"], 40, 10);
    assert_eq!(c.checks.len(), a.checks.len());
}

#[test]
fn unknown_names_are_rejected() {
    assert!(matches!(
        find_check("wha.nope"),
        Err(Error::UnknownCheck(_))
    ));
    assert!(matches!(
        resolve(&["bogus".to_string()]),
        Err(Error::UnknownCheck(_))
    ));
    let ctx = Context::for_level(2, Conventions::default()).unwrap();
    let spec = CheckSpec {
        name: "wba.unit".into(),
        scope: Scope::Exhaustive,
        level: 3,
    };
    assert!(matches!(
        run_suite(&ctx, &[spec]),
        Err(Error::LevelMismatch(3, 2))
    ));
}

#[test]
fn suite_prefix_expands() {
    let checks = resolve(&["coribbon".to_string(), "coribbon.eq_coribbon1".to_string()]).unwrap();
    assert!(checks.len() >= 4);
    assert!(checks.iter().all(|c| c.suite() == "coribbon"));
}

#[test]
fn oracles_are_skipped_beyond_their_range() {
    let report = run(6, &["recoupling.tet_oracle"], 10, 1);
    let c = &report.checks[0];
    assert_eq!(c.status, Status::Skipped);
    assert!(report.all_passed());
}

#[test]
fn inner_strand_reading_is_rejected() {
    let conv = Conventions {
        crossing: CrossingSign::Positive,
        reading: RFormReading::InnerStrand,
    };
    let ctx = Context::for_level(3, conv).unwrap();
    let checks = resolve(&["coquasi".to_string()]).unwrap();
    let report = run_suite(&ctx, &default_specs(&checks, 3, 100, 1)).unwrap();
    assert!(!report.all_passed());
    let f = report.failures().next().unwrap();
    assert!(f.witness.is_some());
}

#[test]
fn conventions_pin_to_positive_trace_strand() {
    let pinned = pin_conventions(3).unwrap();
    assert_eq!(pinned.conventions, Conventions::default());
    // r = 3 leaves the mirror crossing alive; r = 4 separates them.
    assert_eq!(pinned.resolved_at, 4);
}
