//! Acceptance run: one PASS/FAIL line per criterion, everything exact in Q(A).
//!
//! Run with `cargo test -p wha-core --test acceptance`.

use std::sync::Arc;
use std::time::{Duration, Instant};

use wha_core::export::Section;
use wha_core::linalg::Matrix;
use wha_core::recoupling::{labels, oracle};
use wha_core::verify::{
    default_specs, resolve, run_suite, CheckResult, CheckSpec, Context, Scope, Status,
    VerificationReport, DEFAULT_SAMPLES, DEFAULT_SEED,
};
use wha_core::{Conventions, ExportDocument, WhaAlgebra};

/// Criteria that cannot hold as stated. They are still evaluated and printed;
/// the test fails if one of them unexpectedly starts passing, so the list
/// stays honest.
const KNOWN_UNATTAINABLE: &[u32] = &[7];

type Criterion = (u32, &'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn context(level: u32) -> Context {
    Context::for_level(level, Conventions::default()).unwrap()
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// Runs the named checks (or suites) at `level`, exhaustively or with the
/// default sampled scope.
fn run(level: u32, list: &[&str], exhaustive: bool) -> Vec<CheckResult> {
    let checks = resolve(&names(list)).unwrap();
    let specs: Vec<CheckSpec> = if exhaustive {
        checks
            .iter()
            .map(|c| CheckSpec {
                name: c.name.to_string(),
                scope: Scope::Exhaustive,
                level,
            })
            .collect()
    } else {
        default_specs(&checks, level, DEFAULT_SAMPLES, DEFAULT_SEED)
    };
    run_suite(&context(level), &specs).unwrap().checks
}

/// Passes only when every result is a genuine pass (skips count against it).
fn summarize(
    results: &[(u32, CheckResult)],
    elapsed: Duration,
    budget: Option<Duration>,
) -> Outcome {
    let mut cases = 0;
    let mut bad = Vec::new();
    for (r, c) in results {
        cases += c.cases;
        if c.status != Status::Pass {
            let why = match (&c.witness, &c.reason) {
                (Some(w), _) => format!("{} != {} at {}", w.lhs, w.rhs, w.case),
                (None, Some(reason)) => reason.clone(),
                _ => String::new(),
            };
            bad.push(format!("r={r} {} {:?}: {why}", c.check, c.status));
        }
    }
    let in_time = budget.is_none_or(|b| elapsed <= b);
    let mut detail = format!(
        "{} checks, {cases} cases, {:.1}s",
        results.len(),
        elapsed.as_secs_f64()
    );
    if !in_time {
        detail.push_str(&format!(" (budget {:?} exceeded)", budget.unwrap()));
    }
    if let Some(first) = bad.first() {
        detail.push_str(&format!("; {} failing, first: {first}", bad.len()));
    }
    Outcome {
        passed: bad.is_empty() && in_time,
        detail,
    }
}

fn over_levels(
    levels: impl IntoIterator<Item = u32>,
    list: &[&str],
    exhaustive_through: u32,
    budget: Option<Duration>,
) -> Outcome {
    let start = Instant::now();
    let mut all = Vec::new();
    for r in levels {
        for c in run(r, list, r <= exhaustive_through) {
            all.push((r, c));
        }
    }
    summarize(&all, start.elapsed(), budget)
}

fn oracle_agreement() -> Outcome {
    let list = ["recoupling.dim_oracle", "recoupling.theta_oracle"];
    over_levels(2..=6, &list, 6, Some(Duration::from_secs(60)))
}

fn pentagon_and_orthogonality() -> Outcome {
    let start = Instant::now();
    let mut all = Vec::new();
    for r in 2..=4 {
        for c in run(
            r,
            &["recoupling.pentagon", "recoupling.orthogonality"],
            true,
        ) {
            all.push((r, c));
        }
    }
    for r in 2..=6 {
        for c in run(r, &["recoupling.ribbon_relation"], true) {
            all.push((r, c));
        }
    }
    summarize(&all, start.elapsed(), None)
}

fn sampled_regime(list: &[&str], budget: Option<Duration>) -> Outcome {
    let start = Instant::now();
    let mut all = Vec::new();
    for r in 2..=6 {
        // Above r = 4 the default scope samples 500 distinct tuples with the fixed seed.
        for c in run(r, list, r <= 4) {
            all.push((r, c));
        }
    }
    summarize(&all, start.elapsed(), budget)
}

fn wba_axioms() -> Outcome {
    sampled_regime(&["wba"], Some(Duration::from_secs(300)))
}

fn wha_axioms() -> Outcome {
    sampled_regime(&["wha"], Some(Duration::from_secs(300)))
}

fn structural_facts() -> Outcome {
    over_levels(2..=6, &["structure"], 6, None)
}

fn coquasi_and_coribbon() -> Outcome {
    over_levels(2..=5, &["coquasi", "coribbon"], 3, None)
}

fn pivotal_identity() -> Outcome {
    over_levels(2..=4, &["pivotal.eq_pivotal"], 4, None)
}

fn modularity() -> Outcome {
    let start = Instant::now();
    let mut all = Vec::new();
    let mut mismatch = None;
    for r in 2..=6 {
        for c in run(r, &["modularity.determinant"], true) {
            all.push((r, c));
        }
        // Proportionality against Hopf links evaluated as Temperley-Lieb nets.
        let alg = WhaAlgebra::new(r).unwrap();
        let qt = alg.qtilde_matrix();
        let n = qt.rows();
        let mut s = Matrix::zeros(r, n, n);
        for i in labels(r) {
            for j in labels(r) {
                s[(i as usize, j as usize)] = oracle::hopf_link(r, i, j).unwrap();
            }
        }
        let c = &qt[(0, 0)] * &s[(0, 0)].inv().unwrap();
        if c.is_zero() || qt != s.scale(&c) {
            mismatch.get_or_insert(r);
        }
    }
    let mut out = summarize(&all, start.elapsed(), None);
    match mismatch {
        Some(r) => {
            out.passed = false;
            out.detail.push_str(&format!(
                "; q̃ not proportional to the Hopf-link matrix at r={r}"
            ));
        }
        None => out
            .detail
            .push_str("; q̃ proportional to the Hopf-link matrix at r=2..6"),
    }
    out
}

fn comodule_layer() -> Outcome {
    let list = [
        "comodule.coaction",
        "comodule.unit_coaction",
        "comodule.idempotent",
        "comodule.braiding_invertible",
        "comodule.triangle",
        "comodule.trace_dimension",
    ];
    over_levels(2..=5, &list, 5, None)
}

fn build_bytes(level: u32) -> String {
    let alg = WhaAlgebra::new(level).unwrap();
    ExportDocument::from_algebra(&alg, &Section::all()).to_json()
}

fn report(ctx: &Context, level: u32, seed: u64) -> VerificationReport {
    let list = names(&["wba", "wha", "coribbon", "coquasi.eq_coquasidef"]);
    let checks = resolve(&list).unwrap();
    let specs = default_specs(&checks, level, 200, seed);
    run_suite(ctx, &specs).unwrap()
}

fn determinism() -> Outcome {
    let mut problems = Vec::new();
    for r in [3, 4] {
        let a = build_bytes(r);
        let b = build_bytes(r);
        if a != b {
            problems.push(format!("r={r} build output differs between runs"));
        }
        let doc = ExportDocument::from_json(&a).unwrap();
        if doc.to_json() != a {
            problems.push(format!("r={r} export does not round-trip"));
        }
        let loaded = Arc::new(doc.to_algebra().unwrap());
        let fresh = WhaAlgebra::new(r).unwrap();
        if loaded.tables() != fresh.tables() || loaded.form_tables() != fresh.form_tables() {
            problems.push(format!("r={r} reloaded tables differ"));
        }
        let seed = 1234;
        let memory = report(&context(r), r, seed).payload_json();
        let again = report(&context(r), r, seed).payload_json();
        let from_file = report(&Context::new(loaded), r, seed).payload_json();
        if memory != again {
            problems.push(format!("r={r} reports differ for the same seed"));
        }
        if memory != from_file {
            problems.push(format!("r={r} report over reloaded tables differs"));
        }
    }
    let sampled =
        report(&context(5), 5, 99).payload_json() == report(&context(5), 5, 99).payload_json();
    if !sampled {
        problems.push("r=5 sampled reports differ for the same seed".into());
    }
    Outcome {
        passed: problems.is_empty(),
        detail: if problems.is_empty() {
            "byte-identical builds, lossless round trip, stable reports at r=3,4,5".into()
        } else {
            problems.join("; ")
        },
    }
}

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "recoupling oracle agreement", oracle_agreement),
        (
            2,
            "pentagon, orthogonality, ribbon relation",
            pentagon_and_orthogonality,
        ),
        (3, "weak bialgebra axioms", wba_axioms),
        (4, "weak Hopf algebra axioms", wha_axioms),
        (5, "structural facts", structural_facts),
        (
            6,
            "coquasitriangular and coribbon axioms",
            coquasi_and_coribbon,
        ),
        (
            7,
            "pivotal identity S^2 = w_bar(x') x'' w(x''')",
            pivotal_identity,
        ),
        (8, "modularity", modularity),
        (9, "comodule layer", comodule_layer),
        (10, "determinism", determinism),
    ];
    let mut unexpected = Vec::new();
    for (id, title, eval) in criteria {
        let out = eval();
        let tag = if out.passed { "PASS" } else { "FAIL" };
        println!("{tag} criterion {id:>2}: {title}: {}", out.detail);
        let expected = !KNOWN_UNATTAINABLE.contains(&id);
        if out.passed != expected {
            unexpected.push(id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("criteria with unexpected outcome: {unexpected:?}");
        std::process::exit(1);
    }
}
