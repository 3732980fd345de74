//! Named, addressable axiom checks and a deterministic suite runner.
//!
//! Every check evaluates one identity on a finite domain of cases (basis
//! tuples, label tuples or a single case) and compares both sides exactly in
//! `Q(A)`. A run is either exhaustive or a seeded sample of distinct cases.

mod checks;
mod report;

use std::sync::{Arc, OnceLock};
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::comodule::ComoduleCategory;
use crate::error::{Error, Result};
use crate::recoupling::{label_count, RecouplingTables};
use crate::wha::{shared_algebra, Conventions, Tensor2, WhaAlgebra};

pub use checks::registry;
pub use report::{CheckResult, Status, VerificationReport, Witness};

/// Default number of sampled cases.
pub const DEFAULT_SAMPLES: usize = 500;
pub const DEFAULT_SEED: u64 = 42;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Scope {
    Exhaustive,
    Sampled { count: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSpec {
    pub name: String,
    pub scope: Scope,
    pub level: u32,
}

/// Where the cases of a check come from.
#[derive(Clone, Copy)]
pub enum Domain {
    Single,
    /// Tuples of basis positions.
    Basis(usize),
    /// Tuples of positions inside the `j = 0` block.
    Minimal(usize),
    /// Tuples of labels.
    Labels(usize),
    /// An explicit list of label tuples.
    Tuples(fn(u32) -> Vec<Vec<usize>>),
}

/// `None` when the identity holds, otherwise both sides rendered exactly.
pub type Verdict = Option<(String, String)>;

pub struct Check {
    pub name: &'static str,
    pub domain: Domain,
    /// Highest level at which the default scope is exhaustive.
    pub exhaustive_through: u32,
    /// Levels above this are skipped (oracle evaluations that do not scale).
    pub max_level: Option<u32>,
    eval: fn(&Context, &[usize]) -> Result<Verdict>,
}

impl Check {
    pub fn default_scope(&self, level: u32, samples: usize, seed: u64) -> Scope {
        if level <= self.exhaustive_through {
            Scope::Exhaustive
        } else {
            Scope::Sampled {
                count: samples,
                seed,
            }
        }
    }

    pub fn suite(&self) -> &'static str {
        self.name.split('.').next().unwrap_or(self.name)
    }
}

type TupleCache = std::sync::Mutex<std::collections::HashMap<&'static str, Arc<Vec<Vec<usize>>>>>;

/// Shared state for a verification run over one algebra.
pub struct Context {
    alg: Arc<WhaAlgebra>,
    rec: Arc<RecouplingTables>,
    unit_coproduct: OnceLock<Tensor2>,
    comodules: OnceLock<ComoduleCategory>,
    tuples: OnceLock<TupleCache>,
}

impl Context {
    pub fn new(alg: Arc<WhaAlgebra>) -> Self {
        let rec = RecouplingTables::for_level(alg.level());
        Context {
            alg,
            rec,
            unit_coproduct: OnceLock::new(),
            comodules: OnceLock::new(),
            tuples: OnceLock::new(),
        }
    }

    /// Context over the shared algebra at `level`.
    pub fn for_level(level: u32, conventions: Conventions) -> Result<Self> {
        Ok(Self::new(shared_algebra(level, conventions)?))
    }

    pub fn algebra(&self) -> &WhaAlgebra {
        &self.alg
    }

    pub fn level(&self) -> u32 {
        self.alg.level()
    }

    pub fn tables(&self) -> &RecouplingTables {
        &self.rec
    }

    pub(crate) fn unit_coproduct(&self) -> &Tensor2 {
        self.unit_coproduct
            .get_or_init(|| self.alg.comultiply(&self.alg.unit()))
    }

    pub(crate) fn comodules(&self) -> &ComoduleCategory {
        self.comodules
            .get_or_init(|| ComoduleCategory::new(self.alg.clone()))
    }

    fn tuple_list(&self, check: &Check, f: fn(u32) -> Vec<Vec<usize>>) -> Arc<Vec<Vec<usize>>> {
        let map = self.tuples.get_or_init(Default::default);
        if let Some(v) = map.lock().unwrap().get(check.name) {
            return v.clone();
        }
        let v = Arc::new(f(self.level()));
        map.lock().unwrap().insert(check.name, v.clone());
        v
    }

    fn domain_size(&self, check: &Check) -> u64 {
        let base = |n: usize, k: usize| (n as u64).pow(k as u32);
        match check.domain {
            Domain::Single => 1,
            Domain::Basis(k) => base(self.alg.dim(), k),
            Domain::Minimal(k) => base(self.alg.minimal_subalgebra().len(), k),
            Domain::Labels(k) => base(label_count(self.level()), k),
            Domain::Tuples(f) => self.tuple_list(check, f).len() as u64,
        }
    }

    /// Decodes case `index` into the tuple handed to the check.
    fn case(&self, check: &Check, index: u64) -> Vec<usize> {
        let digits = |n: usize, k: usize| {
            let mut out = vec![0; k];
            let mut rest = index;
            for slot in out.iter_mut().rev() {
                *slot = (rest % n as u64) as usize;
                rest /= n as u64;
            }
            out
        };
        match check.domain {
            Domain::Single => Vec::new(),
            Domain::Basis(k) => digits(self.alg.dim(), k),
            Domain::Minimal(k) => {
                let block = self.alg.minimal_subalgebra();
                digits(block.len(), k)
                    .into_iter()
                    .map(|i| block[i])
                    .collect()
            }
            Domain::Labels(k) => digits(label_count(self.level()), k),
            Domain::Tuples(f) => self.tuple_list(check, f)[index as usize].clone(),
        }
    }

    fn describe_case(&self, check: &Check, case: &[usize]) -> String {
        match check.domain {
            Domain::Single => "()".to_string(),
            Domain::Basis(_) | Domain::Minimal(_) => {
                let parts: Vec<String> = case
                    .iter()
                    .map(|&i| format!("{:?}", self.alg.basis_vector(i)))
                    .collect();
                format!("({})", parts.join(", "))
            }
            Domain::Labels(_) | Domain::Tuples(_) => format!("{case:?}"),
        }
    }

    fn evaluate(&self, check: &Check, case: &[usize]) -> Verdict {
        match (check.eval)(self, case) {
            Ok(v) => v,
            Err(e) => Some((format!("error: {e}"), "(no value)".to_string())),
        }
    }
}

/// Finds a check by its full name.
pub fn find_check(name: &str) -> Result<&'static Check> {
    registry()
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownCheck(name.to_string()))
}

/// Expands check or suite names (`"wha"` selects every `wha.*` check).
pub fn resolve(names: &[String]) -> Result<Vec<&'static Check>> {
    let mut out: Vec<&'static Check> = Vec::new();
    for name in names {
        let matched: Vec<&'static Check> = registry()
            .iter()
            .filter(|c| c.name == name.as_str() || c.suite() == name.as_str())
            .collect();
        if matched.is_empty() {
            return Err(Error::UnknownCheck(name.clone()));
        }
        for c in matched {
            if !out.iter().any(|o| o.name == c.name) {
                out.push(c);
            }
        }
    }
    out.sort_by_key(|c| c.name);
    Ok(out)
}

pub fn suite_names() -> Vec<&'static str> {
    let mut names: Vec<&'static str> = registry().iter().map(|c| c.suite()).collect();
    names.dedup();
    names.sort();
    names.dedup();
    names
}

/// Default specs for the given checks at `level`.
pub fn default_specs(checks: &[&Check], level: u32, samples: usize, seed: u64) -> Vec<CheckSpec> {
    checks
        .iter()
        .map(|c| CheckSpec {
            name: c.name.to_string(),
            scope: c.default_scope(level, samples, seed),
            level,
        })
        .collect()
}

fn stream_seed(seed: u64, name: &str) -> u64 {
    // FNV-1a keeps per-check streams independent and reproducible.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h ^ seed
}

fn run_one(ctx: &Context, check: &Check, scope: Scope) -> CheckResult {
    let start = Instant::now();
    let alg = ctx.algebra();
    let mut result = CheckResult {
        check: check.name.to_string(),
        scope,
        status: Status::Pass,
        cases: 0,
        failures: 0,
        witness: None,
        reason: None,
        conventions: alg.conventions(),
        r: ctx.level(),
        dim: alg.dim(),
        duration: Default::default(),
    };
    if let Some(max) = check.max_level {
        if ctx.level() > max {
            result.status = Status::Skipped;
            result.reason = Some(format!("oracle evaluation is limited to r <= {max}"));
            return result;
        }
    }
    let size = ctx.domain_size(check);
    let indices: Vec<u64> = match scope {
        Scope::Sampled { count, seed } if (count as u64) < size => {
            let mut rng = ChaCha8Rng::seed_from_u64(stream_seed(seed, check.name));
            let mut v: Vec<u64> = rand::seq::index::sample(&mut rng, size as usize, count)
                .into_iter()
                .map(|i| i as u64)
                .collect();
            v.sort_unstable();
            v
        }
        _ => (0..size).collect(),
    };
    let failing: Vec<u64> = indices
        .par_iter()
        .filter(|&&i| ctx.evaluate(check, &ctx.case(check, i)).is_some())
        .copied()
        .collect();
    result.cases = indices.len() as u64;
    result.failures = failing.len() as u64;
    // Shrink: re-run the smallest failing case on its own.
    if let Some(&first) = failing.iter().min() {
        let case = ctx.case(check, first);
        let (lhs, rhs) = ctx
            .evaluate(check, &case)
            .unwrap_or_else(|| ("(not reproducible)".into(), "(not reproducible)".into()));
        result.status = Status::Fail;
        result.witness = Some(Witness {
            case: ctx.describe_case(check, &case),
            lhs,
            rhs,
        });
    }
    result.duration = start.elapsed();
    result
}

/// Runs the given specs against `ctx`; results are sorted by check name.
pub fn run_suite(ctx: &Context, specs: &[CheckSpec]) -> Result<VerificationReport> {
    if ctx.level() < 2 {
        return Err(Error::Precondition("level must be at least 2".into()));
    }
    let mut jobs = Vec::with_capacity(specs.len());
    for spec in specs {
        if spec.level != ctx.level() {
            return Err(Error::LevelMismatch(spec.level, ctx.level()));
        }
        jobs.push((find_check(&spec.name)?, spec.scope));
    }
    let mut results: Vec<CheckResult> = jobs
        .par_iter()
        .map(|(check, scope)| run_one(ctx, check, *scope))
        .collect();
    results.sort_by(|a, b| a.check.cmp(&b.check));
    Ok(VerificationReport {
        r: ctx.level(),
        dim: ctx.algebra().dim(),
        conventions: ctx.algebra().conventions(),
        checks: results,
    })
}

/// Checks that decide the r-form conventions.
pub const PINNING_SUITES: [&str; 2] = ["coquasi", "coribbon"];

/// Highest level tried when resolving conventions.
pub const PINNING_MAX_LEVEL: u32 = 6;

/// The selected conventions and the level at which they became unique.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PinnedConventions {
    pub conventions: Conventions,
    pub resolved_at: u32,
}

/// Runs the coquasitriangular and coribbon suites under every convention
/// combination, starting at `level`. When several combinations survive, the
/// survivors are re-tested one level up; the first level with a single
/// survivor decides. No survivor, or ambiguity through
/// [`PINNING_MAX_LEVEL`], is an error.
pub fn pin_conventions(level: u32) -> Result<PinnedConventions> {
    let names: Vec<String> = PINNING_SUITES.iter().map(|s| s.to_string()).collect();
    let checks = resolve(&names)?;
    let mut candidates: Vec<Conventions> = Conventions::all().to_vec();
    let mut r = level.max(2);
    loop {
        let specs = default_specs(&checks, r, DEFAULT_SAMPLES, DEFAULT_SEED);
        let mut passing = Vec::new();
        for &conv in &candidates {
            let ctx = Context::for_level(r, conv)?;
            if run_suite(&ctx, &specs)?.all_passed() {
                passing.push(conv);
            }
        }
        match passing.len() {
            0 => {
                return Err(Error::Conventions(format!(
                    "no combination passes at r={r}"
                )))
            }
            1 => {
                return Ok(PinnedConventions {
                    conventions: passing[0],
                    resolved_at: r,
                })
            }
            n if r >= PINNING_MAX_LEVEL => {
                return Err(Error::Conventions(format!(
                    "{n} combinations still pass at r={r}"
                )))
            }
            _ => {
                candidates = passing;
                r += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests;
