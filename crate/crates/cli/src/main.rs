//! `wha`: build, export and verify the weak Hopf algebra at level `r`.

use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, Context as _};
use clap::{Args, Parser, Subcommand, ValueEnum};
use wha_core::export::Section;
use wha_core::recoupling::RecouplingTables;
use wha_core::verify::{
    self, pin_conventions, resolve, run_suite, CheckSpec, Context, Scope, DEFAULT_SAMPLES,
    DEFAULT_SEED,
};
use wha_core::{Conventions, CycloScalar, ExportDocument, WhaAlgebra};

/// Levels above this need `--force`; dim H grows roughly like r^5.
const LEVEL_GUARD: u32 = 8;

#[derive(Parser)]
#[command(
    name = "wha",
    version,
    about = "Exact weak Hopf algebra from U_q(sl2) at a root of unity"
)]
struct Cli {
    /// Worker threads for parallel evaluation.
    #[arg(long, global = true, env = "WHA_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the algebra and write its structure constants as JSON.
    Build {
        #[arg(long = "r")]
        level: u32,
        #[arg(long)]
        out: PathBuf,
        /// Comma-separated subset of mu, delta, s, forms (default: all).
        #[arg(long, value_delimiter = ',')]
        tables: Option<Vec<String>>,
        /// Allow levels above the size guard.
        #[arg(long)]
        force: bool,
    },
    /// Run verification checks; exit 0 if all pass, 1 if any fails.
    Verify(VerifyArgs),
    /// Print the q̃ matrix, its determinant and the modularity verdict.
    Smatrix {
        #[arg(long = "r")]
        level: u32,
        /// Also print numeric values with this many decimals.
        #[arg(long)]
        numeric: Option<usize>,
        #[arg(long)]
        force: bool,
    },
    /// Evaluate a recoupling quantity.
    Recoupling {
        #[arg(long = "r")]
        level: u32,
        #[arg(long, value_enum)]
        op: Op,
        /// Comma-separated labels.
        #[arg(long, value_delimiter = ',')]
        labels: Vec<u32>,
    },
    /// List check names.
    Checks,
    /// Determine the r-form conventions from the braided axioms.
    Conventions {
        #[arg(long = "r", default_value_t = 3)]
        level: u32,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long = "r")]
    level: Option<u32>,
    /// Check or suite names (e.g. `wha`, `coquasi.eq_almostcomm`); default: all.
    #[arg(long = "suite", value_delimiter = ',')]
    suites: Vec<String>,
    /// Sample this many cases per check instead of the default scope.
    #[arg(long)]
    sample: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Where to write the JSON report (default: standard output).
    #[arg(long)]
    report: Option<PathBuf>,
    /// Verify the tables stored in an exported document.
    #[arg(long)]
    from: Option<PathBuf>,
    /// Include per-check timings in the report.
    #[arg(long)]
    timings: bool,
    #[arg(long)]
    force: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Theta,
    Tet,
    Sixj,
    Dim,
    Twist,
    Hopf,
}

/// Anything other than a failing check exits with code 2.
fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow!(msg.into())
}

fn check_level(level: u32, force: bool) -> anyhow::Result<()> {
    if level < 2 {
        return Err(usage(format!("--r must be at least 2, got {level}")));
    }
    if level > LEVEL_GUARD && !force {
        return Err(usage(format!(
            "--r {level} exceeds the size guard of {LEVEL_GUARD}; pass --force to build anyway"
        )));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Build {
            level,
            out,
            tables,
            force,
        } => build(level, &out, tables, force),
        Command::Verify(args) => verify_cmd(&args),
        Command::Smatrix {
            level,
            numeric,
            force,
        } => smatrix(level, numeric, force),
        Command::Recoupling { level, op, labels } => recoupling(level, op, &labels),
        Command::Checks => {
            for c in verify::registry() {
                println!("{}", c.name);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Conventions { level } => {
            if level < 2 {
                return Err(usage("--r must be at least 2"));
            }
            let pinned = pin_conventions(level)?;
            println!("{}", serde_json::to_string_pretty(&pinned)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn build(
    level: u32,
    out: &std::path::Path,
    tables: Option<Vec<String>>,
    force: bool,
) -> anyhow::Result<ExitCode> {
    check_level(level, force)?;
    let sections: BTreeSet<Section> = match tables {
        None => Section::all(),
        Some(names) => names
            .iter()
            .map(|n| Section::parse(n))
            .collect::<Result<_, _>>()?,
    };
    let alg = WhaAlgebra::new(level)?;
    let doc = ExportDocument::from_algebra(&alg, &sections);
    fs::write(out, doc.to_json()).with_context(|| format!("writing {}", out.display()))?;
    eprintln!("wrote r={level} (dim {}) to {}", alg.dim(), out.display());
    Ok(ExitCode::SUCCESS)
}

fn verify_cmd(args: &VerifyArgs) -> anyhow::Result<ExitCode> {
    let VerifyArgs {
        level,
        suites,
        sample,
        seed,
        report,
        from,
        timings,
        force,
    } = args;
    let (level, sample, seed) = (*level, *sample, *seed);
    let ctx = match (from, level) {
        (Some(path), level) => {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let doc = ExportDocument::from_json(&text)?;
            if level.is_some_and(|r| r != doc.level) {
                return Err(usage(format!(
                    "--r does not match the document level {}",
                    doc.level
                )));
            }
            Context::new(Arc::new(doc.to_algebra()?))
        }
        (None, Some(r)) => {
            check_level(r, *force)?;
            Context::for_level(r, Conventions::default())?
        }
        (None, None) => return Err(usage("either --r or --from is required")),
    };
    let checks = if suites.is_empty() {
        verify::registry().iter().collect()
    } else {
        resolve(suites)?
    };
    if sample == Some(0) {
        return Err(usage("--sample must be positive"));
    }
    let r = ctx.level();
    let specs: Vec<CheckSpec> = checks
        .iter()
        .map(|c| CheckSpec {
            name: c.name.to_string(),
            scope: match sample {
                Some(count) => Scope::Sampled { count, seed },
                None => c.default_scope(r, DEFAULT_SAMPLES, seed),
            },
            level: r,
        })
        .collect();
    let result = run_suite(&ctx, &specs)?;
    let json = if *timings {
        result.to_json()
    } else {
        result.payload_json()
    };
    let mut err = std::io::stderr().lock();
    for line in result.summary_lines() {
        writeln!(err, "{line}")?;
    }
    match report {
        Some(path) => {
            fs::write(path, json + "\n").with_context(|| format!("writing {}", path.display()))?
        }
        None => println!("{json}"),
    }
    Ok(if result.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn numeric(x: &CycloScalar, digits: usize) -> String {
    let z = x.to_complex();
    let clean = |v: f64| {
        if v.abs() < 0.5 * 10f64.powi(-(digits as i32)) {
            0.0
        } else {
            v
        }
    };
    let (re, im) = (clean(z.re), clean(z.im));
    if im == 0.0 {
        format!("{re:.digits$}")
    } else {
        format!(
            "{re:.digits$}{}{:.digits$}i",
            if im < 0.0 { "-" } else { "+" },
            im.abs()
        )
    }
}

fn smatrix(level: u32, digits: Option<usize>, force: bool) -> anyhow::Result<ExitCode> {
    check_level(level, force)?;
    let alg = WhaAlgebra::new(level)?;
    let qt = alg.qtilde_matrix();
    let n = qt.rows();
    println!("q~ matrix at r={level} ({n}x{n}):");
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| qt[(i, j)].to_string()).collect();
        println!("  [{}]", row.join(", "));
    }
    if let Some(d) = digits {
        println!("numeric:");
        for i in 0..n {
            let row: Vec<String> = (0..n).map(|j| numeric(&qt[(i, j)], d)).collect();
            println!("  [{}]", row.join(", "));
        }
    }
    let det = qt.determinant();
    println!("det: {det}");
    if let Some(d) = digits {
        println!("det (numeric): {}", numeric(&det, d));
    }
    println!("modular: {}", !det.is_zero());
    Ok(ExitCode::SUCCESS)
}

fn recoupling(level: u32, op: Op, labels: &[u32]) -> anyhow::Result<ExitCode> {
    if level < 2 {
        return Err(usage(format!("--r must be at least 2, got {level}")));
    }
    let (name, arity) = match op {
        Op::Theta => ("theta", 3),
        Op::Tet => ("tet", 6),
        Op::Sixj => ("sixj", 6),
        Op::Dim => ("dim", 1),
        Op::Twist => ("twist", 1),
        Op::Hopf => ("hopf", 2),
    };
    if labels.len() != arity {
        return Err(usage(format!(
            "--op {name} takes {arity} labels, got {}",
            labels.len()
        )));
    }
    let t = RecouplingTables::for_level(level);
    let l = labels;
    let value = match op {
        Op::Theta => t.theta(l[0], l[1], l[2]),
        Op::Tet => t.tet(l[0], l[1], l[2], l[3], l[4], l[5]),
        Op::Sixj => t.sixj(l[0], l[1], l[2], l[3], l[4], l[5]),
        Op::Dim => t.dim(l[0]),
        Op::Twist => t.twist(l[0]),
        Op::Hopf => t.hopf_link(l[0], l[1]),
    };
    let value = value?;
    println!("{value}");
    println!("{}", numeric(&value, 12));
    Ok(ExitCode::SUCCESS)
}
