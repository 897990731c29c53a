//! `schubert`: solve Schubert problems from JSON files and poke at the
//! underlying rings from the command line.
//!
//! Exit codes: 0 success, 1 other failure, 2 malformed input, 3 a well-formed
//! problem with no cohomological answer (dimension mismatch, undoubled index).

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use schubert_core::grassmann::{degeneracy_count, giambelli, tautological_porteous_class};
use schubert_core::halving::{kappa, ComplexClass};
use schubert_core::schur::lr_coefficient;
use schubert_core::selftest::{self, Fault, Level};
use schubert_core::{
    solve, HalvingClass, Mode, Partition, RawIndex, Report, SchubertProblem, SpaceDescriptor,
};

#[derive(Parser)]
#[command(
    name = "schubert",
    version,
    about = "Exact Schubert calculus with real and quaternionic halving"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a problem file (one problem object or an array of them).
    Solve {
        #[arg(long)]
        input: PathBuf,
        /// Override the mode of every problem in the file.
        #[arg(long, value_parser = ["count", "class", "lower_bound"])]
        mode: Option<String>,
        /// Worker threads for batch files.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Print per-problem wall time on stderr.
        #[arg(long)]
        timing: bool,
    },
    /// Littlewood-Richardson coefficient c^ν_{λμ}; partitions as `2,1` or `[2,1]`.
    Lr {
        lambda: String,
        mu: String,
        nu: String,
    },
    /// Product of two Schubert classes on a space.
    Mult {
        /// Space descriptor JSON, e.g. '{"type":"complex_grassmannian","k":2,"n":4}'.
        #[arg(long)]
        space: String,
        /// Index JSON of the first factor.
        a: String,
        /// Index JSON of the second factor.
        b: String,
    },
    /// Giambelli determinant det(σ_{λ_i+j-i}) on a complex Grassmannian.
    Giambelli {
        #[arg(long)]
        space: String,
        lambda: String,
    },
    /// Thom-Porteous class of Hom(S, Q) of rank ≤ ρ, and optionally ∫ of its m-th power.
    Porteous {
        #[arg(long)]
        space: String,
        e: u32,
        f: u32,
        rho: u32,
        maps: Option<u32>,
    },
    /// Apply κ to a class of a halving space. The class is an index JSON or a
    /// term list '[{"index":[2,2],"coeff":"3"}]'.
    Kappa {
        #[arg(long)]
        space: String,
        class: String,
    },
    /// Run the built-in oracle suites.
    Selftest {
        #[arg(value_enum, default_value_t = SelftestLevel::Quick)]
        level: SelftestLevel,
        #[arg(long, hide = true, value_enum)]
        inject_fault: Option<InjectedFault>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SelftestLevel {
    Quick,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum InjectedFault {
    LrSign,
}

/// Marks an error as malformed input (exit 2).
#[derive(Debug)]
struct SchemaError(String);

impl std::fmt::Display for SchemaError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for SchemaError {}

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<schubert_core::Error>() {
            if e.is_problem_error() {
                return 3;
            }
            if e.is_schema_error() {
                return 2;
            }
            return 1;
        }
        if cause.downcast_ref::<serde_json::Error>().is_some()
            || cause.downcast_ref::<SchemaError>().is_some()
        {
            return 2;
        }
    }
    1
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Solve {
            input,
            mode,
            jobs,
            timing,
        } => cmd_solve(cli.format, input, mode.as_deref(), *jobs, *timing),
        Command::Lr { lambda, mu, nu } => cmd_lr(cli.format, lambda, mu, nu),
        Command::Mult { space, a, b } => cmd_mult(cli.format, space, a, b),
        Command::Giambelli { space, lambda } => cmd_giambelli(cli.format, space, lambda),
        Command::Porteous {
            space,
            e,
            f,
            rho,
            maps,
        } => cmd_porteous(cli.format, space, *e, *f, *rho, *maps),
        Command::Kappa { space, class } => cmd_kappa(cli.format, space, class),
        Command::Selftest {
            level,
            inject_fault,
        } => Ok(cmd_selftest(*level, *inject_fault)),
    }
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value)?),
        Format::Text => println!("{}", text()),
    }
    Ok(())
}

fn parse_json<T: serde::de::DeserializeOwned>(what: &str, s: &str) -> Result<T> {
    serde_json::from_str(s).with_context(|| format!("could not parse {what} {s:?}"))
}

/// A JSON index, or a bare comma list like `2,1` for a flat one.
fn parse_index(s: &str) -> Result<RawIndex> {
    if s.trim_start().starts_with('[') {
        parse_json("index", s)
    } else {
        Ok(RawIndex::Flat(parse_list("index", s)?))
    }
}

fn parse_list(what: &str, s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.starts_with('[') {
        return parse_json(what, s);
    }
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<u32>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| SchemaError(format!("could not parse {what} {s:?}: {e}")))?;
    Ok(parts)
}

fn parse_partition(s: &str) -> Result<Partition> {
    Ok(Partition::new(parse_list("partition", s)?)?)
}

fn text_report(i: Option<usize>, report: &Report) -> String {
    let head = match i {
        Some(i) => format!("problem {i}: "),
        None => String::new(),
    };
    let mut out = format!(
        "{head}{} on {}\n",
        mode_name(report.mode),
        report.input.space
    );
    out.push_str(&format!("  result: {}\n", report.display));
    out.push_str(&format!("  provenance: {}", report.provenance));
    if let Some(h) = &report.halved_problem {
        let conditions: Vec<String> = h
            .conditions
            .iter()
            .map(|c| {
                format!(
                    "{}^{}",
                    serde_json::to_string(&c.index).unwrap_or_default(),
                    c.count
                )
            })
            .collect();
        let mut what = conditions.join(" ");
        if let Some(d) = h.degeneracy {
            what = format!("corank {} for {} maps", d.corank, d.maps);
        }
        out.push_str(&format!("\n  halved: {what} on {}", h.space));
    }
    out
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Count => "count",
        Mode::Class => "class",
        Mode::LowerBound => "lower_bound",
    }
}

fn cmd_solve(
    format: Format,
    input: &PathBuf,
    mode: Option<&str>,
    jobs: usize,
    timing: bool,
) -> Result<u8> {
    let text =
        std::fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
    let value: Value = serde_json::from_str(&text)
        .with_context(|| format!("{} is not valid JSON", input.display()))?;
    let (batch, items) = match value {
        Value::Array(items) => (true, items),
        single => (false, vec![single]),
    };
    let mut problems = Vec::with_capacity(items.len());
    for (i, item) in items.into_iter().enumerate() {
        let mut problem: SchubertProblem = serde_json::from_value(item)
            .with_context(|| format!("problem {i} does not match the schema"))?;
        if let Some(m) = mode {
            problem.mode = m.parse()?;
        }
        problems.push(problem);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()?;
    let results: Vec<_> = pool.install(|| {
        problems
            .par_iter()
            .map(|p| {
                let start = Instant::now();
                (solve(p), start.elapsed())
            })
            .collect()
    });
    // assemble in input order; the first failure decides the exit code
    let mut reports = Vec::with_capacity(results.len());
    for (i, (result, elapsed)) in results.into_iter().enumerate() {
        if timing {
            eprintln!("problem {i}: {:.3} ms", elapsed.as_secs_f64() * 1e3);
        }
        let report = result.map_err(anyhow::Error::from).with_context(|| {
            let what = problems[i].description.as_deref().unwrap_or("unnamed");
            format!("problem {i} ({what})")
        })?;
        reports.push(report);
    }
    if batch {
        emit(format, &reports, || {
            reports
                .iter()
                .enumerate()
                .map(|(i, r)| text_report(Some(i), r))
                .collect::<Vec<_>>()
                .join("\n")
        })?;
    } else {
        emit(format, &reports[0], || text_report(None, &reports[0]))?;
    }
    Ok(0)
}

fn cmd_lr(format: Format, lambda: &str, mu: &str, nu: &str) -> Result<u8> {
    let (l, m, n) = (
        parse_partition(lambda)?,
        parse_partition(mu)?,
        parse_partition(nu)?,
    );
    let c = lr_coefficient(&l, &m, &n);
    let out = json!({
        "lambda": l,
        "mu": m,
        "nu": n,
        "coefficient": c.to_string(),
    });
    emit(format, &out, || c.to_string())?;
    Ok(0)
}

fn complex_space(space: &SpaceDescriptor) -> Result<schubert_core::FixedPointSpace> {
    match space {
        SpaceDescriptor::Complex(c) => Ok(c.clone()),
        SpaceDescriptor::Halving(h) => {
            Err(SchemaError(format!("{h} is not a complex space")).into())
        }
    }
}

fn grassmannian(space: &SpaceDescriptor) -> Result<schubert_core::GrassmannianDescriptor> {
    match complex_space(space)? {
        schubert_core::FixedPointSpace::Grassmannian(g) => Ok(g),
        other => Err(SchemaError(format!("{other} is not a Grassmannian")).into()),
    }
}

fn cmd_mult(format: Format, space: &str, a: &str, b: &str) -> Result<u8> {
    let space: SpaceDescriptor = parse_json("space", space)?;
    let (ra, rb): (RawIndex, RawIndex) = (parse_index(a)?, parse_index(b)?);
    let (ia, ib) = (space.parse_index(&ra)?, space.parse_index(&rb)?);
    match &space {
        SpaceDescriptor::Complex(c) => {
            let product =
                ComplexClass::schubert(c, &ia)?.multiply(&ComplexClass::schubert(c, &ib)?)?;
            emit(format, &product, || product.to_string())?;
        }
        SpaceDescriptor::Halving(h) => {
            let product = HalvingClass::schubert(h.clone(), &ia)?
                .multiply(&HalvingClass::schubert(h.clone(), &ib)?)?;
            emit(format, &product, || product.to_string())?;
        }
    }
    Ok(0)
}

fn cmd_giambelli(format: Format, space: &str, lambda: &str) -> Result<u8> {
    let g = grassmannian(&parse_json("space", space)?)?;
    let lambda = parse_partition(lambda)?;
    let class = giambelli(&lambda, g)?;
    emit(format, &class, || class.to_string())?;
    Ok(0)
}

fn cmd_porteous(
    format: Format,
    space: &str,
    e: u32,
    f: u32,
    rho: u32,
    maps: Option<u32>,
) -> Result<u8> {
    let g = grassmannian(&parse_json("space", space)?)?;
    let class = tautological_porteous_class(g, e, f, rho)?;
    let count = maps
        .map(|m| degeneracy_count(g, e, f, rho, m))
        .transpose()?;
    let out = json!({
        "space": g,
        "e": e,
        "f": f,
        "rho": rho,
        "class": class,
        "maps": maps,
        "count": count.as_ref().map(|c| c.to_string()),
    });
    emit(format, &out, || match &count {
        Some(c) => format!("{class}\n{c}"),
        None => class.to_string(),
    })?;
    Ok(0)
}

fn cmd_kappa(format: Format, space: &str, class: &str) -> Result<u8> {
    let space = match parse_json::<SpaceDescriptor>("space", space)? {
        SpaceDescriptor::Halving(h) => h,
        SpaceDescriptor::Complex(c) => {
            return Err(SchemaError(format!("{c} is not a halving space")).into())
        }
    };
    let value: Value = parse_json("class", class)?;
    let terms = match &value {
        Value::Array(items) if items.iter().all(Value::is_object) && !items.is_empty() => {
            let terms: Vec<Value> = items.clone();
            let full = json!({ "space": SpaceDescriptor::Halving(space.clone()), "terms": terms });
            let parsed: HalvingClass =
                serde_json::from_value(full).context("class terms do not match the space")?;
            parsed
        }
        _ => {
            let raw: RawIndex = serde_json::from_value(value.clone())
                .context("class must be an index or a term list")?;
            HalvingClass::schubert(space.clone(), &space.parse_index(&raw)?)?
        }
    };
    let image = kappa(&terms);
    let out = json!({ "input": terms, "kappa": image });
    emit(format, &out, || format!("κ({terms}) = {image}"))?;
    Ok(0)
}

fn cmd_selftest(level: SelftestLevel, fault: Option<InjectedFault>) -> u8 {
    let level = match level {
        SelftestLevel::Quick => Level::Quick,
        SelftestLevel::Full => Level::Full,
    };
    let fault = fault.map(|InjectedFault::LrSign| Fault::LrSign);
    let start = Instant::now();
    let results = selftest::run(level, fault);
    let mut failed = false;
    for r in &results {
        println!("{r}");
        failed |= !r.passed();
    }
    let total: usize = results.iter().map(|r| r.cases).sum();
    println!(
        "{} suites, {total} cases, {} in {:.2} s",
        results.len(),
        if failed { "FAILED" } else { "all passed" },
        start.elapsed().as_secs_f64()
    );
    if failed {
        1
    } else {
        0
    }
}
