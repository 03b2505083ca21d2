use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use jpk::context::CacheSnapshot;
use jpk::suites::{run_suite, SeriesChoice, SuiteConfig, SuiteId};
use jpk::{BigRat, Context, DMode, Error, Partition};

mod compute;
mod output;
mod verify;

#[derive(Parser)]
#[command(
    name = "jpk",
    version,
    about = "Exact Jack, interpolation Jack and binomial-type polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one polynomial and print it.
    Compute {
        kind: compute::Kind,
        /// Partition literal, e.g. "2,1,0"; trailing zeros are optional.
        #[arg(long)]
        m: String,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run a verification suite over all partitions within the caps.
    Verify {
        /// Suite name, or "all".
        suite: String,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args, Clone)]
struct RunArgs {
    /// Number of variables.
    #[arg(long)]
    r: usize,
    /// "symbolic" or a rational literal such as "2" or "1/3".
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
    d: String,
    #[arg(long, default_value_t = 4)]
    max_weight: u32,
    /// Truncation degree for series.
    #[arg(long, default_value_t = 4)]
    trunc: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// JSON coefficient cache; JPK_CACHE takes precedence.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Print one line per operator term to stderr.
    #[arg(long)]
    trace: bool,
    /// Series F for the binomial-type computations.
    #[arg(long, value_enum, default_value_t = Series::Both)]
    series: Series,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Series {
    One,
    Bernoulli,
    Both,
}

impl From<Series> for SeriesChoice {
    fn from(s: Series) -> Self {
        match s {
            Series::One => SeriesChoice::One,
            Series::Bernoulli => SeriesChoice::Bernoulli,
            Series::Both => SeriesChoice::Both,
        }
    }
}

pub const EXIT_FAIL: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_SINGULAR: u8 = 3;

/// An error that ends the process with a given code.
pub struct Exit {
    pub code: u8,
    pub message: String,
}

impl Exit {
    pub fn invalid(message: impl Into<String>) -> Self {
        Exit {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }
}

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SpecializationZeroD => EXIT_INVALID,
            Error::DegenerateDiagonal { .. } | Error::SingularVanishingSystem(_) => EXIT_SINGULAR,
            ref e if e.is_specialization_singularity() => EXIT_SINGULAR,
            _ => EXIT_INVALID,
        };
        Exit {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INVALID } else { 0 });
        }
    };
    let start = Instant::now();
    let res = run(cli);
    eprintln!("wall time: {:.3}s", start.elapsed().as_secs_f64());
    match res {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Exit> {
    match cli.command {
        Command::Compute { kind, m, run } => {
            let ctx = context(&run)?;
            let m = Partition::parse(&m, run.r)?;
            let cache = load_cache(&ctx, &run)?;
            let text = compute::run(&ctx, kind, &m, &run)?;
            finish(&ctx, &run, cache)?;
            emit(&text);
            Ok(0)
        }
        Command::Verify { suite, run } => {
            let ids = if suite == "all" {
                SuiteId::ALL.to_vec()
            } else {
                vec![suite.parse::<SuiteId>()?]
            };
            let ctx = context(&run)?;
            let cache = load_cache(&ctx, &run)?;
            let results: Vec<_> = ids
                .iter()
                .map(|&id| run_suite(&ctx, id, &suite_config(&run)))
                .collect();
            finish(&ctx, &run, cache)?;
            emit(&output::suites(&results, &ctx, &run, run.format));
            Ok(verify::exit_code(&results))
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}").and_then(|_| out.flush());
}

fn suite_config(run: &RunArgs) -> SuiteConfig {
    let mut c = SuiteConfig::new(run.max_weight, run.trunc, run.seed);
    c.series = run.series.into();
    c
}

fn context(run: &RunArgs) -> Result<Context, Exit> {
    if run.r == 0 {
        return Err(Exit::invalid("r must be at least 1"));
    }
    let mode = if run.d == "symbolic" {
        DMode::Symbolic
    } else {
        let d0: BigRat = jpk::scalars::parse_bigrat(&run.d)
            .map_err(|_| Exit::invalid(format!("bad value for --d: {:?}", run.d)))?;
        DMode::Specialized(d0)
    };
    let ctx = Context::new(run.r, mode).map_err(|e| Exit::invalid(e.to_string()))?;
    Ok(if run.trace { ctx.with_trace() } else { ctx })
}

fn cache_path(run: &RunArgs) -> Option<PathBuf> {
    std::env::var_os("JPK_CACHE")
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
        .or_else(|| run.cache.clone())
}

fn load_cache(ctx: &Context, run: &RunArgs) -> Result<Option<PathBuf>, Exit> {
    let Some(path) = cache_path(run) else {
        return Ok(None);
    };
    match std::fs::read_to_string(&path) {
        Ok(text) => {
            let snap: CacheSnapshot = serde_json::from_str(&text)
                .map_err(|e| Exit::invalid(format!("unreadable cache {}: {e}", path.display())))?;
            ctx.import_cache(&snap)
                .map_err(|e| Exit::invalid(format!("cache {}: {e}", path.display())))?;
        }
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
        Err(e) => return Err(Exit::invalid(format!("cache {}: {e}", path.display()))),
    }
    Ok(Some(path))
}

/// Flushes the trace and stores the cache.
fn finish(ctx: &Context, run: &RunArgs, cache: Option<PathBuf>) -> Result<(), Exit> {
    if run.trace {
        for line in ctx.take_trace() {
            eprintln!("{line}");
        }
    }
    if let Some(path) = cache {
        let text = serde_json::to_string(&ctx.export_cache()).expect("cache serializes");
        std::fs::write(&path, text)
            .map_err(|e| Exit::invalid(format!("cannot write cache {}: {e}", path.display())))?;
    }
    Ok(())
}
