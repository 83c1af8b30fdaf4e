use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use charvar_core::harness::{
    check_fixture, cmd_verify, exact_checks, float_checks, poisson_checks, record_fixture, run_checks,
    HarnessError, OutputFormat, RunConfig, DEFAULT_SEED,
};
use charvar_core::poisson::bracket;
use charvar_core::ring::{jacobian_generators, partials_p, partials_q, JACOBIAN_LABELS};
use charvar_core::rp2::{fiber_point, BoundaryData, FiberParams, Rp2Error};
use charvar_core::{poly_p, poly_q, reduce_trace_word, sextic, Polynomial, TraceError, Word};

/// Print a line, ignoring a closed stdout so `charvar ... | head` exits quietly.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Reduction(#[from] TraceError),
    #[error(transparent)]
    Harness(#[from] HarnessError),
    #[error(transparent)]
    Rp2(#[from] Rp2Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Reduction(TraceError::Word(_) | TraceError::Poly(_)) => 2,
            CliError::Rp2(Rp2Error::InvalidBoundary { .. } | Rp2Error::DomainError(_)) => 2,
            CliError::Harness(HarnessError::InvalidConfig(_)) => 2,
            _ => 1,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "charvar", version, about = "Exact trace identities and Poisson structure on the SL(3) character variety of F2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the seeded verification suites.
    Verify(VerifyArgs),
    /// Reduce the trace of a rank-2 word to the generator coordinates.
    Reduce {
        /// Word such as "x1 X2 x1^2"; capital letters are inverses.
        word: String,
    },
    /// Poisson bracket of two polynomials in normal form.
    Bracket { f: String, g: String },
    /// Print a built-in polynomial: P, Q, sextic, dP:<i>, dQ:<i> or jacobian.
    Emit { what: String },
    /// Print the nine generators of the Jacobian ideal.
    Jacobian,
    /// Assemble fiber points from boundary data.
    Fiber(FiberArgs),
    /// Run the Poisson structure checks.
    PoissonSelftest(CommonArgs),
    /// Record or check the regression fixture.
    Fixture {
        action: FixtureAction,
        path: PathBuf,
    },
}

#[derive(Args, Debug)]
struct CommonArgs {
    /// Run seed; defaults to CHARVAR_SEED or the built-in seed.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, visible_alias = "seeds", default_value_t = 100)]
    samples: usize,
    /// Relative tolerance for floating-point checks.
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Suite {
    All,
    Exact,
    Float,
    Poisson,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum FixtureAction {
    Record,
    Check,
}

#[derive(Args, Debug)]
struct FiberArgs {
    /// Boundary traces t1,t-1.
    #[arg(long, value_parser = parse_pair)]
    b1: (f64, f64),
    /// Boundary traces t2,t-2.
    #[arg(long, value_parser = parse_pair)]
    b2: (f64, f64),
    /// Boundary traces t3,t-3.
    #[arg(long, value_parser = parse_pair)]
    b3: (f64, f64),
    #[arg(long, default_value_t = 1.0, value_parser = parse_real)]
    s: f64,
    #[arg(long, default_value_t = 1.0, value_parser = parse_real)]
    t: f64,
    /// Evaluate on the grid s, t in {1/2, 1, 2} instead of a single point.
    #[arg(long)]
    grid: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn parse_pair(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected x,y but got {s:?}"))?;
    Ok((parse_real(a)?, parse_real(b)?))
}

/// A decimal or a fraction `n/d`.
fn parse_real(x: &str) -> Result<f64, String> {
    let x = x.trim();
    let num = |s: &str| s.trim().parse::<f64>().map_err(|e| format!("{x:?}: {e}"));
    match x.split_once('/') {
        Some((n, d)) => Ok(num(n)? / num(d)?),
        None => num(x),
    }
}

fn run_config(args: &CommonArgs) -> Result<RunConfig, CliError> {
    let seed = match args.seed {
        Some(s) => s,
        None => match std::env::var("CHARVAR_SEED") {
            Ok(v) => v.trim().parse().map_err(|_| CliError::Usage(format!("CHARVAR_SEED is not an integer: {v:?}")))?,
            Err(_) => DEFAULT_SEED,
        },
    };
    let format = match args.format {
        Format::Text => OutputFormat::Text,
        Format::Structured => OutputFormat::Structured,
    };
    Ok(RunConfig::new(seed, args.samples, args.tolerance, format)?)
}

fn parse_poly(text: &str) -> Result<Polynomial, CliError> {
    Polynomial::from_str(text).map_err(|e| CliError::Usage(format!("cannot parse {text:?}: {e}")))
}

fn emit(what: &str) -> Result<String, CliError> {
    let index = |s: &str| s.parse::<i8>().map_err(|_| CliError::Usage(format!("bad generator index {s:?}")));
    let lookup = |table: &std::collections::BTreeMap<i8, Polynomial>, s: &str| -> Result<String, CliError> {
        let i = index(s)?;
        table.get(&i).map(|p| p.to_string()).ok_or_else(|| CliError::Usage(format!("no partial for index {i}")))
    };
    match what {
        "P" => Ok(poly_p().to_string()),
        "Q" => Ok(poly_q().to_string()),
        "sextic" => Ok(sextic().to_string()),
        "jacobian" => Ok(jacobian_text()),
        _ => match what.split_once(':') {
            Some(("dP", i)) => lookup(partials_p(), i),
            Some(("dQ", i)) => lookup(partials_q(), i),
            _ => Err(CliError::Usage(format!("unknown emit target {what:?}"))),
        },
    }
}

fn jacobian_text() -> String {
    JACOBIAN_LABELS
        .iter()
        .zip(jacobian_generators())
        .map(|(label, g)| match label {
            Some(i) => format!("t{i}\t{g}"),
            None => format!("t5\t{g}"),
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn fiber(args: &FiberArgs) -> Result<String, CliError> {
    let b = BoundaryData { pairs: [args.b1, args.b2, args.b3] };
    let params: Vec<(f64, f64)> = if args.grid {
        let g = [0.5, 1.0, 2.0];
        g.iter().flat_map(|&s| g.iter().map(move |&t| (s, t))).collect()
    } else {
        vec![(args.s, args.t)]
    };
    const NAMES: [&str; 8] = ["t1", "t-1", "t2", "t-2", "t3", "t-3", "t4", "t-4"];
    let mut lines = Vec::new();
    if matches!(args.format, Format::Text) {
        lines.push(format!("s\tt\t{}\tt5\tt5'", NAMES.join("\t")));
    }
    for (s, t) in params {
        let fp = fiber_point(&b, &FiberParams { s, t })?;
        let (r1, r2) = fp.t5_roots();
        let line = match args.format {
            Format::Text => {
                let vals: Vec<String> = fp.r.iter().map(|v| v.to_string()).collect();
                format!("{s}\t{t}\t{}\t{r1}\t{r2}", vals.join("\t"))
            }
            Format::Structured => {
                let vals: Vec<String> = NAMES.iter().zip(fp.r).map(|(n, v)| format!("{n}={v}")).collect();
                format!("s={s}\tt={t}\t{}\tt5={r1}\tt5'={r2}", vals.join("\t"))
            }
        };
        lines.push(line);
    }
    Ok(lines.join("\n"))
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Verify(args) => {
            let cfg = run_config(&args.common)?;
            let report = match args.suite {
                Suite::All => cmd_verify(&cfg),
                Suite::Exact => run_checks(&exact_checks(), &cfg),
                Suite::Float => run_checks(&float_checks(), &cfg),
                Suite::Poisson => run_checks(&poisson_checks(), &cfg),
            };
            out!("{}", report.render(cfg.format).trim_end());
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::PoissonSelftest(args) => {
            let cfg = run_config(&args)?;
            let report = run_checks(&poisson_checks(), &cfg);
            out!("{}", report.render(cfg.format).trim_end());
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Reduce { word } => {
            let w: Word = word.parse().map_err(|e| CliError::Usage(format!("cannot parse word {word:?}: {e}")))?;
            out!("{}", reduce_trace_word(&w)?);
            Ok(0)
        }
        Command::Bracket { f, g } => {
            out!("{}", bracket(&parse_poly(&f)?, &parse_poly(&g)?));
            Ok(0)
        }
        Command::Emit { what } => {
            out!("{}", emit(&what)?);
            Ok(0)
        }
        Command::Jacobian => {
            out!("{}", jacobian_text());
            Ok(0)
        }
        Command::Fiber(args) => {
            out!("{}", fiber(&args)?);
            Ok(0)
        }
        Command::Fixture { action, path } => {
            match action {
                FixtureAction::Record => out!("recorded {} entries to {}", record_fixture(&path)?, path.display()),
                FixtureAction::Check => out!("fixture ok: {} entries match", check_fixture(&path)?),
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
