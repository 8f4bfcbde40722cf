//! Command-line front end. Every subcommand prints a single JSON document
//! (pretty-printed, schema-tagged) except the census, which streams CSV and
//! puts its JSON summary wherever the CSV is not going.
//!
//! Exit codes: 0 success, 1 precondition or verification failure (with a
//! structured JSON payload on stdout), 2 usage errors from flag parsing.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use weilforge::error::Error;
use weilforge::numth::PrimePower;
use weilforge::{asymptotics, chebgen, modpoly, surfaces, textio, weilcore, Result};

mod census;

const SCHEMA: &str = "weilforge/1";

/// Exact arithmetic for Weil polynomials over finite fields.
///
/// Polynomials are written as comma-separated coefficient lists in
/// ascending order of degree, constant term first, leading coefficient
/// last. Where a monic polynomial is required the trailing coefficient
/// must literally be 1; nothing is normalized silently.
#[derive(Parser)]
#[command(name = "weilforge", version, about, long_about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a Weil polynomial stays simple over every finite
    /// extension of its base field
    Check(CheckArgs),
    /// Classify and enumerate ordinary abelian surface isogeny classes
    #[command(subcommand)]
    Surface(SurfaceCommand),
    /// Build a certified absolutely simple ordinary Weil polynomial of
    /// dimension n over F_q
    Construct(ConstructArgs),
    /// Report density constants, prime thresholds, and surface-count
    /// bound formulas
    Bounds(BoundsArgs),
    /// Count monic irreducibles and linear-times-irreducible products
    /// of degree n over F_p
    Count(CountArgs),
    /// Re-derive every property the built-in seed tables are trusted for
    VerifyTables,
    /// Exhaustively check the reduction density identities over a small
    /// product of primes
    VerifyReduction(ReductionArgs),
}

#[derive(Args)]
struct CheckArgs {
    /// Field size, a prime power
    #[arg(long)]
    q: String,
    /// Coefficients c0,c1,...,c2n of a monic degree-2n polynomial
    #[arg(long)]
    poly: String,
}

#[derive(Subcommand)]
enum SurfaceCommand {
    /// Classify one simple ordinary surface class by its Frobenius trace
    /// a and second symmetric power b
    Classify(ClassifyArgs),
    /// Enumerate every simple ordinary surface class over F_q (or a range
    /// of fields) as CSV, with a bound-checked JSON summary
    Census(CensusArgs),
}

#[derive(Args)]
struct ClassifyArgs {
    /// Field size, a prime power
    #[arg(long)]
    q: String,
    /// Coefficient of x^3 in the quartic x^4 + a x^3 + b x^2 + aq x + q^2
    #[arg(long)]
    a: i64,
    /// Coefficient of x^2 in that quartic
    #[arg(long)]
    b: i64,
}

#[derive(Args)]
struct CensusArgs {
    /// Field size, a prime power (the lower end when --q-max is given)
    #[arg(long)]
    q: String,
    /// Run the census for every prime power from --q through this value
    #[arg(long)]
    q_max: Option<u64>,
    /// Write the CSV here instead of stdout; the JSON summary then goes
    /// to stdout instead of stderr
    #[arg(long)]
    output: Option<PathBuf>,
    /// Directory for per-trace partial results; interrupted runs resume
    /// from whatever is already there
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Worker thread count (default: one per CPU). The output bytes do
    /// not depend on this
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct ConstructArgs {
    /// Dimension, at least 2
    #[arg(long)]
    n: usize,
    /// Field size, a prime power
    #[arg(long)]
    q: String,
    /// Directory for caching the base-polynomial searches needed above
    /// dimension 18
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args)]
struct BoundsArgs {
    /// Dimension
    #[arg(long)]
    n: usize,
    /// Density slack, a rational in (0, 1] such as 1 or 3/100
    #[arg(long)]
    epsilon: String,
    /// Optionally evaluate the surface-count bound formulas at this
    /// field size
    #[arg(long)]
    q: Option<String>,
}

#[derive(Args)]
struct CountArgs {
    /// A prime
    #[arg(long)]
    p: u64,
    /// Degree, at least 1
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct ReductionArgs {
    /// Degree, at least 3
    #[arg(long)]
    n: usize,
    /// Comma-separated distinct primes, for example 2,3
    #[arg(long)]
    primes: String,
}

/// What a subcommand hands back: an optional JSON payload to print, and
/// whether the run counts as a success for the exit code.
struct Outcome {
    payload: Option<Value>,
    ok: bool,
}

impl Outcome {
    fn success(payload: Value) -> Outcome {
        Outcome {
            payload: Some(payload),
            ok: true,
        }
    }
}

fn with_schema(value: Value) -> Value {
    let mut out = Map::new();
    out.insert("schema".to_string(), Value::String(SCHEMA.to_string()));
    if let Value::Object(fields) = value {
        for (key, field) in fields {
            out.insert(key, field);
        }
    }
    Value::Object(out)
}

fn render(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("json values render")
}

/// Writes to stdout, treating a vanished reader (broken pipe) as a normal
/// early end of the run rather than a panic.
fn write_stdout(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_bytes()).is_err() || out.flush().is_err() {
        std::process::exit(0);
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("report types serialize")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            if let Some(payload) = outcome.payload {
                write_stdout(&render(&with_schema(payload)));
                write_stdout("\n");
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            let payload = with_schema(json!({
                "error": { "code": e.code(), "message": e.to_string() }
            }));
            write_stdout(&render(&payload));
            write_stdout("\n");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Check(args) => cmd_check(args),
        Command::Surface(SurfaceCommand::Classify(args)) => cmd_classify(args),
        Command::Surface(SurfaceCommand::Census(args)) => cmd_census(args),
        Command::Construct(args) => cmd_construct(args),
        Command::Bounds(args) => cmd_bounds(args),
        Command::Count(args) => cmd_count(args),
        Command::VerifyTables => cmd_verify_tables(),
        Command::VerifyReduction(args) => cmd_verify_reduction(args),
    }
}

fn cmd_check(args: CheckArgs) -> Result<Outcome> {
    let q = PrimePower::parse(&args.q)?;
    let poly = textio::parse_int_poly(&args.poly)?;
    let f = weilcore::WeilPoly::new(poly, q)?;
    let verdict = weilcore::absolute_simplicity(&f)?;
    let mut payload = json!({
        "q": q.q(),
        "n": f.dimension(),
        "poly": textio::format_int_poly(f.poly()),
        "ordinary": f.is_ordinary(),
    });
    if let (Value::Object(target), Value::Object(fields)) = (&mut payload, to_json(&verdict)) {
        for (key, field) in fields {
            target.insert(key, field);
        }
    }
    Ok(Outcome::success(payload))
}

fn cmd_classify(args: ClassifyArgs) -> Result<Outcome> {
    let q = PrimePower::parse(&args.q)?;
    let params = surfaces::SurfaceParams::new(args.a, args.b, q);
    let class = surfaces::classify_surface(&params)?;
    let mut payload = json!({
        "q": q.q(),
        "a": args.a,
        "b": args.b,
        "class": class.label(),
    });
    if let Some(degree) = class.splitting_degree() {
        payload["degree"] = json!(degree);
    }
    Ok(Outcome::success(payload))
}

fn cmd_census(args: CensusArgs) -> Result<Outcome> {
    let q = PrimePower::parse(&args.q)?;
    let options = census::CensusOptions {
        q,
        q_max: args.q_max,
        checkpoint: args.checkpoint,
        jobs: args.jobs,
    };
    let (csv, summary) = census::run(&options)?;
    match &args.output {
        Some(path) => {
            std::fs::write(path, csv)?;
            Ok(Outcome::success(summary))
        }
        None => {
            write_stdout(&csv);
            eprintln!("{}", render(&with_schema(summary)));
            Ok(Outcome {
                payload: None,
                ok: true,
            })
        }
    }
}

fn cmd_construct(args: ConstructArgs) -> Result<Outcome> {
    let q = PrimePower::parse(&args.q)?;
    let report = chebgen::construct_with_cache(args.n, q, args.cache.as_deref())?;
    Ok(Outcome::success(to_json(&report)))
}

fn cmd_bounds(args: BoundsArgs) -> Result<Outcome> {
    let epsilon: BigRational = args
        .epsilon
        .trim()
        .parse()
        .map_err(|_| Error::InvalidEpsilon(args.epsilon.clone()))?;
    let q = args.q.as_deref().map(PrimePower::parse).transpose()?;
    // Enclosure width well under a millionth so the printed constants are
    // trustworthy to their last digit.
    let precision = BigRational::new(BigInt::from(1), BigInt::from(1_000_000_000u64));
    let report = asymptotics::bounds_report(args.n, q, Some(&epsilon), &precision)?;
    Ok(Outcome::success(to_json(&report)))
}

fn cmd_count(args: CountArgs) -> Result<Outcome> {
    let irreducible = modpoly::count_irreducible(args.p, args.n)?;
    let linear = modpoly::count_linear_times_irreducible(args.p, args.n)?;
    Ok(Outcome::success(json!({
        "p": args.p,
        "n": args.n,
        "irreducible": irreducible.to_string(),
        "linear_times_irreducible": linear.to_string(),
    })))
}

fn cmd_verify_tables() -> Result<Outcome> {
    let rows = chebgen::verify_builtin_tables()?;
    let ok = rows.iter().all(|row| row.ok);
    Ok(Outcome {
        payload: Some(json!({ "ok": ok, "tables": to_json(&rows) })),
        ok,
    })
}

fn cmd_verify_reduction(args: ReductionArgs) -> Result<Outcome> {
    let mut primes = Vec::new();
    for token in args.primes.split(',') {
        let p: u64 = token
            .trim()
            .parse()
            .map_err(|_| Error::BadPrimeList(format!("not an integer: {token:?}")))?;
        primes.push(p);
    }
    let report = asymptotics::reduction_verify(args.n, &primes)?;
    let ok = report.identity_holds
        && report.lower_bound_ok
        && report
            .per_prime
            .iter()
            .all(|stat| stat.irreducible_bound_ok && stat.linear_bound_ok);
    let mut payload = json!({ "ok": ok });
    if let (Value::Object(target), Value::Object(fields)) = (&mut payload, to_json(&report)) {
        for (key, field) in fields {
            target.insert(key, field);
        }
    }
    Ok(Outcome { payload: Some(payload), ok })
}
