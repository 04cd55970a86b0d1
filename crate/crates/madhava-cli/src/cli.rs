//! Flag parsing and command dispatch. Validation beyond clap's own
//! (method/flag admissibility, per-method index floors) reports a usage
//! error and exits 2; a vanishing second difference inside an Aitken pass
//! exits 3; a failing verification check exits 1.

use clap::{Parser, Subcommand, ValueEnum};
use madhava::{series_a, series_b, series_c, Rounding};

use crate::fixtures::DEFAULT_ROWS;
use crate::methods::{self, BaseMethod, MethodSpec};
use crate::report::{self, Cell, TableRow};
use crate::verify::{self, Status, Suite};

const EXIT_OK: i32 = 0;
const EXIT_VERIFY_FAILED: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_UNDEFINED: i32 = 3;

#[derive(Parser)]
#[command(
    name = "madhava",
    version,
    about = "Certified π approximations from the Mādhava–Leibniz series, its corrected \
             partial sums, and its accelerated forms — all in exact rational arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one π approximation and its certified error bound.
    Compute(ComputeArgs),
    /// Emit the a/b/c convergence table for a set of indices.
    Table(TableArgs),
    /// Run a verification suite; every check is certified, never sampled
    /// from floating point.
    Verify(VerifyArgs),
}

#[derive(clap::Args)]
struct ComputeArgs {
    /// Approximation method.
    #[arg(long, value_enum)]
    method: MethodArg,

    /// Index: number of series terms, or continued-fraction depth for
    /// brouncker.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,

    /// Corrector depth, 1..=3 (only with --method corrected; default 1).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=3))]
    cf_order: Option<u64>,

    /// Aitken passes (only with --method aitken-iter; default 2; needs
    /// --n >= 2*rounds + 1).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    rounds: Option<u32>,

    /// Decimal places in the rendered value.
    #[arg(long, default_value_t = 13, value_parser = clap::value_parser!(u32).range(1..=200))]
    digits: u32,

    /// Decimal rendering mode.
    #[arg(long, value_enum, default_value_t = RoundingArg::TowardZero)]
    rounding: RoundingArg,

    /// Output format.
    #[arg(long, value_enum, default_value_t = ComputeFormat::Plain)]
    format: ComputeFormat,
}

#[derive(clap::Args)]
struct TableArgs {
    /// Comma-separated indices; emitted sorted ascending, deduplicated.
    #[arg(
        long,
        value_delimiter = ',',
        default_values_t = DEFAULT_ROWS,
        value_parser = clap::value_parser!(u64).range(1..)
    )]
    rows: Vec<u64>,

    /// Decimal places in every cell.
    #[arg(long, default_value_t = 13, value_parser = clap::value_parser!(u32).range(1..=200))]
    digits: u32,

    /// Decimal rendering mode.
    #[arg(long, value_enum, default_value_t = RoundingArg::TowardZero)]
    rounding: RoundingArg,

    /// Output format.
    #[arg(long, value_enum, default_value_t = TableFormat::Markdown)]
    format: TableFormat,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Suite to run.
    #[arg(value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Raw,
    Corrected,
    SeriesA,
    SeriesB,
    SeriesC,
    Aitken,
    AitkenIter,
    Brouncker,
    Averaged,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RoundingArg {
    TowardZero,
    HalfEven,
}

impl From<RoundingArg> for Rounding {
    fn from(arg: RoundingArg) -> Rounding {
        match arg {
            RoundingArg::TowardZero => Rounding::TowardZero,
            RoundingArg::HalfEven => Rounding::HalfEven,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ComputeFormat {
    Plain,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Markdown,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Madhava,
    Identities,
    Table,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(arg: SuiteArg) -> Suite {
        match arg {
            SuiteArg::Madhava => Suite::Madhava,
            SuiteArg::Identities => Suite::Identities,
            SuiteArg::Table => Suite::Table,
            SuiteArg::All => Suite::All,
        }
    }
}

/// Parses the command line, runs the selected command, and returns the
/// process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // Prints help/version (exit 0) or the usage error (exit 2).
        Err(err) => err.exit(),
    };
    match cli.command {
        Command::Compute(args) => run_compute(&args),
        Command::Table(args) => run_table(&args),
        Command::Verify(args) => run_verify(&args),
    }
}

/// Checks flag admissibility and the per-method index floor, and resolves
/// defaulted method parameters.
fn build_spec(args: &ComputeArgs) -> Result<MethodSpec, String> {
    if args.cf_order.is_some() && args.method != MethodArg::Corrected {
        return Err("--cf-order applies only to --method corrected".to_owned());
    }
    if args.rounds.is_some() && args.method != MethodArg::AitkenIter {
        return Err("--rounds applies only to --method aitken-iter".to_owned());
    }
    let spec = match args.method {
        MethodArg::Raw => MethodSpec::Base(BaseMethod::Raw),
        MethodArg::Corrected => MethodSpec::Base(BaseMethod::Corrected {
            order: args.cf_order.unwrap_or(1),
        }),
        MethodArg::SeriesA => MethodSpec::Base(BaseMethod::SeriesA),
        MethodArg::SeriesB => MethodSpec::Base(BaseMethod::SeriesB),
        MethodArg::SeriesC => MethodSpec::Base(BaseMethod::SeriesC),
        MethodArg::Aitken => MethodSpec::Base(BaseMethod::Aitken),
        MethodArg::AitkenIter => MethodSpec::AitkenIter {
            rounds: args.rounds.unwrap_or(2),
        },
        MethodArg::Brouncker => MethodSpec::Base(BaseMethod::Brouncker),
        MethodArg::Averaged => MethodSpec::Averaged,
    };
    let floor = min_n(&spec);
    if args.n < floor {
        return Err(format!(
            "--method {} needs --n at least {floor}",
            spec.name()
        ));
    }
    Ok(spec)
}

/// Smallest index at which a method is defined.
fn min_n(spec: &MethodSpec) -> u64 {
    match spec {
        MethodSpec::Base(base) => base.min_n(),
        // Each pass consumes two indices of head-room.
        MethodSpec::AitkenIter { rounds } => 2 * u64::from(*rounds) + 1,
        MethodSpec::Averaged => 2,
    }
}

fn usage_error(message: &str) -> i32 {
    eprintln!("error: {message}");
    EXIT_USAGE
}

fn run_compute(args: &ComputeArgs) -> i32 {
    let spec = match build_spec(args) {
        Ok(spec) => spec,
        Err(message) => return usage_error(&message),
    };
    let value = match methods::value(&spec, args.n) {
        Ok(value) => value,
        Err(error) => {
            eprintln!("error: {error}");
            return EXIT_UNDEFINED;
        }
    };
    let cell = Cell::new(value, args.digits, args.rounding.into());
    let cf_order = match spec {
        MethodSpec::Base(BaseMethod::Corrected { order }) => Some(order),
        _ => None,
    };
    let rounds = match spec {
        MethodSpec::AitkenIter { rounds } => Some(rounds),
        _ => None,
    };
    let out = match args.format {
        ComputeFormat::Plain => report::compute_plain(&cell),
        ComputeFormat::Json => report::compute_json(spec.name(), args.n, cf_order, rounds, &cell),
    };
    print!("{out}");
    EXIT_OK
}

fn run_table(args: &TableArgs) -> i32 {
    let mut indices = args.rows.clone();
    indices.sort_unstable();
    indices.dedup();
    let rounding: Rounding = args.rounding.into();
    let rows: Vec<TableRow> = indices
        .into_iter()
        .map(|n| TableRow {
            n,
            a: Cell::new(series_a(n), args.digits, rounding),
            b: Cell::new(series_b(n), args.digits, rounding),
            c: Cell::new(series_c(n), args.digits, rounding),
        })
        .collect();
    let out = match args.format {
        TableFormat::Markdown => report::table_markdown(&rows),
        TableFormat::Csv => report::table_csv(&rows),
        TableFormat::Json => report::table_json(&rows, args.digits, rounding),
    };
    print!("{out}");
    EXIT_OK
}

fn run_verify(args: &VerifyArgs) -> i32 {
    let suite: Suite = args.suite.into();
    let checks = verify::run_suite(suite);
    let mut passed = 0usize;
    let mut warnings = 0usize;
    let mut failed = 0usize;
    let mut first_failure: Option<&str> = None;
    let mut out = String::new();
    for check in &checks {
        out.push_str(&format!(
            "{}: {} — {}\n",
            check.status.label(),
            check.name,
            check.detail
        ));
        match check.status {
            Status::Pass => passed += 1,
            Status::Warn => warnings += 1,
            Status::Fail => {
                failed += 1;
                first_failure.get_or_insert(check.name.as_str());
            }
        }
    }
    out.push_str(&format!(
        "{}: {} checks, {passed} passed, {warnings} warnings, {failed} failed\n",
        suite.label(),
        checks.len()
    ));
    print!("{out}");
    match first_failure {
        Some(name) => {
            eprintln!("first failing check: {name}");
            EXIT_VERIFY_FAILED
        }
        None => EXIT_OK,
    }
}
