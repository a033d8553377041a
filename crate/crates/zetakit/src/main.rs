use clap::{Parser, Subcommand, ValueEnum};
use zetakit::cli::{cmd_eval, cmd_order_cmp, cmd_sum, cmd_table, cmd_verify, OutputRecord, Status};
use zetakit::numverify::{NumericConfig, NumverifyError};
use zetakit::values::FunctionId;

/// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
/// 3 unsupported value.
#[derive(Parser)]
#[command(
    name = "zetakit",
    version,
    about = "Exact integer-argument values of the zeta, eta, lambda and beta functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Exact,
    Float,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate zeta, eta, lambda or beta at an integer argument
    Eval {
        #[arg(value_parser = parse_function)]
        function: FunctionId,
        #[arg(allow_negative_numbers = true, value_parser = clap::value_parser!(i64).range(-1000..=1000))]
        s: i64,
        #[arg(long, value_enum, default_value_t = FormatArg::Exact)]
        format: FormatArg,
        /// Significant digits of float output
        #[arg(long, default_value_t = 15, value_parser = clap::value_parser!(u32).range(1..=15))]
        digits: u32,
        #[arg(long)]
        json: bool,
    },
    /// Sum a polynomial in u over the segment from a to b (any integer pair)
    Sum {
        /// Polynomial expression, e.g. "u^2 + 3*u - 1/2"
        #[arg(long)]
        poly: String,
        #[arg(long, allow_negative_numbers = true, value_parser = segment_endpoint())]
        from: i64,
        #[arg(long, allow_negative_numbers = true, value_parser = segment_endpoint())]
        to: i64,
        #[arg(long)]
        json: bool,
    },
    /// Print exact values for each integer argument in a range
    Table {
        #[arg(value_parser = parse_function)]
        function: FunctionId,
        #[arg(long, allow_negative_numbers = true, value_parser = clap::value_parser!(i64).range(-1000..=1000))]
        from: i64,
        #[arg(long, allow_negative_numbers = true, value_parser = clap::value_parser!(i64).range(-1000..=1000))]
        to: i64,
        #[arg(long)]
        json: bool,
    },
    /// Run a numeric verification suite
    Verify {
        /// One of: values, identities, functional-equation, all
        #[arg(long)]
        suite: String,
        #[arg(long, value_parser = positive_f64)]
        tol: Option<f64>,
        #[arg(long = "max-terms", value_parser = at_least_one)]
        max_terms: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Operations on the reordered integer line
    Order {
        #[command(subcommand)]
        command: OrderCommand,
    },
}

#[derive(Subcommand)]
enum OrderCommand {
    /// Compare two integers under the order 0, 1, 2, ..., -2, -1
    Cmp {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
    },
}

fn parse_function(s: &str) -> Result<FunctionId, String> {
    FunctionId::parse(s).ok_or_else(|| "expected one of: zeta, eta, lambda, beta".to_string())
}

fn positive_f64(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err("tolerance must be a positive finite number".to_string())
    }
}

fn at_least_one(s: &str) -> Result<usize, String> {
    let v: usize = s.parse().map_err(|e| format!("{e}"))?;
    if v >= 1 {
        Ok(v)
    } else {
        Err("max-terms must be at least 1".to_string())
    }
}

fn segment_endpoint() -> clap::builder::RangedI64ValueParser<i64> {
    clap::value_parser!(i64).range(-1_000_000_000..=1_000_000_000)
}

fn exit_code(status: Status) -> i32 {
    match status {
        Status::Ok => 0,
        Status::Unsupported => 3,
        Status::Error => 2,
    }
}

fn emit_record(record: &OutputRecord, json: bool, float_only: bool, both: bool) -> i32 {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(record).expect("record serializes")
        );
        return exit_code(record.status);
    }
    match record.status {
        Status::Ok => {
            let exact = record.exact_text().expect("ok record has exact value");
            if both {
                println!("{exact}");
                if let Some(f) = &record.float {
                    println!("{f}");
                }
            } else if float_only {
                println!("{}", record.float.as_deref().unwrap_or("unavailable"));
            } else {
                println!("{exact}");
            }
        }
        Status::Unsupported => {
            eprintln!(
                "zetakit: unsupported: {}",
                record.reason.as_deref().unwrap_or("no reason recorded")
            );
        }
        Status::Error => {
            eprintln!(
                "zetakit: {}",
                record.reason.as_deref().unwrap_or("unknown error")
            );
        }
    }
    exit_code(record.status)
}

fn run(command: Command) -> i32 {
    match command {
        Command::Eval {
            function,
            s,
            format,
            digits,
            json,
        } => {
            let record = cmd_eval(function, s, digits);
            emit_record(
                &record,
                json,
                format == FormatArg::Float,
                format == FormatArg::Both,
            )
        }
        Command::Sum {
            poly,
            from,
            to,
            json,
        } => {
            let record = cmd_sum(&poly, from, to);
            emit_record(&record, json, false, false)
        }
        Command::Table {
            function,
            from,
            to,
            json,
        } => {
            let rows = cmd_table(function, from, to);
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&rows).expect("rows serialize")
                );
            } else {
                for (s, row) in (from.min(to)..=from.max(to)).zip(&rows) {
                    match row.status {
                        Status::Ok => println!(
                            "{function}({s}) = {}",
                            row.exact_text().expect("ok row has exact value")
                        ),
                        _ => println!(
                            "{function}({s}) unsupported: {}",
                            row.reason.as_deref().unwrap_or("no reason recorded")
                        ),
                    }
                }
            }
            0
        }
        Command::Verify {
            suite,
            tol,
            max_terms,
            json,
        } => {
            let mut cfg = NumericConfig::default();
            if let Some(t) = tol {
                cfg.tolerance = t;
            }
            if let Some(n) = max_terms {
                cfg.max_terms = n;
            }
            match cmd_verify(&suite, &cfg) {
                Ok(reports) => {
                    let failed = reports.iter().filter(|r| !r.passed).count();
                    if json {
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&reports).expect("reports serialize")
                        );
                    } else {
                        for report in &reports {
                            println!("{report}");
                        }
                        println!(
                            "{} checks, {} passed, {} failed",
                            reports.len(),
                            reports.len() - failed,
                            failed
                        );
                    }
                    i32::from(failed > 0)
                }
                Err(err @ NumverifyError::UnknownSuite(_)) => {
                    eprintln!("zetakit: {err}");
                    2
                }
                Err(err) => {
                    eprintln!("zetakit: verification could not run: {err}");
                    2
                }
            }
        }
        Command::Order {
            command: OrderCommand::Cmp { a, b },
        } => {
            println!("{}", cmd_order_cmp(a, b));
            0
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // clap reports usage problems on exit code 2
        Err(err) => err.exit(),
    };
    std::process::exit(run(cli.command));
}
