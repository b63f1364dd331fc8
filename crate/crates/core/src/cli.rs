//! Command-line front end: `eval`, `solve`, `enumerate` and `verify`.
//!
//! Exit codes: 0 success, 1 verification failure or unreachable quintuple
//! parameters, 2 usage or parse error.

use std::io::{BufRead, Write};

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::family::{Family, Tuple, TupleShape};
use crate::json::parse_list;
use crate::verify::{enumerate_descartes, enumerate_pyth, enumerate_uv, roundtrip_report_with_workers};

/// Caps the worker count of `verify`.
pub const WORKERS_ENV: &str = "PYTHPARAM_WORKERS";

#[derive(Debug, Parser)]
#[command(
    name = "pythparam",
    version,
    about = "Evaluate, solve, enumerate and verify polynomial parametrizations of Pythagorean and Descartes tuples",
    after_help = family_help()
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a family at positional parameters (or JSON records on stdin).
    Eval {
        family: String,
        /// Comma-separated parameters in the family's positional order.
        #[arg(long, allow_hyphen_values = true)]
        params: Option<String>,
        #[arg(long, value_enum, default_value_t = Output::Json)]
        output: Output,
    },
    /// Find parameters reproducing a tuple (or JSON tuples on stdin).
    Solve {
        family: String,
        /// Comma-separated tuple entries.
        #[arg(long, allow_hyphen_values = true)]
        tuple: Option<String>,
        #[arg(long, value_enum, default_value_t = Output::Json)]
        output: Output,
    },
    /// Stream every tuple of the family's shape with entries bounded by B.
    Enumerate {
        family: String,
        #[arg(long)]
        bound: u32,
        #[arg(long, value_enum, default_value_t = Output::Json)]
        output: Output,
    },
    /// Solve and re-evaluate every tuple up to the bound; exit 0 iff all round-trip.
    Verify {
        family: String,
        #[arg(long)]
        bound: u32,
        /// Worker threads (default: all cores, capped by PYTHPARAM_WORKERS).
        #[arg(long)]
        workers: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Csv,
}

fn family_help() -> String {
    let mut s = String::from("Families and their positional parameters:\n");
    for f in Family::ALL {
        let note = if f.is_covering() { "" } else { "  (eval only)" };
        s.push_str(&format!("  {:<11} {}{note}\n", f.name(), f.param_fields().join(",")));
    }
    s.push_str("\nTuples: Pythagorean tuples list the hypotenuse last; uv solutions are x1..xk,u,v; Descartes quadruples are b1,b2,b3,b4.");
    s
}

fn tuple_header(shape: TupleShape) -> Vec<String> {
    match shape {
        TupleShape::Pyth(n) => (1..=n).map(|i| format!("x{i}")).collect(),
        TupleShape::Uv(k) => (1..=k)
            .map(|i| format!("x{i}"))
            .chain(["u".to_string(), "v".to_string()])
            .collect(),
        TupleShape::Descartes => (1..=4).map(|i| format!("b{i}")).collect(),
    }
}

fn csv_row(values: &[num_bigint::BigInt]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

enum Failure {
    Usage(String),
    Verification,
    Unreachable(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnreachableParams(_) => Failure::Unreachable(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, S>(args: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(stdout, "{rendered}") } else { write!(stderr, "{rendered}") };
            return code;
        }
    };
    match dispatch(cli.command, stdin, stdout) {
        Ok(()) => 0,
        Err(Failure::Verification) => 1,
        Err(Failure::Unreachable(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

fn parse_family(name: &str) -> Result<Family, Failure> {
    name.parse().map_err(|e: Error| Failure::Usage(e.to_string()))
}

/// Non-empty lines of stdin, or the single positional argument.
fn inputs(arg: Option<String>, stdin: &mut dyn BufRead) -> Result<Vec<Input>, Failure> {
    if let Some(a) = arg {
        return Ok(vec![Input::List(a)]);
    }
    let mut out = Vec::new();
    for line in stdin.lines() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        out.push(if line.starts_with('{') { Input::Json(line.to_string()) } else { Input::List(line.to_string()) });
    }
    Ok(out)
}

enum Input {
    List(String),
    Json(String),
}

fn dispatch(cmd: Command, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::Eval { family, params, output } => {
            let f = parse_family(&family)?;
            if output == Output::Csv {
                writeln!(out, "{}", tuple_header(f.shape()).join(","))?;
            }
            for input in inputs(params, stdin)? {
                let p = match input {
                    Input::List(s) => f.params_from_flat(&parse_list(&s)?)?,
                    Input::Json(s) => f.params_from_json(&s)?,
                };
                let t = p.eval();
                match output {
                    Output::Json => writeln!(out, "{}", t.to_json())?,
                    Output::Csv => writeln!(out, "{}", csv_row(&t.to_flat()))?,
                }
            }
        }
        Command::Solve { family, tuple, output } => {
            let f = parse_family(&family)?;
            if !f.is_covering() {
                return Err(Failure::Usage(format!("family {f} does not cover all tuples and has no solver")));
            }
            if output == Output::Csv {
                writeln!(out, "{}", f.param_fields().join(","))?;
            }
            for input in inputs(tuple, stdin)? {
                let t: Tuple = match input {
                    Input::List(s) => f.tuple_from_flat(parse_list(&s)?)?,
                    Input::Json(s) => f.tuple_from_json(&s)?,
                };
                let p = f.solve(&t)?;
                match output {
                    Output::Json => writeln!(out, "{}", p.to_json())?,
                    Output::Csv => writeln!(out, "{}", csv_row(&p.to_flat()))?,
                }
            }
        }
        Command::Enumerate { family, bound, output } => {
            let f = parse_family(&family)?;
            let tuples: Box<dyn Iterator<Item = Tuple>> = match f.shape() {
                TupleShape::Pyth(n) => Box::new(enumerate_pyth(n, bound).map(Tuple::Pyth)),
                TupleShape::Uv(k) => Box::new(enumerate_uv(k, bound).map(Tuple::Uv)),
                TupleShape::Descartes => Box::new(enumerate_descartes(bound).map(Tuple::Descartes)),
            };
            if output == Output::Csv {
                writeln!(out, "{}", tuple_header(f.shape()).join(","))?;
            }
            for t in tuples {
                match output {
                    Output::Json => writeln!(out, "{}", t.to_json())?,
                    Output::Csv => writeln!(out, "{}", csv_row(&t.to_flat()))?,
                }
            }
        }
        Command::Verify { family, bound, workers } => {
            let f = parse_family(&family)?;
            if !f.is_covering() {
                return Err(Failure::Usage(format!("family {f} does not cover all tuples and cannot be verified")));
            }
            let cap = match std::env::var(WORKERS_ENV) {
                Ok(v) => Some(v.trim().parse::<usize>().map_err(|_| {
                    Failure::Usage(format!("{WORKERS_ENV} must be a positive integer, got {v:?}"))
                })?),
                Err(_) => None,
            };
            let requested = workers.or(cap).unwrap_or_else(rayon::current_num_threads);
            let n = cap.map_or(requested, |c| requested.min(c)).max(1);
            let report = roundtrip_report_with_workers(f, bound, Some(n));
            writeln!(out, "{}", serde_json::to_string(&report).expect("report serializes"))?;
            if !report.verified() {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}
