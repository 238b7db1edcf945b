//! Command-line front end.
//!
//! Exit codes: `0` success, `1` internal verification defect, `2` invalid
//! parameters, `3` well-formed query with a negative answer.
//!
//! Two output formats are supported. `plain` prints bare values (polynomials
//! as ascending comma-separated coefficients). `records` prints one line per
//! record made of space-separated `key=value` pairs in a fixed key order,
//! starting with `cmd=<subcommand>`.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::polyint::join_coeffs;
use crate::trinomial::{coeff_A, Method};
use crate::{
    build_certificate, row_polynomial, scan_table, solve_k, verify_divides, Error, FamilyPoint,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DEFECT: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NEGATIVE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "trinom",
    version,
    about = "Reducible trinomials x^(2p) - A x^p + 1 = (x^2 - k x + 1) Q(k, p)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print A(k, p)
    #[command(allow_negative_numbers = true)]
    Coeff {
        #[arg(long)]
        p: i64,
        #[arg(long, value_parser = parse_bigint, allow_hyphen_values = true)]
        k: BigInt,
        #[arg(long, value_enum, default_value_t = MethodArg::Recurrence)]
        method: MethodArg,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Print the trinomial, the quadratic factor and the cofactor
    #[command(allow_negative_numbers = true)]
    Factor {
        #[arg(long)]
        p: i64,
        #[arg(long, value_parser = parse_bigint, allow_hyphen_values = true)]
        k: BigInt,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Check by exact division whether x^2 - k x + 1 divides the trinomial
    #[command(allow_negative_numbers = true)]
    Verify {
        #[arg(long)]
        p: i64,
        #[arg(long, value_parser = parse_bigint, allow_hyphen_values = true)]
        k: BigInt,
        #[arg(long = "A", value_parser = parse_bigint, allow_hyphen_values = true)]
        a: BigInt,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Find k with A(k, p) = A
    #[command(allow_negative_numbers = true)]
    Solve {
        #[arg(long)]
        p: i64,
        #[arg(long = "A", value_parser = parse_bigint, allow_hyphen_values = true)]
        a: BigInt,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Print the coefficients of A(k, p) as a polynomial in k
    #[command(allow_negative_numbers = true)]
    Row {
        #[arg(long)]
        p: i64,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Print (p, k, A) for 1 <= k <= kmax
    #[command(allow_negative_numbers = true)]
    Table {
        /// One or more exponents, comma-separated or repeated
        #[arg(long, value_delimiter = ',', required = true)]
        p: Vec<i64>,
        #[arg(long)]
        kmax: i64,
        /// Re-check every row by exact division (default: every 16th)
        #[arg(long)]
        verify_all: bool,
        #[command(flatten)]
        fmt: FormatArg,
    },
}

#[derive(Args, Debug)]
struct FormatArg {
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Records,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Closed,
    Recurrence,
    Gf,
    All,
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|_| format!("not an integer: {s:?}"))
}

/// Captured result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn fail(code: i32, msg: impl AsRef<str>) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {}\n", msg.as_ref()),
        }
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Inconsistency(_) => EXIT_DEFECT,
            _ => EXIT_INVALID,
        };
        Outcome::fail(code, e.to_string())
    }
}

/// One output line of `key=value` pairs.
struct Record(String);

impl Record {
    fn new(cmd: &str) -> Self {
        Record(format!("cmd={cmd}"))
    }

    fn field(mut self, key: &str, value: impl std::fmt::Display) -> Self {
        let _ = write!(self.0, " {key}={value}");
        self
    }
}

fn exponent(p: i64) -> Result<u64, Error> {
    u64::try_from(p)
        .ok()
        .filter(|p| p % 2 == 1)
        .ok_or(Error::InvalidExponent(p))
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_INVALID,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                ok(text).unwrap()
            };
        }
    };
    dispatch(cli.command).unwrap_or_else(Outcome::from)
}

fn ok(stdout: String) -> Result<Outcome, Error> {
    Ok(Outcome {
        code: EXIT_OK,
        stdout,
        stderr: String::new(),
    })
}

fn dispatch(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Coeff { p, k, method, fmt } => cmd_coeff(p, k, method, fmt.format),
        Command::Factor { p, k, fmt } => cmd_factor(p, k, fmt.format),
        Command::Verify { p, k, a, fmt } => cmd_verify(p, k, a, fmt.format),
        Command::Solve { p, a, fmt } => cmd_solve(p, a, fmt.format),
        Command::Row { p, fmt } => cmd_row(p, fmt.format),
        Command::Table {
            p,
            kmax,
            verify_all,
            fmt,
        } => cmd_table(&p, kmax, verify_all, fmt.format),
    }
}

fn cmd_coeff(p: i64, k: BigInt, method: MethodArg, format: Format) -> Result<Outcome, Error> {
    let pt = FamilyPoint::new(exponent(p)?, k)?;
    let (a, label) = match method {
        MethodArg::Closed => (coeff_A(&pt, Method::Closed)?, "closed"),
        MethodArg::Recurrence => (coeff_A(&pt, Method::Recurrence)?, "recurrence"),
        MethodArg::Gf => (coeff_A(&pt, Method::Gf)?, "gf"),
        MethodArg::All => {
            let values = Method::ALL
                .iter()
                .map(|&m| coeff_A(&pt, m).map(|v| (m, v)))
                .collect::<Result<Vec<_>, _>>()?;
            let (_, first) = &values[0];
            if let Some((m, v)) = values.iter().find(|(_, v)| v != first) {
                return Err(Error::Inconsistency(format!(
                    "routes disagree at p={}, k={}: {}={} but {}={}",
                    pt.p(),
                    pt.k(),
                    values[0].0,
                    first,
                    m,
                    v
                )));
            }
            (first.clone(), "all")
        }
    };
    ok(match format {
        Format::Plain => format!("{a}\n"),
        Format::Records => {
            let r = Record::new("coeff")
                .field("p", pt.p())
                .field("k", pt.k())
                .field("method", label)
                .field("A", &a);
            format!("{}\n", r.0)
        }
    })
}

fn cmd_factor(p: i64, k: BigInt, format: Format) -> Result<Outcome, Error> {
    let pt = FamilyPoint::new(exponent(p)?, k)?;
    let cert = build_certificate(&pt)?;
    if !cert.verified {
        return Err(Error::Inconsistency("unverified certificate".into()));
    }
    let trinomial = cert.trinomial();
    ok(match format {
        Format::Plain => format!("{}\n{}\n{}\n", trinomial, cert.quadratic, cert.cofactor),
        Format::Records => {
            let r = Record::new("factor")
                .field("p", pt.p())
                .field("k", pt.k())
                .field("A", &cert.a)
                .field("verified", cert.verified)
                .field("trinomial", &trinomial)
                .field("quadratic", &cert.quadratic)
                .field("cofactor", &cert.cofactor);
            format!("{}\n", r.0)
        }
    })
}

fn cmd_verify(p: i64, k: BigInt, a: BigInt, format: Format) -> Result<Outcome, Error> {
    let p = exponent(p)?;
    let divides = verify_divides(&a, p, &k)?;
    let word = if divides { "OK" } else { "FAIL" };
    let stdout = match format {
        Format::Plain => format!("{word}\n"),
        Format::Records => {
            let r = Record::new("verify")
                .field("p", p)
                .field("k", &k)
                .field("A", &a)
                .field("result", word);
            format!("{}\n", r.0)
        }
    };
    Ok(Outcome {
        code: if divides { EXIT_OK } else { EXIT_NEGATIVE },
        stdout,
        stderr: String::new(),
    })
}

fn cmd_solve(p: i64, a: BigInt, format: Format) -> Result<Outcome, Error> {
    let p = exponent(p)?;
    let k = solve_k(&a, p)?;
    let shown = k
        .as_ref()
        .map_or_else(|| "NONE".to_string(), ToString::to_string);
    let stdout = match format {
        Format::Plain if k.is_some() => format!("k={shown}\n"),
        Format::Plain => "NONE\n".to_string(),
        Format::Records => {
            let r = Record::new("solve")
                .field("p", p)
                .field("A", &a)
                .field("k", &shown);
            format!("{}\n", r.0)
        }
    };
    Ok(Outcome {
        code: if k.is_some() { EXIT_OK } else { EXIT_NEGATIVE },
        stdout,
        stderr: String::new(),
    })
}

fn cmd_row(p: i64, format: Format) -> Result<Outcome, Error> {
    let p = exponent(p)?;
    let row = join_coeffs(&row_polynomial(p)?);
    ok(match format {
        Format::Plain => format!("{row}\n"),
        Format::Records => format!(
            "{}\n",
            Record::new("row").field("p", p).field("coeffs", row).0
        ),
    })
}

fn cmd_table(ps: &[i64], kmax: i64, verify_all: bool, format: Format) -> Result<Outcome, Error> {
    let ps = ps
        .iter()
        .map(|&p| exponent(p))
        .collect::<Result<Vec<_>, _>>()?;
    if kmax < 1 {
        return Ok(Outcome::fail(
            EXIT_INVALID,
            format!("kmax must be at least 1 (got {kmax})"),
        ));
    }
    let rows = scan_table(&ps, kmax as u64, verify_all)?;
    let mut out = String::new();
    for row in rows {
        match format {
            Format::Plain => {
                let _ = writeln!(out, "{},{},{}", row.p, row.k, row.a);
            }
            Format::Records => {
                let r = Record::new("table")
                    .field("p", row.p)
                    .field("k", row.k)
                    .field("A", &row.a)
                    .field("prime", row.prime)
                    .field("checked", row.checked);
                let _ = writeln!(out, "{}", r.0);
            }
        }
    }
    ok(out)
}
