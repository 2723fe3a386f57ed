use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qschur::gf::Field;
use qschur::partitions::Partition;
use qschur::ppoly::{set_term_limit, Poly};
use qschur::schur::SchurContext;
use qschur::subspaces::{set_enumeration_ceiling, Subspace};
use qschur::verify::{run_sweep, Identity, Status, SweepConfig};
use qschur::Error;

#[derive(Parser, Debug)]
#[command(name = "qschur", version, about = "Finite-field Schur-type polynomials of subspaces, computed and verified exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute one value for a subspace.
    Compute {
        what: Quantity,
        #[command(flatten)]
        common: Common,
        /// Basis of the subspace, `;`-separated.
        #[arg(long, default_value = "")]
        basis: String,
        /// Outer partition, e.g. `2,1` or `[]`.
        #[arg(long, default_value = "")]
        lambda: String,
        /// Inner partition for `skew` and `tilde`.
        #[arg(long, default_value = "")]
        mu: String,
        /// Index for `H` and `E`.
        #[arg(long, allow_hyphen_values = true)]
        r: Option<i64>,
    },
    /// Print the canonical basis of V⫽U.
    Quotient {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "")]
        basis: String,
        /// Basis of the subspace U to divide out.
        #[arg(long, default_value = "")]
        sub: String,
    },
    /// List the lines of a subspace by their direction vectors.
    Lines {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "")]
        basis: String,
    },
    /// List the complete flags of a subspace.
    Flags {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "")]
        basis: String,
    },
    /// Run a verification sweep and print its report.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct Common {
    /// Field specification, e.g. `q=3` or `q=2^2:1,1,1`.
    #[arg(long, default_value = "q=2")]
    field: String,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Ceiling on the number of terms of any intermediate polynomial.
    #[arg(long)]
    max_terms: Option<usize>,
    /// Ceiling on q^dim for enumerations.
    #[arg(long)]
    max_vectors: Option<u64>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Comma-separated identities: vl-recursion, straight-recursion,
    /// flag-formula, pieri, coproduct, matrix, subspace, elementary, all.
    #[arg(long)]
    identity: Option<String>,
    /// Comma-separated field specifications.
    #[arg(long)]
    field: Option<String>,
    /// Dimension or inclusive range, e.g. `2` or `2..3`.
    #[arg(long)]
    dim: Option<String>,
    #[arg(long)]
    max_weight: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    /// JSON file with a sweep configuration; explicit flags override it.
    #[arg(long)]
    config: Option<String>,
    #[arg(long)]
    max_terms: Option<usize>,
    #[arg(long)]
    max_vectors: Option<u64>,
    /// Keep long passing values verbatim.
    #[arg(long)]
    full_values: bool,
    /// Record wall time per case (output is then not byte-identical between runs).
    #[arg(long)]
    timing: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Quantity {
    #[value(name = "S")]
    Schur,
    #[value(name = "skew")]
    Skew,
    #[value(name = "tilde")]
    Tilde,
    #[value(name = "H")]
    Complete,
    #[value(name = "E")]
    Elementary,
    #[value(name = "pi")]
    Pi,
    #[value(name = "f")]
    Additive,
}

/// Exit status 2: malformed input.
const USAGE: u8 = 2;
/// Exit status 3: well-formed input violating a precondition.
const PRECONDITION: u8 = 3;

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = if e.is_parse() || matches!(e, Error::ConfigInvalid(_)) { USAGE } else { PRECONDITION };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: USAGE, message: message.into() }
}

type Outcome = std::result::Result<(String, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Compute { what, common, basis, lambda, mu, r } => compute(what, &common, &basis, &lambda, &mu, r),
        Command::Quotient { common, basis, sub } => {
            let field = setup(&common)?;
            let v = Subspace::parse(&basis, &field)?;
            let u = Subspace::parse(&sub, &field)?;
            emit_subspace(&v.internal_quotient(&u)?, common.format)
        }
        Command::Lines { common, basis } => {
            let field = setup(&common)?;
            let lines = Subspace::parse(&basis, &field)?.enumerate_lines()?;
            let dirs: Vec<String> = lines.iter().map(|l| l.to_string()).collect();
            Ok(match common.format {
                Some(Format::Json) => (format!("{}\n", json!({ "lines": dirs })), true),
                _ => (dirs.iter().map(|d| format!("{d}\n")).collect(), true),
            })
        }
        Command::Flags { common, basis } => {
            let field = setup(&common)?;
            let flags = Subspace::parse(&basis, &field)?.enumerate_flags()?;
            let chains: Vec<Vec<String>> =
                flags.iter().map(|f| f.chain.iter().map(|s| s.to_string()).collect()).collect();
            Ok(match common.format {
                Some(Format::Json) => (format!("{}\n", json!({ "flags": chains })), true),
                _ => (
                    chains
                        .iter()
                        .map(|c| c.iter().map(|s| format!("span({s})")).collect::<Vec<_>>().join(" > ") + "\n")
                        .collect(),
                    true,
                ),
            })
        }
        Command::Verify(args) => verify(args),
    }
}

fn setup(common: &Common) -> std::result::Result<Field, Failure> {
    if let Some(t) = common.max_terms {
        set_term_limit(t);
    }
    if let Some(c) = common.max_vectors {
        set_enumeration_ceiling(c);
    }
    Ok(common.field.parse::<Field>()?)
}

fn parse_partition(text: &str) -> std::result::Result<Partition, Failure> {
    Ok(text.parse::<Partition>()?)
}

fn compute(what: Quantity, common: &Common, basis: &str, lambda: &str, mu: &str, r: Option<i64>) -> Outcome {
    let field = setup(common)?;
    let v = Subspace::parse(basis, &field)?;
    let ctx = SchurContext::new(&field);
    let lambda = parse_partition(lambda)?;
    let mu = parse_partition(mu)?;
    let need_r = || r.ok_or_else(|| usage("--r is required for H and E"));
    let value: Poly = match what {
        Quantity::Schur => ctx.schur_s(&lambda, &v)?,
        Quantity::Skew => ctx.skew_s(&lambda, &mu, &v)?,
        Quantity::Tilde => ctx.tilde_s(&lambda, &mu, &v)?,
        Quantity::Complete => ctx.h_r(need_r()?, &v)?,
        Quantity::Elementary => ctx.e_r(need_r()?, &v)?,
        Quantity::Pi => v.pi_product()?,
        Quantity::Additive => {
            let f = v.additive_poly()?;
            return Ok(match common.format {
                Some(Format::Json) => {
                    let coeffs: Vec<Value> =
                        f.coeffs().map(|(k, c)| json!({ "degree": k.to_string(), "value": c.to_string() })).collect();
                    (format!("{}\n", json!({ "field": field.to_string(), "coefficients": coeffs })), true)
                }
                _ => (format!("{f}\n"), true),
            });
        }
    };
    let fractional = value.has_fractional_exponents();
    if fractional {
        eprintln!("note: the value has fractional exponents");
    }
    Ok(match common.format {
        Some(Format::Json) => {
            let doc = json!({
                "field": field.to_string(),
                "value": value.to_string(),
                "terms": value.num_terms(),
                "fractional_exponents": fractional,
            });
            (format!("{doc}\n"), true)
        }
        _ => (format!("{value}\n"), true),
    })
}

fn emit_subspace(s: &Subspace, format: Option<Format>) -> Outcome {
    Ok(match format {
        Some(Format::Json) => {
            let basis: Vec<String> = s.basis().iter().map(|b| b.to_string()).collect();
            (format!("{}\n", json!({ "dim": s.dim(), "basis": basis })), true)
        }
        _ => (format!("{s}\n"), true),
    })
}

/// Splits a comma-separated list of field specs, keeping the commas inside
/// a modulus such as `q=2^2:1,1,1`.
fn split_fields(text: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for piece in text.split(',').map(str::trim) {
        match out.last_mut() {
            Some(last) if !piece.starts_with("q=") => {
                last.push(',');
                last.push_str(piece);
            }
            _ => out.push(piece.to_string()),
        }
    }
    out.retain(|s| !s.is_empty());
    out
}

fn parse_dims(text: &str) -> std::result::Result<(usize, usize), Failure> {
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| usage(format!("bad dimension '{s}'")));
    match text.split_once("..") {
        Some((a, b)) => Ok((num(a)?, num(b.trim_start_matches('='))?)),
        None => {
            let d = num(text)?;
            Ok((d, d))
        }
    }
}

fn verify(args: VerifyArgs) -> Outcome {
    let mut cfg = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))?;
            serde_json::from_str::<SweepConfig>(&text).map_err(|e| usage(format!("bad config {path}: {e}")))?
        }
        None => SweepConfig { timing: false, ..SweepConfig::default() },
    };
    if let Some(ids) = &args.identity {
        cfg.identities = ids
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(str::parse::<Identity>)
            .collect::<qschur::Result<Vec<_>>>()?;
    }
    if let Some(f) = &args.field {
        cfg.fields = split_fields(f);
    }
    if let Some(d) = &args.dim {
        (cfg.dim_min, cfg.dim_max) = parse_dims(d)?;
    }
    if let Some(w) = args.max_weight {
        cfg.max_weight = w;
    }
    if let Some(s) = args.seed {
        cfg.seed = s;
    }
    if let Some(t) = args.max_terms {
        cfg.max_terms = t;
    }
    if let Some(c) = args.max_vectors {
        cfg.enumeration_ceiling = c;
    }
    cfg.full_values |= args.full_values;
    cfg.timing |= args.timing;

    let report = run_sweep(&cfg)?;
    let ok = report.all_passed();
    let out = match args.format {
        Format::Json => {
            serde_json::to_string_pretty(&report).map_err(|e| usage(format!("serialization failed: {e}")))? + "\n"
        }
        Format::Text => {
            let mut s = String::new();
            for c in &report.cases {
                let status = if c.status == Status::Pass { "PASS" } else { "FAIL" };
                s.push_str(&format!("{status} {} q={} n={} lambda={} mu={} {}\n", c.identity, c.q, c.n, c.lambda, c.mu, c.basis));
                if c.status == Status::Fail {
                    s.push_str(&format!("  lhs: {}\n  rhs: {}\n", c.lhs, c.rhs));
                }
            }
            let a = report.aggregate;
            s.push_str(&format!("total {} passed {} failed {} seed {}\n", a.total, a.passed, a.failed, a.seed));
            s
        }
    };
    Ok((out, ok))
}
