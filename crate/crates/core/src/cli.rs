//! Command-line front end.
//!
//! Exit codes: 0 when the command succeeds or the checked identity holds,
//! 1 when an identity is violated, 2 on bad input.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bessel::{bessel_limit_probe, bessel_series, bessel_symmetry_gap, DEFAULT_DEGREE_CUT};
use crate::binomial::{binomial_coefficient, binomial_coefficient_in, verify_binomial};
use crate::error::{Error, Result};
use crate::integral::{discrete_identity_sides, verify_integral, QuadratureRule, QuadratureSpec};
use crate::jack::{jack_evaluate, jack_monomial_expansion, JackParams};
use crate::partitions::Partition;
use crate::rational::{is_positive, parse_rational, parse_rational_list, to_f64, Rational};
use crate::shifted::shifted_eval;
use crate::suite::run_suite;
use crate::thetadim::{thetadim, thetadim_by_expansion, thetadim_iterated};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "jackpoly", version, about = "Exact computations with Jack and shifted Jack polynomials")]
pub struct RunConfig {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ordinary Jack polynomials.
    #[command(subcommand)]
    Jack(JackCommand),
    /// Shifted Jack polynomials.
    #[command(subcommand)]
    Shifted(ShiftedCommand),
    /// Generalized binomial coefficients and the binomial formula.
    #[command(subcommand)]
    Binom(BinomCommand),
    /// θ-dimension of λ/μ.
    Thetadim(ThetaDimArgs),
    /// Truncated multivariate Bessel series.
    Bessel(BesselArgs),
    /// Integral representation checks.
    #[command(subcommand)]
    Integral(IntegralCommand),
    /// Identity campaigns.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Debug, Subcommand)]
pub enum JackCommand {
    /// Monomial expansion of P_μ in n variables.
    Expand {
        #[arg(long, value_parser = partition_arg)]
        mu: Partition,
        #[arg(long, value_parser = theta_arg)]
        theta: Rational,
        #[arg(long)]
        n: usize,
    },
    /// Exact value of P_μ at a rational point.
    Eval {
        #[arg(long, value_parser = partition_arg)]
        mu: Partition,
        #[arg(long, value_parser = theta_arg)]
        theta: Rational,
        /// Defaults to the number of coordinates in --point.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_parser = rational_list_arg)]
        point: RationalList,
    },
}

#[derive(Debug, Subcommand)]
pub enum ShiftedCommand {
    /// Exact value P*_μ(λ).
    Eval {
        #[arg(long, value_parser = partition_arg)]
        mu: Partition,
        #[arg(long, value_parser = partition_arg)]
        lambda: Partition,
        #[arg(long, value_parser = theta_arg)]
        theta: Rational,
        /// Defaults to the larger of the two lengths.
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum BinomCommand {
    /// The coefficient P*_μ(λ)/H(μ).
    Coeff {
        #[arg(long, value_parser = partition_arg)]
        lambda: Partition,
        #[arg(long, value_parser = partition_arg)]
        mu: Partition,
        #[arg(long, value_parser = theta_arg)]
        theta: Rational,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Both sides of the binomial formula, compared exactly.
    Verify {
        #[arg(long, value_parser = partition_arg)]
        lambda: Partition,
        #[arg(long, value_parser = theta_arg)]
        theta: Rational,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Args)]
pub struct ThetaDimArgs {
    #[arg(long, value_parser = partition_arg)]
    pub lambda: Partition,
    #[arg(long, value_parser = partition_arg, default_value = "0")]
    pub mu: Partition,
    #[arg(long, value_parser = theta_arg)]
    pub theta: Rational,
    /// Defaults to the length of λ.
    #[arg(long)]
    pub n: Option<usize>,
    /// Also compute the value by expansion and by iterated one-box steps.
    #[arg(long)]
    pub check: bool,
}

#[derive(Debug, Args)]
pub struct BesselArgs {
    #[arg(long, value_parser = float_list_arg)]
    pub l: FloatList,
    #[arg(long, value_parser = float_list_arg)]
    pub x: FloatList,
    #[arg(long, value_parser = theta_arg)]
    pub theta: Rational,
    #[arg(long, default_value_t = DEFAULT_DEGREE_CUT)]
    pub degree_cut: usize,
    /// Also report the distance from the finite-κ quotient to the series.
    #[arg(long)]
    pub kappa: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum IntegralCommand {
    /// Quadrature of the integral representation against exact P_μ(λ).
    Verify {
        #[arg(long, value_parser = partition_arg)]
        mu: Partition,
        /// Real, pairwise distinct coordinates.
        #[arg(long, value_parser = float_list_arg)]
        lambda: FloatList,
        #[arg(long, value_parser = theta_arg)]
        theta: Rational,
        #[arg(long, default_value_t = 16)]
        nodes_per_dim: usize,
        /// Defaults to Legendre for integer θ and Jacobi otherwise.
        #[arg(long, value_enum)]
        rule: Option<RuleArg>,
        /// Largest relative error still counted as agreement.
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
    },
    /// The exact discrete identity behind the integral.
    Discrete {
        #[arg(long, value_parser = partition_arg)]
        mu: Partition,
        #[arg(long, value_parser = partition_arg)]
        lambda: Partition,
        #[arg(long, value_parser = theta_arg)]
        theta: Rational,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RuleArg {
    GaussLegendre,
    GaussJacobi,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Every exact identity on all partitions up to --max-size.
    Suite {
        #[arg(long, default_value_t = 4)]
        max_size: usize,
    },
}

// Newtypes so clap does not treat the lists as repeated arguments.
#[derive(Debug, Clone)]
pub struct RationalList(pub Vec<Rational>);

#[derive(Debug, Clone)]
pub struct FloatList(pub Vec<f64>);

fn partition_arg(s: &str) -> std::result::Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn theta_arg(s: &str) -> std::result::Result<Rational, String> {
    let t = parse_rational(s).map_err(|e| e.to_string())?;
    if !is_positive(&t) {
        return Err(format!("theta must be positive, got {t}"));
    }
    Ok(t)
}

fn rational_list_arg(s: &str) -> std::result::Result<RationalList, String> {
    parse_rational_list(s).map(RationalList).map_err(|e| e.to_string())
}

fn float_list_arg(s: &str) -> std::result::Result<FloatList, String> {
    s.split(',')
        .map(|p| {
            let v: f64 = p.trim().parse().map_err(|_| format!("bad number {p:?}"))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(format!("non-finite number {p:?}"))
            }
        })
        .collect::<std::result::Result<_, _>>()
        .map(FloatList)
}

/// Fifteen significant digits.
pub fn format_float(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        format!("{:.*}", (14 - exp) as usize, x)
    } else {
        format!("{x:.14e}")
    }
}

/// A finished command: what to print in each format and whether the checked
/// property held.
struct Report {
    text: String,
    json: Value,
    holds: bool,
}

impl Report {
    fn value(text: String, json: Value) -> Self {
        Report { text, json, holds: true }
    }
}

fn ser(v: impl serde::Serialize) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn execute(command: &Command) -> Result<Report> {
    match command {
        Command::Jack(JackCommand::Expand { mu, theta, n }) => {
            let params = JackParams::new(*n, theta.clone())?;
            let expansion = jack_monomial_expansion(mu, &params);
            let text = expansion.to_poly()?.to_string();
            Ok(Report::value(text, ser(&expansion)))
        }
        Command::Jack(JackCommand::Eval { mu, theta, n, point }) => {
            let point = &point.0;
            if let Some(n) = n {
                if *n != point.len() {
                    return Err(Error::Domain(format!("--n is {n} but --point has {} coordinates", point.len())));
                }
            }
            let value = jack_evaluate(mu, point, theta)?;
            Ok(Report::value(
                value.to_string(),
                json!({ "mu": mu, "theta": theta.to_string(), "value": value.to_string() }),
            ))
        }
        Command::Shifted(ShiftedCommand::Eval { mu, lambda, theta, n }) => {
            let n = n.unwrap_or_else(|| mu.length().max(lambda.length()).max(1));
            let value = shifted_eval(mu, lambda, &JackParams::new(n, theta.clone())?)?;
            Ok(Report::value(
                value.to_string(),
                json!({ "mu": mu, "lambda": lambda, "theta": theta.to_string(), "n": n, "value": value.to_string() }),
            ))
        }
        Command::Binom(BinomCommand::Coeff { lambda, mu, theta, n }) => {
            let value = match n {
                Some(n) => binomial_coefficient_in(lambda, mu, &JackParams::new(*n, theta.clone())?)?,
                None => binomial_coefficient(lambda, mu, theta)?,
            };
            Ok(Report::value(
                value.to_string(),
                json!({ "lambda": lambda, "mu": mu, "theta": theta.to_string(), "value": value.to_string() }),
            ))
        }
        Command::Binom(BinomCommand::Verify { lambda, theta, n }) => {
            let report = verify_binomial(lambda, &JackParams::new(*n, theta.clone())?)?;
            let text = format!(
                "lhs: {}\nrhs: {}\nequal: {}\nmax_abs_diff: {}",
                report.lhs.to_poly()?,
                report.rhs.to_poly()?,
                report.equal,
                report.max_abs_diff
            );
            Ok(Report { text, holds: report.equal, json: ser(&report) })
        }
        Command::Thetadim(args) => {
            let n = args.n.unwrap_or(args.lambda.length()).max(1);
            let params = JackParams::new(n, args.theta.clone())?;
            let dim = thetadim(&args.lambda, &args.mu, &params)?;
            if !args.check {
                return Ok(Report::value(dim.value.to_string(), ser(&dim)));
            }
            let expansion = thetadim_by_expansion(&args.lambda, &args.mu, &params)?;
            let iterated = thetadim_iterated(&args.lambda, &args.mu, &params)?;
            let holds = expansion == dim.value && iterated == dim.value;
            let text = format!("closed: {}\nexpansion: {expansion}\niterated: {iterated}\nagree: {holds}", dim.value);
            let mut json = ser(&dim);
            json["expansion"] = json!(expansion.to_string());
            json["iterated"] = json!(iterated.to_string());
            json["agree"] = json!(holds);
            Ok(Report { text, json, holds })
        }
        Command::Bessel(args) => {
            let eval = bessel_series(&args.l.0, &args.x.0, &args.theta, args.degree_cut)?;
            let gap = bessel_symmetry_gap(&args.l.0, &args.x.0, &args.theta, args.degree_cut)?;
            let mut text = format!(
                "value: {}\ntail_estimate: {}\nsymmetry_gap: {}",
                format_float(eval.value),
                format_float(eval.tail_estimate),
                format_float(gap)
            );
            let mut json = ser(&eval);
            json["symmetry_gap"] = json!(gap);
            if let Some(kappa) = args.kappa {
                let distance = bessel_limit_probe(&args.l.0, &args.x.0, &args.theta, kappa, args.degree_cut)?;
                text.push_str(&format!("\nlimit_distance(kappa={kappa}): {}", format_float(distance)));
                json["kappa"] = json!(kappa);
                json["limit_distance"] = json!(distance);
            }
            Ok(Report::value(text, json))
        }
        Command::Integral(IntegralCommand::Verify { mu, lambda, theta, nodes_per_dim, rule, tolerance }) => {
            let spec = match rule {
                None => QuadratureSpec::for_theta(*nodes_per_dim, theta),
                Some(RuleArg::GaussLegendre) => QuadratureSpec::legendre(*nodes_per_dim),
                Some(RuleArg::GaussJacobi) => QuadratureSpec::jacobi(*nodes_per_dim, to_f64(theta) - 1.0),
            };
            let check = verify_integral(mu, &lambda.0, theta, &spec)?;
            let rule = match check.spec.rule {
                QuadratureRule::GaussLegendre => "gauss_legendre",
                QuadratureRule::GaussJacobi => "gauss_jacobi",
            };
            let text = format!(
                "rule: {rule}\nnodes_per_dim: {}\nlhs: {}\nrhs: {}\nrel_err: {}",
                check.spec.nodes_per_dim,
                format_float(check.lhs),
                format_float(check.rhs),
                format_float(check.rel_err)
            );
            Ok(Report { text, holds: check.rel_err <= *tolerance, json: ser(&check) })
        }
        Command::Integral(IntegralCommand::Discrete { mu, lambda, theta, n }) => {
            let (lhs, rhs) = discrete_identity_sides(mu, lambda, &JackParams::new(*n, theta.clone())?)?;
            let holds = lhs == rhs;
            Ok(Report {
                text: format!("lhs: {lhs}\nrhs: {rhs}\nequal: {holds}"),
                json: json!({ "mu": mu, "lambda": lambda, "theta": theta.to_string(), "n": n,
                              "lhs": lhs.to_string(), "rhs": rhs.to_string(), "equal": holds }),
                holds,
            })
        }
        Command::Verify(VerifyCommand::Suite { max_size }) => {
            let checks = run_suite(*max_size);
            let holds = checks.iter().all(|c| c.passed());
            let text = checks
                .iter()
                .map(|c| {
                    let status = if c.passed() { "PASS" } else { "FAIL" };
                    let mut line = format!("{status} {} ({} cases)", c.name, c.cases);
                    for f in &c.failures {
                        line.push_str(&format!("\n  {f}"));
                    }
                    line
                })
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Report { text, holds, json: json!({ "max_size": max_size, "checks": checks, "passed": holds }) })
        }
    }
}

/// Parses `args` (program name first), runs the command and writes the
/// report to `out` unless `--output` redirects it. Returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    let report = match execute(&config.command) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return match e {
                Error::Consistency(_) => EXIT_VIOLATION,
                _ => EXIT_USAGE,
            };
        }
    };
    let body = match config.format {
        Format::Text => report.text,
        Format::Json => serde_json::to_string_pretty(&report.json).expect("json values print"),
    };
    let written = match &config.output {
        Some(path) => std::fs::write(path, format!("{body}\n")),
        None => writeln!(out, "{body}"),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    if report.holds {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
