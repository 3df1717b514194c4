//! Command-line front end: `eval`, `verify` and `list`.
//!
//! Exit codes: 0 success, 1 an identity check failed, 2 a domain or
//! evaluation error (reported as JSON), 64 malformed arguments.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::json;

use crate::barnes::{barnes_zeta_with, log_multiple_gamma, BarnesOptions, BarnesRequest, EvalResult, Method, Route};
use crate::bernoulli::multiple_bernoulli;
use crate::bilateral::{f_minus, f_plus, g_function, xi, BilateralRequest};
use crate::dcx::DirectedComplex;
use crate::error::{Error, Result};
use crate::params::ParameterVector;
use crate::qprod::{dedekind_eta, qpoch_multi, qpoch_tilde, QData};
use crate::verify::{run_suite, IdentityReport, SuiteOptions, SUITES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "bizeta", version, about = "Barnes and bilateral zeta functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one function at one point.
    Eval(EvalArgs),
    /// Run identity checks.
    Verify(VerifyArgs),
    /// List the available functions and check suites.
    List,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Function {
    Barnes,
    Xi,
    Bernoulli,
    #[value(name = "gamma_multiple")]
    GammaMultiple,
    Eta,
    Qpoch,
    #[value(name = "qpoch_tilde")]
    QpochTilde,
    #[value(name = "f_plus")]
    FPlus,
    #[value(name = "f_minus")]
    FMinus,
    G,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Auto,
    Direct,
    Fourier,
    Continuation,
}

#[derive(Debug, clap::Args)]
struct EvalArgs {
    #[arg(value_enum)]
    function: Function,
    /// Complex variable s, e.g. `2.5`, `0.5+14.1i`.
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
    /// Point z; `mod@arg` gives an explicit argument.
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    /// Comma-separated parameters ω_1, ..., ω_r.
    #[arg(long, allow_hyphen_values = true)]
    omegas: Option<String>,
    /// The bilateral parameter ω_0.
    #[arg(long, allow_hyphen_values = true)]
    omega0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    tau: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// Comma-separated q_1, ..., q_r.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    /// Degree of the Bernoulli polynomial.
    #[arg(long)]
    n: Option<usize>,
    /// Number of leading q parameters with modulus above one.
    #[arg(long)]
    l: Option<usize>,
    #[arg(long, value_enum, default_value = "auto")]
    route: RouteArg,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    #[value(alias = "json")]
    Jsonl,
    Csv,
    Text,
}

#[derive(Debug, clap::Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    /// Comma-separated suite names; all suites when omitted.
    #[arg(long, alias = "suites", value_delimiter = ',')]
    suite: Vec<String>,
    /// Samples per parameter family, overriding each check's default.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, value_enum, default_value = "jsonl")]
    format: Format,
    /// Record per-check wall-clock time (makes output run-dependent).
    #[arg(long)]
    timing: bool,
}

/// Parses `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i`, with optional exponents.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("cannot parse complex number '{text}'"));
    if t.is_empty() {
        return Err(bad());
    }
    let num = |s: &str| -> Result<f64> {
        match s {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => s.parse::<f64>().map_err(|_| bad()),
        }
    };
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        return Ok(Complex64::new(t.parse::<f64>().map_err(|_| bad())?, 0.0));
    };
    // Split at the last sign that is neither leading nor part of an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    match split {
        Some(i) => Ok(Complex64::new(body[..i].parse::<f64>().map_err(|_| bad())?, num(&body[i..])?)),
        None => Ok(Complex64::new(0.0, num(body)?)),
    }
}

/// Parses a complex number or `modulus@argument`.
pub fn parse_directed(text: &str) -> Result<DirectedComplex> {
    match text.split_once('@') {
        Some((m, a)) => {
            let m = m.trim().parse::<f64>().map_err(|_| Error::Parse(format!("bad modulus in '{text}'")))?;
            let a = a.trim().parse::<f64>().map_err(|_| Error::Parse(format!("bad argument in '{text}'")))?;
            DirectedComplex::new(m, a)
        }
        None => DirectedComplex::from_principal(parse_complex(text)?),
    }
}

fn parse_list<T>(text: &str, f: impl Fn(&str) -> Result<T>) -> Result<Vec<T>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(f).collect()
}

fn need<'a>(v: &'a Option<String>, name: &str) -> Result<&'a str> {
    v.as_deref().ok_or_else(|| Error::Parse(format!("--{name} is required for this function")))
}

fn plain(value: Complex64, tol: f64, method: Method) -> EvalResult {
    EvalResult { value, err_estimate: tol * value.norm(), terms_used: 0, method }
}

fn evaluate(a: &EvalArgs) -> Result<EvalResult> {
    let tol = a.tol;
    let omegas = || -> Result<ParameterVector> {
        Ok(ParameterVector::new(parse_list(a.omegas.as_deref().unwrap_or(""), parse_directed)?))
    };
    let s = || parse_complex(need(&a.s, "s")?);
    let z = || parse_directed(need(&a.z, "z")?);
    let tau = || parse_complex(need(&a.tau, "tau")?);
    let qdata = || -> Result<QData> {
        Ok(QData::new(parse_complex(need(&a.x, "x")?)?, parse_list(need(&a.q, "q")?, parse_complex)?))
    };
    match a.function {
        Function::Barnes => {
            let route = match a.route {
                RouteArg::Auto => Route::Auto,
                RouteArg::Direct => Route::Direct,
                RouteArg::Fourier => Route::Fourier,
                RouteArg::Continuation => Route::Continuation,
            };
            let opts = BarnesOptions { route, ..Default::default() };
            barnes_zeta_with(&BarnesRequest::new(s()?, z()?, omegas()?), tol, &opts)
        }
        Function::Xi => {
            xi(&BilateralRequest::new(s()?, z()?, parse_directed(need(&a.omega0, "omega0")?)?, omegas()?)?, tol)
        }
        Function::Bernoulli => {
            let n = a.n.ok_or_else(|| Error::Parse("--n is required for bernoulli".into()))?;
            let v = multiple_bernoulli(n, z()?.to_complex(), &omegas()?.values())?;
            Ok(plain(v, 0.0, Method::SpecialValue))
        }
        Function::GammaMultiple => {
            let v = log_multiple_gamma(&z()?, &omegas()?, tol)?.exp();
            Ok(plain(v, 1e-7, Method::Continuation))
        }
        Function::Eta => Ok(plain(dedekind_eta(tau()?, tol)?, tol, Method::Direct)),
        Function::Qpoch => Ok(plain(qpoch_multi(&qdata()?, tol)?, tol, Method::Direct)),
        Function::QpochTilde => {
            let l = a.l.ok_or_else(|| Error::Parse("--l is required for qpoch_tilde".into()))?;
            Ok(plain(qpoch_tilde(&qdata()?, l, tol)?, tol, Method::Direct))
        }
        Function::FPlus => f_plus(s()?, z()?.to_complex(), &omegas()?, tol),
        Function::FMinus => f_minus(s()?, z()?.to_complex(), &omegas()?, tol),
        Function::G => g_function(s()?, tau()?, tol),
    }
}

fn error_json(e: &Error) -> String {
    json!({"error": {"kind": e.kind(), "message": e.to_string()}}).to_string()
}

fn write_reports(out: &mut dyn Write, reports: &[IdentityReport], format: Format) -> std::io::Result<()> {
    match format {
        Format::Jsonl => {
            for r in reports {
                writeln!(out, "{}", serde_json::to_string(r).expect("report serializes"))?;
            }
        }
        Format::Csv => {
            writeln!(out, "name,abs_residual,rel_residual,tol,pass,elapsed_ms")?;
            for r in reports {
                writeln!(
                    out,
                    "\"{}\",{:e},{:e},{:e},{},{}",
                    r.name, r.abs_residual, r.rel_residual, r.tol, r.pass, r.elapsed_ms
                )?;
            }
        }
        Format::Text => {
            for r in reports {
                let status = if r.pass { "PASS" } else { "FAIL" };
                write!(
                    out,
                    "{status} {:<44} rel {:.3e} abs {:.3e} tol {:.0e}",
                    r.name, r.rel_residual, r.abs_residual, r.tol
                )?;
                if let Some(e) = &r.error {
                    write!(out, " error: {e}")?;
                }
                writeln!(out)?;
            }
            let failed = reports.iter().filter(|r| !r.pass).count();
            writeln!(out, "{} checks, {} failed", reports.len(), failed)?;
        }
    }
    Ok(())
}

/// Runs the command line `args` (including the program name), writing to `out`.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = write!(out, "{e}");
            return code;
        }
    };
    match cli.command {
        Command::List => {
            let _ =
                writeln!(out, "functions: barnes xi bernoulli gamma_multiple eta qpoch qpoch_tilde f_plus f_minus g");
            let _ = writeln!(out, "suites: {}", SUITES.join(" "));
            EXIT_OK
        }
        Command::Eval(a) => match evaluate(&a) {
            Ok(r) => {
                let v = json!({
                    "value": {"re": r.value.re, "im": r.value.im},
                    "err_estimate": r.err_estimate,
                    "terms_used": r.terms_used,
                    "method": r.method.as_str(),
                });
                let _ = writeln!(out, "{v}");
                EXIT_OK
            }
            Err(Error::Parse(m)) => {
                let _ = writeln!(out, "{}", error_json(&Error::Parse(m)));
                EXIT_USAGE
            }
            Err(e) => {
                let _ = writeln!(out, "{}", error_json(&e));
                EXIT_DOMAIN
            }
        },
        Command::Verify(v) => {
            let opts = SuiteOptions { seed: v.seed, tol: v.tol, samples: v.samples, timing: v.timing };
            match run_suite(&v.suite, &opts) {
                Ok(reports) => {
                    let _ = write_reports(out, &reports, v.format);
                    if reports.iter().all(|r| r.pass) {
                        EXIT_OK
                    } else {
                        EXIT_FAIL
                    }
                }
                Err(e) => {
                    let _ = writeln!(out, "{}", error_json(&e));
                    EXIT_USAGE
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_literals() {
        let cases = [
            ("2.5", Complex64::new(2.5, 0.0)),
            ("-1.5i", Complex64::new(0.0, -1.5)),
            ("i", Complex64::new(0.0, 1.0)),
            ("-i", Complex64::new(0.0, -1.0)),
            ("1i", Complex64::new(0.0, 1.0)),
            ("0.3+1.2i", Complex64::new(0.3, 1.2)),
            ("-0.4-0.8i", Complex64::new(-0.4, -0.8)),
            ("1e-3+2e+1i", Complex64::new(1e-3, 20.0)),
            ("2-i", Complex64::new(2.0, -1.0)),
        ];
        for (t, want) in cases {
            assert_eq!(parse_complex(t).unwrap(), want, "{t}");
        }
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("").is_err());
    }

    #[test]
    fn directed_literal_keeps_argument() {
        let w = parse_directed("1@-3.5").unwrap();
        assert_eq!(w.argument(), -3.5);
        assert!(parse_directed("1@x").is_err());
    }
}
