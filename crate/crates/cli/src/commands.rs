use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};

use regdet_core::detengine::{self, lattice};
use regdet_core::numberfield::signature_from_polynomial;
use regdet_core::regprod::{regprod_closed, regprod_numeric, ProgressionSpec};
use regdet_core::specfun::EulerMaclaurinParams;
use regdet_core::Signature;
use serde_json::{json, Value};

use crate::cli::*;
use crate::format::{self, Method, OutputRecord};
use crate::parse::parse_polynomial;

pub const ENV_EM_CUTOFF: &str = "REGDET_EM_N";
pub const ENV_EM_BERNOULLI: &str = "REGDET_EM_B";

/// Failure modes, each with its process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad input text or option values (exit 2).
    Usage(String),
    /// Numeric domain error such as a pole (exit 3).
    Domain(regdet_core::Error),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "I/O error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<regdet_core::Error> for CliError {
    fn from(e: regdet_core::Error) -> Self {
        CliError::Domain(e)
    }
}

fn env_usize(name: &str, default: usize) -> Result<usize, CliError> {
    match std::env::var(name) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{name}={v:?} is not a positive integer"))),
        Err(_) => Ok(default),
    }
}

/// Euler–Maclaurin parameters, with environment overrides.
pub fn em_params() -> Result<EulerMaclaurinParams, CliError> {
    let n = env_usize(ENV_EM_CUTOFF, EulerMaclaurinParams::DEFAULT_CUTOFF)?;
    let b = env_usize(ENV_EM_BERNOULLI, EulerMaclaurinParams::DEFAULT_BERNOULLI_TERMS)?;
    EulerMaclaurinParams::new(n, b).map_err(|e| CliError::Usage(e.to_string()))
}

fn signature_of_poly(text: &str, err: &mut dyn Write) -> Result<Signature, CliError> {
    let f = parse_polynomial(text).map_err(CliError::Usage)?;
    let derived = signature_from_polynomial(&f)?;
    writeln!(err, "{}", derived.warning)?;
    Ok(derived.signature)
}

fn resolve_field(field: &FieldArgs, err: &mut dyn Write) -> Result<Signature, CliError> {
    match (&field.poly, field.r1, field.r2) {
        (Some(p), _, _) => signature_of_poly(p, err),
        (None, Some(r1), Some(r2)) => {
            Signature::new(r1, r2).map_err(|e| CliError::Usage(e.to_string()))
        }
        _ => Err(CliError::Usage("give either --r1 and --r2, or --poly".into())),
    }
}

fn write_json(out: &mut dyn Write, value: &Value) -> Result<(), CliError> {
    writeln!(out, "{value}")?;
    Ok(())
}

fn check_lattice(n_re: usize, n_im: usize) -> Result<(), CliError> {
    if n_re == 0 || n_im == 0 {
        return Err(CliError::Usage("grid sizes must be at least 1".into()));
    }
    Ok(())
}

/// Runs one parsed command, writing results to `out` and diagnostics to
/// `err`. Returns the process exit code on success.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, CliError> {
    match cli.command {
        Command::Eval { field, s, method } => {
            let sig = resolve_field(&field, err)?;
            let methods: &[Method] = match method {
                EvalMethod::Closed => &[Method::Closed],
                EvalMethod::Alt => &[Method::Alt],
                EvalMethod::Regularized => &[Method::Regularized],
                EvalMethod::All => &[Method::Closed, Method::Alt, Method::Regularized],
            };
            let params = em_params()?;
            for &m in methods {
                let value = match m {
                    Method::Closed => detengine::g_closed(s, sig),
                    Method::Alt => detengine::g_alt(s, sig)?,
                    Method::Regularized => detengine::g_regularized(s, sig, &params)?,
                };
                let record = OutputRecord { s, value, method: m, signature: sig };
                write_json(out, &record.to_json())?;
            }
            Ok(0)
        }
        Command::Verify { field, identity, tol, re, im, n_re, n_im } => {
            let sig = resolve_field(&field, err)?;
            check_lattice(n_re, n_im)?;
            if let Some(t) = tol {
                if t.is_nan() || t < 0.0 {
                    return Err(CliError::Usage("--tol must be nonnegative".into()));
                }
            }
            let grid = lattice(re, im, n_re, n_im);
            let selected: &[Identity] = match identity {
                Identity::All => &[Identity::Periodicity, Identity::Reflection, Identity::Lerch],
                Identity::Periodicity => &[Identity::Periodicity],
                Identity::Reflection => &[Identity::Reflection],
                Identity::Lerch => &[Identity::Lerch],
            };
            let mut reports = Vec::new();
            for id in selected {
                let report = match id {
                    Identity::Periodicity => detengine::check_periodicity(
                        sig,
                        &grid,
                        tol.unwrap_or(detengine::IDENTITY_TOLERANCE),
                    ),
                    Identity::Reflection => detengine::check_reflection(
                        sig,
                        &grid,
                        tol.unwrap_or(detengine::IDENTITY_TOLERANCE),
                    ),
                    Identity::Lerch => detengine::check_lerch(
                        &detengine::default_lerch_specs(),
                        tol.unwrap_or(detengine::LERCH_TOLERANCE),
                        &em_params()?,
                    )?,
                    Identity::All => unreachable!(),
                };
                reports.push(report);
            }
            let all_passed = reports.iter().all(|r| r.passed);
            let json = if reports.len() == 1 {
                format::report_json(&reports[0])
            } else {
                Value::Array(reports.iter().map(format::report_json).collect())
            };
            write_json(out, &json)?;
            for r in &reports {
                writeln!(
                    err,
                    "{}: {} (max residual {}, tolerance {})",
                    r.identity_name,
                    if r.passed { "passed" } else { "FAILED" },
                    format::float_text(r.max_residual),
                    format::float_text(r.tolerance)
                )?;
            }
            Ok(if all_passed { 0 } else { 1 })
        }
        Command::Signature { poly, format: fmt } => {
            let sig = signature_of_poly(&poly, err)?;
            match fmt {
                SignatureFormat::Text => writeln!(out, "r1={} r2={}", sig.r1(), sig.r2())?,
                SignatureFormat::Json => write_json(
                    out,
                    &json!({ "r1": sig.r1(), "r2": sig.r2(), "degree": sig.degree() }),
                )?,
            }
            Ok(0)
        }
        Command::Grid { field, re, im, n_re, n_im, format: fmt, output } => {
            let sig = resolve_field(&field, err)?;
            check_lattice(n_re, n_im)?;
            let rows: Vec<_> = lattice(re, im, n_re, n_im)
                .into_iter()
                .map(|s| (s, detengine::g_closed(s, sig)))
                .collect();
            let mut sink: Box<dyn Write + '_> = match &output {
                Some(path) => Box::new(BufWriter::new(File::create(path)?)),
                None => Box::new(&mut *out),
            };
            match fmt {
                GridFormat::Csv => format::write_grid_csv(&mut sink, &rows)?,
                GridFormat::Json => writeln!(sink, "{}", format::grid_json(&rows))?,
            }
            sink.flush()?;
            Ok(0)
        }
        Command::Regprod { step, offset, method } => {
            let spec = ProgressionSpec::new(step, offset).map_err(|e| CliError::Usage(e.to_string()))?;
            let mut emit = |name: &str, value| {
                let record = json!({
                    "step": format::float_value(step),
                    "offset": format::complex_value(offset),
                    "method": name,
                    "value": format::complex_value(value),
                });
                write_json(out, &record)
            };
            if matches!(method, RegprodMethod::Closed | RegprodMethod::Both) {
                emit("closed", regprod_closed(&spec))?;
            }
            if matches!(method, RegprodMethod::Numeric | RegprodMethod::Both) {
                emit("numeric", regprod_numeric(&spec, &em_params()?)?)?;
            }
            Ok(0)
        }
    }
}
