use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use regdet_core::ComplexValue;

use crate::parse::{parse_complex, parse_range};

/// Regularized determinants G_K(s) of the Riemann operator on higher K-groups.
///
/// Complex arguments use the syntax a+bi with either part optional:
/// "2", "3i", "1-0.5i", "-i", "1e-3+2i".
///
/// Polynomials are comma-separated integer coefficients, constant term first:
/// "-2,0,0,1" is x^3 - 2. Irreducibility is not checked.
///
/// Environment: REGDET_EM_N and REGDET_EM_B override the Euler-Maclaurin
/// cutoff (default 32) and number of Bernoulli terms (default 12).
#[derive(Debug, Parser)]
#[command(name = "regdet", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = true)]
pub struct FieldArgs {
    /// Number of real places.
    #[arg(long, requires = "r2", conflicts_with = "poly")]
    pub r1: Option<u32>,
    /// Number of complex places.
    #[arg(long, requires = "r1", conflicts_with = "poly")]
    pub r2: Option<u32>,
    /// Defining polynomial; the signature is computed from its real roots.
    #[arg(long, allow_hyphen_values = true)]
    pub poly: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalMethod {
    Closed,
    Alt,
    Regularized,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    Periodicity,
    Reflection,
    Lerch,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignatureFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegprodMethod {
    Closed,
    Numeric,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate G_K(s); prints one JSON record per method.
    Eval {
        #[command(flatten)]
        field: FieldArgs,
        /// Point s.
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        s: ComplexValue,
        #[arg(long, value_enum, default_value_t = EvalMethod::Closed)]
        method: EvalMethod,
    },
    /// Check the shift, reflection, or Lerch identities; exit 1 if any fails.
    Verify {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, value_enum, default_value_t = Identity::All)]
        identity: Identity,
        /// Override the tolerance (defaults: 1e-10 periodicity/reflection, 1e-8 lerch).
        #[arg(long)]
        tol: Option<f64>,
        /// Real range of the s-grid, "lo,hi".
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true, default_value = "-4,4")]
        re: (f64, f64),
        /// Imaginary range of the s-grid, "lo,hi".
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true, default_value = "-4,4")]
        im: (f64, f64),
        #[arg(long, default_value_t = 10)]
        n_re: usize,
        #[arg(long, default_value_t = 20)]
        n_im: usize,
    },
    /// Signature (r1, r2) of the field defined by a polynomial.
    Signature {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, value_enum, default_value_t = SignatureFormat::Text)]
        format: SignatureFormat,
    },
    /// Tabulate G_K over a rectangular s-grid (rows ordered by Re, then Im).
    Grid {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true, default_value = "-4,4")]
        re: (f64, f64),
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true, default_value = "-4,4")]
        im: (f64, f64),
        #[arg(long, default_value_t = 10)]
        n_re: usize,
        #[arg(long, default_value_t = 20)]
        n_im: usize,
        #[arg(long, value_enum, default_value_t = GridFormat::Csv)]
        format: GridFormat,
        /// Write to this file instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Regularized product over the progression step*k + offset.
    Regprod {
        #[arg(long)]
        step: f64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        offset: ComplexValue,
        #[arg(long, value_enum, default_value_t = RegprodMethod::Both)]
        method: RegprodMethod,
    },
}
