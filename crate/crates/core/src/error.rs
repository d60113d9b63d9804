use core::fmt;

/// Errors raised by the numeric and algebraic routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Argument lies on (or within the guard distance of) a pole of Γ.
    GammaPole { pole: i64 },
    /// The Gamma value does not fit in binary64.
    Overflow,
    /// Hurwitz zeta evaluated at its pole `w = 1`.
    HurwitzPole,
    /// Hurwitz zeta offset is a nonpositive integer.
    HurwitzOffset { offset: i64 },
    /// Argument outside the region an operation supports.
    Domain(&'static str),
    /// Euler–Maclaurin parameters out of range.
    InvalidParams(&'static str),
    /// Signature with `r1 + r2 = 0`.
    EmptySignature,
    /// Borel rank requested for `n < 2`; use `rank_low` there.
    RankIndex { n: u32 },
    /// `rank_low` requested for `n > 1`.
    LowRankIndex { n: u32 },
    /// Truncation bound outside `2..=10_000`.
    TruncationBound { n_max: u32 },
    /// Zero polynomial where a nonzero one is required.
    ZeroPolynomial,
    /// Constant polynomial where degree ≥ 1 is required.
    ConstantPolynomial,
    /// Polynomial has a repeated factor of the given degree.
    NotSquarefree { gcd_degree: usize },
    /// An identity that must hold exactly up to rounding failed.
    IdentityViolated { name: &'static str, residual: f64 },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::GammaPole { pole } => write!(f, "argument is a pole of Gamma at z = {pole}"),
            Error::Overflow => f.write_str("Gamma value overflows binary64"),
            Error::HurwitzPole => f.write_str("Hurwitz zeta has a pole at w = 1"),
            Error::HurwitzOffset { offset } => {
                write!(f, "Hurwitz zeta offset a = {offset} is a nonpositive integer")
            }
            Error::Domain(msg) => write!(f, "argument out of domain: {msg}"),
            Error::InvalidParams(msg) => write!(f, "invalid Euler-Maclaurin parameters: {msg}"),
            Error::EmptySignature => f.write_str("signature needs r1 + r2 >= 1"),
            Error::RankIndex { n } => {
                write!(f, "borel_rank is defined for n >= 2 (got n = {n}); use rank_low")
            }
            Error::LowRankIndex { n } => write!(f, "rank_low is defined for n in {{0, 1}} (got {n})"),
            Error::TruncationBound { n_max } => {
                write!(f, "truncation bound n_max = {n_max} outside 2..=10000")
            }
            Error::ZeroPolynomial => f.write_str("zero polynomial"),
            Error::ConstantPolynomial => f.write_str("polynomial must have degree >= 1"),
            Error::NotSquarefree { gcd_degree } => write!(
                f,
                "polynomial is not squarefree (gcd with derivative has degree {gcd_degree})"
            ),
            Error::IdentityViolated { name, residual } => {
                write!(f, "identity {name} violated, residual {residual:e}")
            }
        }
    }
}

impl core::error::Error for Error {}
