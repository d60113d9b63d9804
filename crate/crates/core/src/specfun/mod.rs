//! Complex special functions: Γ, log Γ, 1/Γ, the archimedean gamma factors
//! `Γ_R` and `Γ_C`, and the Hurwitz zeta function with its derivative in
//! the exponent.
//!
//! Everything is binary64. Powers `x^w` are `exp(w log x)` with the
//! principal logarithm.

mod gamma;
mod hurwitz;

pub use gamma::{gamma, gamma_c, gamma_r, log_gamma, rgamma, sin_pi, POLE_GUARD};
pub use hurwitz::{hurwitz_zeta, hurwitz_zeta_dw, hurwitz_zeta_with_dw, EulerMaclaurinParams};

/// `log(2π)`.
pub const LN_2PI: f64 = 1.837_877_066_409_345_5;
/// `√(2π)`.
pub const SQRT_2PI: f64 = 2.506_628_274_631_000_7;
