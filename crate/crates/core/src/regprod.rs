//! Regularized products over arithmetic progressions.
//!
//! For `d > 0` the product `∏_{k≥0} (dk + a)` is defined as
//! `exp(−∂_w Σ_k (dk+a)^{−w} |_{w=0})`. Writing the sum as `d^{−w} ζ(w, a/d)`
//! gives two independent evaluations:
//!
//! - [`regprod_numeric`]: `exp(log d · ζ(0, a/d) − ζ′(0, a/d))` straight from
//!   the Euler–Maclaurin Hurwitz zeta;
//! - [`regprod_closed`]: Lerch's formula `ζ′(0, q) = log Γ(q) − ½ log 2π`
//!   turns the same expression into `d^{1/2 − a/d} √(2π) / Γ(a/d)`.
//!
//! The two products inside `G_K` are the `d = 2` instances
//! [`regprod_phi1`] (`a = 2 + s`) and [`regprod_phi2`] (`a = 1 + s`).

use core::f64::consts::PI;

use crate::specfun::{self, EulerMaclaurinParams, POLE_GUARD, SQRT_2PI};
use crate::{ComplexValue, Error, Result};

/// The numeric route refuses offsets with `Re(a/d)` at or below this.
pub const NUMERIC_MIN_RATIO_RE: f64 = -0.5;

/// The progression `d·k + a`, `k = 0, 1, 2, …`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProgressionSpec {
    step: f64,
    offset: ComplexValue,
}

impl ProgressionSpec {
    pub fn new(step: f64, offset: ComplexValue) -> Result<Self> {
        if !(step > 0.0 && step.is_finite()) {
            return Err(Error::Domain("progression step must be positive and finite"));
        }
        if !(offset.re.is_finite() && offset.im.is_finite()) {
            return Err(Error::Domain("progression offset must be finite"));
        }
        Ok(Self { step, offset })
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn offset(&self) -> ComplexValue {
        self.offset
    }

    /// `a / d`, the Hurwitz offset.
    pub fn ratio(&self) -> ComplexValue {
        self.offset / self.step
    }

    /// True when some factor `dk + a` is (within the pole guard) zero.
    pub fn hits_zero(&self) -> bool {
        let q = self.ratio();
        let n = libm::round(q.re);
        n <= 0.0 && (q - n).norm() < POLE_GUARD
    }
}

/// The regularized product from the Hurwitz-zeta definition.
///
/// Needs `Re(a/d) > −1/2` and no vanishing factor.
pub fn regprod_numeric(spec: &ProgressionSpec, params: &EulerMaclaurinParams) -> Result<ComplexValue> {
    let q = spec.ratio();
    if spec.hits_zero() {
        return Err(Error::HurwitzOffset { offset: libm::round(q.re) as i64 });
    }
    if q.re.is_nan() || q.re <= NUMERIC_MIN_RATIO_RE {
        return Err(Error::Domain("regprod_numeric needs Re(a/d) > -0.5"));
    }
    let zero = ComplexValue::new(0.0, 0.0);
    let (zeta0, dzeta0) = specfun::hurwitz_zeta_with_dw(zero, q, params)?;
    Ok((libm::log(spec.step) * zeta0 - dzeta0).exp())
}

/// `d^{1/2 − a/d} √(2π) / Γ(a/d)`; entire in `a`, zero when a factor vanishes.
pub fn regprod_closed(spec: &ProgressionSpec) -> ComplexValue {
    let q = spec.ratio();
    ((0.5 - q) * libm::log(spec.step)).exp() * SQRT_2PI * specfun::rgamma(q)
}

fn progression(step: f64, offset: ComplexValue) -> ProgressionSpec {
    ProgressionSpec { step, offset }
}

/// `∏_{n ≡ 1 mod 4, n > 1} ((n−1)/2 + s) = 2^{−s/2} √π / Γ(s/2 + 1)`.
pub fn regprod_phi1(s: ComplexValue) -> ComplexValue {
    regprod_closed(&progression(2.0, s + 2.0))
}

/// `∏_{n ≡ 3 mod 4} ((n−1)/2 + s) = 2^{−s/2} √(2π) / Γ((s+1)/2)`.
pub fn regprod_phi2(s: ComplexValue) -> ComplexValue {
    regprod_closed(&progression(2.0, s + 1.0))
}

/// `s^{−1} Γ_R(s)^{−1} (√(2π))^{−s} · 2√π`, the Γ_R presentation of
/// [`regprod_phi1`]. Undefined at `s = 0` and the poles of Γ_R.
pub fn regprod_phi1_gamma_r(s: ComplexValue) -> Result<ComplexValue> {
    if s.norm() < POLE_GUARD {
        return Err(Error::GammaPole { pole: 0 });
    }
    let gr = specfun::gamma_r(s)?;
    Ok(2.0 * libm::sqrt(PI) * (-0.5 * s * specfun::LN_2PI).exp() / (s * gr))
}

/// `Γ_R(s+1)^{−1} (√(2π))^{−s} √2`, the Γ_R presentation of [`regprod_phi2`].
pub fn regprod_phi2_gamma_r(s: ComplexValue) -> Result<ComplexValue> {
    let gr = specfun::gamma_r(s + 1.0)?;
    Ok(core::f64::consts::SQRT_2 * (-0.5 * s * specfun::LN_2PI).exp() / gr)
}
