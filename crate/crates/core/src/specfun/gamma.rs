use core::f64::consts::PI;

use super::LN_2PI;
use crate::{ComplexValue, Error, Result};

/// Inputs closer than this to a nonpositive integer are treated as poles.
pub const POLE_GUARD: f64 = 1e-8;

/// Largest `Re log Γ` whose exponential is still finite.
const LN_MAX: f64 = 709.782_712_893_384;

// Lanczos approximation, g = 7, nine terms.
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn nearest_pole(z: ComplexValue) -> Option<i64> {
    let n = libm::round(z.re);
    if n <= 0.0 && (z - n).norm() < POLE_GUARD {
        Some(n as i64)
    } else {
        None
    }
}

fn check_pole(z: ComplexValue) -> Result<()> {
    match nearest_pole(z) {
        Some(pole) => Err(Error::GammaPole { pole }),
        None => Ok(()),
    }
}

/// log Γ(z) for Re z ≥ 1/2.
fn lanczos_log_gamma(z: ComplexValue) -> ComplexValue {
    let z = z - 1.0;
    let mut series = ComplexValue::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        series += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * LN_2PI + (z + 0.5) * t.ln() - t + series.ln()
}

/// sin(πx) with exact zeros at the integers.
fn sin_pi_real(x: f64) -> f64 {
    let n = libm::round(2.0 * x);
    let f = (x - 0.5 * n) * PI;
    match (n as i64).rem_euclid(4) {
        0 => libm::sin(f),
        1 => libm::cos(f),
        2 => -libm::sin(f),
        _ => -libm::cos(f),
    }
}

/// cos(πx) with exact zeros at the half-integers.
fn cos_pi_real(x: f64) -> f64 {
    sin_pi_real(x + 0.5)
}

/// sin(πz), exactly zero at the integers.
pub fn sin_pi(z: ComplexValue) -> ComplexValue {
    let y = PI * z.im;
    ComplexValue::new(
        sin_pi_real(z.re) * libm::cosh(y),
        cos_pi_real(z.re) * libm::sinh(y),
    )
}

/// Principal log Γ(z): the branch that is real on the positive axis and
/// continuous off the negative real axis, so that
/// `log_gamma(z + 1) = log_gamma(z) + log z`.
///
/// Left of `Re z = 1/2` the argument is walked up by that recurrence.
pub fn log_gamma(z: ComplexValue) -> Result<ComplexValue> {
    check_pole(z)?;
    if z.re >= 0.5 {
        return Ok(lanczos_log_gamma(z));
    }
    let shift = libm::ceil(0.5 - z.re) as u32;
    let mut acc = lanczos_log_gamma(z + shift as f64);
    for k in 0..shift {
        acc -= (z + k as f64).ln();
    }
    Ok(acc)
}

/// Γ(z), with Euler's reflection for Re z < 1/2.
pub fn gamma(z: ComplexValue) -> Result<ComplexValue> {
    check_pole(z)?;
    if z.re >= 0.5 {
        let lg = lanczos_log_gamma(z);
        if lg.re > LN_MAX {
            return Err(Error::Overflow);
        }
        return Ok(lg.exp());
    }
    // Γ(z) = π / (sin(πz) Γ(1 - z))
    let value = PI / sin_pi(z) * (-lanczos_log_gamma(1.0 - z)).exp();
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow)
    }
}

/// 1/Γ(z), an entire function: it vanishes exactly at 0, −1, −2, …
pub fn rgamma(z: ComplexValue) -> ComplexValue {
    if z.re >= 0.5 {
        (-lanczos_log_gamma(z)).exp()
    } else {
        sin_pi(z) * lanczos_log_gamma(1.0 - z).exp() / PI
    }
}

/// Γ_R(s) = Γ(s/2) π^{−s/2}.
pub fn gamma_r(s: ComplexValue) -> Result<ComplexValue> {
    let half = 0.5 * s;
    Ok(gamma(half)? * (-half * libm::log(PI)).exp())
}

/// Γ_C(s) = 2 Γ(s) (2π)^{−s}.
pub fn gamma_c(s: ComplexValue) -> Result<ComplexValue> {
    Ok(2.0 * gamma(s)? * (-s * LN_2PI).exp())
}
