//! `G_K(s)`, the regularized determinant of `s − R` on `⊕_{n>1} K_n(A) ⊗ C`,
//! in its three presentations, plus the checkers for its shift and
//! reflection identities.
//!
//! `G_K` depends only on the signature. With `φ1`, `φ2` the two progression
//! products from [`crate::regprod`]:
//!
//! ```text
//! G_K(s) = φ1(s)^{r1+r2} · φ2(s)^{r2}
//!        = s^{−r1−r2} Γ_R(s)^{−r1} Γ_C(s)^{−r2} (2π)^{−[K:Q] s/2} C(K)
//! ```
//!
//! Integer multiplicities are applied by repeated multiplication so that the
//! zeros at negative integers stay exact.

use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_rational::Rational64;

use crate::ktheory::riemann_eigenvalue;
use crate::regprod::{self, ProgressionSpec};
use crate::specfun::{self, EulerMaclaurinParams, POLE_GUARD};
use crate::{powu, ComplexValue, Error, Result, Signature};

/// Tolerance for the shift and reflection identity checks.
pub const IDENTITY_TOLERANCE: f64 = 1e-10;
/// Tolerance for numeric-vs-closed regularized products.
pub const LERCH_TOLERANCE: f64 = 1e-8;
/// Tolerance of [`algebraicity_spot_check`].
pub const SPOT_CHECK_TOLERANCE: f64 = 1e-10;
/// Relative tolerance of [`reflection_at_zero`].
pub const REMARK_TOLERANCE: f64 = 1e-12;
/// `g_regularized` needs `Re s` above this.
pub const REGULARIZED_MIN_RE: f64 = -1.9;

/// Constants of the field that enter the `Γ_R`/`Γ_C` presentation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldConstants {
    pub signature: Signature,
    pub degree: u32,
    /// `C(K) = (2√π)^{r1} (2√(2π))^{r2}`.
    pub c_of_k: f64,
}

impl FieldConstants {
    pub fn new(signature: Signature) -> Self {
        let c_of_k = libm::pow(2.0 * libm::sqrt(PI), f64::from(signature.r1()))
            * libm::pow(2.0 * specfun::SQRT_2PI, f64::from(signature.r2()));
        Self {
            signature,
            degree: signature.degree(),
            c_of_k,
        }
    }
}

/// `|lhs − rhs| / max(1, |rhs|)`.
pub fn residual(lhs: ComplexValue, rhs: ComplexValue) -> f64 {
    (lhs - rhs).norm() / rhs.norm().max(1.0)
}

/// `G_K(s)` from the gamma closed form. Entire.
pub fn g_closed(s: ComplexValue, sig: Signature) -> ComplexValue {
    let mut g = powu(regprod::regprod_phi1(s), sig.places());
    if sig.r2() > 0 {
        g *= powu(regprod::regprod_phi2(s), sig.r2());
    }
    g
}

/// `G_K(s)` from `s^{−r1−r2} Γ_R(s)^{−r1} Γ_C(s)^{−r2} (2π)^{−[K:Q]s/2} C(K)`.
///
/// Singular as written at `s = 0` and at the poles of `Γ_R`, `Γ_C`; those
/// points are rejected.
pub fn g_alt(s: ComplexValue, sig: Signature) -> Result<ComplexValue> {
    if s.norm() < POLE_GUARD {
        return Err(Error::GammaPole { pole: 0 });
    }
    let consts = FieldConstants::new(sig);
    let mut denom = powu(s, sig.places());
    if sig.r1() > 0 {
        denom *= powu(specfun::gamma_r(s)?, sig.r1());
    }
    if sig.r2() > 0 {
        denom *= powu(specfun::gamma_c(s)?, sig.r2());
    }
    let exp_factor = (-0.5 * f64::from(consts.degree) * s * specfun::LN_2PI).exp();
    Ok(exp_factor * consts.c_of_k / denom)
}

/// `G_K(s)` straight from the zeta-regularized definition, through the
/// Euler–Maclaurin Hurwitz zeta. Needs `Re s > −1.9`.
pub fn g_regularized(
    s: ComplexValue,
    sig: Signature,
    params: &EulerMaclaurinParams,
) -> Result<ComplexValue> {
    if s.re.is_nan() || s.re <= REGULARIZED_MIN_RE {
        return Err(Error::Domain("g_regularized needs Re s > -1.9"));
    }
    let phi1 = regprod::regprod_numeric(&ProgressionSpec::new(2.0, s + 2.0)?, params)?;
    let mut g = powu(phi1, sig.places());
    if sig.r2() > 0 {
        let phi2 = regprod::regprod_numeric(&ProgressionSpec::new(2.0, s + 1.0)?, params)?;
        g *= powu(phi2, sig.r2());
    }
    Ok(g)
}

/// Determinant over all `n ≥ 0`: `(s − 1/2) s^{r1+r2−1} G_K(s)`.
pub fn det_full(s: ComplexValue, sig: Signature) -> ComplexValue {
    (s - 0.5) * powu(s, sig.places() - 1) * g_closed(s, sig)
}

/// `π^{(r1+r2)/2} 2^{r2/2}`, the value of `G_K(0)`.
pub fn g_at_zero(sig: Signature) -> f64 {
    libm::pow(PI, 0.5 * f64::from(sig.places())) * libm::pow(2.0, 0.5 * f64::from(sig.r2()))
}

/// Right-hand side of the reflection identity,
/// `((2/s) sin(πs/2))^{r1} ((2/s) sin(πs))^{r2}`.
pub fn reflection_rhs(s: ComplexValue, sig: Signature) -> ComplexValue {
    let two_over_s = 2.0 / s;
    powu(two_over_s * specfun::sin_pi(0.5 * s), sig.r1())
        * powu(two_over_s * specfun::sin_pi(s), sig.r2())
}

/// One evaluated grid point of a [`VerificationReport`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridPoint {
    pub s: ComplexValue,
    pub lhs: ComplexValue,
    pub rhs: ComplexValue,
    pub residual: f64,
}

/// Per-point residuals of an identity and the verdict against a tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub identity_name: String,
    pub gridpoints: Vec<GridPoint>,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl VerificationReport {
    /// Builds the report from `(s, lhs, rhs)` triples; a NaN residual fails.
    pub fn from_points(
        identity_name: impl Into<String>,
        tolerance: f64,
        points: impl IntoIterator<Item = (ComplexValue, ComplexValue, ComplexValue)>,
    ) -> Self {
        let gridpoints: Vec<GridPoint> = points
            .into_iter()
            .map(|(s, lhs, rhs)| GridPoint { s, lhs, rhs, residual: residual(lhs, rhs) })
            .collect();
        let max_residual = gridpoints.iter().map(|p| p.residual).fold(0.0_f64, |m, r| {
            if r.is_nan() || m.is_nan() {
                f64::NAN
            } else {
                m.max(r)
            }
        });
        Self {
            identity_name: identity_name.into(),
            passed: max_residual <= tolerance,
            gridpoints,
            max_residual,
            tolerance,
        }
    }
}

/// Row-major lattice: `re` increases in the outer loop, `im` in the inner.
pub fn lattice(re: (f64, f64), im: (f64, f64), n_re: usize, n_im: usize) -> Vec<ComplexValue> {
    fn axis(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
        (0..n).map(move |i| if n == 1 { lo } else { lo + (hi - lo) * i as f64 / (n - 1) as f64 })
    }
    axis(re.0, re.1, n_re)
        .flat_map(|x| axis(im.0, im.1, n_im).map(move |y| ComplexValue::new(x, y)))
        .collect()
}

/// The 10 × 20 lattice over `[−4, 4] × [−4, 4]` used by the identity checks.
pub fn default_grid() -> Vec<ComplexValue> {
    lattice((-4.0, 4.0), (-4.0, 4.0), 10, 20)
}

/// `G_K(s) = G_K(s+2) (s+2)^{r1+r2} (s+1)^{r2}` on every grid point.
pub fn check_periodicity(sig: Signature, grid: &[ComplexValue], tol: f64) -> VerificationReport {
    let points = grid.iter().map(|&s| {
        let lhs = g_closed(s, sig);
        let rhs = g_closed(s + 2.0, sig) * powu(s + 2.0, sig.places()) * powu(s + 1.0, sig.r2());
        (s, lhs, rhs)
    });
    VerificationReport::from_points("periodicity", tol, points)
}

/// `G_K(s) G_K(−s) = ((2/s) sin(πs/2))^{r1} ((2/s) sin(πs))^{r2}`; grid
/// points within the pole guard of `s = 0` are skipped.
pub fn check_reflection(sig: Signature, grid: &[ComplexValue], tol: f64) -> VerificationReport {
    let points = grid.iter().filter(|s| s.norm() >= POLE_GUARD).map(|&s| {
        let lhs = g_closed(s, sig) * g_closed(-s, sig);
        (s, lhs, reflection_rhs(s, sig))
    });
    VerificationReport::from_points("reflection", tol, points)
}

/// Numeric vs. closed regularized products over progressions `(d, a)`.
/// Each point reports `s = a/d`.
pub fn check_lerch(
    specs: &[ProgressionSpec],
    tol: f64,
    params: &EulerMaclaurinParams,
) -> Result<VerificationReport> {
    let mut points = Vec::with_capacity(specs.len());
    for spec in specs {
        let numeric = regprod::regprod_numeric(spec, params)?;
        points.push((spec.ratio(), numeric, regprod::regprod_closed(spec)));
    }
    Ok(VerificationReport::from_points("lerch", tol, points))
}

/// The default progression set for [`check_lerch`]: `d ∈ {1, 2, 3}` and
/// 20 offsets each with `Re(a/d) ∈ [0.1, 8]`, `|Im a| ≤ 4`.
pub fn default_lerch_specs() -> Vec<ProgressionSpec> {
    let mut specs = Vec::with_capacity(60);
    for d in [1.0, 2.0, 3.0] {
        for q_re in [0.1, 0.55, 1.7, 4.25, 8.0] {
            for im in [-4.0, -1.3, 0.0, 2.6] {
                let a = ComplexValue::new(q_re * d, im);
                specs.push(ProgressionSpec::new(d, a).expect("valid progression"));
            }
        }
    }
    specs
}

/// `G_K(0)^2`, checked against `π^{r1+r2} 2^{r2}`.
pub fn reflection_at_zero(sig: Signature) -> Result<ComplexValue> {
    let g0 = g_closed(ComplexValue::new(0.0, 0.0), sig);
    let squared = g0 * g0;
    let want = libm::pow(PI, f64::from(sig.places())) * libm::pow(2.0, f64::from(sig.r2()));
    let rel = (squared - want).norm() / want;
    if rel > REMARK_TOLERANCE {
        return Err(Error::IdentityViolated { name: "G_K(0)^2", residual: rel });
    }
    Ok(squared)
}

/// Evaluates `G_K(s) G_K(−s)` at a nonzero rational `s` and compares it to a
/// caller-supplied algebraic reference value.
pub fn algebraicity_spot_check(sig: Signature, s: Rational64, reference: f64) -> Result<bool> {
    if *s.numer() == 0 {
        return Err(Error::Domain("algebraicity spot check needs s != 0"));
    }
    let x = *s.numer() as f64 / *s.denom() as f64;
    let s = ComplexValue::new(x, 0.0);
    let product = g_closed(s, sig) * g_closed(-s, sig);
    Ok(residual(product, ComplexValue::new(reference, 0.0)) <= SPOT_CHECK_TOLERANCE)
}

/// `(s − λ_0)^{rank K_0} (s − λ_1)^{rank K_1}` with `λ_n` the Riemann
/// eigenvalues; multiplying by `G_K(s)` gives the `n ≥ 0` determinant.
pub fn low_degree_factor(s: ComplexValue, sig: Signature) -> ComplexValue {
    let profile = crate::ktheory::RankProfile::from(sig);
    let factor = |n: u32| {
        let eig = riemann_eigenvalue(n);
        s - *eig.numer() as f64 / *eig.denom() as f64
    };
    powu(factor(0), profile.lowrank_k0) * powu(factor(1), profile.lowrank_k1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    fn sig(r1: u32, r2: u32) -> Signature {
        Signature::new(r1, r2).unwrap()
    }

    fn close(a: ComplexValue, b: ComplexValue, tol: f64) -> bool {
        residual(a, b) <= tol
    }

    #[test]
    fn closed_examples() {
        let sqrt_pi = libm::sqrt(PI);
        assert!(close(g_closed(c(0.0, 0.0), sig(1, 0)), c(sqrt_pi, 0.0), 1e-14));
        assert!(close(g_closed(c(0.0, 0.0), sig(0, 1)), c(specfun::SQRT_2PI, 0.0), 1e-14));
        assert_eq!(g_closed(c(-2.0, 0.0), sig(1, 0)).norm(), 0.0);
    }

    #[test]
    fn alt_examples() {
        let root2 = core::f64::consts::SQRT_2;
        assert!(close(g_alt(c(1.0, 0.0), sig(1, 0)).unwrap(), c(root2, 0.0), 1e-13));
        assert!(close(g_alt(c(2.0, 0.0), sig(1, 0)).unwrap(), c(libm::sqrt(PI) / 2.0, 0.0), 1e-13));
        let s = c(1.0, 0.0);
        assert!(close(g_alt(s, sig(0, 1)).unwrap(), g_closed(s, sig(0, 1)), 1e-13));
        assert!(g_alt(c(0.0, 0.0), sig(1, 0)).is_err());
        assert!(g_alt(c(-2.0, 0.0), sig(1, 0)).is_err());
        assert!(g_alt(c(-1.0, 0.0), sig(0, 1)).is_err());
    }

    #[test]
    fn field_constants() {
        let k = FieldConstants::new(sig(1, 1));
        assert_eq!(k.degree, 3);
        let want = 2.0 * libm::sqrt(PI) * 2.0 * specfun::SQRT_2PI;
        assert!((k.c_of_k - want).abs() < 1e-14 * want);
    }

    #[test]
    fn regularized_examples() {
        let p = EulerMaclaurinParams::default();
        for (s, sg) in [(c(0.0, 0.0), sig(1, 0)), (c(1.0, 1.0), sig(1, 1)), (c(3.0, 0.0), sig(0, 2))] {
            let want = g_closed(s, sg);
            let got = g_regularized(s, sg, &p).unwrap();
            assert!((got - want).norm() <= 1e-8 * want.norm(), "{s}");
        }
        assert!(g_regularized(c(-2.0, 0.0), sig(1, 0), &p).is_err());
    }

    #[test]
    fn full_determinant() {
        assert_eq!(det_full(c(0.5, 0.0), sig(2, 1)).norm(), 0.0);
        assert_eq!(det_full(c(0.0, 0.0), sig(1, 1)).norm(), 0.0);
        let want = c(core::f64::consts::SQRT_2 / 2.0, 0.0);
        assert!(close(det_full(c(1.0, 0.0), sig(1, 0)), want, 1e-14));
    }

    #[test]
    fn periodicity_examples() {
        let r = check_periodicity(sig(1, 0), &[c(0.0, 0.0)], 1e-10);
        assert!(r.passed);
        let p = &r.gridpoints[0];
        assert!(close(p.lhs, c(libm::sqrt(PI), 0.0), 1e-14));
        let r = check_periodicity(sig(0, 1), &[c(-1.0, 0.0)], 1e-10);
        assert_eq!(r.gridpoints[0].lhs.norm(), 0.0);
        assert_eq!(r.gridpoints[0].rhs.norm(), 0.0);
        assert!(r.passed);
    }

    #[test]
    fn reflection_examples() {
        let r = check_reflection(sig(1, 0), &[c(1.0, 0.0), c(0.5, 0.0), c(0.0, 0.0)], 1e-10);
        assert_eq!(r.gridpoints.len(), 2);
        assert!(close(r.gridpoints[0].lhs, c(2.0, 0.0), 1e-13));
        assert!(close(r.gridpoints[1].rhs, c(2.0 * core::f64::consts::SQRT_2, 0.0), 1e-14));
        assert!(r.passed);
        let r = check_reflection(sig(0, 1), &[c(1.0, 0.0)], 1e-10);
        assert!(r.gridpoints[0].rhs.norm() < 1e-15);
        assert!(r.passed);
    }

    #[test]
    fn remark_values() {
        assert!((reflection_at_zero(sig(1, 0)).unwrap() - PI).norm() < 1e-13);
        assert!((reflection_at_zero(sig(0, 1)).unwrap() - 2.0 * PI).norm() < 1e-13);
        assert!((reflection_at_zero(sig(2, 1)).unwrap() - 2.0 * PI * PI * PI).norm() < 1e-12);
    }

    #[test]
    fn spot_checks() {
        let sqrt3 = libm::sqrt(3.0);
        assert_eq!(algebraicity_spot_check(sig(1, 0), Rational64::new(1, 2), 2.0 * core::f64::consts::SQRT_2), Ok(true));
        assert_eq!(algebraicity_spot_check(sig(1, 0), Rational64::new(1, 1), 2.0), Ok(true));
        assert_eq!(algebraicity_spot_check(sig(0, 1), Rational64::new(1, 3), 3.0 * sqrt3), Ok(true));
        assert_eq!(algebraicity_spot_check(sig(0, 1), Rational64::new(1, 3), 3.0 * sqrt3 + 1e-6), Ok(false));
        assert!(algebraicity_spot_check(sig(0, 1), Rational64::new(0, 3), 0.0).is_err());
    }

    #[test]
    fn report_bookkeeping() {
        let one = c(1.0, 0.0);
        let r = VerificationReport::from_points("x", 1e-3, [(one, one, c(1.0005, 0.0)), (one, c(3.0, 0.0), c(3.0, 0.0))]);
        assert!((r.max_residual - 0.0005 / 1.0005).abs() < 1e-15);
        assert!(r.passed);
        let r = VerificationReport::from_points("x", 1e-3, [(one, c(f64::NAN, 0.0), one)]);
        assert!(!r.passed);
    }

    #[test]
    fn lattice_order() {
        let g = lattice((0.0, 1.0), (-1.0, 1.0), 2, 3);
        assert_eq!(g[0], c(0.0, -1.0));
        assert_eq!(g[1], c(0.0, 0.0));
        assert_eq!(g[3], c(1.0, -1.0));
        assert_eq!(default_grid().len(), 200);
        assert_eq!(default_lerch_specs().len(), 60);
    }
}
