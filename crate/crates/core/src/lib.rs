//! Zeta-regularized determinants of the Riemann operator on the higher
//! K-groups of a number field's integer ring.
//!
//! The Riemann operator acts on `K_n(A)` by the scalar `(1 - n)/2`. Its
//! regularized characteristic determinant over `n > 1`,
//!
//! ```text
//! G_K(s) = ∏_{n>1} ((n-1)/2 + s)^{rank K_n(A)},
//! ```
//!
//! depends on `K` only through the signature `(r1, r2)`. This crate computes
//! `G_K` three ways (a gamma-function closed form, the `Γ_R`/`Γ_C`
//! presentation, and directly from Hurwitz-zeta regularization) and checks
//! the shift identity `G_K(s) = G_K(s+2)(s+2)^{r1+r2}(s+1)^{r2}` and the
//! reflection identity for `G_K(s) G_K(-s)` numerically.
//!
//! Modules:
//!
//! - [`specfun`]: complex Gamma, `Γ_R`, `Γ_C`, Hurwitz zeta and its `w`-derivative.
//! - [`regprod`]: regularized products over arithmetic progressions.
//! - [`ktheory`]: Borel ranks, Riemann-operator eigenvalues, truncated products.
//! - [`numberfield`]: signature of a number field from a defining polynomial.
//! - [`detengine`]: `G_K(s)`, the `n ≥ 0` determinant, identity checkers.
//!
//! The crate is `no_std` and needs only `alloc`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;

pub mod detengine;
pub mod ktheory;
pub mod numberfield;
pub mod regprod;
pub mod specfun;

pub use error::{Error, Result};
pub use ktheory::Signature;
pub use num_complex::Complex64;

/// Complex scalar used by every special-function routine.
pub type ComplexValue = Complex64;

/// Integer power by repeated multiplication, so exact zeros stay exact.
pub(crate) fn powu(base: ComplexValue, exp: u32) -> ComplexValue {
    let mut acc = ComplexValue::new(1.0, 0.0);
    for _ in 0..exp {
        acc *= base;
    }
    acc
}
