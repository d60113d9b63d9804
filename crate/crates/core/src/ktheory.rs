//! Ranks of the higher K-groups `K_n(A)` and the spectrum of the Riemann
//! operator on them.
//!
//! For `n > 1` Borel's theorem gives `rank K_n(A) = r1 + r2` when
//! `n ≡ 1 (mod 4)`, `r2` when `n ≡ 3 (mod 4)`, and `0` otherwise. The low
//! groups have `rank K_0 = 1` and `rank K_1 = r1 + r2 − 1`.

use num_rational::Rational64;

use crate::{powu, ComplexValue, Error, Result};

/// Largest accepted truncation bound for [`truncated_char_poly`].
pub const MAX_TRUNCATION: u32 = 10_000;

/// Numbers of real and complex places of a number field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    r1: u32,
    r2: u32,
}

impl Signature {
    pub fn new(r1: u32, r2: u32) -> Result<Self> {
        if r1 == 0 && r2 == 0 {
            return Err(Error::EmptySignature);
        }
        Ok(Self { r1, r2 })
    }

    /// Real places.
    pub fn r1(&self) -> u32 {
        self.r1
    }

    /// Complex places (conjugate pairs of complex embeddings).
    pub fn r2(&self) -> u32 {
        self.r2
    }

    /// Number of infinite places, `r1 + r2`.
    pub fn places(&self) -> u32 {
        self.r1 + self.r2
    }

    /// `[K : Q] = r1 + 2 r2`.
    pub fn degree(&self) -> u32 {
        self.r1 + 2 * self.r2
    }
}

/// Ranks of `K_0` and `K_1` together with the signature they came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankProfile {
    pub signature: Signature,
    pub lowrank_k0: u32,
    pub lowrank_k1: u32,
}

impl From<Signature> for RankProfile {
    fn from(signature: Signature) -> Self {
        Self {
            signature,
            lowrank_k0: 1,
            lowrank_k1: signature.places() - 1,
        }
    }
}

/// Borel's rank of `K_n(A)` for `n ≥ 2`.
pub fn borel_rank(n: u32, sig: Signature) -> Result<u32> {
    if n < 2 {
        return Err(Error::RankIndex { n });
    }
    Ok(match n % 4 {
        1 => sig.places(),
        3 => sig.r2,
        _ => 0,
    })
}

/// Rank of `K_0(A)` (always 1) or `K_1(A)` (the unit rank `r1 + r2 − 1`).
pub fn rank_low(n: u32, sig: Signature) -> Result<u32> {
    match n {
        0 => Ok(1),
        1 => Ok(sig.places() - 1),
        _ => Err(Error::LowRankIndex { n }),
    }
}

/// The Riemann operator acts on `K_n(A)` by `(1 − n)/2`.
pub fn riemann_eigenvalue(n: u32) -> Rational64 {
    Rational64::new(1 - i64::from(n), 2)
}

/// `∏_{1<n≤n_max} (s − (1−n)/2)^{rank K_n(A)}`, the finite truncation of
/// the characteristic product.
pub fn truncated_char_poly(s: ComplexValue, sig: Signature, n_max: u32) -> Result<ComplexValue> {
    if !(2..=MAX_TRUNCATION).contains(&n_max) {
        return Err(Error::TruncationBound { n_max });
    }
    let mut acc = ComplexValue::new(1.0, 0.0);
    for n in 2..=n_max {
        let rank = borel_rank(n, sig)?;
        if rank == 0 {
            continue;
        }
        let eig = riemann_eigenvalue(n);
        let shift = *eig.numer() as f64 / *eig.denom() as f64;
        acc *= powu(s - shift, rank);
    }
    Ok(acc)
}
