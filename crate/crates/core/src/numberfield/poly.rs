use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Nonzero polynomial with big-integer coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

impl IntegerPolynomial {
    /// Trailing zeros are dropped; an all-zero list is rejected.
    pub fn new(mut coeffs: Vec<BigInt>) -> Result<Self> {
        trim(&mut coeffs);
        if coeffs.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn from_raw(mut coeffs: Vec<BigInt>) -> Option<Self> {
        trim(&mut coeffs);
        (!coeffs.is_empty()).then_some(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero polynomial")
    }

    /// `None` for constants.
    pub fn derivative(&self) -> Option<Self> {
        let d = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        Self::from_raw(d)
    }

    /// Positive gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divided by its content, leading coefficient made positive.
    pub fn primitive_part(&self) -> Self {
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Divided by its (positive) content; sign unchanged.
    pub(crate) fn primitive_part_keep_sign(&self) -> Self {
        self.scale_down(&self.content())
    }

    fn scale_down(&self, d: &BigInt) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c / d).collect(),
        }
    }

    /// `lc(b)^{deg a − deg b + 1} · a mod b`, computed without fractions.
    /// `None` when the remainder is zero.
    pub(crate) fn pseudo_rem(&self, b: &Self) -> Option<Self> {
        let (da, db) = (self.degree(), b.degree());
        if da < db {
            return Some(self.clone());
        }
        let lb = b.leading();
        let mut r = self.coeffs.clone();
        let mut steps = 0;
        while r.len() > db {
            let top = r.len() - 1;
            let lr = r[top].clone();
            let shift = top - db;
            for c in r.iter_mut() {
                *c *= lb;
            }
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[shift + i] -= &lr * bc;
            }
            trim(&mut r);
            steps += 1;
        }
        let missing = da - db + 1 - steps;
        if missing > 0 {
            let factor = num_traits::pow(lb.clone(), missing);
            for c in r.iter_mut() {
                *c *= &factor;
            }
        }
        Self::from_raw(r)
    }

    /// Exact quotient `self / b` in Z[x], or `None` if `b` does not divide.
    pub fn exact_div(&self, b: &Self) -> Option<Self> {
        if self.degree() < b.degree() {
            return None;
        }
        let db = b.degree();
        let lb = b.leading();
        let mut r = self.coeffs.clone();
        let mut q = alloc::vec![BigInt::zero(); self.degree() - db + 1];
        while r.len() > db && !r.is_empty() {
            let top = r.len() - 1;
            let (qc, rem) = r[top].div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            let shift = top - db;
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[shift + i] -= &qc * bc;
            }
            q[shift] = qc;
            trim(&mut r);
        }
        if !r.is_empty() {
            return None;
        }
        Self::from_raw(q)
    }

    /// Primitive gcd with positive leading coefficient, by the subresultant
    /// remainder sequence.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let delta = a.degree() - b.degree();
            let r = match a.pseudo_rem(&b) {
                None => return b.primitive_part(),
                Some(r) => r,
            };
            if r.degree() == 0 {
                return Self { coeffs: alloc::vec![BigInt::one()] };
            }
            let divisor = &g * num_traits::pow(h.clone(), delta);
            a = b;
            b = r.scale_down(&divisor);
            g = a.leading().clone();
            h = if delta == 0 {
                h
            } else {
                num_traits::pow(g.clone(), delta) / num_traits::pow(h, delta - 1)
            };
        }
    }

    pub(crate) fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for IntegerPolynomial {
    /// Comma-separated ascending coefficients, e.g. `-2,0,0,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
