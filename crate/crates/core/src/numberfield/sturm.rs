use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::Signed;

use super::IntegerPolynomial;
use crate::{Error, Result};

/// Signed remainder sequence `f, f′, −rem(f, f′), …`, kept primitive.
///
/// Each remainder is a pseudo-remainder divided by a positive content and
/// with the sign of `lc^{δ+1}` undone, so signs match the rational Sturm
/// sequence exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmChain {
    polys: Vec<IntegerPolynomial>,
}

impl SturmChain {
    pub fn new(f: &IntegerPolynomial) -> Self {
        let mut polys = alloc::vec![f.clone()];
        let Some(df) = f.derivative() else {
            return Self { polys };
        };
        polys.push(df);
        loop {
            let n = polys.len();
            let (prev, last) = (&polys[n - 2], &polys[n - 1]);
            let Some(prem) = prev.pseudo_rem(last) else { break };
            let delta = prev.degree() - last.degree();
            let flip = last.leading().is_negative() && delta % 2 == 0;
            let prem = prem.primitive_part_keep_sign();
            polys.push(if flip { prem } else { prem.neg() });
        }
        Self { polys }
    }

    pub fn polys(&self) -> &[IntegerPolynomial] {
        &self.polys
    }

    /// The last element; a nonzero constant iff `f` is squarefree.
    pub fn last(&self) -> &IntegerPolynomial {
        self.polys.last().expect("chain starts with f")
    }

    fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
        let mut count = 0;
        let mut prev = Ordering::Equal;
        for s in signs.filter(|s| *s != Ordering::Equal) {
            if prev != Ordering::Equal && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }

    /// Sign variations at `+∞` (`positive = true`) or `−∞`.
    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.polys.iter().map(|p| {
            let s = p.leading().sign();
            let s = if s == num_bigint::Sign::Minus { Ordering::Less } else { Ordering::Greater };
            if !positive && p.degree() % 2 == 1 {
                s.reverse()
            } else {
                s
            }
        }))
    }
}

/// Number of distinct real roots of a squarefree polynomial.
pub fn count_real_roots(f: &IntegerPolynomial) -> Result<usize> {
    let chain = SturmChain::new(f);
    let gcd_degree = chain.last().degree();
    if gcd_degree > 0 {
        return Err(Error::NotSquarefree { gcd_degree });
    }
    Ok(chain.variations_at_infinity(false) - chain.variations_at_infinity(true))
}
