//! Signature `(r1, r2)` of a number field from a defining polynomial.
//!
//! Everything here is exact big-integer arithmetic: the real-root count
//! comes from the sign variations of a Sturm chain at ±∞, and
//! `r2 = (deg f − r1) / 2`. Irreducibility is not checked; for a reducible
//! polynomial the result is the root count of the product, not a field
//! signature.

mod poly;
mod sturm;

pub use poly::IntegerPolynomial;
pub use sturm::{count_real_roots, SturmChain};

use crate::{Error, Result, Signature};

/// Attached to every signature computed from a polynomial.
pub const IRREDUCIBILITY_WARNING: &str =
    "warning: irreducibility of the defining polynomial is not verified";

/// Signature derived from a polynomial, with the caveat that goes with it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolynomialSignature {
    pub signature: Signature,
    pub warning: &'static str,
}

/// `f / gcd(f, f′)`, primitive, with positive leading coefficient.
pub fn squarefree_part(f: &IntegerPolynomial) -> Result<IntegerPolynomial> {
    if f.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let df = f.derivative().ok_or(Error::ConstantPolynomial)?;
    let g = f.gcd(&df);
    let q = f.exact_div(&g).expect("gcd divides f");
    Ok(q.primitive_part())
}

/// `(r1, r2)` with `r1` the number of real roots of the squarefree `f`.
pub fn signature_from_polynomial(f: &IntegerPolynomial) -> Result<PolynomialSignature> {
    let degree = f.degree();
    if degree == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let r1 = count_real_roots(f)?;
    let complex = degree - r1;
    assert!(complex.is_multiple_of(2), "Sturm count {r1} has the wrong parity for degree {degree}");
    let signature = Signature::new(r1 as u32, (complex / 2) as u32)?;
    Ok(PolynomialSignature {
        signature,
        warning: IRREDUCIBILITY_WARNING,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_i64(c).unwrap()
    }

    fn sig(f: &[i64]) -> (u32, u32) {
        let s = signature_from_polynomial(&poly(f)).unwrap().signature;
        (s.r1(), s.r2())
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_part(&poly(&[0, 0, 1])).unwrap(), poly(&[0, 1]));
        assert_eq!(squarefree_part(&poly(&[-2, 0, 1])).unwrap(), poly(&[-2, 0, 1]));
        assert_eq!(squarefree_part(&poly(&[1, 0, 2, 0, 1])).unwrap(), poly(&[1, 0, 1]));
        // -3 (x - 1)^2 (x + 2) = -3x^3 + 9x - 6
        assert_eq!(squarefree_part(&poly(&[-6, 9, 0, -3])).unwrap(), poly(&[-2, 1, 1]));
        assert_eq!(squarefree_part(&poly(&[5])), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn signatures() {
        assert_eq!(sig(&[-1, -1, 0, 1]), (1, 1));
        assert_eq!(sig(&[1, 1, 1, 1, 1]), (0, 2));
        assert_eq!(sig(&[-5, 0, 1]), (2, 0));
        assert_eq!(sig(&[-2, 0, 0, 1]), (1, 1));
        assert_eq!(sig(&[3, 7]), (1, 0));
        let s = signature_from_polynomial(&poly(&[1, 0, 1])).unwrap();
        assert_eq!(s.warning, IRREDUCIBILITY_WARNING);
    }

    #[test]
    fn rejects_repeated_roots() {
        assert_eq!(
            signature_from_polynomial(&poly(&[1, 0, 2, 0, 1])),
            Err(Error::NotSquarefree { gcd_degree: 2 })
        );
        assert_eq!(signature_from_polynomial(&poly(&[4])), Err(Error::ConstantPolynomial));
    }
}
