#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use regdet_core::numberfield::IntegerPolynomial;
use regdet_core::{ComplexValue, Signature};

pub fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

pub fn sig(r1: u32, r2: u32) -> Signature {
    Signature::new(r1, r2).unwrap()
}

/// The six signatures every identity is checked on.
pub fn test_signatures() -> Vec<Signature> {
    [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 1)]
        .into_iter()
        .map(|(a, b)| sig(a, b))
        .collect()
}

pub fn rel(a: ComplexValue, b: ComplexValue) -> f64 {
    (a - b).norm() / b.norm()
}

// ---- exact real-root counting by Descartes' rule with Möbius bisection ----
// Independent of the Sturm machinery under test.

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn sign_variations(p: &[BigInt]) -> usize {
    let signs: Vec<bool> = p.iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// p(x + 1) by repeated synthetic division.
fn shift_by_one(p: &[BigInt]) -> Vec<BigInt> {
    let mut q = p.to_vec();
    let n = q.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let hi = q[j + 1].clone();
            q[j] += hi;
        }
    }
    q
}

/// Roots of a squarefree polynomial in the open interval (0, ∞).
fn positive_roots(p: Vec<BigInt>) -> usize {
    let mut p = trim(p);
    while p.first().is_some_and(Zero::is_zero) {
        p.remove(0);
    }
    match sign_variations(&p) {
        0 => return 0,
        1 => return 1,
        _ => {}
    }
    let right = shift_by_one(&p);
    let at_one = usize::from(right[0].is_zero());
    let mut reversed = p.clone();
    reversed.reverse();
    let left = shift_by_one(&reversed);
    positive_roots(right) + at_one + positive_roots(left)
}

/// Distinct real roots of a squarefree polynomial.
pub fn descartes_real_roots(f: &IntegerPolynomial) -> usize {
    let p = f.coeffs().to_vec();
    let at_zero = usize::from(p[0].is_zero());
    let mirrored: Vec<BigInt> = p
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
        .collect();
    positive_roots(p) + positive_roots(mirrored) + at_zero
}

/// f(x + c) via binomial expansion.
pub fn taylor_shift(f: &IntegerPolynomial, shift: i64) -> IntegerPolynomial {
    let n = f.coeffs().len();
    let mut out = vec![BigInt::zero(); n];
    let cbig = BigInt::from(shift);
    for (k, a) in f.coeffs().iter().enumerate() {
        // (x + c)^k = Σ_j binom(k, j) c^{k-j} x^j
        let mut binom = BigInt::from(1);
        for (j, slot) in out.iter_mut().enumerate().take(k + 1) {
            if j > 0 {
                binom = binom * BigInt::from(k - j + 1) / BigInt::from(j);
            }
            *slot += a * &binom * num_traits::pow(cbig.clone(), k - j);
        }
    }
    IntegerPolynomial::new(out).unwrap()
}

/// Squarefree random polynomials of degree 1..=8 with coefficients in [−20, 20].
pub fn random_squarefree_corpus(count: usize, seed: u64) -> Vec<IntegerPolynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let degree = rng.gen_range(1..=8);
        let mut coeffs: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-20..=20)).collect();
        while coeffs[degree] == 0 {
            coeffs[degree] = rng.gen_range(-20..=20);
        }
        let f = IntegerPolynomial::from_i64(&coeffs).unwrap();
        let df = f.derivative().unwrap();
        if f.gcd(&df).degree() == 0 {
            out.push(f);
        }
    }
    out
}
