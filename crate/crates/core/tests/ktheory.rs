mod common;

use common::{c, rel, sig, test_signatures};
use proptest::prelude::*;
use regdet_core::ktheory::*;

#[test]
fn ranks_repeat_with_period_four() {
    for s in test_signatures().into_iter().chain([sig(5, 7), sig(0, 9), sig(12, 0)]) {
        for n in 2..=400 {
            assert_eq!(borel_rank(n, s), borel_rank(n + 4, s), "n = {n}");
        }
    }
}

#[test]
fn only_ranks_three_and_five_feed_the_shift() {
    for s in test_signatures() {
        let ranks: Vec<u32> = (2..=5).map(|n| borel_rank(n, s).unwrap()).collect();
        assert_eq!(ranks, vec![0, s.r2(), 0, s.places()]);
    }
}

proptest! {
    #[test]
    fn truncation_shift(
        r1 in 0u32..4, r2 in 0u32..4, k in 1u32..6, re in -4.0..4.0f64, im in -4.0..4.0f64
    ) {
        prop_assume!(r1 + r2 > 0);
        let sg = sig(r1, r2);
        let s = c(re, im);
        let n_max = 4 * k + 1;
        let lhs = truncated_char_poly(s, sg, n_max + 4).unwrap();
        let peeled = (s + 1.0).powu(r2) * (s + 2.0).powu(r1 + r2);
        let rhs = truncated_char_poly(s + 2.0, sg, n_max).unwrap() * peeled;
        prop_assert!(lhs == rhs || rel(lhs, rhs) <= 1e-12);
    }

    #[test]
    fn eigenvalue_shift(n in 0u32..100_000) {
        prop_assert_eq!(
            riemann_eigenvalue(n) - riemann_eigenvalue(n + 4),
            num_rational::Rational64::from_integer(2)
        );
    }
}
