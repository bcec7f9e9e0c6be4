//! Cross-module properties on random words.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use braid3::conjugacy::hyperbolic_phased_period;
use braid3::{
    central_twist, classify, hyperbolic_kappa, lambda_invariant, mu, normal_form, phi, rho,
    surd_cf_expansion, BraidWord, QuadSurd, TraceClass,
};

fn arb_word(max_syllables: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1u8..=2, -3i64..=3), 0..max_syllables)
        .prop_map(|pairs| BraidWord::from_pairs(pairs).unwrap())
}

fn cmp_fractions(n1: &BigInt, d1: &BigInt, n2: &BigInt, d2: &BigInt) -> Ordering {
    // Denominators of convergents are positive.
    (n1 * d2).cmp(&(n2 * d1))
}

/// Convergents of `x` alternate around it and close in monotonically:
/// even-indexed ones increase, odd-indexed ones decrease.
fn convergents_close_in(x: &QuadSurd) -> Result<(), TestCaseError> {
    let (pre, block) = surd_cf_expansion(x);
    let entries: Vec<BigInt> = pre
        .iter()
        .chain(block.iter().cycle().take(3 * block.len() + 4))
        .cloned()
        .collect();
    let (mut p0, mut q0) = (BigInt::one(), BigInt::zero());
    let (mut p1, mut q1) = (entries[0].clone(), BigInt::one());
    let mut history = vec![(p1.clone(), q1.clone())];
    for c in &entries[1..] {
        let (p2, q2) = (c * &p1 + &p0, c * &q1 + &q0);
        (p0, q0, p1, q1) = (p1, q1, p2.clone(), q2.clone());
        history.push((p2, q2));
    }
    for (n, (p, q)) in history.iter().enumerate() {
        let side = x.cmp_rational(p, q);
        let expected = if n % 2 == 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        };
        prop_assert_eq!(side, expected, "convergent {} = {}/{} of {}", n, p, q, x);
        if n >= 2 {
            let (pp, qq) = &history[n - 2];
            let step = cmp_fractions(p, q, pp, qq);
            let toward = if n % 2 == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            };
            prop_assert_eq!(step, toward, "convergent {} does not close in on {}", n, x);
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn mu_is_a_class_function(w in arb_word(12), c in arb_word(10)) {
        let v = w.conjugate_by(&c);
        prop_assert_eq!(phi(&v).trace_abs(), phi(&w).trace_abs());
        prop_assert_eq!(mu(&v), mu(&w));
    }

    #[test]
    fn twist_recovers_central_power(w in arb_word(12), c in arb_word(8), k in -3i64..=3) {
        let shifted = BraidWord::delta_power(&BigInt::from(2 * k)).concat(&w).conjugate_by(&c);
        prop_assert_eq!(central_twist(&shifted, &w).unwrap(), Some(BigInt::from(k)));
    }

    #[test]
    fn powers_keep_period_and_phase(w in arb_word(10), k in 2u32..4) {
        let g = phi(&w);
        prop_assume!(classify(&g) == TraceClass::Hyperbolic);
        let base = hyperbolic_phased_period(&g).unwrap();
        prop_assert_eq!(hyperbolic_phased_period(&g.pow(k)).unwrap(), base);
    }

    #[test]
    fn inverse_word_maps_to_inverse_element(w in arb_word(12)) {
        // Conjugacy of w and w⁻¹ forces ε = 0.
        let inv = w.inverse();
        if mu(&inv) == mu(&w) {
            prop_assert!(w.exponent_sum().is_zero());
        }
        prop_assert_eq!(lambda_invariant(&phi(&inv)), lambda_invariant(&phi(&w).inverse()));
    }

    #[test]
    fn kappa_convergents_close_in(w in arb_word(10)) {
        let g = phi(&w);
        prop_assume!(classify(&g) == TraceClass::Hyperbolic);
        convergents_close_in(&hyperbolic_kappa(&g).unwrap())?;
    }

    #[test]
    fn random_surd_convergents_close_in(p in -50i64..50, q in -40i64..40, d in 2i64..400) {
        let x = QuadSurd::new(p, q, d);
        prop_assume!(x.is_ok());
        convergents_close_in(&x.unwrap())?;
    }

    #[test]
    fn equal_words_share_normal_form(w in arb_word(10), c in arb_word(6)) {
        // c·c⁻¹ inserted unreduced in the middle of w.
        let mut syllables = w.syllables().to_vec();
        let mid = syllables.len() / 2;
        let detour: Vec<_> = c.syllables().iter().chain(c.inverse().syllables()).cloned().collect();
        syllables.splice(mid..mid, detour);
        let v = BraidWord::from_syllables(syllables);
        prop_assert_eq!(rho(&v), rho(&w));
        prop_assert_eq!(normal_form(&v).unwrap(), normal_form(&w).unwrap());
    }
}
