use kappa_core::harness::{random_rational, trial_rng};
use kappa_core::{Blade, Field, Multivector, Rational};
use proptest::prelude::*;

fn random_mv(seed: u64, t: u64, dim: usize) -> Multivector<Rational> {
    let mut rng = trial_rng(seed, t);
    Multivector::from_coeffs(dim, (0..1 << dim).map(|_| random_rational(&mut rng)).collect()).unwrap()
}

fn float_mv(coeffs: Vec<f64>) -> Multivector<f64> {
    Multivector::from_coeffs(4, coeffs).unwrap()
}

#[test]
fn cl40_associativity_exact_10k() {
    for t in 0..10_000 {
        let (a, b, c) = (random_mv(1, 3 * t, 4), random_mv(1, 3 * t + 1, 4), random_mv(1, 3 * t + 2, 4));
        let left = a.geometric_product(&b).unwrap().geometric_product(&c).unwrap();
        let right = a.geometric_product(&b.geometric_product(&c).unwrap()).unwrap();
        assert_eq!(left, right, "trial {t}");
    }
}

#[test]
fn pseudoscalar_squares() {
    // I_n² = (-1)^(n(n-1)/2) in positive signature
    for (n, expect) in [(1, 1), (2, -1), (3, -1), (4, 1), (5, 1)] {
        let i = Multivector::<Rational>::blade(n, Blade::new((1 << n) - 1), Rational::one()).unwrap();
        assert_eq!(i.geometric_product(&i).unwrap(), Multivector::scalar(n, Rational::from_i64(expect)).unwrap(), "n={n}");
    }
}

#[test]
fn generator_product_splits_into_inner_and_outer() {
    for i in 0..4 {
        for j in 0..4 {
            let a = Multivector::<Rational>::from_generators(4, &[i]).unwrap();
            let b = Multivector::<Rational>::from_generators(4, &[j]).unwrap();
            let sum = a.inner(&b).unwrap().add(&a.outer(&b).unwrap()).unwrap();
            assert_eq!(a.geometric_product(&b).unwrap(), sum, "e{i} e{j}");
        }
    }
}

proptest! {
    #[test]
    fn float_associativity(
        a in prop::collection::vec(-1.0f64..1.0, 16),
        b in prop::collection::vec(-1.0f64..1.0, 16),
        c in prop::collection::vec(-1.0f64..1.0, 16),
    ) {
        let (a, b, c) = (float_mv(a), float_mv(b), float_mv(c));
        let left = a.geometric_product(&b).unwrap().geometric_product(&c).unwrap();
        let right = a.geometric_product(&b.geometric_product(&c).unwrap()).unwrap();
        for (l, r) in left.coeffs().iter().zip(right.coeffs()) {
            prop_assert!((l - r).abs() <= 1e-12);
        }
    }

    #[test]
    fn reverse_is_an_antihomomorphism(seed in any::<u64>(), dim in 1usize..=5) {
        let a = random_mv(seed, 0, dim);
        let b = random_mv(seed, 1, dim);
        let lhs = a.geometric_product(&b).unwrap().reverse();
        let rhs = b.reverse().geometric_product(&a.reverse()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn even_part_is_closed(seed in any::<u64>(), dim in 1usize..=5) {
        let even = |m: Multivector<Rational>| {
            let coeffs = m.coeffs().iter().enumerate()
                .map(|(k, c)| if (k as u32).count_ones() % 2 == 0 { c.clone() } else { Rational::zero() })
                .collect();
            Multivector::from_coeffs(dim, coeffs).unwrap()
        };
        let a = even(random_mv(seed, 0, dim));
        let b = even(random_mv(seed, 1, dim));
        prop_assert!(a.is_even() && b.is_even());
        prop_assert!(a.geometric_product(&b).unwrap().is_even());
    }

    #[test]
    fn reverse_is_an_involution(seed in any::<u64>(), dim in 1usize..=5) {
        let a = random_mv(seed, 0, dim);
        prop_assert_eq!(a.reverse().reverse(), a);
    }
}
