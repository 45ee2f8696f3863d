use kappa_core::harness::{constrained_rational_element, random_rational_element, trial_rng};
use kappa_core::kappa::{from_dual_quaternion, norm_b_sq};
use kappa_core::{qform, sample_s7, split_mul, to_dual_quaternion, Field, KElement, Orientation, Rational};
use proptest::prelude::*;

fn orientation() -> impl Strategy<Value = Orientation> {
    prop_oneof![Just(Orientation::Positive), Just(Orientation::Negative)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn composition_law(seed in any::<u64>(), lambda in orientation()) {
        let mut rng = trial_rng(seed, 0);
        let x = random_rational_element(&mut rng, lambda);
        let y = random_rational_element(&mut rng, lambda);
        let xy = x.kproduct(&y).unwrap();
        prop_assert_eq!(split_mul(&qform(&x).unwrap(), &qform(&y).unwrap()), qform(&xy).unwrap());
    }

    #[test]
    fn constrained_products_stay_constrained(seed in any::<u64>(), lambda in orientation()) {
        let mut rng = trial_rng(seed, 0);
        let x = constrained_rational_element(&mut rng, lambda);
        let y = constrained_rational_element(&mut rng, lambda);
        prop_assert!(x.constraint_f().is_zero());
        prop_assert!(y.constraint_f().is_zero());
        let xy = x.kproduct(&y).unwrap();
        prop_assert!(xy.constraint_f().is_zero());
        let n = |v: &KElement<Rational>| norm_b_sq(v, 0.0).unwrap();
        prop_assert_eq!(n(&xy), n(&x).mul(&n(&y)));
    }

    #[test]
    fn embedding_round_trip(seed in any::<u64>(), lambda in orientation()) {
        let x = random_rational_element(&mut trial_rng(seed, 0), lambda);
        let back = KElement::from_cl40(&x.embed_to_cl40().unwrap(), lambda).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn dual_quaternion_round_trip(seed in any::<u64>(), lambda in orientation()) {
        let x = random_rational_element(&mut trial_rng(seed, 0), lambda);
        let v = to_dual_quaternion(&x);
        prop_assert_eq!(from_dual_quaternion(&v.q_r, &v.q_d, lambda), x.clone());
        prop_assert_eq!(v.qform(), qform(&x).unwrap());
    }

    #[test]
    fn json_round_trip(seed in any::<u64>(), lambda in orientation()) {
        let x = random_rational_element(&mut trial_rng(seed, 0), lambda);
        prop_assert_eq!(KElement::<Rational>::from_json(&x.to_json()).unwrap(), x);
    }

    #[test]
    fn samples_lie_on_the_constrained_sphere(seed in any::<u64>(), rho in 0.1f64..10.0, lambda in orientation()) {
        let x = sample_s7(seed, rho, lambda).unwrap();
        prop_assert!((x.norm_a() - rho).abs() <= 1e-12 * rho);
        prop_assert!(x.constraint_f().abs() <= 1e-14 * rho * rho);
        let y = sample_s7(seed, rho, lambda).unwrap();
        prop_assert_eq!(x, y);
    }
}
