use ialex::gmodule::{kunneth, subquotient, FgGammaModule, GammaMatrix};
use ialex::laurent::{LaurentPoly, PrimitiveRep};
use ialex_testkit::gen::random_poly;
use ialex_testkit::oracle::{determinantal_invariant_factors, from_rep, qmul, QPoly};
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_torsion(rng: &mut ChaCha8Rng) -> FgGammaModule {
    let k = rng.gen_range(0..=3);
    FgGammaModule::new(0, (0..k).map(|_| random_poly(rng, 2, 2)).collect())
}

fn random_module(rng: &mut ChaCha8Rng) -> FgGammaModule {
    FgGammaModule::new(rng.gen_range(0..=2), random_torsion(rng).torsion().to_vec())
}

fn nonsingular(rng: &mut ChaCha8Rng, n: usize) -> GammaMatrix {
    loop {
        let entries = (0..n * n)
            .map(|_| {
                let c: Vec<i64> = (0..=rng.gen_range(0..=1)).map(|_| rng.gen_range(-2..=2)).collect();
                LaurentPoly::from_ints(0, &c)
            })
            .collect();
        let m = GammaMatrix::new(n, n, entries).unwrap();
        if determinantal_invariant_factors(&m).len() == n {
            return m;
        }
    }
}

fn det_class(m: &GammaMatrix) -> QPoly {
    determinantal_invariant_factors(m)
        .iter()
        .fold(vec![BigRational::one()], |acc, d| qmul(&acc, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tensor_and_tor_are_symmetric(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (random_module(&mut rng), random_module(&mut rng));
        prop_assert_eq!(a.tensor(&b), b.tensor(&a));
        prop_assert_eq!(a.tor(&b), b.tor(&a));
        prop_assert_eq!(a.tensor(&FgGammaModule::free(1)), a.clone());
        prop_assert!(a.tor(&FgGammaModule::free(2)).is_zero());
        prop_assert_eq!(a.conjugate().conjugate(), a);
    }

    #[test]
    fn primary_components_reassemble(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_torsion(&mut rng);
        let order = m.order_polynomial().unwrap();
        let mut whole = FgGammaModule::zero();
        for prime in order.prime_support().unwrap() {
            let part = m.primary_component(&prime).unwrap();
            let po = part.order_polynomial().unwrap();
            prop_assert_eq!(po.clone(), prime.pow(prime.multiplicity_in(&order)));
            whole = whole.direct_sum(&part);
        }
        prop_assert_eq!(whole, m);
    }

    #[test]
    fn order_is_multiplicative(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (random_torsion(&mut rng), random_torsion(&mut rng));
        let sum = a.direct_sum(&b).order_polynomial().unwrap();
        prop_assert_eq!(sum, a.order_polynomial().unwrap().mul(&b.order_polynomial().unwrap()));
    }

    #[test]
    fn subquotient_orders_follow_determinants(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=3);
        let z = nonsingular(&mut rng, n);
        let c1 = nonsingular(&mut rng, n);
        let c2 = nonsingular(&mut rng, n);
        let a = z.mul(&c1).unwrap();
        let b = a.mul(&c2).unwrap();
        let za = subquotient(&z, &a).unwrap();
        let ab = subquotient(&a, &b).unwrap();
        let zb = subquotient(&z, &b).unwrap();
        prop_assert!(zb.is_torsion());
        prop_assert_eq!(from_rep(&za.order_polynomial().unwrap()), det_class(&c1));
        prop_assert_eq!(
            zb.order_polynomial().unwrap(),
            za.order_polynomial().unwrap().mul(&ab.order_polynomial().unwrap())
        );
    }
}

#[test]
fn kunneth_with_a_point_is_the_identity() {
    let right = vec![
        FgGammaModule::cyclic(PrimitiveRep::t_minus_one()),
        FgGammaModule::cyclic("t^2 - t + 1".parse().unwrap()),
    ];
    for i in 0..2 {
        assert_eq!(kunneth(&[FgGammaModule::free(1)], &right, i), right[i]);
    }
    let circle = [FgGammaModule::free(1), FgGammaModule::free(1)];
    assert_eq!(kunneth(&circle, &right, 1), right[0].direct_sum(&right[1]));
    assert_eq!(kunneth(&circle, &right, 2), right[1]);
}
