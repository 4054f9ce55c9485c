use std::collections::BTreeMap;

use ialex::bounds::{
    allowed_primes_general, allowed_primes_single, check_result, exclusion_single, max_power_bound, E2Table,
    LinkComponent, StratificationData, Stratum,
};
use ialex::engine::ia_product;
use ialex::gmodule::FgGammaModule;
use ialex::laurent::PrimitiveRep;
use ialex::twisted::{e2_link_page, TwistedComplex};
use ialex_testkit::gen::{random_alexander_prime, random_product, ProductInstance, SigmaShape};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn xi_of(inst: &ProductInstance) -> Vec<PrimitiveRep> {
    inst.input.link_modules.iter().map(|m| m.order_polynomial().unwrap()).collect()
}

fn e2_table(inst: &ProductInstance) -> E2Table {
    let base = TwistedComplex::new(inst.shape.triangulation().unwrap(), vec![], FgGammaModule::zero()).unwrap();
    let family: Vec<_> = inst.input.link_modules.iter().map(|m| base.with_stalk(m.clone())).collect();
    e2_link_page(&family).unwrap().to_table(inst.shape.dim()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn engine_outputs_respect_every_bound(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inst = random_product(&mut rng, &SigmaShape::FREE);
        let input = &inst.input;
        let (n, k) = (input.n, input.k);
        let xi = xi_of(&inst);
        let table = e2_table(&inst);
        let report = ia_product(input).unwrap();
        let candidates: std::collections::BTreeSet<PrimitiveRep> = xi
            .iter()
            .chain(&input.lambda)
            .flat_map(|x| x.prime_support().unwrap())
            .collect();
        for row in report.rows.iter().filter(|r| r.degree > 0 && r.degree + 1 < n) {
            let i = row.degree;
            let allowed = allowed_primes_single(i, n, k, &row.c, &xi).unwrap();
            let mut powers = BTreeMap::new();
            for g in &allowed {
                let gj = g.multiplicity_in(&row.lambda);
                powers.insert(g.clone(), max_power_bound(g, i, gj, &table, n, &input.perversity).unwrap());
            }
            let cert = check_result(&row.ia, &allowed, &powers);
            prop_assert!(cert.passed(), "degree {}: {:?}", i, cert);
            for g in &candidates {
                if exclusion_single(g, k, &input.perversity, &row.lambda, &xi).unwrap() {
                    prop_assert_eq!(g.multiplicity_in(&row.ia), 0);
                }
            }
        }
    }

    #[test]
    fn power_bound_is_monotone_and_linear(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inst = random_product(&mut rng, &SigmaShape::FREE);
        let table = e2_table(&inst);
        let doubled: E2Table = table.entries().map(|(key, e)| (key, e.pow(2))).collect();
        let n = inst.input.n;
        let p = &inst.input.perversity;
        for g in xi_of(&inst).iter().flat_map(|x| x.prime_support().unwrap()) {
            for j in 0..n {
                let gj = rng.gen_range(0..3);
                let base = max_power_bound(&g, j, gj, &table, n, p).unwrap();
                prop_assert!(max_power_bound(&g, j, gj + 1, &table, n, p).unwrap() == base + 1);
                let twice = max_power_bound(&g, j, gj, &doubled, n, p).unwrap();
                prop_assert_eq!(twice - u64::from(gj), 2 * (base - u64::from(gj)));
                let mut bigger = table.clone();
                bigger.insert(inst.shape.dim(), 0, j, table.get(inst.shape.dim(), 0, j).mul(&g));
                prop_assert!(max_power_bound(&g, j, gj, &bigger, n, p).unwrap() >= base);
            }
        }
    }

    #[test]
    fn general_window_sits_inside_the_single_window(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inst = random_product(&mut rng, &SigmaShape::FREE);
        let (n, k) = (inst.input.n, inst.input.k);
        let xi = xi_of(&inst);
        let comp = LinkComponent { xi: xi.clone(), zeta: Some(xi.clone()) };
        let data = StratificationData::new(n, vec![Stratum { dim: n - k - 1, components: vec![comp] }]).unwrap();
        for j in 1..n - 1 {
            let lambda = &inst.input.lambda[j];
            let general = allowed_primes_general(j, lambda, &data, false).unwrap();
            let ordinary = allowed_primes_general(j, lambda, &data, true).unwrap();
            prop_assert_eq!(&general, &ordinary);
            let mut single = allowed_primes_single(j, n, k, &inst.input.c[j], &xi).unwrap();
            single.extend(lambda.prime_support().unwrap());
            prop_assert!(general.is_subset(&single));
        }
    }
}

#[test]
fn missing_prime_is_reported() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let g = random_alexander_prime(&mut rng, 2);
    let cert = check_result(&g, &Default::default(), &BTreeMap::new());
    assert!(!cert.passed());
}
