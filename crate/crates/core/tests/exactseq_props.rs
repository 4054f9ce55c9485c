use ialex::exactseq::{
    check_alternating_product, solve_missing_third, split_primary, subpolynomials, ModuleSequence, PolySequence,
};
use ialex::gmodule::FgGammaModule;
use ialex::laurent::PrimitiveRep;
use ialex_testkit::gen::{cyclic_chain, random_irreducible, random_splittings};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn built_sequences_are_exact(seed in any::<u64>(), len in 1usize..8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_splittings(&mut rng, len);
        let seq = PolySequence::from_splittings(d.clone()).unwrap();
        prop_assert!(check_alternating_product(seq.polys()));
        prop_assert_eq!(subpolynomials(seq.polys()).unwrap(), d);
    }

    #[test]
    fn perturbed_sequences_are_rejected(seed in any::<u64>(), len in 1usize..8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_splittings(&mut rng, len);
        let mut polys = PolySequence::from_splittings(d).unwrap().polys().to_vec();
        let at = rng.gen_range(0..polys.len());
        polys[at] = polys[at].mul(&random_irreducible(&mut rng, 2, 4).1);
        prop_assert!(!check_alternating_product(&polys));
        prop_assert!(subpolynomials(&polys).is_err());
    }

    #[test]
    fn hidden_thirds_are_recovered(seed in any::<u64>(), len in 3usize..10, offset in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_splittings(&mut rng, len);
        let polys = PolySequence::from_splittings(d.clone()).unwrap().polys().to_vec();
        let mut known: Vec<Option<PrimitiveRep>> = polys.iter().cloned().map(Some).collect();
        let mut junctions = vec![None; len + 1];
        for u in (offset..len).step_by(3) {
            known[u] = None;
            junctions[u + 1] = Some(d[u + 1].clone());
        }
        let (got, delta) = solve_missing_third(&known, &junctions).unwrap();
        prop_assert_eq!(got, polys);
        prop_assert_eq!(delta, d);
    }

    #[test]
    fn primary_splitting_reassembles(seed in any::<u64>(), len in 2usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_splittings(&mut rng, len);
        let (modules, maps) = cyclic_chain(&d);
        let seq = ModuleSequence::new(modules.clone(), maps).unwrap();
        let primes: std::collections::BTreeSet<PrimitiveRep> =
            d.iter().flat_map(|x| x.prime_support().unwrap()).collect();
        let mut rebuilt = vec![FgGammaModule::zero(); modules.len()];
        for p in &primes {
            let part = split_primary(&seq, p).unwrap();
            prop_assert!(check_alternating_product(&part.orders()));
            for (acc, m) in rebuilt.iter_mut().zip(part.modules()) {
                *acc = acc.direct_sum(m);
            }
        }
        prop_assert_eq!(rebuilt, modules);
    }
}
