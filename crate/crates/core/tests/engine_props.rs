use ialex::engine::{
    ia_point, ia_point_super, ia_point_table, ia_product, point_cutoff, superdual_polynomials,
    validate_normalization, DiskKnotData, PointBranch, ProductSingularityInput,
};
use ialex::gmodule::FgGammaModule;
use ialex::laurent::PrimitiveRep;
use ialex_testkit::gen::{product_instance, random_point_data, random_product, random_traditional, SigmaShape};
use ialex_testkit::oracle::recovered_mu_c;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn point_case(seed: u64) -> (DiskKnotData, ialex::engine::Perversity) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(3..=8);
    let data = random_point_data(&mut rng, n);
    let extra = rng.gen_range(0..=2);
    let p = random_traditional(&mut rng, n + extra);
    (data, p)
}

fn as_point_input(data: &DiskKnotData, p: &ialex::engine::Perversity) -> ProductSingularityInput {
    let n = data.n();
    let thr = point_cutoff(n, p).unwrap();
    ProductSingularityInput {
        n,
        k: n - 1,
        perversity: p.clone(),
        sigma_homology: vec![FgGammaModule::free(1)],
        link_modules: (0..n - 2).map(|i| FgGammaModule::new(0, vec![data.nu(i)])).collect(),
        lambda: (0..n).map(|i| data.lambda(i)).collect(),
        c: (0..n).map(|i| data.c(i)).collect(),
        a_high: (0..n).map(|i| if i >= thr { data.a(i) } else { PrimitiveRep::one() }).collect(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn point_table_follows_branches(seed in any::<u64>()) {
        let (data, p) = point_case(seed);
        let n = data.n();
        let thr = n - 1 - p.at(n).unwrap();
        let (mu, c) = recovered_mu_c(&data);
        for row in ia_point_table(&data, &p).unwrap() {
            let i = row.degree;
            let (branch, expect) = if i < thr {
                (PointBranch::Lambda, data.lambda(i))
            } else if i == thr {
                (PointBranch::Cutoff, c[i].clone())
            } else {
                (PointBranch::Mu, mu[i].clone())
            };
            prop_assert_eq!(row.branch, branch);
            prop_assert_eq!(row.value, expect);
        }
    }

    #[test]
    fn point_outputs_are_normalized_and_dualize(seed in any::<u64>()) {
        let (data, p) = point_case(seed);
        let n = data.n();
        let ia = ia_point(&data, &p).unwrap();
        prop_assert!(validate_normalization(&ia, n, false).pass());
        let dual = superdual_polynomials(&ia, n);
        prop_assert!(validate_normalization(&dual, n, true).pass());
        prop_assert_eq!(superdual_polynomials(&dual, n), ia);
        let q = p.superdual();
        prop_assert_eq!(ia_point_super(&data, &q).unwrap(), dual);
    }

    #[test]
    fn product_over_a_point_is_the_point_formula(seed in any::<u64>()) {
        let (data, p) = point_case(seed);
        let report = ia_product(&as_point_input(&data, &p)).unwrap();
        prop_assert_eq!(report.ia(), ia_point(&data, &p).unwrap());
    }

    #[test]
    fn generated_point_shape_matches_point_formula(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = rng.gen_range(2..=6);
        let p = random_traditional(&mut rng, k + 1);
        let inst = product_instance(&mut rng, SigmaShape::Point, k, p.clone());
        let n = inst.input.n;
        let data = DiskKnotData::new(n, inst.a.clone(), inst.b.clone(), inst.input.c.clone()).unwrap();
        prop_assert_eq!(ia_product(&inst.input).unwrap().ia(), ia_point(&data, &p).unwrap());
    }

    #[test]
    fn product_stable_ranges_and_normalization(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let all = [
            SigmaShape::Point, SigmaShape::Circle, SigmaShape::Sphere2, SigmaShape::Torus,
            SigmaShape::Sphere3, SigmaShape::TorsionSurface, SigmaShape::TorsionThreefold,
        ];
        let inst = random_product(&mut rng, &all);
        let input = &inst.input;
        let report = ia_product(input).unwrap();
        let cutoff = report.cutoff;
        let start = input.mu_range_start().unwrap();
        for row in &report.rows {
            if row.degree < cutoff {
                prop_assert_eq!(&row.ia, &row.lambda);
            }
            if row.degree >= start {
                prop_assert_eq!(&row.ia, &row.mu);
            }
        }
        prop_assert!(validate_normalization(&report.ia(), input.n, false).pass());
    }

    #[test]
    fn free_sigma_nu_is_a_product_of_link_polynomials(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inst = random_product(&mut rng, &SigmaShape::FREE);
        let betti = inst.shape.betti();
        let xi: Vec<PrimitiveRep> = inst.input.link_modules.iter().map(|m| m.order_polynomial().unwrap()).collect();
        let report = ia_product(&inst.input).unwrap();
        for row in &report.rows {
            let i = row.degree;
            let mut expect = PrimitiveRep::one();
            for (s, x) in xi.iter().enumerate() {
                if s <= i && i - s < betti.len() {
                    expect = expect.mul(&x.pow(betti[i - s] as u32));
                }
            }
            prop_assert_eq!(&row.nu, &expect);
        }
    }
}
