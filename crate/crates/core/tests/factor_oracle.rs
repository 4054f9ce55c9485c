use ialex::laurent::{factor, gcd, normalize, parse_laurent, similar, LaurentPoly, PrimitiveRep};
use ialex_testkit::gen::{random_irreducible, random_unit_multiple};
use ialex_testkit::oracle::{kronecker_factor, rep_coeffs_i128};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn product_of_irreducibles(seed: u64, max_total: usize) -> (PrimitiveRep, Vec<Vec<i128>>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut total = 0;
    let mut p = PrimitiveRep::one();
    let mut parts = Vec::new();
    while total < max_total {
        let (_, r) = random_irreducible(&mut rng, (max_total - total).min(3), 5);
        total += r.degree();
        p = p.mul(&r);
        parts.push(rep_coeffs_i128(&r));
        if rng.gen_bool(0.3) {
            break;
        }
    }
    parts.sort();
    (p, parts)
}

fn library_multiset(p: &PrimitiveRep) -> Vec<Vec<i128>> {
    let mut out = Vec::new();
    for f in factor(&p.to_laurent()).unwrap() {
        for _ in 0..f.multiplicity {
            out.push(rep_coeffs_i128(&f.prime));
        }
    }
    out.sort();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn factorization_matches_generators_and_kronecker(seed in any::<u64>()) {
        let (p, parts) = product_of_irreducibles(seed, 6);
        let got = library_multiset(&p);
        prop_assert_eq!(&got, &parts);
        prop_assert_eq!(kronecker_factor(&rep_coeffs_i128(&p)), parts);
    }

    #[test]
    fn normalization_ignores_units(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (p, _) = product_of_irreducibles(seed, 5);
        let q = random_unit_multiple(&mut rng, &p.to_laurent());
        prop_assert_eq!(normalize(&q).unwrap(), p.clone());
        prop_assert!(similar(&q, &p.to_laurent()));
        let back: PrimitiveRep = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p.clone());
        prop_assert_eq!(p.involute().involute(), p);
    }

    #[test]
    fn gcd_divides_and_is_maximal(s1 in any::<u64>(), s2 in any::<u64>()) {
        let (a, _) = product_of_irreducibles(s1, 4);
        let (b, _) = product_of_irreducibles(s2, 4);
        let (c, _) = product_of_irreducibles(s1 ^ s2, 3);
        let (ac, bc) = (a.mul(&c), b.mul(&c));
        let g = gcd(&ac.to_laurent(), &bc.to_laurent()).unwrap();
        prop_assert!(g.divides(&ac) && g.divides(&bc));
        prop_assert!(c.divides(&g));
        prop_assert_eq!(g.mul(&ac.lcm(&bc)), ac.mul(&bc));
    }
}

#[test]
fn printed_polynomials_reparse() {
    for s in ["3t^-2 - 1/2 t + 7", "t^5", "-t^-1 + t", "2/3"] {
        let p = parse_laurent(s).unwrap();
        let q: LaurentPoly = p.to_string().parse().unwrap();
        assert_eq!(p, q, "{s}");
    }
}
