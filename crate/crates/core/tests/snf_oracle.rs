use ialex::gmodule::{cokernel, smith_decomposition, smith_normal_form, GammaMatrix};
use ialex_testkit::gen::random_matrix;
use ialex_testkit::oracle::{determinantal_invariant_factors, from_rep};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn invariant_factors_match_determinantal_divisors(seed in any::<u64>()) {
        let m = random_matrix(&mut ChaCha8Rng::seed_from_u64(seed));
        let got: Vec<_> = smith_normal_form(&m).factors.iter().map(from_rep).collect();
        prop_assert_eq!(got, determinantal_invariant_factors(&m));
    }

    #[test]
    fn transforms_diagonalize(seed in any::<u64>()) {
        let m = random_matrix(&mut ChaCha8Rng::seed_from_u64(seed));
        let d = smith_decomposition(&m);
        let prod = d.u.mul(&m).unwrap().mul(&d.v).unwrap();
        for i in 0..prod.rows() {
            for j in 0..prod.cols() {
                let e = prod.get(i, j);
                if i == j && i < d.rank() {
                    prop_assert_eq!(e.normalize().unwrap(), d.diag[i].clone());
                } else {
                    prop_assert!(e.is_zero());
                }
            }
        }
        prop_assert_eq!(d.u.mul(&d.u_inv).unwrap(), GammaMatrix::identity(m.rows()));
        for w in d.diag.windows(2) {
            prop_assert!(w[0].divides(&w[1]));
        }
    }

    #[test]
    fn cokernel_is_transpose_invariant_up_to_free_rank(seed in any::<u64>()) {
        let m = random_matrix(&mut ChaCha8Rng::seed_from_u64(seed));
        let a = cokernel(&m);
        let b = cokernel(&m.transpose());
        prop_assert_eq!(a.torsion(), b.torsion());
        prop_assert_eq!(a.free_rank() + m.rows(), b.free_rank() + m.cols());
    }
}
