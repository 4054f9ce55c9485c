use std::time::Instant;

use ialex::gmodule::{subquotient, FgGammaModule, GammaMatrix};
use ialex::laurent::{LaurentPoly, PrimitiveRep};
use ialex::twisted::{abutment_divisor_bound, e2_cone_page, e2_link_page, twisted_homology, TwistedComplex};
use ialex::engine::Perversity;
use ialex_testkit::gen::{random_matrix, random_poly, random_unit_multiple, torus_triangles, SigmaShape};
use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn p(s: &str) -> PrimitiveRep {
    s.parse().unwrap()
}

fn unit(c: i64, e: i64) -> LaurentPoly {
    LaurentPoly::monomial(BigRational::from_integer(c.into()), e)
}

/// `m`-gon with the loop value on the closing edge.
fn polygon(m: usize, loop_value: LaurentPoly, stalk: FgGammaModule) -> TwistedComplex {
    let mut edges: Vec<Vec<usize>> = (0..m - 1).map(|i| vec![i, i + 1]).collect();
    edges.push(vec![0, m - 1]);
    let rho = loop_value.unit_inverse().unwrap();
    TwistedComplex::new(edges, vec![((0, m - 1), rho)], stalk).unwrap()
}

fn random_stalk(rng: &mut ChaCha8Rng) -> FgGammaModule {
    let torsion = (0..rng.gen_range(0..=2)).map(|_| random_poly(rng, 2, 2)).collect();
    FgGammaModule::new(rng.gen_range(0..=1), torsion)
}

/// Edge values `t^{seam crossings}` for the first grid direction.
fn torus_winding() -> Vec<((usize, usize), LaurentPoly)> {
    let mut out = Vec::new();
    for tri in torus_triangles() {
        for (a, b) in [(tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2])] {
            let (ia, ib) = (a / 3, b / 3);
            let step = match (ib + 3 - ia) % 3 {
                0 => 0i64,
                1 => 1,
                _ => -1,
            };
            let crossing = if ia as i64 + step > 2 { 1 } else if (ia as i64 + step) < 0 { -1 } else { 0 };
            if crossing != 0 {
                out.push(((a, b), unit(1, crossing)));
            }
        }
    }
    out
}

#[test]
fn circle_examples() {
    let start = Instant::now();
    let h = twisted_homology(&polygon(3, unit(1, 1), FgGammaModule::free(1))).unwrap();
    assert!(start.elapsed().as_millis() < 10);
    assert_eq!(h, vec![FgGammaModule::cyclic(p("t - 1")), FgGammaModule::zero()]);
    let h = twisted_homology(&polygon(3, unit(1, 0), FgGammaModule::free(1))).unwrap();
    assert_eq!(h, vec![FgGammaModule::free(1); 2]);
    let h = twisted_homology(&polygon(3, unit(1, 1), FgGammaModule::cyclic(p("t^2 - t + 1")))).unwrap();
    assert!(h.iter().all(FgGammaModule::is_zero));
}

#[test]
fn untwisted_shapes_have_their_betti_numbers() {
    for shape in SigmaShape::FREE {
        let tc = TwistedComplex::new(shape.triangulation().unwrap(), vec![], FgGammaModule::free(1)).unwrap();
        let h = twisted_homology(&tc).unwrap();
        let ranks: Vec<usize> = h.iter().map(FgGammaModule::free_rank).collect();
        assert_eq!(ranks, shape.betti(), "{shape:?}");
        assert!(h.iter().all(|m| m.torsion().is_empty()));
    }
}

#[test]
fn torus_twisted_along_one_circle() {
    let tc = TwistedComplex::new(torus_triangles(), torus_winding(), FgGammaModule::free(1)).unwrap();
    let t1 = FgGammaModule::cyclic(p("t - 1"));
    assert_eq!(twisted_homology(&tc).unwrap(), vec![t1.clone(), t1, FgGammaModule::zero()]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn subdivision_preserves_circle_homology(seed in any::<u64>(), m in 4usize..9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let stalk = random_stalk(&mut rng);
        let loop_value = random_unit_multiple(&mut rng, &LaurentPoly::one());
        let coarse = twisted_homology(&polygon(3, loop_value.clone(), stalk.clone())).unwrap();
        prop_assert_eq!(twisted_homology(&polygon(m, loop_value, stalk)).unwrap(), coarse);
    }

    #[test]
    fn coboundary_monodromy_is_invisible(seed in any::<u64>(), shape_ix in 0usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let shape = SigmaShape::FREE[shape_ix];
        let simplices = shape.triangulation().unwrap();
        let verts = simplices.iter().flatten().max().unwrap() + 1;
        let g: Vec<LaurentPoly> = (0..verts).map(|_| random_unit_multiple(&mut rng, &LaurentPoly::one())).collect();
        let plain = TwistedComplex::new(simplices.clone(), vec![], random_stalk(&mut rng)).unwrap();
        let mut rho = Vec::new();
        for u in 0..verts {
            for v in u + 1..verts {
                if simplices.iter().any(|s| s.contains(&u) && s.contains(&v)) {
                    rho.push(((u, v), g[v].clone() * g[u].unit_inverse().unwrap()));
                }
            }
        }
        let twisted = plain.with_monodromy(rho).unwrap();
        prop_assert_eq!(twisted_homology(&twisted).unwrap(), twisted_homology(&plain).unwrap());
    }

    #[test]
    fn euler_characteristic_is_conserved(seed in any::<u64>(), shape_ix in 0usize..5, twist in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let shape = SigmaShape::FREE[shape_ix];
        let d = random_poly(&mut rng, 2, 2);
        let tc = if twist && shape == SigmaShape::Torus {
            TwistedComplex::new(torus_triangles(), torus_winding(), FgGammaModule::free(1)).unwrap()
        } else {
            TwistedComplex::new(shape.triangulation().unwrap(), vec![], FgGammaModule::free(1)).unwrap()
        };
        let chi: i64 = (0..=tc.dim()).map(|q| (tc.simplices(q).len() as i64) * if q % 2 == 0 { 1 } else { -1 }).sum();
        let free = twisted_homology(&tc).unwrap();
        let hchi: i64 = free.iter().enumerate().map(|(q, m)| m.free_rank() as i64 * if q % 2 == 0 { 1 } else { -1 }).sum();
        prop_assert_eq!(chi, hchi);
        let tors = twisted_homology(&tc.with_stalk(FgGammaModule::cyclic(d.clone()))).unwrap();
        let (mut even, mut odd) = (PrimitiveRep::one(), PrimitiveRep::one());
        for (q, m) in tors.iter().enumerate() {
            let o = m.order_polynomial().unwrap();
            if q % 2 == 0 { even = even.mul(&o) } else { odd = odd.mul(&o) }
        }
        // chain orders d^{n_q}; their alternating product is d^χ
        if chi >= 0 {
            prop_assert_eq!(even, odd.mul(&d.pow(chi as u32)));
        } else {
            prop_assert_eq!(even.mul(&d.pow((-chi) as u32)), odd);
        }
    }

    #[test]
    fn subquotients_of_entries_divide_them(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let stalk = FgGammaModule::new(0, (0..2).map(|_| random_poly(&mut rng, 2, 2)).collect());
        let family = vec![polygon(3, unit(1, 0), stalk)];
        let page = e2_link_page(&family).unwrap();
        for ((pp, q), m) in page.modules() {
            let order = page.polynomial(pp, q).unwrap();
            let g = m.torsion().len();
            let k = GammaMatrix::diagonal(&m.torsion().iter().map(PrimitiveRep::to_laurent).collect::<Vec<_>>());
            let mut z = random_matrix(&mut rng);
            while z.rows() != g {
                z = random_matrix(&mut rng);
            }
            let mut c = random_matrix(&mut rng);
            while c.rows() != z.cols() {
                c = random_matrix(&mut rng);
            }
            let num = z.hstack(&k).unwrap();
            let den = z.mul(&c).unwrap().hstack(&k).unwrap();
            let sq = subquotient(&num, &den).unwrap();
            prop_assert!(sq.order_polynomial().unwrap().divides(&order));
        }
    }
}

#[test]
fn pages_over_point_and_circle() {
    let point = TwistedComplex::new(vec![vec![0]], vec![], FgGammaModule::zero()).unwrap();
    let links = [p("t - 1"), p("t^2 - t + 1"), p("t^2 - 3t + 1")];
    let family: Vec<_> = links.iter().map(|l| point.with_stalk(FgGammaModule::cyclic(l.clone()))).collect();
    let page = e2_link_page(&family).unwrap();
    for (j, l) in links.iter().enumerate() {
        assert_eq!(abutment_divisor_bound(&page, j).unwrap(), *l);
    }
    assert!(abutment_divisor_bound(&page, 7).unwrap().is_one());

    let circle = polygon(3, unit(1, 0), FgGammaModule::zero());
    let family: Vec<_> = links.iter().map(|l| circle.with_stalk(FgGammaModule::cyclic(l.clone()))).collect();
    let link = e2_link_page(&family).unwrap();
    assert_eq!(abutment_divisor_bound(&link, 2).unwrap(), links[1].mul(&links[2]));
    // codim 4, top perversity: threshold 4 - 1 - 2 = 1
    let cone = e2_cone_page(&family, 4, &Perversity::top(4)).unwrap();
    assert_eq!(cone.module(0, 0), link.module(0, 0));
    assert_eq!(cone.module(1, 0), link.module(1, 0));
    assert!(cone.module(0, 1).is_zero() && cone.module(1, 2).is_zero());
    let zero = e2_cone_page(&family, 4, &Perversity::zero(4)).unwrap();
    assert_eq!(zero, link);
}
