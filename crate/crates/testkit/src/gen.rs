//! Seeded random instances: polynomials with known factorizations, exact
//! sequences, disk-knot data and product-singularity inputs.

use ialex::engine::{DiskKnotData, Perversity, ProductSingularityInput};
use ialex::gmodule::{FgGammaModule, GammaMatrix};
use ialex::laurent::{factor_primitive, LaurentPoly, PrimitiveRep};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::oracle::{kronecker_irreducible, rep_from_i128};

fn random_coeffs<R: Rng>(rng: &mut R, deg: usize, bound: i128) -> Vec<i128> {
    loop {
        let c: Vec<i128> = (0..=deg).map(|_| rng.gen_range(-bound..=bound)).collect();
        if c[0] != 0 && c[deg] != 0 {
            return c;
        }
    }
}

/// Irreducible of degree `1..=max_deg`, certified by the Kronecker oracle.
/// Returns the coefficients alongside the canonical class.
pub fn random_irreducible<R: Rng>(rng: &mut R, max_deg: usize, bound: i128) -> (Vec<i128>, PrimitiveRep) {
    loop {
        let deg = rng.gen_range(1..=max_deg);
        let c = random_coeffs(rng, deg, bound);
        if kronecker_irreducible(&c) {
            return (c.clone(), rep_from_i128(&c));
        }
    }
}

/// Irreducible with `|f(1)| = 1`.
pub fn random_alexander_prime<R: Rng>(rng: &mut R, max_deg: usize) -> PrimitiveRep {
    loop {
        let deg = rng.gen_range(1..=max_deg);
        let mut c: Vec<i128> = (0..=deg).map(|_| rng.gen_range(-3..=3)).collect();
        let target = if rng.gen_bool(0.5) { 1 } else { -1 };
        let rest: i128 = c[1..].iter().sum();
        c[0] = target - rest;
        if c[0] == 0 || c[deg] == 0 || c.len() < 2 {
            continue;
        }
        if kronecker_irreducible(&c) {
            return rep_from_i128(&c);
        }
    }
}

/// Product of up to `max_factors` Alexander-type primes; may be 1.
pub fn random_alexander<R: Rng>(rng: &mut R, max_factors: usize, max_deg: usize) -> PrimitiveRep {
    let k = rng.gen_range(0..=max_factors);
    (0..k).fold(PrimitiveRep::one(), |acc, _| acc.mul(&random_alexander_prime(rng, max_deg)))
}

pub fn nontrivial_alexander<R: Rng>(rng: &mut R, max_factors: usize, max_deg: usize) -> PrimitiveRep {
    loop {
        let p = random_alexander(rng, max_factors.max(1), max_deg);
        if !p.is_one() {
            return p;
        }
    }
}

/// Product of up to `max_factors` irreducibles with small coefficients.
pub fn random_poly<R: Rng>(rng: &mut R, max_factors: usize, max_deg: usize) -> PrimitiveRep {
    let k = rng.gen_range(0..=max_factors);
    (0..k).fold(PrimitiveRep::one(), |acc, _| acc.mul(&random_irreducible(rng, max_deg, 4).1))
}

/// A random divisor, chosen factor by factor.
pub fn random_divisor<R: Rng>(rng: &mut R, p: &PrimitiveRep) -> PrimitiveRep {
    let mut out = PrimitiveRep::one();
    for f in factor_primitive(p, usize::MAX).expect("uncapped") {
        let e = rng.gen_range(0..=f.multiplicity);
        out = out.mul(&f.prime.pow(e));
    }
    out
}

/// `p̄(2) = 0` with random unit steps, up to `max_codim`.
pub fn random_traditional<R: Rng>(rng: &mut R, max_codim: usize) -> Perversity {
    let mut v = vec![0usize];
    for _ in 3..=max_codim {
        let last = *v.last().unwrap();
        v.push(last + usize::from(rng.gen_bool(0.5)));
    }
    Perversity::new(v).expect("valid by construction")
}

/// `δ_0, …, δ_len` with trivial ends and nontrivial interior.
pub fn random_splittings<R: Rng>(rng: &mut R, len: usize) -> Vec<PrimitiveRep> {
    let mut d = vec![PrimitiveRep::one()];
    for _ in 1..len {
        loop {
            let p = random_poly(rng, 2, 2);
            if !p.is_one() {
                d.push(p);
                break;
            }
        }
    }
    d.push(PrimitiveRep::one());
    d
}

/// The exact cyclic chain `Γ/(δ_0δ_1) → Γ/(δ_1δ_2) → …`, each map
/// multiplication by the splitting two steps ahead.
pub fn cyclic_chain(splittings: &[PrimitiveRep]) -> (Vec<FgGammaModule>, Vec<GammaMatrix>) {
    let len = splittings.len() - 1;
    let modules = (0..len)
        .map(|i| FgGammaModule::cyclic(splittings[i].mul(&splittings[i + 1])))
        .collect();
    let maps = (0..len.saturating_sub(1))
        .map(|i| GammaMatrix::from_rows(vec![vec![splittings[i + 2].to_laurent()]]).expect("1x1"))
        .collect();
    (modules, maps)
}

/// Disk-knot data on `n` degrees: `b_0 = t - 1`, Alexander-type `a_i, b_i`
/// on `1..=n-3` and `c_i` on `1..=n-2`.
pub fn random_point_data<R: Rng>(rng: &mut R, n: usize) -> DiskKnotData {
    let mut a = vec![PrimitiveRep::one(); n];
    let mut b = vec![PrimitiveRep::one(); n];
    let mut c = vec![PrimitiveRep::one(); n];
    b[0] = PrimitiveRep::t_minus_one();
    for i in 1..n {
        if i + 3 <= n {
            a[i] = random_alexander(rng, 2, 2);
            b[i] = random_alexander(rng, 2, 2);
        }
        if i + 2 <= n {
            c[i] = random_alexander(rng, 2, 2);
        }
    }
    DiskKnotData::new(n, a, b, c).expect("admissible by construction")
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SigmaShape {
    Point,
    Circle,
    Sphere2,
    Torus,
    Sphere3,
    /// dimension 2 with torsion `H_1`
    TorsionSurface,
    /// dimension 3 with torsion `H_1, H_2`
    TorsionThreefold,
}

impl SigmaShape {
    pub const FREE: [SigmaShape; 5] =
        [SigmaShape::Point, SigmaShape::Circle, SigmaShape::Sphere2, SigmaShape::Torus, SigmaShape::Sphere3];

    pub fn dim(self) -> usize {
        match self {
            SigmaShape::Point => 0,
            SigmaShape::Circle => 1,
            SigmaShape::Sphere2 | SigmaShape::Torus | SigmaShape::TorsionSurface => 2,
            SigmaShape::Sphere3 | SigmaShape::TorsionThreefold => 3,
        }
    }

    pub fn betti(self) -> Vec<usize> {
        match self {
            SigmaShape::Point => vec![1],
            SigmaShape::Circle => vec![1, 1],
            SigmaShape::Sphere2 | SigmaShape::TorsionSurface => vec![1, 0, 1],
            SigmaShape::Torus => vec![1, 2, 1],
            SigmaShape::Sphere3 | SigmaShape::TorsionThreefold => vec![1, 0, 0, 1],
        }
    }

    /// Maximal simplices of a triangulation, for the free shapes.
    pub fn triangulation(self) -> Option<Vec<Vec<usize>>> {
        let faces = |k: usize, verts: usize| -> Vec<Vec<usize>> {
            (0..verts).map(|skip| (0..verts).filter(|&v| v != skip).collect()).filter(|f: &Vec<usize>| f.len() == k).collect()
        };
        match self {
            SigmaShape::Point => Some(vec![vec![0]]),
            SigmaShape::Circle => Some(vec![vec![0, 1], vec![1, 2], vec![0, 2]]),
            SigmaShape::Sphere2 => Some(faces(3, 4)),
            SigmaShape::Sphere3 => Some(faces(4, 5)),
            SigmaShape::Torus => Some(torus_triangles()),
            _ => None,
        }
    }
}

/// The 3×3 grid torus, two triangles per square.
pub fn torus_triangles() -> Vec<Vec<usize>> {
    let v = |i: usize, j: usize| 3 * (i % 3) + (j % 3);
    let mut out = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            out.push(vec![v(i, j), v(i + 1, j), v(i + 1, j + 1)]);
            out.push(vec![v(i, j), v(i, j + 1), v(i + 1, j + 1)]);
        }
    }
    out
}

/// A generated product-singularity instance together with the
/// subpolynomials used to build it.
#[derive(Clone, Debug)]
pub struct ProductInstance {
    pub shape: SigmaShape,
    pub input: ProductSingularityInput,
    pub a: Vec<PrimitiveRep>,
    pub b: Vec<PrimitiveRep>,
}

fn sigma_modules<R: Rng>(rng: &mut R, shape: SigmaShape) -> Vec<FgGammaModule> {
    let mut out: Vec<FgGammaModule> = shape.betti().into_iter().map(FgGammaModule::free).collect();
    if matches!(shape, SigmaShape::TorsionSurface | SigmaShape::TorsionThreefold) {
        for m in out.iter_mut().take(shape.dim()).skip(1) {
            *m = m.direct_sum(&FgGammaModule::cyclic(nontrivial_alexander(rng, 2, 2)));
        }
    }
    out
}

fn high_part(sigma: &[FgGammaModule], link: &[FgGammaModule], i: usize, cutoff: usize) -> PrimitiveRep {
    let mut out = FgGammaModule::zero();
    for (s, l) in link.iter().enumerate() {
        if s == 0 || s < cutoff || s > i {
            continue;
        }
        if let Some(m) = sigma.get(i - s) {
            out = out.direct_sum(&m.tensor(l));
        }
        if s < i {
            if let Some(m) = sigma.get(i - 1 - s) {
                out = out.direct_sum(&m.tor(l));
            }
        }
    }
    out.order_polynomial().expect("torsion link modules")
}

/// Builds consistent `λ`, `c`, `𝔞^≥` for the given shape, link sphere
/// dimension `k` and perversity. All `t - 1` factors of degrees above 0
/// are placed in `a`.
pub fn product_instance<R: Rng>(rng: &mut R, shape: SigmaShape, k: usize, perversity: Perversity) -> ProductInstance {
    let n = k + 1 + shape.dim();
    let sigma = sigma_modules(rng, shape);
    let mut link = vec![FgGammaModule::cyclic(PrimitiveRep::t_minus_one())];
    for _ in 1..k.saturating_sub(1) {
        link.push(FgGammaModule::new(0, vec![random_alexander(rng, 2, 2)]));
    }
    let cutoff = k - perversity.at(k + 1).expect("perversity covers k + 1");
    let t1 = PrimitiveRep::t_minus_one();
    let (mut a, mut b, mut c, mut lambda, mut a_high) = (vec![], vec![], vec![], vec![], vec![]);
    for i in 0..n {
        let nu = ialex::gmodule::kunneth(&sigma, &link, i).order_polynomial().expect("torsion");
        let high = high_part(&sigma, &link, i, cutoff);
        let low = nu.div_exact(&high).expect("high part divides");
        let ah = random_divisor(rng, &high);
        let x = if i == 0 {
            PrimitiveRep::one()
        } else {
            let e = t1.multiplicity_in(&low);
            let rest = low.div_exact(&t1.pow(e)).expect("power divides");
            t1.pow(e).mul(&random_divisor(rng, &rest))
        };
        let ai = ah.mul(&x);
        let bi = nu.div_exact(&ai).expect("a divides ν");
        let ci = if i >= 1 && i + 2 <= n { random_alexander(rng, 1, 2) } else { PrimitiveRep::one() };
        lambda.push(bi.mul(&ci));
        a.push(ai);
        b.push(bi);
        c.push(ci);
        a_high.push(ah);
    }
    let input = ProductSingularityInput {
        n,
        k,
        perversity,
        sigma_homology: sigma,
        link_modules: link,
        lambda,
        c,
        a_high,
    };
    ProductInstance { shape, input, a, b }
}

pub fn random_product<R: Rng>(rng: &mut R, shapes: &[SigmaShape]) -> ProductInstance {
    let shape = *shapes.choose(rng).expect("nonempty shape list");
    let k = rng.gen_range(2..=5);
    let n = k + 1 + shape.dim();
    let p = random_traditional(rng, n + 1);
    product_instance(rng, shape, k, p)
}

/// Multiplies every entry of a Laurent polynomial by a random unit.
pub fn random_unit_multiple<R: Rng>(rng: &mut R, p: &LaurentPoly) -> LaurentPoly {
    let num = rng.gen_range(1..=5i64) * if rng.gen_bool(0.5) { 1 } else { -1 };
    let den = rng.gen_range(1..=3i64);
    let unit = LaurentPoly::monomial(
        num_rational::BigRational::new(num.into(), den.into()),
        rng.gen_range(-3..=3),
    );
    p.clone() * unit
}

/// Up to 4×4, entries of span at most 2 with small coefficients.
pub fn random_matrix<R: Rng>(rng: &mut R) -> GammaMatrix {
    let (r, c) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
    let entries = (0..r * c)
        .map(|_| {
            if rng.gen_bool(0.25) {
                return LaurentPoly::zero();
            }
            let deg = rng.gen_range(0..=2);
            let coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-3..=3)).collect();
            LaurentPoly::from_ints(rng.gen_range(-1..=1), &coeffs)
        })
        .collect();
    GammaMatrix::new(r, c, entries).unwrap()
}
