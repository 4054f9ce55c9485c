//! Factorization over the rationals: squarefree part by gcd with the
//! derivative, mod-p factorization, Hensel lifting and subset recombination.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, Zero};

use super::modp::{self, Field, PPoly};
use super::poly::{LaurentPoly, PrimitiveRep};
use super::zpoly::{self, ZPoly};
use crate::error::{Error, Result};

pub const DEFAULT_DEGREE_CAP: usize = 64;

/// One irreducible factor and its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factor {
    pub prime: PrimitiveRep,
    pub multiplicity: u32,
}

/// Factorization into pairwise non-associate irreducibles, sorted by
/// degree then coefficients. Units factor as the empty list.
pub fn factor(p: &LaurentPoly) -> Result<Vec<Factor>> {
    factor_with_cap(p, DEFAULT_DEGREE_CAP)
}

pub fn factor_with_cap(p: &LaurentPoly, cap: usize) -> Result<Vec<Factor>> {
    let rep = p.normalize()?;
    factor_primitive(&rep, cap)
}

pub fn factor_primitive(rep: &PrimitiveRep, cap: usize) -> Result<Vec<Factor>> {
    if rep.degree() > cap {
        return Err(Error::DegreeCapExceeded { degree: rep.degree(), cap });
    }
    if rep.is_one() {
        return Ok(Vec::new());
    }
    let f = rep.coeffs().to_vec();
    let g = zpoly::gcd(&f, &zpoly::derivative(&f));
    let squarefree = zpoly::div_exact(&f, &g).expect("gcd divides f");
    let mut out: Vec<Factor> = factor_squarefree(&squarefree)
        .into_iter()
        .map(|q| {
            let prime = PrimitiveRep::from_zpoly_unchecked(q);
            let multiplicity = prime.multiplicity_in(rep);
            Factor { prime, multiplicity }
        })
        .collect();
    out.sort();
    Ok(out)
}

/// True for irreducible nonunits.
pub fn is_irreducible(rep: &PrimitiveRep) -> Result<bool> {
    if rep.is_one() {
        return Ok(false);
    }
    if rep.degree() == 1 {
        return Ok(true);
    }
    let fs = factor_primitive(rep, usize::MAX)?;
    Ok(fs.len() == 1 && fs[0].multiplicity == 1)
}

/// Irreducible factors of a primitive squarefree polynomial with nonzero
/// constant term and positive leading coefficient.
fn factor_squarefree(f: &[BigInt]) -> Vec<ZPoly> {
    let deg = f.len() - 1;
    if deg <= 1 {
        return vec![f.to_vec()];
    }
    let Some((field, local)) = choose_prime(f) else {
        unreachable!("some prime keeps a squarefree polynomial squarefree");
    };
    if local.len() == 1 {
        return vec![f.to_vec()];
    }
    let bound = coefficient_bound(f);
    let p = BigInt::from(field.p);
    let mut modulus = p.clone();
    let mut k = 1u32;
    while modulus <= &bound * 2 {
        modulus *= &p;
        k += 1;
    }
    let lc = f.last().unwrap().clone();
    let lc_inv = mod_inverse(&lc, &modulus);
    let target: ZPoly = f.iter().map(|c| (c * &lc_inv).mod_floor(&modulus)).collect();
    let lifted = lift_all(field, &target, &local, k);
    recombine(f, lifted, &modulus)
}

fn choose_prime(f: &[BigInt]) -> Option<(Field, Vec<PPoly>)> {
    let lc = f.last().unwrap();
    let mut best: Option<(Field, Vec<PPoly>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if (lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let field = Field::new(p);
        let fp = modp::reduce(f, p);
        if fp.len() != f.len() || !field.is_squarefree(&fp) {
            continue;
        }
        let factors = field.factor_squarefree(&field.monic(&fp));
        let better = best.as_ref().map_or(true, |(_, b)| factors.len() < b.len());
        if better {
            best = Some((field, factors));
        }
        tried += 1;
        if tried >= 5 || best.as_ref().is_some_and(|(_, b)| b.len() == 1) {
            break;
        }
    }
    best
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| {
        let r = n.sqrt();
        (3..=r).step_by(2).all(|d| n % d != 0)
    })
}

/// Bound on the coefficients of `lc(f) * g / lc(g)` for any factor `g`.
fn coefficient_bound(f: &[BigInt]) -> BigInt {
    let deg = f.len() - 1;
    let norm = zpoly::norm_sq(f).sqrt() + BigInt::one();
    let lc = f.last().unwrap().abs();
    (BigInt::one() << deg) * norm * lc
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "leading coefficient not invertible mod p^k");
    e.x.mod_floor(m)
}

fn to_z(p: &[u64]) -> ZPoly {
    p.iter().map(|&c| BigInt::from(c)).collect()
}

fn reduce_mod(p: &[BigInt], m: &BigInt) -> ZPoly {
    let mut out: ZPoly = p.iter().map(|c| c.mod_floor(m)).collect();
    zpoly::trim(&mut out);
    out
}

/// Lifts `target ≡ prod(factors) (mod p)` to a factorization modulo `p^k`.
/// All factors are monic and `target` is monic modulo `p^k`.
fn lift_all(field: Field, target: &[BigInt], factors: &[PPoly], k: u32) -> Vec<ZPoly> {
    if factors.len() == 1 {
        return vec![target.to_vec()];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let g0 = left.iter().fold(vec![1u64], |acc, g| field.mul_poly(&acc, g));
    let h0 = right.iter().fold(vec![1u64], |acc, g| field.mul_poly(&acc, g));
    let (g, h) = hensel_pair(field, target, &g0, &h0, k);
    let mut out = lift_all(field, &g, left, k);
    out.extend(lift_all(field, &h, right, k));
    out
}

/// Linear Hensel lifting of `target ≡ g h (mod p)` to modulus `p^k`.
fn hensel_pair(field: Field, target: &[BigInt], g0: &[u64], h0: &[u64], k: u32) -> (ZPoly, ZPoly) {
    let (one, s, t) = field.ext_gcd(g0, h0);
    debug_assert_eq!(one, vec![1]);
    let p = BigInt::from(field.p);
    let mut g = to_z(g0);
    let mut h = to_z(h0);
    let mut pj = p.clone();
    for _ in 1..k {
        let next = &pj * &p;
        let diff = reduce_mod(&zpoly::sub(target, &zpoly::mul(&g, &h)), &next);
        let e: PPoly = modp::reduce(
            &diff.iter().map(|c| c / &pj).collect::<Vec<_>>(),
            field.p,
        );
        if !e.is_empty() {
            let dg = field.rem(&field.mul_poly(&e, &t), g0);
            let dh = field.rem(&field.mul_poly(&e, &s), h0);
            g = zpoly::add(&g, &zpoly::scale(&to_z(&dg), &pj));
            h = zpoly::add(&h, &zpoly::scale(&to_z(&dh), &pj));
        }
        pj = next;
    }
    (reduce_mod(&g, &pj), reduce_mod(&h, &pj))
}

fn symmetric(p: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    let mut out: ZPoly = p
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    zpoly::trim(&mut out);
    out
}

fn recombine(f: &[BigInt], mut local: Vec<ZPoly>, m: &BigInt) -> Vec<ZPoly> {
    let mut rest = f.to_vec();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= local.len() {
        let mut hit = None;
        for subset in Subsets::new(local.len(), size) {
            let lc = rest.last().unwrap().clone();
            let prod = subset
                .iter()
                .fold(vec![lc.clone()], |acc, &i| reduce_mod(&zpoly::mul(&acc, &local[i]), m));
            let cand = zpoly::primitive_part(&symmetric(&prod, m));
            if cand.len() < 2 {
                continue;
            }
            if let Some(q) = zpoly::div_exact(&rest, &cand) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                found.push(cand);
                rest = zpoly::primitive_part(&q);
                for &i in subset.iter().rev() {
                    local.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if rest.len() > 1 {
        found.push(rest);
    }
    found
}

/// Lexicographic k-subsets of 0..n.
struct Subsets {
    idx: Vec<usize>,
    n: usize,
    done: bool,
}

impl Subsets {
    fn new(n: usize, k: usize) -> Self {
        Subsets { idx: (0..k).collect(), n, done: k > n }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Multiplicity of the prime in `p`, for callers holding Laurent data.
pub fn multiplicity(prime: &PrimitiveRep, p: &LaurentPoly) -> Result<u32> {
    Ok(prime.multiplicity_in(&p.normalize()?))
}
