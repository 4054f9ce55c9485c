//! Reference algorithms written without the library's polynomial code:
//! dense rational arithmetic, Kronecker factorization over Z and invariant
//! factors from determinantal divisors. The point-singularity table is
//! rebuilt from the exact-sequence solver instead of the engine.

use ialex::engine::{DiskKnotData, Perversity};
use ialex::exactseq::solve_missing_third;
use ialex::gmodule::GammaMatrix;
use ialex::laurent::{LaurentPoly, PrimitiveRep};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Dense polynomial over Q, lowest degree first, no trailing zeros.
pub type QPoly = Vec<BigRational>;

fn trim(mut p: QPoly) -> QPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn qmul(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn qsub(a: &QPoly, b: &QPoly) -> QPoly {
    let n = a.len().max(b.len());
    let z = BigRational::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
}

pub fn qrem(a: &QPoly, b: &QPoly) -> QPoly {
    assert!(!b.is_empty(), "division by zero");
    let mut r = a.clone();
    let lb = b.last().unwrap();
    while r.len() >= b.len() {
        let coef = r.last().unwrap() / lb;
        let shift = r.len() - b.len();
        for (i, y) in b.iter().enumerate() {
            r[shift + i] -= &coef * y;
        }
        r = trim(r);
    }
    r
}

pub fn qgcd(a: &QPoly, b: &QPoly) -> QPoly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let r = qrem(&x, &y);
        x = y;
        y = r;
    }
    canon(&x)
}

/// Representative up to units of Γ: no factor of `t`, monic. Zero stays
/// empty.
pub fn canon(p: &QPoly) -> QPoly {
    let start = p.iter().position(|c| !c.is_zero()).unwrap_or(p.len());
    let q: QPoly = p[start..].to_vec();
    match q.last() {
        None => q,
        Some(l) => {
            let l = l.clone();
            q.into_iter().map(|c| c / &l).collect()
        }
    }
}

pub fn from_rep(r: &PrimitiveRep) -> QPoly {
    canon(&r.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect())
}

fn from_laurent(p: &LaurentPoly, shift: i64) -> QPoly {
    let Some(hi) = p.max_exp() else { return Vec::new() };
    trim((0..=(hi + shift)).map(|e| p.coeff(e - shift)).collect())
}

fn det(m: &[Vec<QPoly>]) -> QPoly {
    match m.len() {
        0 => vec![BigRational::one()],
        1 => m[0][0].clone(),
        n => {
            let mut acc: QPoly = Vec::new();
            for j in 0..n {
                if m[0][j].is_empty() {
                    continue;
                }
                let minor: Vec<Vec<QPoly>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, e)| e.clone()).collect())
                    .collect();
                let term = qmul(&m[0][j], &det(&minor));
                acc = if j % 2 == 0 { qsub(&acc, &qsub(&Vec::new(), &term)) } else { qsub(&acc, &term) };
            }
            acc
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// `d_k = D_k / D_{k-1}` where `D_k` is the gcd of all `k×k` minors, for
/// `k` up to the rank; each in [`canon`] form.
pub fn determinantal_invariant_factors(m: &GammaMatrix) -> Vec<QPoly> {
    let shift = (0..m.rows())
        .flat_map(|i| m.row(i).iter().filter_map(LaurentPoly::min_exp))
        .min()
        .map_or(0, |e| -e);
    let grid: Vec<Vec<QPoly>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|e| from_laurent(e, shift)).collect())
        .collect();
    let mut out = Vec::new();
    let mut prev: QPoly = vec![BigRational::one()];
    for k in 1..=m.rows().min(m.cols()) {
        let mut g: QPoly = Vec::new();
        for rs in subsets(m.rows(), k) {
            for cs in subsets(m.cols(), k) {
                let sub: Vec<Vec<QPoly>> = rs.iter().map(|&r| cs.iter().map(|&c| grid[r][c].clone()).collect()).collect();
                g = qgcd(&g, &det(&sub));
            }
        }
        if g.is_empty() {
            break;
        }
        let (q, r) = qdiv(&g, &prev);
        assert!(r.is_empty(), "determinantal divisors form a chain");
        out.push(canon(&q));
        prev = g;
    }
    out
}

fn qdiv(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let mut r = a.clone();
    let mut q = vec![BigRational::zero(); a.len().saturating_sub(b.len()) + 1];
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let coef = r.last().unwrap() / &lb;
        let shift = r.len() - b.len();
        for (i, y) in b.iter().enumerate() {
            r[shift + i] -= &coef * y;
        }
        q[shift] = coef;
        r = trim(r);
    }
    (trim(q), r)
}

fn eval(f: &[i128], x: i128) -> i128 {
    f.iter().rev().fold(0, |acc, &c| acc * x + c)
}

fn divisors(v: i128) -> Vec<i128> {
    let v = v.abs();
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= v {
        if v % d == 0 {
            out.push(d);
            if d * d != v {
                out.push(v / d);
            }
        }
        d += 1;
    }
    out
}

fn zdiv(f: &[i128], g: &[i128]) -> Option<Vec<i128>> {
    let mut r = f.to_vec();
    let lg = *g.last()?;
    let mut q = vec![0; f.len().checked_sub(g.len())? + 1];
    for shift in (0..q.len()).rev() {
        let top = r[shift + g.len() - 1];
        if top % lg != 0 {
            return None;
        }
        let c = top / lg;
        q[shift] = c;
        for (i, y) in g.iter().enumerate() {
            r[shift + i] -= c * y;
        }
    }
    r.iter().all(|&x| x == 0).then_some(q)
}

/// A factor of exact degree `d` of `f`, by interpolating through divisors
/// of values at `d + 1` integer nodes.
fn kronecker_step(f: &[i128], d: usize) -> Option<Vec<i128>> {
    let mut nodes: Vec<(usize, i128, i128)> = (-8..=8)
        .map(|x| (x, eval(f, x)))
        .filter(|&(_, v)| v != 0)
        .map(|(x, v)| (divisors(v).len(), x, v))
        .collect();
    nodes.sort();
    if nodes.len() < d + 1 {
        return None;
    }
    let xs: Vec<i128> = nodes[..=d].iter().map(|n| n.1).collect();
    let choices: Vec<Vec<i128>> = nodes[..=d]
        .iter()
        .enumerate()
        .map(|(k, n)| {
            let pos = divisors(n.2);
            if k == 0 {
                pos
            } else {
                pos.iter().flat_map(|&p| [p, -p]).collect()
            }
        })
        .collect();
    let lead = *f.last().unwrap();
    let mut newton = Vec::with_capacity(d + 1);
    search(f, d, lead, &xs, &choices, &mut newton)
}

fn search(f: &[i128], d: usize, lead: i128, xs: &[i128], choices: &[Vec<i128>], newton: &mut Vec<i128>) -> Option<Vec<i128>> {
    let k = newton.len();
    if k == d + 1 {
        let top = newton[d];
        if top == 0 || lead % top != 0 {
            return None;
        }
        let mut g = vec![top];
        for j in (0..d).rev() {
            // g = g·(t - x_j) + c_j
            let mut next = vec![0; g.len() + 1];
            for (i, &c) in g.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * xs[j];
            }
            next[0] += newton[j];
            g = next;
        }
        return zdiv(f, &g).map(|_| g);
    }
    let mut basis = 1;
    let mut value = 0;
    for (j, &c) in newton.iter().enumerate() {
        value += c * basis;
        basis *= xs[k] - xs[j];
    }
    for &v in &choices[k] {
        let diff = v - value;
        if diff % basis != 0 {
            continue;
        }
        newton.push(diff / basis);
        if let Some(g) = search(f, d, lead, xs, choices, newton) {
            return Some(g);
        }
        newton.pop();
    }
    None
}

fn primitive_part(f: &[i128]) -> Vec<i128> {
    let start = f.iter().position(|&c| c != 0).expect("nonzero polynomial");
    let mut g: Vec<i128> = f[start..].to_vec();
    let content = g.iter().fold(0i128, |a, &b| num_integer::gcd(a, b));
    let sign = if *g.last().unwrap() < 0 { -1 } else { 1 };
    for c in &mut g {
        *c /= content * sign;
    }
    g
}

/// Irreducible factors over Z[t, t^-1], each primitive with positive
/// leading coefficient, repeated by multiplicity, sorted.
pub fn kronecker_factor(f: &[i128]) -> Vec<Vec<i128>> {
    let mut rest = primitive_part(f);
    let mut out = Vec::new();
    let mut d = 1;
    while 2 * d <= rest.len() - 1 {
        match kronecker_step(&rest, d) {
            Some(g) => {
                let g = primitive_part(&g);
                rest = zdiv(&rest, &g).expect("found factor divides");
                out.push(g);
            }
            None => d += 1,
        }
    }
    if rest.len() > 1 {
        out.push(primitive_part(&rest));
    }
    out.sort();
    out
}

pub fn kronecker_irreducible(f: &[i128]) -> bool {
    let p = primitive_part(f);
    p.len() > 1 && kronecker_factor(&p).len() == 1
}

pub fn rep_coeffs_i128(r: &PrimitiveRep) -> Vec<i128> {
    r.coeffs().iter().map(|c| c.to_i128().expect("small coefficients")).collect()
}

pub fn rep_from_i128(c: &[i128]) -> PrimitiveRep {
    PrimitiveRep::from_coeffs(c.iter().map(|&x| BigInt::from(x))).expect("nonzero")
}

pub fn qpoly_to_rep(q: &QPoly) -> PrimitiveRep {
    LaurentPoly::from_dense(0, q.clone()).normalize().expect("nonzero")
}

/// `μ_i` and `c_i` recovered by solving the chain `… ν_i, λ_i, ? …` with
/// the junctions `a_{i-1}`.
pub fn recovered_mu_c(data: &DiskKnotData) -> (Vec<PrimitiveRep>, Vec<PrimitiveRep>) {
    let n = data.n();
    let mut known = Vec::new();
    let mut junctions = vec![None; 3 * n + 1];
    for i in (0..n).rev() {
        known.push(Some(data.nu(i)));
        known.push(Some(data.lambda(i)));
        known.push(None);
        if i > 0 {
            junctions[known.len()] = Some(data.a(i - 1));
        }
    }
    let (polys, delta) = solve_missing_third(&known, &junctions).expect("admissible data");
    let mu = (0..n).map(|i| polys[3 * (n - 1 - i) + 2].clone()).collect();
    let c = (0..n).map(|i| delta[3 * (n - 1 - i) + 2].clone()).collect();
    (mu, c)
}

/// Branch label (`lambda`, `c`, `mu`) and value of each degree, with the
/// cutoff at `n - 1 - p̄(n)`.
pub fn point_table_oracle(data: &DiskKnotData, p: &Perversity) -> Vec<(&'static str, PrimitiveRep)> {
    let n = data.n();
    let cut = n - 1 - p.at(n).expect("perversity covers n");
    let (mu, c) = recovered_mu_c(data);
    (0..n)
        .map(|i| match i.cmp(&cut) {
            std::cmp::Ordering::Less => ("lambda", data.lambda(i)),
            std::cmp::Ordering::Equal => ("c", c[i].clone()),
            std::cmp::Ordering::Greater => ("mu", mu[i].clone()),
        })
        .collect()
}

/// `|f(1)| = 1`, evaluated directly on the coefficients.
pub fn alexander_type_oracle(c: &[i128]) -> bool {
    c.iter().sum::<i128>().abs() == 1
}
