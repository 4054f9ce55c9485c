//! Which primes may divide an intersection Alexander polynomial, and to
//! what power, given the Alexander data of the links of the singular strata.

use std::collections::{BTreeMap, BTreeSet};

use crate::engine::Perversity;
use crate::error::{Error, Result};
use crate::laurent::{factor_primitive, is_irreducible, PrimitiveRep};

pub type PrimeSet = BTreeSet<PrimitiveRep>;

fn primes_of(p: &PrimitiveRep) -> Vec<PrimitiveRep> {
    p.prime_support().expect("uncapped factorization")
}

fn require_prime(gamma: &PrimitiveRep) -> Result<()> {
    if is_irreducible(gamma)? {
        Ok(())
    } else {
        Err(Error::NotPrime { poly: gamma.to_string() })
    }
}

/// Adds the primes of a link polynomial, leaving out `t - 1`.
fn add_link_primes(out: &mut PrimeSet, xi: &PrimitiveRep) {
    let t1 = PrimitiveRep::t_minus_one();
    out.extend(primes_of(xi).into_iter().filter(|g| *g != t1));
}

/// Single singular stratum of dimension `n - k - 1`: the primes of `c_i`
/// and of each `ξ_s` with `0 ≤ i - s ≤ n - k` and `0 < s < k - 1`.
pub fn allowed_primes_single(
    i: usize,
    n: usize,
    k: usize,
    c_i: &PrimitiveRep,
    xi: &[PrimitiveRep],
) -> Result<PrimeSet> {
    if i == 0 || i + 1 >= n {
        return Err(Error::DegreeOutOfRange {
            degree: i as i64,
            range: format!("0 < i < {}", n.saturating_sub(1)),
        });
    }
    let mut out: PrimeSet = primes_of(c_i).into_iter().collect();
    for (s, x) in xi.iter().enumerate() {
        if s > 0 && s + 1 < k && s <= i && i - s + k <= n {
            add_link_primes(&mut out, x);
        }
    }
    Ok(out)
}

/// True when the hypotheses certify `γ ∤ Iλ_i`: `γ ∤ λ_i`, and `γ | ξ_s`
/// only for `s < k - p̄(k+1)`.
pub fn exclusion_single(
    gamma: &PrimitiveRep,
    k: usize,
    p: &Perversity,
    lambda_i: &PrimitiveRep,
    xi: &[PrimitiveRep],
) -> Result<bool> {
    require_prime(gamma)?;
    let cut = k as i64 - p.at(k + 1)? as i64;
    if gamma.divides(lambda_i) {
        return Ok(false);
    }
    Ok(xi
        .iter()
        .enumerate()
        .all(|(s, x)| !gamma.divides(x) || (s as i64) < cut))
}

/// Link data of one connected component of a stratum.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LinkComponent {
    /// intersection Alexander polynomials `ξ_s` of the link
    pub xi: Vec<PrimitiveRep>,
    /// ordinary Alexander polynomials `ζ_s` of the link
    pub zeta: Option<Vec<PrimitiveRep>>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Stratum {
    pub dim: usize,
    pub components: Vec<LinkComponent>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StratificationData {
    n: usize,
    strata: Vec<Stratum>,
}

impl StratificationData {
    /// Strata have dimension at most `n - 3`; link polynomials of a stratum
    /// of dimension `i` are trivial from degree `n - i - 1` on.
    pub fn new(n: usize, strata: Vec<Stratum>) -> Result<Self> {
        for st in &strata {
            if st.dim + 3 > n {
                return Err(Error::DegreeOutOfRange {
                    degree: st.dim as i64,
                    range: format!("stratum dimension ≤ {}", n as i64 - 3),
                });
            }
            let top = n - st.dim - 1;
            for c in &st.components {
                let graded = std::iter::once(&c.xi).chain(c.zeta.as_ref());
                for seq in graded {
                    if let Some(s) = (top..seq.len()).find(|&s| !seq[s].is_one()) {
                        return Err(Error::DegreeOutOfRange {
                            degree: s as i64,
                            range: format!("link degree < {top} on stratum of dimension {}", st.dim),
                        });
                    }
                }
            }
        }
        Ok(StratificationData { n, strata })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }
}

/// Primes of `λ_j` together with those of `ξ_{iks}` (or `ζ_{iks}`) over
/// `0 ≤ j - s ≤ i - 1` and `0 ≤ s < n - i - 2`.
pub fn allowed_primes_general(
    j: usize,
    lambda_j: &PrimitiveRep,
    data: &StratificationData,
    use_ordinary: bool,
) -> Result<PrimeSet> {
    let mut out: PrimeSet = primes_of(lambda_j).into_iter().collect();
    for (si, st) in data.strata.iter().enumerate() {
        let i = st.dim;
        for (ci, comp) in st.components.iter().enumerate() {
            let seq = if use_ordinary {
                comp.zeta
                    .as_ref()
                    .ok_or(Error::MissingOrdinaryData { stratum: si, component: ci })?
            } else {
                &comp.xi
            };
            for (s, x) in seq.iter().enumerate() {
                if s <= j && j - s < i && s + i + 2 < data.n {
                    add_link_primes(&mut out, x);
                }
            }
        }
    }
    Ok(out)
}

/// True when `γ ∤ λ_j` and on every stratum `γ | ξ_{iks}` only for
/// `s < n - i - 1 - p̄(n - i)`.
pub fn exclusion_general(
    gamma: &PrimitiveRep,
    lambda_j: &PrimitiveRep,
    data: &StratificationData,
    p: &Perversity,
) -> Result<bool> {
    require_prime(gamma)?;
    if gamma.divides(lambda_j) {
        return Ok(false);
    }
    for st in &data.strata {
        let codim = data.n - st.dim;
        let cut = codim as i64 - 1 - p.at(codim)? as i64;
        for comp in &st.components {
            if comp.xi.iter().enumerate().any(|(s, x)| gamma.divides(x) && s as i64 >= cut) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Polynomials `e_{ipq}` of `H_p(Σ_i - Σ_{i-1}; IH_q(L; Γ))`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct E2Table {
    entries: BTreeMap<(usize, usize, usize), PrimitiveRep>,
}

impl E2Table {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserting `1` removes the entry.
    pub fn insert(&mut self, i: usize, p: usize, q: usize, e: PrimitiveRep) {
        if e.is_one() {
            self.entries.remove(&(i, p, q));
        } else {
            self.entries.insert((i, p, q), e);
        }
    }

    pub fn get(&self, i: usize, p: usize, q: usize) -> PrimitiveRep {
        self.entries.get(&(i, p, q)).cloned().unwrap_or_else(PrimitiveRep::one)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize, usize), &PrimitiveRep)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl FromIterator<((usize, usize, usize), PrimitiveRep)> for E2Table {
    fn from_iter<I: IntoIterator<Item = ((usize, usize, usize), PrimitiveRep)>>(iter: I) -> Self {
        let mut t = E2Table::new();
        for ((i, p, q), e) in iter {
            t.insert(i, p, q, e);
        }
        t
    }
}

/// `γ_j + Σ_{i ≤ n-2} (Σ_{p+q=j, q=0 or q<n-i-1-p̄(n-i)} γ_{ipq} + Σ_{p+q=j-1} γ_{ipq})`
pub fn max_power_bound(
    gamma: &PrimitiveRep,
    j: usize,
    gamma_j: u32,
    table: &E2Table,
    n: usize,
    p: &Perversity,
) -> Result<u64> {
    require_prime(gamma)?;
    let mut bound = u64::from(gamma_j);
    for ((i, pp, q), e) in table.entries() {
        if i + 2 > n {
            continue;
        }
        let m = u64::from(gamma.multiplicity_in(e));
        if m == 0 {
            continue;
        }
        if pp + q == j {
            let admitted = q == 0 || (q as i64) < (n - i) as i64 - 1 - p.at(n - i)? as i64;
            if admitted {
                bound += m;
            }
        }
        if pp + q + 1 == j {
            bound += m;
        }
    }
    Ok(bound)
}

/// Outcome of checking a computed polynomial against its bounds.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Certificate {
    Pass,
    OutsideAllowed { prime: PrimitiveRep, multiplicity: u32 },
    PowerExceeded { prime: PrimitiveRep, observed: u32, allowed: u64 },
}

impl Certificate {
    pub fn passed(&self) -> bool {
        matches!(self, Certificate::Pass)
    }
}

/// First prime of `ia_j` outside `allowed` or above its power bound.
/// Primes missing from `power_bounds` carry no power limit.
pub fn check_result(
    ia_j: &PrimitiveRep,
    allowed: &PrimeSet,
    power_bounds: &BTreeMap<PrimitiveRep, u64>,
) -> Certificate {
    let factors = factor_primitive(ia_j, usize::MAX).expect("uncapped factorization");
    for f in factors {
        if !allowed.contains(&f.prime) {
            return Certificate::OutsideAllowed { prime: f.prime, multiplicity: f.multiplicity };
        }
        if let Some(&b) = power_bounds.get(&f.prime) {
            if u64::from(f.multiplicity) > b {
                return Certificate::PowerExceeded { prime: f.prime, observed: f.multiplicity, allowed: b };
            }
        }
    }
    Certificate::Pass
}
