//! Simplicial homology with coefficients in a local system of Γ-modules,
//! and the E² pages built from it.

use std::collections::{BTreeMap, BTreeSet};

use crate::bounds::E2Table;
use crate::engine::Perversity;
use crate::error::{Error, Result};
use crate::gmodule::{kernel_basis, subquotient, FgGammaModule, GammaMatrix};
use crate::laurent::{LaurentPoly, PrimitiveRep};

/// A finite ordered simplicial complex with unit transport along edges and
/// a constant stalk. A chain `x·σ` keeps `x` in the fibre over the first
/// vertex of `σ`; the edge value `ρ(u, v)` carries it from `u` to `v`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwistedComplex {
    /// simplices grouped by dimension, each sorted
    simplices: Vec<Vec<Vec<usize>>>,
    /// `ρ(u, v)` for edges with `u < v`; absent edges carry 1
    monodromy: BTreeMap<(usize, usize), LaurentPoly>,
    stalk: FgGammaModule,
}

impl TwistedComplex {
    /// Closes `simplices` under faces. Monodromy may be given on either
    /// orientation of an edge; `ρ(v, u)` is read as `ρ(u, v)^-1`.
    pub fn new(
        simplices: Vec<Vec<usize>>,
        monodromy: Vec<((usize, usize), LaurentPoly)>,
        stalk: FgGammaModule,
    ) -> Result<Self> {
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        for mut s in simplices {
            s.sort_unstable();
            if s.is_empty() {
                return Err(Error::InvalidComplex("empty simplex".into()));
            }
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidComplex(format!("repeated vertex in {s:?}")));
            }
            let k = s.len();
            for mask in 1u64..(1u64 << k) {
                all.insert((0..k).filter(|b| mask >> b & 1 == 1).map(|b| s[b]).collect());
            }
        }
        if all.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let top = all.iter().map(Vec::len).max().unwrap_or(0);
        let mut by_dim = vec![Vec::new(); top];
        for s in all {
            by_dim[s.len() - 1].push(s);
        }
        let edges: BTreeSet<(usize, usize)> = by_dim
            .get(1)
            .map(|e| e.iter().map(|s| (s[0], s[1])).collect())
            .unwrap_or_default();
        let mut rho = BTreeMap::new();
        for ((u, v), unit) in monodromy {
            let key = (u.min(v), u.max(v));
            if !edges.contains(&key) {
                return Err(Error::InvalidComplex(format!("monodromy on ({u}, {v}), which is not an edge")));
            }
            let inv = unit
                .unit_inverse()
                .ok_or_else(|| Error::InvalidComplex(format!("monodromy {unit} on ({u}, {v}) is not a unit")))?;
            let forward = if u < v { unit } else { inv };
            if let Some(prev) = rho.get(&key) {
                if *prev != forward {
                    return Err(Error::CocycleViolation { simplex: vec![key.0, key.1] });
                }
            }
            rho.insert(key, forward);
        }
        let tc = TwistedComplex { simplices: by_dim, monodromy: rho, stalk };
        for tri in tc.simplices(2) {
            let lhs = tc.transport(tri[0], tri[1]) * tc.transport(tri[1], tri[2]);
            if lhs != tc.transport(tri[0], tri[2]) {
                return Err(Error::CocycleViolation { simplex: tri.clone() });
            }
        }
        Ok(tc)
    }

    /// Same complex and monodromy over another stalk.
    pub fn with_stalk(&self, stalk: FgGammaModule) -> Self {
        TwistedComplex { stalk, ..self.clone() }
    }

    /// Same complex and stalk with other edge values.
    pub fn with_monodromy(&self, monodromy: Vec<((usize, usize), LaurentPoly)>) -> Result<Self> {
        let simplices = self.simplices.iter().flatten().cloned().collect();
        Self::new(simplices, monodromy, self.stalk.clone())
    }

    pub fn dim(&self) -> usize {
        self.simplices.len() - 1
    }

    pub fn simplices(&self, p: usize) -> &[Vec<usize>] {
        self.simplices.get(p).map_or(&[], Vec::as_slice)
    }

    pub fn stalk(&self) -> &FgGammaModule {
        &self.stalk
    }

    pub fn same_complex(&self, other: &TwistedComplex) -> bool {
        self.simplices == other.simplices
    }

    /// `ρ(u, v)` for an edge, in either orientation.
    pub fn transport(&self, u: usize, v: usize) -> LaurentPoly {
        if u == v {
            return LaurentPoly::one();
        }
        let fwd = self
            .monodromy
            .get(&(u.min(v), u.max(v)))
            .cloned()
            .unwrap_or_else(LaurentPoly::one);
        if u < v {
            fwd
        } else {
            fwd.unit_inverse().expect("stored values are units")
        }
    }

    /// `∂_p : C_p → C_{p-1}` over free stalk Γ, acting on column vectors.
    pub fn boundary_matrix(&self, p: usize) -> GammaMatrix {
        let cols = self.simplices(p);
        if p == 0 {
            return GammaMatrix::zeros(0, cols.len());
        }
        let rows = self.simplices(p - 1);
        let index: BTreeMap<&[usize], usize> = rows.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
        let mut m = GammaMatrix::zeros(rows.len(), cols.len());
        for (j, s) in cols.iter().enumerate() {
            for drop in 0..s.len() {
                let face: Vec<usize> = s.iter().enumerate().filter(|&(k, _)| k != drop).map(|(_, &v)| v).collect();
                let mut coeff = if drop == 0 { self.transport(s[0], s[1]) } else { LaurentPoly::one() };
                if drop % 2 == 1 {
                    coeff = -coeff;
                }
                let i = index[face.as_slice()];
                let v = m.get(i, j) + &coeff;
                m.set(i, j, v);
            }
        }
        m
    }
}

/// `ker ∂_p / im ∂_{p+1}` over free stalk Γ.
fn free_homology(tc: &TwistedComplex, p: usize) -> Result<FgGammaModule> {
    subquotient(&kernel_basis(&tc.boundary_matrix(p)), &tc.boundary_matrix(p + 1))
}

fn free_homology_all(tc: &TwistedComplex) -> Result<Vec<FgGammaModule>> {
    (0..=tc.dim()).map(|p| free_homology(tc, p)).collect()
}

/// `H_p(C) ⊗ M ⊕ Tor(H_{p-1}(C), M)`
fn with_coefficients(free: &[FgGammaModule], stalk: &FgGammaModule) -> Vec<FgGammaModule> {
    (0..free.len())
        .map(|p| {
            let tensor = free[p].tensor(stalk);
            match p.checked_sub(1) {
                Some(q) => tensor.direct_sum(&free[q].tor(stalk)),
                None => tensor,
            }
        })
        .collect()
}

/// `H_p` for `p` in `0..=dim`, in canonical form. The chains are free, so
/// a general stalk follows from the free homology by universal
/// coefficients.
pub fn twisted_homology(tc: &TwistedComplex) -> Result<Vec<FgGammaModule>> {
    Ok(with_coefficients(&free_homology_all(tc)?, tc.stalk()))
}

/// `E²_{p,q}` entries as modules, indexed by `(p, q)`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct E2Page {
    entries: BTreeMap<(usize, usize), FgGammaModule>,
}

impl E2Page {
    /// Zero modules are dropped.
    pub fn from_modules<I: IntoIterator<Item = ((usize, usize), FgGammaModule)>>(items: I) -> Self {
        E2Page {
            entries: items.into_iter().filter(|(_, m)| !m.is_zero()).collect(),
        }
    }

    pub fn module(&self, p: usize, q: usize) -> FgGammaModule {
        self.entries.get(&(p, q)).cloned().unwrap_or_default()
    }

    pub fn modules(&self) -> impl Iterator<Item = ((usize, usize), &FgGammaModule)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    pub fn polynomial(&self, p: usize, q: usize) -> Result<PrimitiveRep> {
        self.module(p, q)
            .order_polynomial()
            .map_err(|_| Error::NotTorsionEntry { p, q, free_rank: self.module(p, q).free_rank() })
    }

    /// The page as the stratum-`i` slice of an [`E2Table`].
    pub fn to_table(&self, i: usize) -> Result<E2Table> {
        let mut t = E2Table::new();
        self.extend_table(&mut t, i)?;
        Ok(t)
    }

    pub fn extend_table(&self, table: &mut E2Table, i: usize) -> Result<()> {
        for &(p, q) in self.entries.keys() {
            table.insert(i, p, q, self.polynomial(p, q)?);
        }
        Ok(())
    }
}

fn check_family(family: &[TwistedComplex]) -> Result<()> {
    if let Some(first) = family.first() {
        if let Some(q) = family.iter().position(|tc| !tc.same_complex(first)) {
            return Err(Error::InvalidComplex(format!("link degree {q} uses a different base complex")));
        }
    }
    Ok(())
}

fn page_from(family: &[TwistedComplex], keep: impl Fn(usize) -> bool) -> Result<E2Page> {
    check_family(family)?;
    let mut cache: Vec<(&BTreeMap<(usize, usize), LaurentPoly>, Vec<FgGammaModule>)> = Vec::new();
    let mut entries = Vec::new();
    for (q, tc) in family.iter().enumerate() {
        if !keep(q) {
            continue;
        }
        let free = match cache.iter().find(|(m, _)| *m == &tc.monodromy) {
            Some((_, h)) => h.clone(),
            None => {
                let h = free_homology_all(tc)?;
                cache.push((&tc.monodromy, h.clone()));
                h
            }
        };
        for (p, h) in with_coefficients(&free, tc.stalk()).into_iter().enumerate() {
            if h.free_rank() > 0 {
                return Err(Error::NotTorsionEntry { p, q, free_rank: h.free_rank() });
            }
            entries.push(((p, q), h));
        }
    }
    Ok(E2Page::from_modules(entries))
}

/// `E²_{p,q} = H_p(base; IH_q(L))`, where `family[q]` carries the link
/// module of degree `q` as stalk with its monodromy.
pub fn e2_link_page(family: &[TwistedComplex]) -> Result<E2Page> {
    page_from(family, |_| true)
}

/// The page over the open cone on the link: stalks of degree
/// `0 ≠ q ≥ codim - 1 - p̄(codim)` vanish.
pub fn e2_cone_page(family: &[TwistedComplex], codim: usize, p: &Perversity) -> Result<E2Page> {
    let cut = codim as i64 - 1 - p.at(codim)? as i64;
    page_from(family, |q| q == 0 || (q as i64) < cut)
}

/// `Π_{p+q=j} e_{pq}`, which the degree-`j` order polynomial of the
/// abutment divides.
pub fn abutment_divisor_bound(page: &E2Page, j: usize) -> Result<PrimitiveRep> {
    let mut out = PrimitiveRep::one();
    for p in 0..=j {
        out = out.mul(&page.polynomial(p, j - p)?);
    }
    Ok(out)
}
