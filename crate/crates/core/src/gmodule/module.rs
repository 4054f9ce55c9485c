use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::{is_irreducible, PrimitiveRep};

/// `Γ^free ⊕ Γ/(d_1) ⊕ … ⊕ Γ/(d_m)` with nonunit `d_1 | d_2 | … | d_m`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct FgGammaModule {
    free_rank: usize,
    torsion: Vec<PrimitiveRep>,
}

impl FgGammaModule {
    /// Canonicalizes an arbitrary list of cyclic torsion orders.
    pub fn new(free_rank: usize, cyclic: Vec<PrimitiveRep>) -> Self {
        let mut d: Vec<PrimitiveRep> = cyclic.into_iter().filter(|p| !p.is_one()).collect();
        for i in 0..d.len() {
            for j in i + 1..d.len() {
                if d[i].divides(&d[j]) {
                    continue;
                }
                let g = d[i].gcd(&d[j]);
                let l = d[i].lcm(&d[j]);
                d[i] = g;
                d[j] = l;
            }
        }
        d.retain(|p| !p.is_one());
        FgGammaModule { free_rank, torsion: d }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FgGammaModule { free_rank: rank, torsion: Vec::new() }
    }

    /// `Γ/(p)`; zero when `p` is a unit.
    pub fn cyclic(p: PrimitiveRep) -> Self {
        Self::new(0, vec![p])
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[PrimitiveRep] {
        &self.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_torsion(&self) -> bool {
        self.free_rank == 0
    }

    pub fn order_polynomial(&self) -> Result<PrimitiveRep> {
        if self.free_rank > 0 {
            return Err(Error::NotTorsion { free_rank: self.free_rank });
        }
        Ok(PrimitiveRep::product(&self.torsion))
    }

    pub fn direct_sum(&self, other: &FgGammaModule) -> FgGammaModule {
        let mut all = self.torsion.clone();
        all.extend(other.torsion.iter().cloned());
        Self::new(self.free_rank + other.free_rank, all)
    }

    pub fn primary_component(&self, prime: &PrimitiveRep) -> Result<FgGammaModule> {
        if self.free_rank > 0 {
            return Err(Error::NotTorsion { free_rank: self.free_rank });
        }
        if prime.is_one() || !is_irreducible(prime)? {
            return Err(Error::NotPrime { poly: prime.to_string() });
        }
        let parts = self
            .torsion
            .iter()
            .map(|d| prime.pow(prime.multiplicity_in(d)))
            .collect();
        Ok(Self::new(0, parts))
    }

    pub fn conjugate(&self) -> FgGammaModule {
        Self::new(self.free_rank, self.torsion.iter().map(PrimitiveRep::involute).collect())
    }

    pub fn tensor(&self, other: &FgGammaModule) -> FgGammaModule {
        let mut cyc = Vec::new();
        for _ in 0..self.free_rank {
            cyc.extend(other.torsion.iter().cloned());
        }
        for _ in 0..other.free_rank {
            cyc.extend(self.torsion.iter().cloned());
        }
        for p in &self.torsion {
            for q in &other.torsion {
                cyc.push(p.gcd(q));
            }
        }
        Self::new(self.free_rank * other.free_rank, cyc)
    }

    pub fn tor(&self, other: &FgGammaModule) -> FgGammaModule {
        let cyc = self
            .torsion
            .iter()
            .flat_map(|p| other.torsion.iter().map(move |q| p.gcd(q)))
            .collect();
        Self::new(0, cyc)
    }
}

impl fmt::Display for FgGammaModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Γ".to_string()),
            r => parts.push(format!("Γ^{r}")),
        }
        parts.extend(self.torsion.iter().map(|p| format!("Γ/({p})")));
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

pub fn order_polynomial(m: &FgGammaModule) -> Result<PrimitiveRep> {
    m.order_polynomial()
}

pub fn primary_component(m: &FgGammaModule, prime: &PrimitiveRep) -> Result<FgGammaModule> {
    m.primary_component(prime)
}

pub fn conjugate(m: &FgGammaModule) -> FgGammaModule {
    m.conjugate()
}

pub fn tensor(a: &FgGammaModule, b: &FgGammaModule) -> FgGammaModule {
    a.tensor(b)
}

pub fn tor(a: &FgGammaModule, b: &FgGammaModule) -> FgGammaModule {
    a.tor(b)
}

pub fn direct_sum<'a, I>(items: I) -> FgGammaModule
where
    I: IntoIterator<Item = &'a FgGammaModule>,
{
    items
        .into_iter()
        .fold(FgGammaModule::zero(), |acc, m| acc.direct_sum(m))
}

/// Degree `i` of the Künneth formula for complexes over a PID:
/// `⊕_{r+s=i} left_r ⊗ right_s ⊕ ⊕_{r+s=i-1} Tor(left_r, right_s)`.
pub fn kunneth(left: &[FgGammaModule], right: &[FgGammaModule], i: usize) -> FgGammaModule {
    let mut out = FgGammaModule::zero();
    for (r, a) in left.iter().enumerate().take(i + 1) {
        if let Some(b) = right.get(i - r) {
            out = out.direct_sum(&a.tensor(b));
        }
        if r < i {
            if let Some(b) = right.get(i - 1 - r) {
                out = out.direct_sum(&a.tor(b));
            }
        }
    }
    out
}
