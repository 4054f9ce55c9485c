use crate::error::{Error, Result};
use crate::exactseq::subpolynomials;
use crate::laurent::PrimitiveRep;

use super::perversity::Perversity;

/// Subpolynomials `a_i, b_i, c_i` of the disk knot left after removing a
/// neighbourhood of a point singularity of `S^{n-2} ⊂ S^n`, graded over
/// degrees `0..n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiskKnotData {
    n: usize,
    a: Vec<PrimitiveRep>,
    b: Vec<PrimitiveRep>,
    c: Vec<PrimitiveRep>,
}

fn pad(mut v: Vec<PrimitiveRep>, n: usize, name: &str) -> Result<Vec<PrimitiveRep>> {
    if let Some(i) = (n..v.len()).find(|&i| !v[i].is_one()) {
        return Err(Error::Inadmissible {
            degree: i,
            detail: format!("{name}_{i} must be 1 beyond degree {}", n.saturating_sub(1)),
        });
    }
    v.resize(n, PrimitiveRep::one());
    v.truncate(n);
    Ok(v)
}

impl DiskKnotData {
    /// Missing degrees are 1. The chain `… ν_i → λ_i → μ_i → ν_{i-1} …` must
    /// close off at both ends.
    pub fn new(
        n: usize,
        a: Vec<PrimitiveRep>,
        b: Vec<PrimitiveRep>,
        c: Vec<PrimitiveRep>,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::Inadmissible { degree: 0, detail: format!("ambient dimension {n} < 2") });
        }
        let data = DiskKnotData { n, a: pad(a, n, "a")?, b: pad(b, n, "b")?, c: pad(c, n, "c")? };
        if let Err(Error::NotExactCompatible { position, reason }) = subpolynomials(&data.chain()) {
            let degree = (n - 1).saturating_sub(position / 3);
            return Err(Error::Inadmissible { degree, detail: reason });
        }
        Ok(data)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self, i: usize) -> PrimitiveRep {
        self.a.get(i).cloned().unwrap_or_else(PrimitiveRep::one)
    }

    pub fn b(&self, i: usize) -> PrimitiveRep {
        self.b.get(i).cloned().unwrap_or_else(PrimitiveRep::one)
    }

    pub fn c(&self, i: usize) -> PrimitiveRep {
        self.c.get(i).cloned().unwrap_or_else(PrimitiveRep::one)
    }

    /// `λ_i = b_i c_i`
    pub fn lambda(&self, i: usize) -> PrimitiveRep {
        self.b(i).mul(&self.c(i))
    }

    /// `ν_i = a_i b_i`
    pub fn nu(&self, i: usize) -> PrimitiveRep {
        self.a(i).mul(&self.b(i))
    }

    /// `μ_i = c_i a_{i-1}`
    pub fn mu(&self, i: usize) -> PrimitiveRep {
        let prev = if i == 0 { PrimitiveRep::one() } else { self.a(i - 1) };
        self.c(i).mul(&prev)
    }

    /// `ν_{n-1}, λ_{n-1}, μ_{n-1}, …, ν_0, λ_0, μ_0`
    pub fn chain(&self) -> Vec<PrimitiveRep> {
        (0..self.n)
            .rev()
            .flat_map(|i| [self.nu(i), self.lambda(i), self.mu(i)])
            .collect()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PointBranch {
    /// below the cutoff: `λ_i`
    Lambda,
    /// at the cutoff: `c_i`
    Cutoff,
    /// above the cutoff: `μ_i`
    Mu,
}

impl PointBranch {
    pub fn label(self) -> &'static str {
        match self {
            PointBranch::Lambda => "lambda",
            PointBranch::Cutoff => "c",
            PointBranch::Mu => "mu",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointRow {
    pub degree: usize,
    pub branch: PointBranch,
    pub value: PrimitiveRep,
}

/// Cutoff degree `n - 1 - p̄(n)`.
pub fn point_cutoff(n: usize, p: &Perversity) -> Result<usize> {
    let pn = p.at(n)?;
    if !p.is_traditional() {
        return Err(Error::SuperperversityNotAllowed);
    }
    Ok(n - 1 - pn.min(n - 1))
}

pub fn ia_point_table(data: &DiskKnotData, p: &Perversity) -> Result<Vec<PointRow>> {
    if !p.is_traditional() {
        return Err(Error::SuperperversityNotAllowed);
    }
    let cut = point_cutoff(data.n, p)?;
    Ok((0..data.n)
        .map(|i| {
            let (branch, value) = match i.cmp(&cut) {
                std::cmp::Ordering::Less => (PointBranch::Lambda, data.lambda(i)),
                std::cmp::Ordering::Equal => (PointBranch::Cutoff, data.c(i)),
                std::cmp::Ordering::Greater => (PointBranch::Mu, data.mu(i)),
            };
            PointRow { degree: i, branch, value }
        })
        .collect())
}

/// Intersection Alexander polynomials of a knot with one point singularity,
/// degrees `0..n`.
pub fn ia_point(data: &DiskKnotData, p: &Perversity) -> Result<Vec<PrimitiveRep>> {
    Ok(ia_point_table(data, p)?.into_iter().map(|r| r.value).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PrimitiveRep {
        s.parse().unwrap()
    }

    fn sample() -> DiskKnotData {
        // n = 5: ν nontrivial in 1..=2, λ in 1..=3
        DiskKnotData::new(
            5,
            vec![p("1"), p("t^2 - t + 1"), p("1")],
            vec![p("t - 1"), p("t^2 + t + 1"), p("2t^2 - 3t + 2")],
            vec![p("1"), p("t^4 - t^3 + t^2 - t + 1"), p("1"), p("3t^2 - 5t + 3")],
        )
        .unwrap()
    }

    #[test]
    fn three_branches() {
        let d = sample();
        let zero = Perversity::zero(5);
        let table = ia_point_table(&d, &zero).unwrap();
        assert_eq!(point_cutoff(5, &zero), Ok(4));
        assert_eq!(table[0].value, p("t - 1"));
        assert_eq!(table[3].branch, PointBranch::Lambda);
        assert_eq!(table[4].branch, PointBranch::Cutoff);

        let top = Perversity::top(5);
        let vals = ia_point(&d, &top).unwrap();
        // cutoff 1: λ_0, c_1, μ_2, μ_3, μ_4
        assert_eq!(vals[0], d.lambda(0));
        assert_eq!(vals[1], d.c(1));
        assert_eq!(vals[2], d.c(2).mul(&d.a(1)));
        assert_eq!(vals[3], d.mu(3));
        assert!(vals[4].is_one());
    }

    #[test]
    fn rejects_superperversity_and_short_tables() {
        let d = sample();
        assert_eq!(
            ia_point(&d, &Perversity::zero(5).superdual()),
            Err(Error::SuperperversityNotAllowed)
        );
        assert!(matches!(
            ia_point(&d, &Perversity::zero(4)),
            Err(Error::PerversityOutOfRange { codim: 5, max: 4 })
        ));
    }

    #[test]
    fn unclosed_chain_is_inadmissible() {
        let err = DiskKnotData::new(3, vec![p("1"), p("1"), p("t + 2")], vec![], vec![]);
        assert!(matches!(err, Err(Error::Inadmissible { degree: 2, .. })));
        let err = DiskKnotData::new(3, vec![], vec![], vec![p("1"), p("1"), p("1"), p("t + 2")]);
        assert!(matches!(err, Err(Error::Inadmissible { degree: 3, .. })));
    }
}
