//! Perversities, the cone formula, and closed forms for intersection
//! Alexander polynomials of locally flat knots, knots with a point
//! singularity and knots singular along a manifold with product
//! neighbourhood. Superperverse values come only from duality.

mod perversity;
mod point;
mod product;

pub use perversity::{superdual, Perversity};
pub use point::{ia_point, ia_point_table, point_cutoff, DiskKnotData, PointBranch, PointRow};
pub use product::{ia_product, ProductReport, ProductRow, ProductSingularityInput};

use crate::error::Result;
use crate::gmodule::FgGammaModule;
use crate::laurent::PrimitiveRep;

/// Intersection homology of the open cone on an `(n-1)`-dimensional link:
/// degree `i` survives when `i = 0` or `i < n - 1 - p̄(n)`.
pub fn cone_ih(link: &[FgGammaModule], n: usize, p: &Perversity) -> Result<Vec<FgGammaModule>> {
    let cut = (n as i64) - 1 - p.at(n)? as i64;
    Ok(link
        .iter()
        .enumerate()
        .map(|(i, m)| {
            if i == 0 || (i as i64) < cut {
                m.clone()
            } else {
                FgGammaModule::zero()
            }
        })
        .collect())
}

/// A locally flat knot has `Iλ_i ~ λ_i` for every perversity.
pub fn ia_locally_flat(lambda: &[PrimitiveRep]) -> Vec<PrimitiveRep> {
    lambda.to_vec()
}

/// Degree `i` is the class of `ia[n-1-i](t^-1)`, for `i` in `0..n`.
pub fn superdual_polynomials(ia: &[PrimitiveRep], n: usize) -> Vec<PrimitiveRep> {
    (0..n)
        .map(|i| {
            ia.get(n - 1 - i)
                .map_or_else(PrimitiveRep::one, PrimitiveRep::involute)
        })
        .collect()
}

/// Point-singularity values for a superperversity, through the
/// traditional dual perversity.
pub fn ia_point_super(data: &DiskKnotData, p: &Perversity) -> Result<Vec<PrimitiveRep>> {
    if !p.is_super() {
        return ia_point(data, p);
    }
    let dual = ia_point(data, &p.superdual())?;
    Ok(superdual_polynomials(&dual, data.n()))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Clause {
    SimilarToOne,
    SimilarToTMinusOne,
    AlexanderType,
}

impl Clause {
    pub fn label(self) -> &'static str {
        match self {
            Clause::SimilarToOne => "~1",
            Clause::SimilarToTMinusOne => "~t-1",
            Clause::AlexanderType => "alexander-type",
        }
    }

    pub fn holds(self, p: &PrimitiveRep) -> bool {
        match self {
            Clause::SimilarToOne => p.is_one(),
            Clause::SimilarToTMinusOne => *p == PrimitiveRep::t_minus_one(),
            Clause::AlexanderType => p.is_alexander_type(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClauseCheck {
    pub degree: usize,
    pub clause: Clause,
    pub value: PrimitiveRep,
    pub pass: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalizationReport {
    pub checks: Vec<ClauseCheck>,
}

impl NormalizationReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&ClauseCheck> {
        self.checks.iter().find(|c| !c.pass)
    }
}

/// Which normalization clause governs degree `i`.
pub fn normalization_clause(i: usize, n: usize, superperverse: bool) -> Clause {
    if superperverse {
        if i == 0 || i > n.saturating_sub(1) {
            Clause::SimilarToOne
        } else if i + 1 == n {
            Clause::SimilarToTMinusOne
        } else {
            Clause::AlexanderType
        }
    } else if i == 0 {
        Clause::SimilarToTMinusOne
    } else if i + 1 >= n {
        Clause::SimilarToOne
    } else {
        Clause::AlexanderType
    }
}

pub fn validate_normalization(ia: &[PrimitiveRep], n: usize, superperverse: bool) -> NormalizationReport {
    let checks = ia
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let clause = normalization_clause(i, n, superperverse);
            ClauseCheck { degree: i, clause, value: v.clone(), pass: clause.holds(v) }
        })
        .collect();
    NormalizationReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PrimitiveRep {
        s.parse().unwrap()
    }

    fn ps(xs: &[&str]) -> Vec<PrimitiveRep> {
        xs.iter().map(|s| p(s)).collect()
    }

    #[test]
    fn cone_examples() {
        let circle = vec![FgGammaModule::cyclic(p("t - 1")), FgGammaModule::zero()];
        let out = cone_ih(&circle, 2, &Perversity::zero(2)).unwrap();
        assert_eq!(out, circle);
        let link = vec![
            FgGammaModule::cyclic(p("t - 1")),
            FgGammaModule::cyclic(p("t^2 - t + 1")),
            FgGammaModule::cyclic(p("t + 2")),
        ];
        let zero = cone_ih(&link, 4, &Perversity::zero(4)).unwrap();
        assert_eq!(zero, link);
        let one = Perversity::new(vec![0, 1, 1]).unwrap();
        let cut = cone_ih(&link, 4, &one).unwrap();
        assert_eq!(&cut[..2], &link[..2]);
        assert!(cut[2].is_zero());
        assert!(cone_ih(&link, 5, &one).is_err());
    }

    #[test]
    fn locally_flat_is_identity() {
        let l = ps(&["t - 1", "t^2 - t + 1"]);
        assert_eq!(ia_locally_flat(&l), l);
    }

    #[test]
    fn dual_examples() {
        let ia = ps(&["t - 1", "2t - 1", "1"]);
        let d = superdual_polynomials(&ia, 3);
        assert_eq!(d, ps(&["1", "t - 2", "t - 1"]));
        assert_eq!(superdual_polynomials(&d, 3), ia);
    }

    #[test]
    fn normalization_examples() {
        let ok = ps(&["t - 1", "t^2 - t + 1", "1", "1"]);
        assert!(validate_normalization(&ok, 3, false).pass());
        let bad = validate_normalization(&ps(&["t - 1", "3t - 1"]), 3, false);
        assert_eq!(bad.first_failure().unwrap().degree, 1);
        let dual = superdual_polynomials(&ok, 3);
        assert!(validate_normalization(&dual, 3, true).pass());
    }
}
