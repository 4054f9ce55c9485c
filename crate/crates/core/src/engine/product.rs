use crate::error::{Error, Result};
use crate::gmodule::{kunneth, FgGammaModule};
use crate::laurent::PrimitiveRep;

use super::perversity::Perversity;

/// A knot `S^{n-2} ⊂ S^n` singular along a manifold `Σ` of dimension
/// `n - k - 1` whose neighbourhood is `Σ × c(S^k, ℓ)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProductSingularityInput {
    pub n: usize,
    pub k: usize,
    pub perversity: Perversity,
    /// `H_r(Σ; Γ)`
    pub sigma_homology: Vec<FgGammaModule>,
    /// `H_s(S^k - ℓ; Γ)`
    pub link_modules: Vec<FgGammaModule>,
    /// `λ_i` of the knot complement.
    pub lambda: Vec<PrimitiveRep>,
    pub c: Vec<PrimitiveRep>,
    /// `𝔞_i^{≥}`: the part of `a_i` inside the high-degree Künneth summands.
    pub a_high: Vec<PrimitiveRep>,
}

/// Per-degree bookkeeping of the product computation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProductRow {
    pub degree: usize,
    pub nu: PrimitiveRep,
    pub high: PrimitiveRep,
    pub a: PrimitiveRep,
    pub b: PrimitiveRep,
    pub c: PrimitiveRep,
    pub lambda: PrimitiveRep,
    pub mu: PrimitiveRep,
    pub a_high: PrimitiveRep,
    pub b_high: PrimitiveRep,
    pub b_low: PrimitiveRep,
    pub ia: PrimitiveRep,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProductReport {
    /// `k - p̄(k+1)`
    pub cutoff: usize,
    pub rows: Vec<ProductRow>,
}

impl ProductReport {
    pub fn ia(&self) -> Vec<PrimitiveRep> {
        self.rows.iter().map(|r| r.ia.clone()).collect()
    }
}

fn graded(v: &[PrimitiveRep], i: usize) -> PrimitiveRep {
    v.get(i).cloned().unwrap_or_else(PrimitiveRep::one)
}

fn order(m: &FgGammaModule, degree: usize, what: &str) -> Result<PrimitiveRep> {
    m.order_polynomial().map_err(|_| Error::Inadmissible {
        degree,
        detail: format!("{what} has free rank {}", m.free_rank()),
    })
}

fn quotient(num: &PrimitiveRep, den: &PrimitiveRep, degree: usize, what: &str) -> Result<PrimitiveRep> {
    num.div_exact(den).ok_or_else(|| Error::DivisibilityViolation {
        degree,
        detail: format!("{what}: {den} does not divide {num}"),
    })
}

impl ProductSingularityInput {
    /// `k - p̄(k+1)`
    pub fn cutoff(&self) -> Result<usize> {
        let p = self.perversity.at(self.k + 1)?;
        Ok(self.k.saturating_sub(p))
    }

    pub fn sigma_dim(&self) -> usize {
        self.n - self.k - 1
    }

    /// Every `H_r(Σ;Γ)` is free.
    pub fn is_simple(&self) -> bool {
        self.sigma_homology.iter().all(|m| m.torsion().is_empty())
    }

    /// Smallest degree from which the stable-range corollary gives
    /// `Iλ_i ~ μ_i`: `n - p̄(k+1)` for free `Σ`-homology, one more otherwise.
    pub fn mu_range_start(&self) -> Result<usize> {
        let p = self.perversity.at(self.k + 1)?;
        let base = self.n.saturating_sub(p);
        Ok(if self.is_simple() { base } else { base + 1 })
    }

    fn validate(&self) -> Result<()> {
        if !self.perversity.is_traditional() {
            return Err(Error::SuperperversityNotAllowed);
        }
        if self.k < 2 || self.k + 1 > self.n {
            return Err(Error::Inadmissible {
                degree: 0,
                detail: format!("link sphere dimension k = {} incompatible with n = {}", self.k, self.n),
            });
        }
        if let Some(r) = (self.sigma_dim() + 1..self.sigma_homology.len())
            .find(|&r| !self.sigma_homology[r].is_zero())
        {
            return Err(Error::Inadmissible {
                degree: r,
                detail: format!("H_{r}(Σ) must vanish above dim Σ = {}", self.sigma_dim()),
            });
        }
        let t1 = FgGammaModule::cyclic(PrimitiveRep::t_minus_one());
        if self.link_modules.first() != Some(&t1) {
            return Err(Error::Inadmissible {
                degree: 0,
                detail: "link module in degree 0 must be Γ/(t - 1)".into(),
            });
        }
        for (s, m) in self.link_modules.iter().enumerate() {
            if !m.is_torsion() || (s >= self.k - 1 && !m.is_zero()) {
                return Err(Error::Inadmissible {
                    degree: s,
                    detail: format!("link module in degree {s} must be torsion and vanish from degree {}", self.k - 1),
                });
            }
        }
        Ok(())
    }

    /// The Künneth summands of degree `i` with link degree `0 ≠ s ≥ cutoff`.
    fn high_module(&self, i: usize, cutoff: usize) -> FgGammaModule {
        let mut out = FgGammaModule::zero();
        for (s, l) in self.link_modules.iter().enumerate() {
            if s == 0 || s < cutoff || s > i {
                continue;
            }
            if let Some(sig) = self.sigma_homology.get(i - s) {
                out = out.direct_sum(&sig.tensor(l));
            }
            if s < i {
                if let Some(sig) = self.sigma_homology.get(i - 1 - s) {
                    out = out.direct_sum(&sig.tor(l));
                }
            }
        }
        out
    }
}

/// `Iλ_i ~ 𝔞_{i-1}^{≥} 𝔟_i^{<} c_i` for degrees `0..n`.
pub fn ia_product(input: &ProductSingularityInput) -> Result<ProductReport> {
    input.validate()?;
    let cutoff = input.cutoff()?;
    let n = input.n;
    let mut rows: Vec<ProductRow> = Vec::with_capacity(n);
    for i in 0..n {
        let nu = order(&kunneth(&input.sigma_homology, &input.link_modules, i), i, "link complement homology")?;
        let high = order(&input.high_module(i, cutoff), i, "high summand")?;
        let c = graded(&input.c, i);
        let lambda = graded(&input.lambda, i);
        let b = quotient(&lambda, &c, i, "c_i must divide λ_i")?;
        let a = quotient(&nu, &b, i, "b_i must divide ν_i")?;
        let a_high = graded(&input.a_high, i);
        quotient(&a, &a_high, i, "𝔞_i^≥ must divide a_i")?;
        let b_high = quotient(&high, &a_high, i, "𝔞_i^≥ must divide the high summand")?;
        let low = quotient(&nu, &high, i, "high summand must divide ν_i")?;
        let a_low = a.div_exact(&a_high).expect("checked above");
        quotient(&low, &a_low, i, "a_i/𝔞_i^≥ must divide the low summand")?;
        let b_low = quotient(&b, &b_high, i, "𝔟_i^≥ must divide b_i")?;
        let prev_high = if i == 0 { PrimitiveRep::one() } else { rows[i - 1].a_high.clone() };
        let prev_a = if i == 0 { PrimitiveRep::one() } else { rows[i - 1].a.clone() };
        let ia = prev_high.mul(&b_low).mul(&c);
        rows.push(ProductRow {
            degree: i,
            mu: c.mul(&prev_a),
            nu,
            high,
            a,
            b,
            c,
            lambda,
            a_high,
            b_high,
            b_low,
            ia,
        });
    }
    if let Some(i) = (n..input.lambda.len().max(input.c.len()))
        .find(|&i| !graded(&input.lambda, i).is_one() || !graded(&input.c, i).is_one())
    {
        return Err(Error::Inadmissible { degree: i, detail: format!("data beyond degree {}", n - 1) });
    }
    Ok(ProductReport { cutoff, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PrimitiveRep {
        s.parse().unwrap()
    }

    fn cyc(s: &str) -> FgGammaModule {
        FgGammaModule::cyclic(p(s))
    }

    /// Σ = S^1 with trivial action inside S^6, link knot S^2 ⊂ S^4.
    fn circle_input(perversity: Perversity, a_high: Vec<PrimitiveRep>) -> ProductSingularityInput {
        let xi1 = "t^2 - t + 1";
        ProductSingularityInput {
            n: 6,
            k: 4,
            perversity,
            sigma_homology: vec![FgGammaModule::free(1), FgGammaModule::free(1)],
            link_modules: vec![cyc("t - 1"), cyc(xi1), FgGammaModule::zero()],
            // ν = [t-1, (t-1)ξ1, ξ1]; put (t-1) into a, ξ1 into b in degree 1,
            // ξ1 into a in degree 2.
            lambda: vec![p("t - 1"), p(xi1).mul(&p("t + 2")), p("2t - 1")],
            c: vec![p("1"), p("t + 2"), p("2t - 1")],
            a_high,
        }
    }

    #[test]
    fn simple_circle_low_perversity_gives_lambda() {
        let input = circle_input(Perversity::zero(7), vec![]);
        let r = ia_product(&input).unwrap();
        assert_eq!(r.cutoff, 4);
        assert_eq!(r.rows[1].nu, p("t - 1").mul(&p("t^2 - t + 1")));
        for row in &r.rows {
            assert_eq!(row.ia, row.lambda);
        }
    }

    #[test]
    fn simple_circle_top_perversity() {
        // cutoff 4 - 3 = 1: the ξ1 summands are high.
        let a_high = vec![p("1"), p("1"), p("t^2 - t + 1")];
        let input = circle_input(Perversity::top(7), a_high);
        let r = ia_product(&input).unwrap();
        assert_eq!(r.cutoff, 1);
        assert_eq!(r.rows[1].b_high, p("t^2 - t + 1"));
        assert!(r.rows[1].b_low.is_one());
        assert_eq!(r.rows[1].ia, p("t + 2"));
        assert_eq!(r.rows[2].ia, r.rows[2].c);
        assert_eq!(r.rows[3].ia, p("t^2 - t + 1"));
        assert_eq!(r.rows[3].ia, r.rows[3].mu);
    }

    #[test]
    fn inconsistent_a_high_is_rejected() {
        let input = circle_input(Perversity::top(7), vec![p("1"), p("t + 5")]);
        assert!(matches!(ia_product(&input), Err(Error::DivisibilityViolation { degree: 1, .. })));
    }

    #[test]
    fn bad_link_data_is_rejected() {
        let mut input = circle_input(Perversity::zero(7), vec![]);
        input.link_modules.push(cyc("t + 3"));
        assert!(matches!(ia_product(&input), Err(Error::Inadmissible { degree: 3, .. })));
    }
}
