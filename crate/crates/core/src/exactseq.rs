//! Exact sequences of torsion Γ-modules seen through their order
//! polynomials: alternating products, subpolynomials, reconstruction of
//! unknown terms, and primary splitting of module sequences.

use crate::error::{Error, Result};
use crate::gmodule::{FgGammaModule, GammaMatrix};
use crate::laurent::{is_irreducible, LaurentPoly, PrimitiveRep};

/// Polynomials `Δ_i` of an exact sequence, optionally with the splittings
/// `δ_0, …, δ_len` satisfying `Δ_i ~ δ_i δ_{i+1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolySequence {
    polys: Vec<PrimitiveRep>,
    splittings: Option<Vec<PrimitiveRep>>,
}

impl PolySequence {
    pub fn new(polys: Vec<PrimitiveRep>) -> Self {
        PolySequence { polys, splittings: None }
    }

    /// Builds `Δ_i = δ_i δ_{i+1}`; both end splittings must be 1.
    pub fn from_splittings(splittings: Vec<PrimitiveRep>) -> Result<Self> {
        check_ends(&splittings)?;
        let polys = splittings.windows(2).map(|w| w[0].mul(&w[1])).collect();
        Ok(PolySequence { polys, splittings: Some(splittings) })
    }

    pub fn with_splittings(polys: Vec<PrimitiveRep>, splittings: Vec<PrimitiveRep>) -> Result<Self> {
        if splittings.len() != polys.len() + 1 {
            return Err(Error::DimensionMismatch(format!(
                "{} splittings for {} polynomials",
                splittings.len(),
                polys.len()
            )));
        }
        check_ends(&splittings)?;
        for (i, p) in polys.iter().enumerate() {
            if splittings[i].mul(&splittings[i + 1]) != *p {
                return Err(Error::NotExactCompatible {
                    position: i,
                    reason: "polynomial is not the product of its splittings".into(),
                });
            }
        }
        Ok(PolySequence { polys, splittings: Some(splittings) })
    }

    pub fn polys(&self) -> &[PrimitiveRep] {
        &self.polys
    }

    pub fn splittings(&self) -> Option<&[PrimitiveRep]> {
        self.splittings.as_deref()
    }

    /// Fills in the splittings by dividing in from the left.
    pub fn split(&self) -> Result<Self> {
        let s = subpolynomials(&self.polys)?;
        Ok(PolySequence { polys: self.polys.clone(), splittings: Some(s) })
    }
}

fn check_ends(s: &[PrimitiveRep]) -> Result<()> {
    let last = s.len().saturating_sub(1);
    for (i, d) in [(0, s.first()), (last, s.last())] {
        if d.is_some_and(|d| !d.is_one()) {
            return Err(Error::NotExactCompatible {
                position: i,
                reason: "end splitting must be 1".into(),
            });
        }
    }
    Ok(())
}

/// `Π Δ_{odd} / Π Δ_{even}` (1-based) is a unit of Γ.
pub fn check_alternating_product(polys: &[PrimitiveRep]) -> bool {
    let odd = PrimitiveRep::product(polys.iter().step_by(2));
    let even = PrimitiveRep::product(polys.iter().skip(1).step_by(2));
    odd == even
}

/// `δ_0 = 1`, `δ_{i+1} = Δ_i / δ_i`, and the last `δ` must be 1.
pub fn subpolynomials(polys: &[PrimitiveRep]) -> Result<Vec<PrimitiveRep>> {
    let mut out = Vec::with_capacity(polys.len() + 1);
    out.push(PrimitiveRep::one());
    for (i, p) in polys.iter().enumerate() {
        let next = p.div_exact(out.last().unwrap()).ok_or_else(|| Error::NotExactCompatible {
            position: i,
            reason: format!("{} does not divide {p}", out.last().unwrap()),
        })?;
        out.push(next);
    }
    if !out.last().unwrap().is_one() {
        return Err(Error::NotExactCompatible {
            position: polys.len(),
            reason: format!("sequence ends with leftover factor {}", out.last().unwrap()),
        });
    }
    Ok(out)
}

/// Completes a sequence whose unknown entries (`None`) sit at positions
/// congruent mod 3.
///
/// `junctions[j]` is `δ_j`. For each unknown `Δ_u` the splitting `δ_{u+1}`
/// between it and the next entry must be supplied; the entry itself is then
/// `δ_u δ_{u+1}` with `δ_u` divided in from the left. `δ_0` and `δ_len`
/// default to 1. Returns the completed polynomials and all splittings.
pub fn solve_missing_third(
    known: &[Option<PrimitiveRep>],
    junctions: &[Option<PrimitiveRep>],
) -> Result<(Vec<PrimitiveRep>, Vec<PrimitiveRep>)> {
    let len = known.len();
    if junctions.len() > len + 1 {
        return Err(Error::InvalidPattern(format!(
            "{} splittings for a sequence of length {len}",
            junctions.len()
        )));
    }
    let unknown: Vec<usize> = (0..len).filter(|&i| known[i].is_none()).collect();
    if let Some(&u0) = unknown.first() {
        if let Some(&bad) = unknown.iter().find(|&&u| (u + 3 - u0 % 3) % 3 != 0) {
            return Err(Error::InvalidPattern(format!(
                "unknown positions {u0} and {bad} are not congruent mod 3"
            )));
        }
    }
    let supplied = |j: usize| junctions.get(j).cloned().flatten();
    let mut delta = vec![supplied(0).unwrap_or_else(PrimitiveRep::one)];
    let mut polys = Vec::with_capacity(len);
    for (i, entry) in known.iter().enumerate() {
        let here = delta[i].clone();
        match entry {
            Some(p) => {
                let next = p.div_exact(&here).ok_or_else(|| {
                    if i == 0 || known[i - 1].is_none() {
                        Error::NonDividingSplitting { index: i }
                    } else {
                        Error::NotExactCompatible {
                            position: i,
                            reason: format!("{here} does not divide {p}"),
                        }
                    }
                })?;
                if let Some(s) = supplied(i + 1) {
                    if s != next {
                        return Err(Error::NotExactCompatible {
                            position: i,
                            reason: format!("supplied splitting {s} disagrees with {next}"),
                        });
                    }
                }
                polys.push(p.clone());
                delta.push(next);
            }
            None => {
                let next = match supplied(i + 1) {
                    Some(s) => s,
                    None if i + 1 == len => PrimitiveRep::one(),
                    None => return Err(Error::MissingSplitting { index: i + 1 }),
                };
                polys.push(here.mul(&next));
                delta.push(next);
            }
        }
    }
    let end = delta.last().unwrap();
    if !end.is_one() && supplied(len).as_ref() != Some(end) {
        return Err(Error::NotExactCompatible {
            position: len,
            reason: format!("sequence ends with leftover factor {end}"),
        });
    }
    Ok((polys, delta))
}

/// Exact sequence `M_0 → M_1 → … → M_{n-1}` of torsion modules. Each map is
/// a matrix in the canonical generators (one per invariant factor): column
/// `j` is the image of generator `j` of the source.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleSequence {
    modules: Vec<FgGammaModule>,
    maps: Vec<GammaMatrix>,
}

fn gens(m: &FgGammaModule) -> usize {
    m.torsion().len()
}

fn reduce_mod(x: &LaurentPoly, m: &PrimitiveRep) -> LaurentPoly {
    x.div_rem(&m.to_laurent()).1
}

impl ModuleSequence {
    /// Validates shapes, well-definedness on relations and that consecutive
    /// maps compose to zero.
    pub fn new(modules: Vec<FgGammaModule>, maps: Vec<GammaMatrix>) -> Result<Self> {
        if let Some(m) = modules.iter().find(|m| !m.is_torsion()) {
            return Err(Error::NotTorsion { free_rank: m.free_rank() });
        }
        if maps.len() + 1 != modules.len() && !(modules.is_empty() && maps.is_empty()) {
            return Err(Error::DimensionMismatch(format!(
                "{} maps between {} modules",
                maps.len(),
                modules.len()
            )));
        }
        for (i, d) in maps.iter().enumerate() {
            let (src, dst) = (&modules[i], &modules[i + 1]);
            if d.cols() != gens(src) || d.rows() != gens(dst) {
                return Err(Error::DimensionMismatch(format!(
                    "map {i} is {}x{}, expected {}x{}",
                    d.rows(),
                    d.cols(),
                    gens(dst),
                    gens(src)
                )));
            }
            for (j, e) in src.torsion().iter().enumerate() {
                for (k, f) in dst.torsion().iter().enumerate() {
                    let v = d.get(k, j) * &e.to_laurent();
                    if !reduce_mod(&v, f).is_zero() {
                        return Err(Error::NotExactCompatible {
                            position: i,
                            reason: format!("map {i} does not respect the relation of generator {j}"),
                        });
                    }
                }
            }
        }
        for (i, w) in maps.windows(2).enumerate() {
            let comp = w[1].mul(&w[0])?;
            let dst = &modules[i + 2];
            for (k, f) in dst.torsion().iter().enumerate() {
                if (0..comp.cols()).any(|j| !reduce_mod(comp.get(k, j), f).is_zero()) {
                    return Err(Error::NotExactCompatible {
                        position: i + 1,
                        reason: "consecutive maps do not compose to zero".into(),
                    });
                }
            }
        }
        Ok(ModuleSequence { modules, maps })
    }

    pub fn modules(&self) -> &[FgGammaModule] {
        &self.modules
    }

    pub fn maps(&self) -> &[GammaMatrix] {
        &self.maps
    }

    pub fn orders(&self) -> Vec<PrimitiveRep> {
        self.modules
            .iter()
            .map(|m| m.order_polynomial().expect("torsion by construction"))
            .collect()
    }
}

/// Restricts every module and map to its `prime`-primary summand.
pub fn split_primary(seq: &ModuleSequence, prime: &PrimitiveRep) -> Result<ModuleSequence> {
    if prime.is_one() || !is_irreducible(prime)? {
        return Err(Error::NotPrime { poly: prime.to_string() });
    }
    // For Γ/(f) with f = p^m s, the primary summand is generated by s.
    struct Piece {
        keep: Vec<usize>,
        power: Vec<PrimitiveRep>,
        cofactor: Vec<PrimitiveRep>,
    }
    let pieces: Vec<Piece> = seq
        .modules
        .iter()
        .map(|m| {
            let mut piece = Piece { keep: vec![], power: vec![], cofactor: vec![] };
            for (k, f) in m.torsion().iter().enumerate() {
                let e = prime.multiplicity_in(f);
                if e > 0 {
                    let pe = prime.pow(e);
                    piece.cofactor.push(f.div_exact(&pe).expect("power divides"));
                    piece.power.push(pe);
                    piece.keep.push(k);
                }
            }
            piece
        })
        .collect();
    let modules: Vec<FgGammaModule> = pieces
        .iter()
        .map(|p| FgGammaModule::new(0, p.power.clone()))
        .collect();
    let mut maps = Vec::with_capacity(seq.maps.len());
    for (i, d) in seq.maps.iter().enumerate() {
        let (src, dst) = (&pieces[i], &pieces[i + 1]);
        let mut out = GammaMatrix::zeros(dst.keep.len(), src.keep.len());
        for (a, &j) in src.keep.iter().enumerate() {
            let r = src.cofactor[a].to_laurent();
            for (b, &k) in dst.keep.iter().enumerate() {
                let image = d.get(k, j) * &r;
                let y = image.exact_div(&dst.cofactor[b].to_laurent()).ok_or_else(|| {
                    Error::NotExactCompatible {
                        position: i,
                        reason: "map does not preserve primary summands".into(),
                    }
                })?;
                out.set(b, a, reduce_mod(&y, &dst.power[b]));
            }
        }
        maps.push(out);
    }
    // Canonical generators of a primary module are the kept generators in
    // the same order, since prime powers of a divisibility chain stay a chain.
    let out = ModuleSequence::new(modules, maps)?;
    let orders = out.orders();
    if !check_alternating_product(&orders) {
        return Err(Error::NotExactCompatible {
            position: 0,
            reason: "primary summands fail the alternating product test".into(),
        });
    }
    Ok(out)
}
