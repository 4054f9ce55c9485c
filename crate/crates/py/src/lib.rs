//! Python bindings: `import ialex`.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

use ialex::engine::{self, DiskKnotData, Perversity, ProductSingularityInput};
use ialex::exactseq;
use ialex::gmodule::{self, FgGammaModule, GammaMatrix};
use ialex::laurent::{self, parse_laurent, LaurentPoly, PrimitiveRep, DEFAULT_DEGREE_CAP};
use ialex::twisted::{self, TwistedComplex};
use ialex_cli::Options;

create_exception!(ialex, IalexError, PyException);

fn err(e: ialex::Error) -> PyErr {
    IalexError::new_err(format!("{}: {e}", e.code()))
}

/// An element of Q[t, t^-1].
#[pyclass(name = "Polynomial", module = "ialex", frozen, from_py_object)]
#[derive(Clone)]
struct Polynomial(LaurentPoly);

#[derive(FromPyObject)]
enum PolyArg {
    Poly(Polynomial),
    Text(String),
    Int(i64),
}

impl PolyArg {
    fn laurent(self) -> PyResult<LaurentPoly> {
        match self {
            PolyArg::Poly(p) => Ok(p.0),
            PolyArg::Text(s) => parse_laurent(&s).map_err(err),
            PolyArg::Int(c) => Ok(LaurentPoly::from_ints(0, &[c])),
        }
    }

    fn rep(self) -> PyResult<PrimitiveRep> {
        self.laurent()?.normalize().map_err(err)
    }
}

fn reps(v: Vec<PolyArg>) -> PyResult<Vec<PrimitiveRep>> {
    v.into_iter().map(PolyArg::rep).collect()
}

fn opt_reps(v: Vec<Option<PolyArg>>) -> PyResult<Vec<Option<PrimitiveRep>>> {
    v.into_iter().map(|p| p.map(PolyArg::rep).transpose()).collect()
}

fn polys<'a>(v: impl IntoIterator<Item = &'a PrimitiveRep>) -> Vec<Polynomial> {
    v.into_iter().map(|p| Polynomial(p.to_laurent())).collect()
}

#[pymethods]
impl Polynomial {
    #[new]
    fn new(value: PolyArg) -> PyResult<Self> {
        Ok(Polynomial(value.laurent()?))
    }

    /// Integer coefficients starting at `t^shift`.
    #[staticmethod]
    #[pyo3(signature = (coeffs, shift=0))]
    fn from_coeffs(coeffs: Vec<i64>, shift: i64) -> Self {
        Polynomial(LaurentPoly::from_ints(shift, &coeffs))
    }

    /// Primitive representative of the similarity class.
    fn normalize(&self) -> PyResult<Polynomial> {
        Ok(Polynomial(self.0.normalize().map_err(err)?.to_laurent()))
    }

    fn involute(&self) -> Polynomial {
        Polynomial(self.0.involute())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_unit(&self) -> bool {
        self.0.is_unit()
    }

    fn divides(&self, other: PolyArg) -> PyResult<bool> {
        Ok(self.0.divides(&other.laurent()?))
    }

    /// `(exponent, "p/q")` pairs in increasing exponent.
    fn terms(&self) -> Vec<(i64, String)> {
        self.0.terms().map(|(e, c)| (e, c.to_string())).collect()
    }

    fn __add__(&self, other: PolyArg) -> PyResult<Polynomial> {
        Ok(Polynomial(self.0.clone() + other.laurent()?))
    }

    fn __radd__(&self, other: PolyArg) -> PyResult<Polynomial> {
        self.__add__(other)
    }

    fn __sub__(&self, other: PolyArg) -> PyResult<Polynomial> {
        Ok(Polynomial(self.0.clone() - other.laurent()?))
    }

    fn __rsub__(&self, other: PolyArg) -> PyResult<Polynomial> {
        Ok(Polynomial(other.laurent()? - self.0.clone()))
    }

    fn __mul__(&self, other: PolyArg) -> PyResult<Polynomial> {
        Ok(Polynomial(self.0.clone() * other.laurent()?))
    }

    fn __rmul__(&self, other: PolyArg) -> PyResult<Polynomial> {
        self.__mul__(other)
    }

    fn __neg__(&self) -> Polynomial {
        Polynomial(-self.0.clone())
    }

    fn __pow__(&self, e: u32, _modulo: Option<Py<PyAny>>) -> Polynomial {
        Polynomial(self.0.pow(e))
    }

    fn __eq__(&self, other: PolyArg) -> PyResult<bool> {
        Ok(self.0 == other.laurent()?)
    }

    fn __hash__(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.0.hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial('{}')", self.0)
    }
}

/// A finitely generated Γ-module `Γ^r ⊕ Γ/(p_1) ⊕ …`.
#[pyclass(name = "Module", module = "ialex", frozen, from_py_object)]
#[derive(Clone)]
struct Module(FgGammaModule);

#[pymethods]
impl Module {
    #[new]
    #[pyo3(signature = (free=0, torsion=Vec::new()))]
    fn new(free: usize, torsion: Vec<PolyArg>) -> PyResult<Self> {
        Ok(Module(FgGammaModule::new(free, reps(torsion)?)))
    }

    #[getter]
    fn free_rank(&self) -> usize {
        self.0.free_rank()
    }

    #[getter]
    fn torsion(&self) -> Vec<Polynomial> {
        polys(self.0.torsion())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn order(&self) -> PyResult<Polynomial> {
        Ok(Polynomial(self.0.order_polynomial().map_err(err)?.to_laurent()))
    }

    fn direct_sum(&self, other: &Module) -> Module {
        Module(self.0.direct_sum(&other.0))
    }

    fn tensor(&self, other: &Module) -> Module {
        Module(self.0.tensor(&other.0))
    }

    fn tor(&self, other: &Module) -> Module {
        Module(self.0.tor(&other.0))
    }

    fn conjugate(&self) -> Module {
        Module(self.0.conjugate())
    }

    fn primary_component(&self, prime: PolyArg) -> PyResult<Module> {
        Ok(Module(self.0.primary_component(&prime.rep()?).map_err(err)?))
    }

    fn __eq__(&self, other: &Module) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Module(free={}, torsion={:?})", self.0.free_rank(), self.0.torsion().iter().map(ToString::to_string).collect::<Vec<_>>())
    }
}

#[derive(FromPyObject)]
enum PerversityArg {
    Named(String),
    Values(Vec<usize>),
}

impl PerversityArg {
    fn resolve(self, max_codim: usize) -> PyResult<Perversity> {
        match self {
            PerversityArg::Values(v) => Perversity::new(v).map_err(err),
            PerversityArg::Named(_) if max_codim < 2 => {
                Err(PyValueError::new_err(format!("maximum codimension {max_codim} below 2")))
            }
            PerversityArg::Named(name) => match name.as_str() {
                "zero" => Ok(Perversity::zero(max_codim)),
                "top" => Ok(Perversity::top(max_codim)),
                "lower-middle" => Ok(Perversity::lower_middle(max_codim)),
                "upper-middle" => Ok(Perversity::upper_middle(max_codim)),
                other => Err(PyValueError::new_err(format!("unknown perversity {other:?}"))),
            },
        }
    }
}

/// Irreducible factors with multiplicities, sorted canonically.
#[pyfunction]
#[pyo3(signature = (p, degree_cap=DEFAULT_DEGREE_CAP))]
fn factor(p: PolyArg, degree_cap: usize) -> PyResult<Vec<(Polynomial, u32)>> {
    let fs = laurent::factor_with_cap(&p.laurent()?, degree_cap).map_err(err)?;
    Ok(fs.into_iter().map(|f| (Polynomial(f.prime.to_laurent()), f.multiplicity)).collect())
}

#[pyfunction]
fn normalize(p: PolyArg) -> PyResult<Polynomial> {
    Ok(Polynomial(p.rep()?.to_laurent()))
}

#[pyfunction]
fn similar(p: PolyArg, q: PolyArg) -> PyResult<bool> {
    Ok(laurent::similar(&p.laurent()?, &q.laurent()?))
}

#[pyfunction]
fn gcd(p: PolyArg, q: PolyArg) -> PyResult<Polynomial> {
    Ok(Polynomial(laurent::gcd(&p.laurent()?, &q.laurent()?).map_err(err)?.to_laurent()))
}

fn matrix(rows: Vec<Vec<PolyArg>>) -> PyResult<GammaMatrix> {
    let rows = rows
        .into_iter()
        .map(|r| r.into_iter().map(PolyArg::laurent).collect::<PyResult<Vec<_>>>())
        .collect::<PyResult<Vec<_>>>()?;
    GammaMatrix::from_rows(rows).map_err(err)
}

/// Invariant factors and the free-rank defect of a matrix.
#[pyfunction]
fn smith_normal_form(rows: Vec<Vec<PolyArg>>) -> PyResult<(Vec<Polynomial>, usize)> {
    let s = gmodule::smith_normal_form(&matrix(rows)?);
    Ok((polys(&s.factors), s.free_rank_defect))
}

/// Module presented by `rows` (one relation per row).
#[pyfunction]
fn cokernel(rows: Vec<Vec<PolyArg>>) -> PyResult<Module> {
    Ok(Module(gmodule::cokernel(&matrix(rows)?)))
}

/// Homology of a simplicial complex with coefficients twisted by edge
/// monodromy `{(u, v): unit}`; edges left out carry 1.
#[pyfunction]
#[pyo3(signature = (simplices, monodromy=Vec::new(), stalk=None))]
fn twisted_homology(
    simplices: Vec<Vec<usize>>,
    monodromy: Vec<((usize, usize), PolyArg)>,
    stalk: Option<Module>,
) -> PyResult<Vec<Module>> {
    let monodromy = monodromy
        .into_iter()
        .map(|(e, p)| Ok((e, p.laurent()?)))
        .collect::<PyResult<Vec<_>>>()?;
    let stalk = stalk.map_or_else(|| FgGammaModule::free(1), |m| m.0);
    let tc = TwistedComplex::new(simplices, monodromy, stalk).map_err(err)?;
    Ok(twisted::twisted_homology(&tc).map_err(err)?.into_iter().map(Module).collect())
}

fn knot_data(n: usize, a: Vec<PolyArg>, b: Vec<PolyArg>, c: Vec<PolyArg>) -> PyResult<DiskKnotData> {
    DiskKnotData::new(n, reps(a)?, reps(b)?, reps(c)?).map_err(err)
}

/// Intersection Alexander polynomials of a point singularity, degrees
/// `0..n`. Superperversities go through duality.
#[pyfunction]
fn ia_point(n: usize, perversity: PerversityArg, a: Vec<PolyArg>, b: Vec<PolyArg>, c: Vec<PolyArg>) -> PyResult<Vec<Polynomial>> {
    let data = knot_data(n, a, b, c)?;
    let p = perversity.resolve(n)?;
    Ok(polys(&engine::ia_point_super(&data, &p).map_err(err)?))
}

/// `(degree, branch, value)` rows of a traditional perversity.
#[pyfunction]
fn ia_point_table(
    n: usize,
    perversity: PerversityArg,
    a: Vec<PolyArg>,
    b: Vec<PolyArg>,
    c: Vec<PolyArg>,
) -> PyResult<Vec<(usize, &'static str, Polynomial)>> {
    let data = knot_data(n, a, b, c)?;
    let p = perversity.resolve(n)?;
    let rows = engine::ia_point_table(&data, &p).map_err(err)?;
    Ok(rows.into_iter().map(|r| (r.degree, r.branch.label(), Polynomial(r.value.to_laurent()))).collect())
}

/// Singular set `Σ × c(S^k, ℓ)`; `a_high` defaults to all 1.
#[pyfunction]
#[pyo3(signature = (n, k, perversity, sigma, link, lam, c, a_high=Vec::new()))]
#[allow(clippy::too_many_arguments)]
fn ia_product(
    n: usize,
    k: usize,
    perversity: PerversityArg,
    sigma: Vec<Module>,
    link: Vec<Module>,
    lam: Vec<PolyArg>,
    c: Vec<PolyArg>,
    a_high: Vec<PolyArg>,
) -> PyResult<Vec<Polynomial>> {
    let input = ProductSingularityInput {
        n,
        k,
        perversity: perversity.resolve(n)?,
        sigma_homology: sigma.into_iter().map(|m| m.0).collect(),
        link_modules: link.into_iter().map(|m| m.0).collect(),
        lambda: reps(lam)?,
        c: reps(c)?,
        a_high: reps(a_high)?,
    };
    Ok(polys(&engine::ia_product(&input).map_err(err)?.ia()))
}

#[pyfunction]
fn superdual_polynomials(ia: Vec<PolyArg>, n: usize) -> PyResult<Vec<Polynomial>> {
    Ok(polys(&engine::superdual_polynomials(&reps(ia)?, n)))
}

/// Failing `(degree, clause)` pairs; empty when the values normalize.
#[pyfunction]
#[pyo3(signature = (ia, n, superperverse=false))]
fn validate_normalization(ia: Vec<PolyArg>, n: usize, superperverse: bool) -> PyResult<Vec<(usize, &'static str)>> {
    let report = engine::validate_normalization(&reps(ia)?, n, superperverse);
    Ok(report.checks.iter().filter(|c| !c.pass).map(|c| (c.degree, c.clause.label())).collect())
}

#[pyfunction]
fn check_alternating_product(polys: Vec<PolyArg>) -> PyResult<bool> {
    Ok(exactseq::check_alternating_product(&reps(polys)?))
}

/// Splittings `δ_0, …, δ_len` of an exact-compatible sequence.
#[pyfunction]
fn subpolynomials(seq: Vec<PolyArg>) -> PyResult<Vec<Polynomial>> {
    Ok(polys(&exactseq::subpolynomials(&reps(seq)?).map_err(err)?))
}

/// Fills the `None` entries from the given splittings.
#[pyfunction]
fn solve_missing_third(
    known: Vec<Option<PolyArg>>,
    splittings: Vec<Option<PolyArg>>,
) -> PyResult<(Vec<Polynomial>, Vec<Polynomial>)> {
    let (p, d) = exactseq::solve_missing_third(&opt_reps(known)?, &opt_reps(splittings)?).map_err(err)?;
    Ok((polys(&p), polys(&d)))
}

/// Runs a JSON case file and returns the JSON report.
#[pyfunction]
#[pyo3(signature = (case, degree_cap=DEFAULT_DEGREE_CAP, assume_zero_kernel=false))]
fn run_case(case: &str, degree_cap: usize, assume_zero_kernel: bool) -> String {
    ialex_cli::run_str(case, &Options { degree_cap, assume_zero_kernel }).to_json()
}

#[pymodule(name = "ialex")]
fn ialex_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("IalexError", m.py().get_type::<IalexError>())?;
    m.add_class::<Polynomial>()?;
    m.add_class::<Module>()?;
    m.add_function(wrap_pyfunction!(factor, m)?)?;
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    m.add_function(wrap_pyfunction!(similar, m)?)?;
    m.add_function(wrap_pyfunction!(gcd, m)?)?;
    m.add_function(wrap_pyfunction!(smith_normal_form, m)?)?;
    m.add_function(wrap_pyfunction!(cokernel, m)?)?;
    m.add_function(wrap_pyfunction!(twisted_homology, m)?)?;
    m.add_function(wrap_pyfunction!(ia_point, m)?)?;
    m.add_function(wrap_pyfunction!(ia_point_table, m)?)?;
    m.add_function(wrap_pyfunction!(ia_product, m)?)?;
    m.add_function(wrap_pyfunction!(superdual_polynomials, m)?)?;
    m.add_function(wrap_pyfunction!(validate_normalization, m)?)?;
    m.add_function(wrap_pyfunction!(check_alternating_product, m)?)?;
    m.add_function(wrap_pyfunction!(subpolynomials, m)?)?;
    m.add_function(wrap_pyfunction!(solve_missing_third, m)?)?;
    m.add_function(wrap_pyfunction!(run_case, m)?)?;
    Ok(())
}
