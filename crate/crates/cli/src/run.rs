use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

use ialex::bounds::{
    allowed_primes_general, allowed_primes_single, check_result, exclusion_general, exclusion_single,
    max_power_bound, Certificate, E2Table, LinkComponent, PrimeSet, StratificationData, Stratum,
};
use ialex::engine::{
    ia_point_super, ia_point_table, ia_product, point_cutoff, superdual_polynomials, validate_normalization,
    DiskKnotData, NormalizationReport, Perversity, ProductSingularityInput,
};
use ialex::exactseq::{check_alternating_product, solve_missing_third, subpolynomials};
use ialex::gmodule::{cokernel, smith_normal_form, FgGammaModule, GammaMatrix};
use ialex::laurent::{factor_with_cap, parse_laurent, LaurentPoly, PrimitiveRep, DEFAULT_DEGREE_CAP};
use ialex::twisted::{abutment_divisor_bound, e2_cone_page, e2_link_page, twisted_homology, TwistedComplex};
use ialex::Error;

use crate::report::{Failure, Report, Status};
use crate::schema::*;

/// Engine pass-through settings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub degree_cap: usize,
    /// Take every `𝔞^{≥}` to be 1 instead of reading it from the case.
    pub assume_zero_kernel: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { degree_cap: DEFAULT_DEGREE_CAP, assume_zero_kernel: false }
    }
}

struct Outcome {
    status: Status,
    values: Value,
    certificates: Option<Value>,
}

impl Outcome {
    fn pass(values: Value) -> Self {
        Outcome { status: Status::Pass, values, certificates: None }
    }

    fn fail(values: Value, certificates: Value) -> Self {
        Outcome { status: Status::Fail, values, certificates: Some(certificates) }
    }
}

type Step<T> = Result<T, Failure>;

pub fn parse_case(v: Value) -> Step<Case> {
    serde_path_to_error::deserialize(v)
        .map_err(|e| Failure::new("schema", e.inner().to_string(), Some(e.path().to_string())))
}

pub fn run_value(v: Value, opts: &Options) -> Report {
    let kind = v.get("kind").and_then(Value::as_str).unwrap_or("unknown").to_string();
    match parse_case(v) {
        Ok(case) => run(&case, opts),
        Err(f) => Report::error(kind, f),
    }
}

pub fn run_str(text: &str, opts: &Options) -> Report {
    match serde_json::from_str::<Value>(text) {
        Ok(v) => run_value(v, opts),
        Err(e) => Report::error("unknown", Failure::new("json", e.to_string(), None)),
    }
}

pub fn run(case: &Case, opts: &Options) -> Report {
    let out = match case {
        Case::Factor(c) => factor(c, opts),
        Case::Snf(c) => snf(c),
        Case::Seq(c) => seq(c),
        Case::IaPoint(c) => ia_point_case(c),
        Case::IaProduct(c) => ia_product_case(c, opts),
        Case::IaDual(c) => ia_dual(c),
        Case::Bounds(c) => bounds(c),
        Case::Homology(c) => homology(c),
        Case::E2(c) => e2(c),
        Case::Verify(c) => verify(c, opts),
    };
    let kind = case.kind().to_string();
    match out {
        Ok(o) => Report { kind, status: o.status, values: o.values, certificates: o.certificates, error: None },
        Err(f) => Report::error(kind, f),
    }
}

fn at(path: &str, field: impl std::fmt::Display) -> String {
    format!("{path}.{field}")
}

fn idx(path: &str, i: usize) -> String {
    format!("{path}[{i}]")
}

fn core<T>(r: ialex::Result<T>) -> Step<T> {
    r.map_err(|e| Failure::core(e, None))
}

fn laurent(s: &str, path: &str) -> Step<LaurentPoly> {
    parse_laurent(s).map_err(|e| Failure::core(e, path.to_string()))
}

fn rep(s: &str, path: &str) -> Step<PrimitiveRep> {
    laurent(s, path)?.normalize().map_err(|e| Failure::core(e, path.to_string()))
}

fn reps(v: &[String], path: &str) -> Step<Vec<PrimitiveRep>> {
    v.iter().enumerate().map(|(i, s)| rep(s, &idx(path, i))).collect()
}

fn module(m: &ModuleLit, path: &str) -> Step<FgGammaModule> {
    Ok(FgGammaModule::new(m.free, reps(&m.torsion, &at(path, "torsion"))?))
}

fn modules(v: &[ModuleLit], path: &str) -> Step<Vec<FgGammaModule>> {
    v.iter().enumerate().map(|(i, m)| module(m, &idx(path, i))).collect()
}

fn perversity(p: &PerversityLit, max_codim: usize, path: &str) -> Step<Perversity> {
    let bad = |msg: String| Failure::new("invalid-perversity", msg, Some(path.to_string()));
    match p {
        PerversityLit::Values(v) => Perversity::new(v.clone()).map_err(|e| Failure::core(e, path.to_string())),
        PerversityLit::Named(_) if max_codim < 2 => Err(bad(format!("maximum codimension {max_codim} below 2"))),
        PerversityLit::Named(name) => match name.as_str() {
            "zero" => Ok(Perversity::zero(max_codim)),
            "top" => Ok(Perversity::top(max_codim)),
            "lower-middle" => Ok(Perversity::lower_middle(max_codim)),
            "upper-middle" => Ok(Perversity::upper_middle(max_codim)),
            other => Err(bad(format!("unknown perversity {other:?}"))),
        },
    }
}

fn strs<'a>(v: impl IntoIterator<Item = &'a PrimitiveRep>) -> Vec<String> {
    v.into_iter().map(ToString::to_string).collect()
}

fn module_lit(m: &FgGammaModule) -> Value {
    json!({ "free": m.free_rank(), "torsion": strs(m.torsion()) })
}

fn normalization(r: &NormalizationReport) -> Value {
    let failures: Vec<Value> = r
        .checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| json!({ "degree": c.degree, "clause": c.clause.label(), "value": c.value.to_string() }))
        .collect();
    json!({ "pass": r.pass(), "failures": failures })
}

fn factor(c: &FactorCase, opts: &Options) -> Step<Outcome> {
    let path = "payload.poly";
    let p = laurent(&c.poly, path)?;
    let fs = factor_with_cap(&p, opts.degree_cap).map_err(|e| Failure::core(e, path.to_string()))?;
    let factors: Vec<Value> = fs.iter().map(|f| json!([f.prime.to_string(), f.multiplicity])).collect();
    Ok(Outcome::pass(json!({ "factors": factors })))
}

fn snf(c: &SnfCase) -> Step<Outcome> {
    let rows = c
        .matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let rp = idx("payload.matrix", i);
            row.iter().enumerate().map(|(j, s)| laurent(s, &idx(&rp, j))).collect::<Step<Vec<_>>>()
        })
        .collect::<Step<Vec<_>>>()?;
    let m = GammaMatrix::from_rows(rows).map_err(|e| Failure::core(e, "payload.matrix".to_string()))?;
    let sf = smith_normal_form(&m);
    Ok(Outcome::pass(json!({
        "invariant_factors": strs(&sf.factors),
        "free_rank": sf.free_rank_defect,
        "module": module_lit(&cokernel(&m)),
    })))
}

fn optional_reps(v: &[Option<String>], path: &str) -> Step<Vec<Option<PrimitiveRep>>> {
    v.iter()
        .enumerate()
        .map(|(i, s)| s.as_deref().map(|s| rep(s, &idx(path, i))).transpose())
        .collect()
}

fn seq(c: &SeqCase) -> Step<Outcome> {
    let known = optional_reps(&c.polys, "payload.polys")?;
    if c.splittings.is_none() && known.iter().all(Option::is_some) {
        let polys: Vec<PrimitiveRep> = known.into_iter().flatten().collect();
        let alternating = check_alternating_product(&polys);
        return Ok(match subpolynomials(&polys) {
            Ok(d) => Outcome::pass(json!({ "exact": true, "alternating_product": alternating, "splittings": strs(&d) })),
            Err(e) => {
                let position = match &e {
                    Error::NotExactCompatible { position, .. } => Some(*position),
                    _ => None,
                };
                Outcome::fail(
                    json!({ "exact": false, "alternating_product": alternating }),
                    json!([{ "code": e.code(), "message": e.to_string(), "position": position }]),
                )
            }
        });
    }
    let junctions = optional_reps(c.splittings.as_deref().unwrap_or(&[]), "payload.splittings")?;
    let (polys, delta) = core(solve_missing_third(&known, &junctions))?;
    Ok(Outcome::pass(json!({ "polys": strs(&polys), "splittings": strs(&delta) })))
}

fn ia_point_case(c: &IaPointCase) -> Step<Outcome> {
    let p = perversity(&c.perversity, c.n, "payload.perversity")?;
    let data = core(DiskKnotData::new(
        c.n,
        reps(&c.a, "payload.a")?,
        reps(&c.b, "payload.b")?,
        reps(&c.c, "payload.c")?,
    ))?;
    if p.is_super() {
        let ia = core(ia_point_super(&data, &p))?;
        let rows: Vec<Value> = ia
            .iter()
            .enumerate()
            .map(|(i, v)| json!({ "degree": i, "branch": "dual", "value": v.to_string() }))
            .collect();
        return Ok(Outcome::pass(json!({
            "perversity": p.values(),
            "rows": rows,
            "ia": strs(&ia),
            "normalization": normalization(&validate_normalization(&ia, c.n, true)),
        })));
    }
    let table = core(ia_point_table(&data, &p))?;
    let ia: Vec<PrimitiveRep> = table.iter().map(|r| r.value.clone()).collect();
    let rows: Vec<Value> = table
        .iter()
        .map(|r| json!({ "degree": r.degree, "branch": r.branch.label(), "value": r.value.to_string() }))
        .collect();
    Ok(Outcome::pass(json!({
        "cutoff": core(point_cutoff(c.n, &p))?,
        "perversity": p.values(),
        "rows": rows,
        "ia": strs(&ia),
        "normalization": normalization(&validate_normalization(&ia, c.n, false)),
    })))
}

fn ia_product_case(c: &IaProductCase, opts: &Options) -> Step<Outcome> {
    let a_high = if opts.assume_zero_kernel {
        Vec::new()
    } else {
        match &c.a_high {
            Some(v) => reps(v, "payload.a_high")?,
            None => {
                return Err(Failure::new(
                    "missing-field",
                    "a_high is required unless --assume-zero-kernel is set",
                    Some("payload.a_high".into()),
                ))
            }
        }
    };
    let input = ProductSingularityInput {
        n: c.n,
        k: c.k,
        perversity: perversity(&c.perversity, c.n, "payload.perversity")?,
        sigma_homology: modules(&c.sigma, "payload.sigma")?,
        link_modules: modules(&c.link, "payload.link")?,
        lambda: reps(&c.lambda, "payload.lambda")?,
        c: reps(&c.c, "payload.c")?,
        a_high,
    };
    let report = core(ia_product(&input))?;
    let rows: Vec<Value> = report
        .rows
        .iter()
        .map(|r| {
            json!({
                "degree": r.degree,
                "nu": r.nu.to_string(),
                "high": r.high.to_string(),
                "a": r.a.to_string(),
                "b": r.b.to_string(),
                "c": r.c.to_string(),
                "lambda": r.lambda.to_string(),
                "mu": r.mu.to_string(),
                "a_high": r.a_high.to_string(),
                "b_high": r.b_high.to_string(),
                "b_low": r.b_low.to_string(),
                "ia": r.ia.to_string(),
            })
        })
        .collect();
    let ia = report.ia();
    Ok(Outcome::pass(json!({
        "cutoff": report.cutoff,
        "mu_range_start": core(input.mu_range_start())?,
        "simple": input.is_simple(),
        "rows": rows,
        "ia": strs(&ia),
        "normalization": normalization(&validate_normalization(&ia, c.n, false)),
    })))
}

fn ia_dual(c: &IaDualCase) -> Step<Outcome> {
    let ia = reps(&c.ia, "payload.ia")?;
    let dual = superdual_polynomials(&ia, c.n);
    Ok(Outcome::pass(json!({
        "dual": strs(&dual),
        "normalization": normalization(&validate_normalization(&dual, c.n, !c.from_super)),
    })))
}

fn stratification(s: &StratificationLit, path: &str) -> Step<StratificationData> {
    let mut strata = Vec::with_capacity(s.strata.len());
    for (si, st) in s.strata.iter().enumerate() {
        let sp = idx(&at(path, "strata"), si);
        let mut components = Vec::with_capacity(st.components.len());
        for (ci, comp) in st.components.iter().enumerate() {
            let cp = idx(&at(&sp, "components"), ci);
            let zeta = comp.zeta.as_deref().map(|z| reps(z, &at(&cp, "zeta"))).transpose()?;
            components.push(LinkComponent { xi: reps(&comp.xi, &at(&cp, "xi"))?, zeta });
        }
        strata.push(Stratum { dim: st.dim, components });
    }
    StratificationData::new(s.n, strata).map_err(|e| Failure::core(e, path.to_string()))
}

fn prime_list(set: &PrimeSet) -> Value {
    json!(strs(set))
}

fn certificate(c: &Certificate) -> Value {
    match c {
        Certificate::Pass => json!({ "result": "pass" }),
        Certificate::OutsideAllowed { prime, multiplicity } => json!({
            "result": "outside-allowed",
            "prime": prime.to_string(),
            "multiplicity": multiplicity,
        }),
        Certificate::PowerExceeded { prime, observed, allowed } => json!({
            "result": "power-exceeded",
            "prime": prime.to_string(),
            "observed": observed,
            "allowed": allowed,
        }),
    }
}

fn bounds(c: &BoundsCase) -> Step<Outcome> {
    let out = match c {
        BoundsCase::Allowed { i, n, k, c, xi } => {
            let c = rep(c, "payload.c")?;
            let xi = reps(xi, "payload.xi")?;
            json!({ "allowed": prime_list(&core(allowed_primes_single(*i, *n, *k, &c, &xi))?) })
        }
        BoundsCase::AllowedGeneral { j, lambda, stratification: s, use_ordinary } => {
            let lambda = rep(lambda, "payload.lambda")?;
            let data = stratification(s, "payload.stratification")?;
            json!({ "allowed": prime_list(&core(allowed_primes_general(*j, &lambda, &data, *use_ordinary))?) })
        }
        BoundsCase::Exclude { gamma, k, perversity: p, lambda, xi } => {
            let gamma = rep(gamma, "payload.gamma")?;
            let p = perversity(p, k + 1, "payload.perversity")?;
            let lambda = rep(lambda, "payload.lambda")?;
            let xi = reps(xi, "payload.xi")?;
            json!({ "excluded": core(exclusion_single(&gamma, *k, &p, &lambda, &xi))? })
        }
        BoundsCase::ExcludeGeneral { gamma, perversity: p, lambda, stratification: s } => {
            let gamma = rep(gamma, "payload.gamma")?;
            let p = perversity(p, s.n, "payload.perversity")?;
            let lambda = rep(lambda, "payload.lambda")?;
            let data = stratification(s, "payload.stratification")?;
            json!({ "excluded": core(exclusion_general(&gamma, &lambda, &data, &p))? })
        }
        BoundsCase::Maxpower { gamma, j, gamma_j, n, perversity: p, table } => {
            let gamma = rep(gamma, "payload.gamma")?;
            let p = perversity(p, *n, "payload.perversity")?;
            let table = table
                .iter()
                .enumerate()
                .map(|(x, e)| Ok(((e.i, e.p, e.q), rep(&e.e, &at(&idx("payload.table", x), "e"))?)))
                .collect::<Step<E2Table>>()?;
            json!({ "bound": core(max_power_bound(&gamma, *j, *gamma_j, &table, *n, &p))? })
        }
        BoundsCase::Check { ia, allowed, power_bounds } => {
            let ia = rep(ia, "payload.ia")?;
            let allowed: PrimeSet = reps(allowed, "payload.allowed")?.into_iter().collect();
            let power_bounds = power_bounds
                .iter()
                .map(|(k, v)| Ok((rep(k, &at("payload.power_bounds", k))?, *v)))
                .collect::<Step<BTreeMap<_, _>>>()?;
            let cert = check_result(&ia, &allowed, &power_bounds);
            let values = json!({ "certificate": certificate(&cert) });
            if !cert.passed() {
                return Ok(Outcome::fail(values, json!([certificate(&cert)])));
            }
            values
        }
    };
    Ok(Outcome::pass(out))
}

fn edge_key(key: &str, path: &str) -> Step<(usize, usize)> {
    let bad = || Failure::new("schema", format!("edge key {key:?} is not of the form \"u,v\""), Some(path.to_string()));
    let (u, v) = key.split_once(',').ok_or_else(bad)?;
    Ok((u.trim().parse().map_err(|_| bad())?, v.trim().parse().map_err(|_| bad())?))
}

fn monodromy(m: &BTreeMap<String, String>, path: &str) -> Step<Vec<((usize, usize), LaurentPoly)>> {
    m.iter()
        .map(|(k, v)| {
            let p = at(path, k);
            Ok((edge_key(k, &p)?, laurent(v, &p)?))
        })
        .collect()
}

fn homology(c: &HomologyCase) -> Step<Outcome> {
    let tc = core(TwistedComplex::new(
        c.simplices.clone(),
        monodromy(&c.monodromy, "payload.monodromy")?,
        module(&c.stalk, "payload.stalk")?,
    ))?;
    let h: Vec<Value> = core(twisted_homology(&tc))?.iter().map(module_lit).collect();
    Ok(Outcome::pass(json!({ "homology": h })))
}

fn e2(c: &E2Case) -> Step<Outcome> {
    let base = monodromy(&c.monodromy, "payload.monodromy")?;
    if let Some(lm) = &c.link_monodromy {
        if lm.len() != c.link.len() {
            return Err(Failure::new(
                "schema",
                format!("{} monodromy maps for {} link degrees", lm.len(), c.link.len()),
                Some("payload.link_monodromy".into()),
            ));
        }
    }
    let mut family = Vec::with_capacity(c.link.len());
    for (q, lit) in c.link.iter().enumerate() {
        let rho = match &c.link_monodromy {
            Some(lm) => monodromy(&lm[q], &idx("payload.link_monodromy", q))?,
            None => base.clone(),
        };
        family.push(core(TwistedComplex::new(c.simplices.clone(), rho, module(lit, &idx("payload.link", q))?))?);
    }
    let page = match &c.cone {
        Some(cone) => {
            let p = perversity(&cone.perversity, cone.codim, "payload.cone.perversity")?;
            core(e2_cone_page(&family, cone.codim, &p))?
        }
        None => core(e2_link_page(&family))?,
    };
    let mut entries = Vec::new();
    let mut top = None;
    for ((p, q), m) in page.modules() {
        entries.push(json!({
            "p": p,
            "q": q,
            "module": module_lit(m),
            "order": core(page.polynomial(p, q))?.to_string(),
        }));
        top = top.max(Some(p + q));
    }
    let abutment = match top {
        Some(t) => (0..=t)
            .map(|j| Ok(json!({ "degree": j, "bound": core(abutment_divisor_bound(&page, j))?.to_string() })))
            .collect::<Step<Vec<_>>>()?,
        None => Vec::new(),
    };
    Ok(Outcome::pass(json!({ "entries": entries, "abutment": abutment })))
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Error => "error",
    }
}

fn mismatch(item: &VerifyItem, report: &Report) -> Option<String> {
    let expect = item.expect.as_ref();
    let want = expect.and_then(|e| e.status.as_deref()).unwrap_or("pass");
    let got = status_name(report.status);
    if want != got {
        let why = report.error.as_ref().map(|f| format!(" ({})", f.code)).unwrap_or_default();
        return Some(format!("status {got}{why}, expected {want}"));
    }
    let values = expect.and_then(|e| e.values.as_ref())?;
    values.iter().find_map(|(k, v)| {
        let actual = report.values.get(k).unwrap_or(&Value::Null);
        (actual != v).then(|| format!("{k}: got {actual}, expected {v}"))
    })
}

fn verify(c: &VerifyCase, opts: &Options) -> Step<Outcome> {
    let mut rows = Vec::with_capacity(c.cases.len());
    let mut failures = Vec::new();
    let mut names = BTreeSet::new();
    for (i, item) in c.cases.iter().enumerate() {
        let name = if item.name.is_empty() { format!("case-{i}") } else { item.name.clone() };
        if !names.insert(name.clone()) {
            return Err(Failure::new(
                "schema",
                format!("duplicate case name {name:?}"),
                Some(at(&idx("payload.cases", i), "name")),
            ));
        }
        let report = run(&item.case, opts);
        let miss = mismatch(item, &report);
        let verdict = if miss.is_none() { "pass" } else { "fail" };
        if let Some(m) = &miss {
            failures.push(json!({ "name": name, "detail": m }));
        }
        rows.push(json!({ "name": name, "kind": report.kind, "status": verdict }));
    }
    let values = json!({ "cases": rows, "total": c.cases.len(), "passed": c.cases.len() - failures.len() });
    Ok(if failures.is_empty() { Outcome::pass(values) } else { Outcome::fail(values, Value::Array(failures)) })
}
