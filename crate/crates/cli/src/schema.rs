//! Case-file schema. Every polynomial is a string in the Laurent grammar.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Case {
    Factor(FactorCase),
    Snf(SnfCase),
    Seq(SeqCase),
    IaPoint(IaPointCase),
    IaProduct(IaProductCase),
    IaDual(IaDualCase),
    Bounds(BoundsCase),
    Homology(HomologyCase),
    E2(E2Case),
    Verify(VerifyCase),
}

impl Case {
    pub fn kind(&self) -> &'static str {
        match self {
            Case::Factor(_) => "factor",
            Case::Snf(_) => "snf",
            Case::Seq(_) => "seq",
            Case::IaPoint(_) => "ia-point",
            Case::IaProduct(_) => "ia-product",
            Case::IaDual(_) => "ia-dual",
            Case::Bounds(_) => "bounds",
            Case::Homology(_) => "homology",
            Case::E2(_) => "e2",
            Case::Verify(_) => "verify",
        }
    }
}

/// `{"free": n, "torsion": ["t - 1", ...]}`
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleLit {
    #[serde(default)]
    pub free: usize,
    #[serde(default)]
    pub torsion: Vec<String>,
}

/// A named perversity (`zero`, `top`, `lower-middle`, `upper-middle`) or
/// the values `p̄(2), p̄(3), …`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PerversityLit {
    Named(String),
    Values(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorCase {
    pub poly: String,
}

/// Rows are relations, columns generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SnfCase {
    pub matrix: Vec<Vec<String>>,
}

/// `null` marks an unknown entry or junction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeqCase {
    pub polys: Vec<Option<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub splittings: Option<Vec<Option<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IaPointCase {
    pub n: usize,
    pub perversity: PerversityLit,
    #[serde(default)]
    pub a: Vec<String>,
    #[serde(default)]
    pub b: Vec<String>,
    #[serde(default)]
    pub c: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IaProductCase {
    pub n: usize,
    pub k: usize,
    pub perversity: PerversityLit,
    pub sigma: Vec<ModuleLit>,
    pub link: Vec<ModuleLit>,
    pub lambda: Vec<String>,
    #[serde(default)]
    pub c: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a_high: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IaDualCase {
    pub n: usize,
    pub ia: Vec<String>,
    /// The input comes from a superperversity, so the dual is traditional.
    #[serde(default)]
    pub from_super: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentLit {
    #[serde(default)]
    pub xi: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zeta: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumLit {
    pub dim: usize,
    pub components: Vec<ComponentLit>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratificationLit {
    pub n: usize,
    pub strata: Vec<StratumLit>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct E2EntryLit {
    pub i: usize,
    pub p: usize,
    pub q: usize,
    pub e: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum BoundsCase {
    Allowed { i: usize, n: usize, k: usize, c: String, xi: Vec<String> },
    AllowedGeneral {
        j: usize,
        lambda: String,
        stratification: StratificationLit,
        #[serde(default)]
        use_ordinary: bool,
    },
    Exclude { gamma: String, k: usize, perversity: PerversityLit, lambda: String, xi: Vec<String> },
    ExcludeGeneral { gamma: String, perversity: PerversityLit, lambda: String, stratification: StratificationLit },
    Maxpower {
        gamma: String,
        j: usize,
        #[serde(default)]
        gamma_j: u32,
        n: usize,
        perversity: PerversityLit,
        table: Vec<E2EntryLit>,
    },
    Check {
        ia: String,
        allowed: Vec<String>,
        #[serde(default)]
        power_bounds: BTreeMap<String, u64>,
    },
}

impl BoundsCase {
    pub fn op(&self) -> &'static str {
        match self {
            BoundsCase::Allowed { .. } => "allowed",
            BoundsCase::AllowedGeneral { .. } => "allowed-general",
            BoundsCase::Exclude { .. } => "exclude",
            BoundsCase::ExcludeGeneral { .. } => "exclude-general",
            BoundsCase::Maxpower { .. } => "maxpower",
            BoundsCase::Check { .. } => "check",
        }
    }
}

/// Monodromy maps edge keys `"u,v"` to unit strings such as `"t"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomologyCase {
    pub simplices: Vec<Vec<usize>>,
    #[serde(default)]
    pub monodromy: BTreeMap<String, String>,
    #[serde(default = "free_stalk")]
    pub stalk: ModuleLit,
}

fn free_stalk() -> ModuleLit {
    ModuleLit { free: 1, torsion: Vec::new() }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeLit {
    pub codim: usize,
    pub perversity: PerversityLit,
}

/// `link[q]` is the stalk in degree `q`; `link_monodromy[q]`, when given,
/// replaces `monodromy` for that degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct E2Case {
    pub simplices: Vec<Vec<usize>>,
    #[serde(default)]
    pub monodromy: BTreeMap<String, String>,
    pub link: Vec<ModuleLit>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub link_monodromy: Option<Vec<BTreeMap<String, String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cone: Option<ConeLit>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyCase {
    pub cases: Vec<VerifyItem>,
}

/// `expect.status` defaults to `pass`; each key of `expect.values` must
/// match the report exactly.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyItem {
    #[serde(default)]
    pub name: String,
    pub case: Box<Case>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<Expectation>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectation {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<BTreeMap<String, Value>>,
}
