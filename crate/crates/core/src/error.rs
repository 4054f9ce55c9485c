use thiserror::Error;

/// Errors raised by the algebra, engine and bound routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("degree {degree} exceeds the factorization cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("module has free rank {free_rank}; a torsion module is required")]
    NotTorsion { free_rank: usize },
    #[error("{poly} is not an irreducible polynomial")]
    NotPrime { poly: String },
    #[error("sequence is not exact-compatible at position {position}: {reason}")]
    NotExactCompatible { position: usize, reason: String },
    #[error("missing splitting polynomial at junction {index}")]
    MissingSplitting { index: usize },
    #[error("splitting at junction {index} does not divide its neighbour")]
    NonDividingSplitting { index: usize },
    #[error("invalid sequence pattern: {0}")]
    InvalidPattern(String),
    #[error("invalid perversity: {0}")]
    InvalidPerversity(String),
    #[error("perversity is not defined at codimension {codim} (defined on 2..={max})")]
    PerversityOutOfRange { codim: usize, max: usize },
    #[error("superperversities are not allowed here; compute them through duality")]
    SuperperversityNotAllowed,
    #[error("divisibility violated in degree {degree}: {detail}")]
    DivisibilityViolation { degree: usize, detail: String },
    #[error("inadmissible knot data in degree {degree}: {detail}")]
    Inadmissible { degree: usize, detail: String },
    #[error("degree {degree} is outside the admissible range {range}")]
    DegreeOutOfRange { degree: i64, range: String },
    #[error("ordinary link polynomials are missing for stratum {stratum}, component {component}")]
    MissingOrdinaryData { stratum: usize, component: usize },
    #[error("monodromy violates the cocycle condition on simplex {simplex:?}")]
    CocycleViolation { simplex: Vec<usize> },
    #[error("complex is empty")]
    EmptyComplex,
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("E2 entry ({p}, {q}) has free rank {free_rank}")]
    NotTorsionEntry { p: usize, q: usize, free_rank: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ZeroPolynomial => "zero-polynomial",
            Error::BothZero => "both-zero",
            Error::DegreeCapExceeded { .. } => "degree-cap-exceeded",
            Error::Parse { .. } => "parse",
            Error::NotTorsion { .. } => "not-torsion",
            Error::NotPrime { .. } => "not-prime",
            Error::NotExactCompatible { .. } => "not-exact-compatible",
            Error::MissingSplitting { .. } => "missing-splitting",
            Error::NonDividingSplitting { .. } => "non-dividing-splitting",
            Error::InvalidPattern(_) => "invalid-pattern",
            Error::InvalidPerversity(_) => "invalid-perversity",
            Error::PerversityOutOfRange { .. } => "perversity-out-of-range",
            Error::SuperperversityNotAllowed => "superperversity-not-allowed",
            Error::DivisibilityViolation { .. } => "divisibility-violation",
            Error::Inadmissible { .. } => "inadmissible",
            Error::DegreeOutOfRange { .. } => "degree-out-of-range",
            Error::MissingOrdinaryData { .. } => "missing-ordinary-data",
            Error::CocycleViolation { .. } => "cocycle-violation",
            Error::EmptyComplex => "empty-complex",
            Error::InvalidComplex(_) => "invalid-complex",
            Error::NotTorsionEntry { .. } => "not-torsion-entry",
            Error::DimensionMismatch(_) => "dimension-mismatch",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
