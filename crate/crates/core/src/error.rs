use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("event set is empty")]
    EmptyEventSet,
    #[error("event label at position {0} is empty")]
    EmptyLabel(usize),
    #[error("duplicate event label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown event label `{0}`")]
    UnknownLabel(String),
    #[error("event index {index} out of range for {len} events")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("coordinate vector {index} has dimension {found}, expected {expected} (at least 2)")]
    CoordDimension {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("relation has {found} rows but the event set has {expected} events")]
    RelationSize { expected: usize, found: usize },
    #[error("malformed generator spec: {0}")]
    Generator(String),
    #[error("malformed document: {0}")]
    Format(String),
    #[error("invalid rational `{0}`")]
    ParseRational(String),
    #[error("negative weight {weight} at `{label}`")]
    NegativeWeight { label: String, weight: String },
    #[error("weights sum to {0}, expected exactly 1")]
    NotNormalized(String),
    #[error("objects live on different event sets")]
    MismatchedSpaces,
    #[error("mixing parameter {0} outside the allowed range")]
    LambdaOutOfRange(String),
    #[error("coupling marginal mismatch: {0}")]
    MarginalMismatch(String),
    #[error("K+ is not antisymmetric: both (`{0}`, `{1}`) and (`{1}`, `{0}`) lie in K+")]
    NotStablyCausal(String, String),
    #[error("{n} events exceeds the enumeration bound {bound}")]
    TooManyEvents { n: usize, bound: usize },
    #[error("measure is not admissible: `{0}` has zero weight")]
    NotAdmissible(String),
    #[error("subset is not a past set: `{0}` lies in K-(Y) but not in Y")]
    NotPastSet(String),
    #[error("values are not a time function: ({0}, {1}) in K+ but T({0}) >= T({1})")]
    NotTimeFunction(String, String),
    #[error("trial construction failed: {0}")]
    TrialConstruction(String),
    #[error("unknown suite `{0}`; expected a comma-separated list of prop2-closedness, prop2-transitivity, thm3-chain, thm4-oracle, lemma6, minguzzi, remark8 or `all`")]
    UnknownSuite(String),
    #[error("invalid JSON input: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
