use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("address {prefix} is a prefix of {other}")]
    PrefixViolation { prefix: String, other: String },
    #[error("leaf set does not cover every infinite string")]
    IncompleteCode,
    #[error("index {index} out of range for {len} components")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("nucleus splitting exceeded depth cap {cap}")]
    ContractionCapExceeded { cap: usize },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("input of length {len} is shallower than the leaf that contains it")]
    InputTooShallow { len: usize },
    #[error("second vertex is not an expansion of the first")]
    NotAnExpansion,
    #[error("rank {rank} is below the minimum {min}")]
    RankTooSmall { rank: usize, min: usize },
    #[error("rank {rank} exceeds the enumeration limit {max}")]
    RankTooLarge { rank: usize, max: usize },
    #[error("rank gap {gap} exceeds the search cap {cap}")]
    RankGapTooLarge { gap: usize, cap: usize },
    #[error("complex has {count} simplices, over the cap {cap}")]
    SizeCapExceeded { count: usize, cap: usize },
    #[error("loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex set is not a clique")]
    NotAClique,
    #[error("integer overflow during Smith normal form")]
    Overflow,
    #[error("invalid permutation image list {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("`{0}` is not one of the six elementary sets")]
    IllegalSet(String),
    #[error("unknown strategy `{0}`")]
    UnknownStrategy(String),
}
