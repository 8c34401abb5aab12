use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity {0} outside the supported range 1..={max}", max = crate::pbf::MAX_ARITY)]
    ArityOutOfRange(usize),
    #[error("arity {n} exceeds the limit {limit} for this operation")]
    ArityTooLarge { n: usize, limit: usize },
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("mask {mask} does not fit in {arity} bits")]
    MaskOutOfRange { mask: u32, arity: usize },
    #[error("assignment {0} is listed in both ones and zeros")]
    Overlap(String),
    #[error("duplicate assignment {0}")]
    Duplicate(String),
    #[error("non-constant function required")]
    ConstantFunction,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("{0} is not in the xor-difference set")]
    NotASubset(String),
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("reduced support must be nonempty")]
    EmptySupport,
    #[error("reduced support must not contain the all-zeros input")]
    ZeroInSupport,
    #[error("function is not computable by an exact quantum 1-query algorithm")]
    NotFeasible,
    #[error("invalid representation: {0}")]
    InvalidForm(String),
    #[error("invalid weight profile: {0}")]
    InvalidProfile(String),
    #[error("invalid weight vector: {0}")]
    InvalidWitness(String),
    #[error("function has no zero inputs; projector undefined")]
    DegenerateSpan,
    #[error("parse error: {0}")]
    Parse(String),
}
