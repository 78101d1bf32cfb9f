use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 1")]
    ZeroRank,

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("rank {n} exceeds the supported maximum {max}")]
    RankTooLarge { n: usize, max: usize },

    #[error("{0:?} is not a permutation of 1..={1}")]
    NotAPermutation(Vec<usize>, usize),

    #[error("reflection index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),

    #[error("{0:?} is not a weakly decreasing sequence of nonnegative integers")]
    InvalidPartition(Vec<i64>),

    #[error("malformed triangular array: {0}")]
    MalformedTriangle(String),

    #[error("size guard: {what} has {count} elements, limit is {limit} (use force to override)")]
    SizeGuard {
        what: &'static str,
        count: u128,
        limit: u128,
    },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("expected a face of kind {expected}, got {found}")]
    WrongFaceKind {
        expected: &'static str,
        found: &'static str,
    },

    #[error("divided difference left a nonzero remainder")]
    DivisionRemainder,

    #[error("connected component with highest pair {0} straddles the Kostant-Kumar set")]
    StraddlingComponent(String),
}
