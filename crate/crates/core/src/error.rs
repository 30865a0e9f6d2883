use thiserror::Error;

/// Errors surfaced by construction, validation, and query operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}: {reason}")]
    InvalidRank {
        family: String,
        rank: usize,
        reason: String,
    },
    #[error("cannot parse Dynkin type from `{0}` (expected e.g. `A3`, `B4`, `F4`)")]
    BadDynkinLiteral(String),
    #[error("cannot parse `{input}`: {reason}")]
    BadLiteral { input: String, reason: String },
    #[error("simple-root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("root [{0}] does not belong to the root system")]
    RootNotInSystem(String),
    #[error("root [{0}] is not a positive root")]
    RootNotPositive(String),
    #[error("root string through [{0}] along [{1}] is undefined: the roots are proportional")]
    ProportionalRoots(String, String),
    #[error("root [{0}] lies in the parabolic subsystem spanned by Delta_P")]
    RootInParabolicSpan(String),
    #[error("root [{0}] is not cosmall; the Delta(alpha) criterion presupposes a cosmall root")]
    NotCosmall(String),
    #[error("mismatched contexts: {0}")]
    ContextMismatch(String),
    #[error("tables are only defined for the classical families A, B, C, D (got {0})")]
    NonClassicalTable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
