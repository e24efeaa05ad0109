use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown wavelet filter '{0}'")]
    UnknownFilter(String),

    #[error("cannot transform an empty signal")]
    EmptySignal,

    #[error("coefficient length mismatch: cA has {approx}, cD has {detail}, expected {expected}")]
    CoefficientLength {
        approx: usize,
        detail: usize,
        expected: usize,
    },

    #[error("invalid packet path '{0}': expected a non-empty string over {{A, D}}")]
    InvalidPath(String),

    #[error("packet level must be at least 1")]
    ZeroLevel,

    #[error("empty input")]
    EmptyInput,

    #[error("ragged input: row {row} has length {found}, expected {expected}")]
    Ragged {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("line {line}: expected {expected} components, found {found}")]
    InconsistentDimension {
        line: usize,
        expected: usize,
        found: usize,
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("compression spec needs at least one path")]
    NoPaths,

    #[error("duplicate packet path '{0}' in compression spec")]
    DuplicatePath(String),

    #[error("keep count {keep} out of range 1..={len}")]
    KeepOutOfRange { keep: usize, len: usize },

    #[error("coefficient count K={0} unsupported; only 1 and 2 are defined")]
    UnsupportedK(usize),

    #[error("sentence has no known words")]
    EmptySentence,

    #[error("vector lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("cosine undefined for a zero vector")]
    ZeroVector,

    #[error("correlation undefined: {0}")]
    Degenerate(&'static str),

    #[error("need at least {needed} evaluable items, found {found}")]
    TooFew { needed: usize, found: usize },

    #[error("word '{0}' not in vocabulary")]
    OutOfVocabulary(String),

    #[error("{path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },

    #[error(transparent)]
    Io(#[from] io::Error),
}
