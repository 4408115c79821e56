use thiserror::Error;

/// Errors raised by the library. Every variant carries enough context to
/// produce a single-line diagnostic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid symbol {0:?}: sequences are written over '0' and '1'")]
    InvalidSymbol(char),

    #[error("sequence length {len} exceeds the supported maximum of {max}")]
    TooLong { len: usize, max: usize },

    #[error("index range [{l}:{k}] is invalid for a sequence of length {len}")]
    IndexOutOfRange { l: usize, k: usize, len: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("sequence of length {len} is too short (need at least {min})")]
    TooShort { len: usize, min: usize },

    #[error("n = {n} exceeds the enumeration cap of {cap}")]
    EnumerationCap { n: usize, cap: usize },

    #[error("arithmetic overflow while evaluating {0}")]
    Overflow(&'static str),

    #[error("parameter out of range: {0}")]
    Parameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("code has {size} codewords, need at least {min}")]
    CodeTooSmall { size: usize, min: usize },

    #[error("every coset of the family is empty")]
    AllCosetsEmpty,

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
