use thiserror::Error;

/// Errors produced by word parsing and the algebraic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A token in the input does not match any known generator or macro form.
    #[error("unknown token `{0}`")]
    UnknownToken(String),
    /// A token's index lies outside the valid range for the ambient strand count.
    #[error("token `{token}` out of range at rank {rank}")]
    IndexOutOfRange { token: String, rank: usize },
    /// Deletion generators admit no inverses, so their exponent must be positive.
    #[error("token `{token}`: deletion generators require a positive exponent")]
    EpsExponent { token: String },
    /// Two operands live at different ranks; mixing ranks is never implicit.
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    /// The operation is defined only for words without deletion letters.
    #[error("{op}: word contains a deletion letter")]
    EpsLetterPresent { op: &'static str },
    /// The operation requires a pure word (identity underlying permutation).
    #[error("{op}: word is not pure")]
    NotPure { op: &'static str },
    /// Exhaustive enumeration refused to run beyond its size guard.
    #[error("{what}: size {got} exceeds the supported bound {max}")]
    EnumerationGuard {
        what: &'static str,
        max: usize,
        got: usize,
    },
    /// Construction of a value violated its invariants.
    #[error("invalid {what}: {detail}")]
    Invalid { what: &'static str, detail: String },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
