use thiserror::Error;

/// Errors produced while reading, encoding or evaluating skeleton sequences.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum JtmError {
    /// The header or overall structure of an input could not be understood.
    #[error("format error on line {line}: {msg}")]
    Format { line: usize, msg: String },

    /// A token that should have been a number was not.
    #[error("parse error on line {line}: invalid number {token:?}")]
    Parse { line: usize, token: String },

    /// The input was well-formed but violates a data invariant.
    #[error("validation error on line {line}: {msg}")]
    Validation { line: usize, msg: String },

    #[error("frame {frame}: {msg}")]
    Frame { frame: usize, msg: String },

    #[error("sequence too short: {frames} frame(s), at least 2 required")]
    TooShort { frames: usize },

    #[error("invalid skeleton layout: {0}")]
    Layout(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("split error: {0}")]
    Split(String),

    #[error("classifier error: {0}")]
    Classifier(String),
}

pub type Result<T> = std::result::Result<T, JtmError>;
