use std::fmt;

use thiserror::Error;

/// Category of a rejected program, dataset or query text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    Arity,
    Safety,
    EmptyInterval,
}

impl ParseErrorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ParseErrorKind::Syntax => "syntax",
            ParseErrorKind::Arity => "arity",
            ParseErrorKind::Safety => "safety",
            ParseErrorKind::EmptyInterval => "empty_interval",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub message: String,
    pub line: usize,
    pub column: usize,
}

impl ParseError {
    pub fn new(kind: ParseErrorKind, message: impl Into<String>, line: usize, column: usize) -> Self {
        ParseError {
            kind,
            message: message.into(),
            line,
            column,
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} error at {}:{}: {}",
            self.kind.as_str(),
            self.line,
            self.column,
            self.message
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("materialization diverged: {0}")]
    Divergence(String),
    #[error("dataset contains an unbounded interval")]
    UnboundedDataset,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("reference window too small: {0}")]
    WindowTooSmall(String),
    #[error("dataset is not in normal form")]
    NotNormalForm,
    #[error("enumeration cap of {cap} exceeded")]
    CapExceeded { cap: usize },
    #[error("input is inconsistent: {0}")]
    InconsistentInput(String),
    #[error("no repairs exist: the program is inconsistent with the empty dataset")]
    NoRepairs,
}

impl Error {
    /// Stable machine-readable name of the error category.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse(p) => p.kind.as_str(),
            Error::Divergence(_) => "divergence",
            Error::UnboundedDataset => "unbounded_dataset",
            Error::Unsupported(_) => "unsupported",
            Error::WindowTooSmall(_) => "window_too_small",
            Error::NotNormalForm => "not_normal_form",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::InconsistentInput(_) => "inconsistent_input",
            Error::NoRepairs => "no_repairs",
        }
    }

    /// Source location for parse errors.
    pub fn location(&self) -> Option<(usize, usize)> {
        match self {
            Error::Parse(p) => Some((p.line, p.column)),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
