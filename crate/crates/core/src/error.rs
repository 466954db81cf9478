use std::path::PathBuf;

use crate::scanner::SemioticClass;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{value} is outside the supported range (must be below 10^15)")]
    OutOfRange { value: u64 },

    #[error("zero has no ordinal form")]
    ZeroOrdinal,

    #[error("expected a non-empty digit string, got {0:?}")]
    InvalidDigits(String),

    #[error("group sizes sum to {expected} but the digit string has {actual} digits")]
    GroupSizeMismatch { expected: usize, actual: usize },

    #[error("group size {0} is not one of 1, 2, 3 or 4")]
    InvalidGroupSize(usize),

    #[error("cannot read {0:?} as a Persian cardinal")]
    UnparseableWords(String),

    #[error("expected {expected} digits, got {actual}")]
    WrongLength { expected: usize, actual: usize },

    #[error("{year}/{month}/{day} is not a valid date")]
    InvalidDate { year: u32, month: u32, day: u32 },

    #[error("{0} is not a valid clock time")]
    InvalidTime(String),

    #[error("{0:?} is not a recognized telephone number")]
    UnclassifiedPhone(String),

    #[error("{raw:?} does not validate as {class}")]
    ValidationFailed { class: SemioticClass, raw: String },

    #[error("{class} cannot be verbalized as a grouped identifier")]
    NotGroupedClass { class: SemioticClass },

    #[error("no {class} entry for {token:?}")]
    UnknownSymbol { class: SemioticClass, token: String },

    #[error("template index {index} is out of range for {class} ({count} templates)")]
    TemplateIndex { class: SemioticClass, index: usize, count: usize },

    #[error("{file}:{line}: {message}")]
    Resource { file: String, line: usize, message: String },

    #[error("unknown pass {0:?}")]
    UnknownPass(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{count} verbalizations exceed the enumeration cap of {cap}")]
    EnumerationCap { count: u128, cap: u128 },

    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl Error {
    pub(crate) fn resource(file: &str, line: usize, message: impl Into<String>) -> Self {
        Error::Resource { file: file.to_owned(), line, message: message.into() }
    }
}
