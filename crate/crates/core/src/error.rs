use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("falling factorial pole: ({alpha})_{k}")]
    FallingFactorialPole { alpha: String, k: i64 },

    #[error("unsupported binomial: C({n}, {k})")]
    UnsupportedBinomial { n: i64, k: i64 },

    #[error("index {name}={value} outside {range}")]
    IndexOutOfRange {
        name: &'static str,
        value: i64,
        range: String,
    },

    #[error("index i-1 undefined for i=0")]
    IndexUndefined,

    #[error("not a constant multiple")]
    NotConstantMultiple,

    #[error("invalid linear form: {0}")]
    InvalidLinearForm(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid configuration: {0}")]
    Config(String),
}
