use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what} from {input:?} at position {position}: {message}")]
    Parse {
        what: &'static str,
        input: String,
        position: usize,
        message: String,
    },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("inner partition {inner} is not contained in outer partition {outer}")]
    NotContained { outer: String, inner: String },
    #[error("{mu} is not obtained from {lam} by removing one box")]
    NotAddable { lam: String, mu: String },
    #[error("skew shape {0} is not a broken border strip")]
    NotBrokenBorderStrip(String),
    #[error("evaluation point has {got} values, shape has {expected} boxes")]
    PointLength { expected: usize, got: usize },
    #[error("vanishing denominator: {0}")]
    Pole(String),
    #[error("invalid class: {0}")]
    InvalidClass(String),
    #[error("class function has no value on class {0}")]
    MissingClassValue(String),
    #[error("basis mismatch: expected {expected}, got {got}")]
    BasisMismatch {
        expected: &'static str,
        got: &'static str,
    },
    #[error("no regular evaluation point found after {0} attempts")]
    RetriesExhausted(usize),
}
