use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("precision error: {0}")]
    Precision(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("degenerate composition: {0}")]
    DegenerateComposition(String),
    #[error("singular curve: {0}")]
    SingularCurve(String),
    #[error("not a Belyi map: {0}")]
    NotBelyi(String),
    #[error("wrong genus: expected {expected}, found {found}")]
    WrongGenus { expected: i64, found: i64 },
    #[error("degenerate cover: {0}")]
    DegenerateCover(String),
    #[error("curve mismatch: {0}")]
    CurveMismatch(String),
    #[error("invalid hypergeometric parameters: {0}")]
    InvalidParams(String),
    #[error("argument outside the working disc: {0}")]
    OutOfDomain(String),
    #[error("sample rejected: {0}")]
    SampleRejected(String),
    #[error("schema error in {location}: {message}")]
    Schema { location: String, message: String },
    #[error("missing dependency: {0}")]
    MissingDependency(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
