use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("parameter is not a unit: {0}")]
    NonUnitParameter(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("algebra not strongly separable")]
    NotSeparable,
    #[error("boundary mismatch: expected {expected}, found {found}")]
    BoundaryMismatch { expected: usize, found: usize },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("arc mismatch: {0}")]
    ArcMismatch(String),
    #[error("walk does not return to the origin or does not start with 0")]
    NonReturningWalk,
    #[error("boundary sequence is not realizable by a planar matching")]
    UnrealizableSequence,
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("pairing singular: algebra not strongly separable")]
    SingularPairing,
    #[error("component of type beta (unorientable, chi + boundary odd)")]
    TypeBetaComponent,
    #[error("invalid surface component: {0}")]
    InvalidSurface(String),
    #[error("slot mismatch: expected {expected} slots, found {found}")]
    SlotMismatch { expected: usize, found: usize },
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
    #[error("odd number of intersection points: {0}")]
    OddProduct(usize),
    #[error("evaluation of the empty skein is not a unit")]
    NonUnitEvaluation,
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
