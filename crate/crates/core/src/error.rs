use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("polygon is not Fano: {0}")]
    NotFano(String),
    #[error("rays {0:?} and {1:?} are linearly dependent")]
    DependentRays((i64, i64), (i64, i64)),
    #[error("origin is not in the strict interior of the polygon")]
    OriginNotInterior,
    #[error("divisor is not nef: {0}")]
    NotNef(String),
    #[error("invalid scaffolding: {0}")]
    InvalidScaffolding(String),
    #[error("no nef divisor on the shape has this polygon as its polyhedron of sections")]
    NoSuchDivisor,
    #[error("anti-canonical degree is not positive for k={k}, l={l}")]
    DegreeNonPositive { k: i64, l: i64 },
    #[error("a degree equals a weight (linear cone): {0}")]
    LinearCone(String),
    #[error("intersection form is not negative definite on the orthogonal of omega for k={k}, l={l}")]
    DegenerateLattice { k: i64, l: i64 },
    #[error("unrecognized Dynkin diagram: {0}")]
    UnrecognizedDiagram(String),
    #[error("internal mismatch: {0}")]
    InternalMismatch(String),
    #[error("invalid mutation: {0}")]
    InvalidMove(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("unknown family id {0:?}")]
    UnknownId(String),
    #[error("parse error: {0}")]
    Parse(String),
}
