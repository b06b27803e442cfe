use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed PD code: {0}")]
    Parse(String),
    #[error("edge label {label} used {count} times")]
    EdgeMultiplicity { label: usize, count: usize },
    #[error("edge labels must be exactly 1..={expected}, found {found}")]
    EdgeLabels { expected: usize, found: usize },
    #[error("PD code mixes X and P records")]
    MixedRecords,
    #[error("traversal closes after {visited} of {expected} crossing passes (link or open strand)")]
    NotAKnot { visited: usize, expected: usize },
    #[error("under-strand of crossing {0} is not oriented consistently with the traversal")]
    Orientation(usize),
    #[error("map has {faces} faces, expected {expected} for a sphere")]
    NotPlanar { faces: usize, expected: usize },
    #[error("invalid gluing: {0}")]
    Gluing(String),
    #[error("operation needs over/under information but got a shadow")]
    ShadowInput,
    #[error("operation needs a nontrivial diagram")]
    Trivial,
    #[error("diagram is not alternating")]
    NotAlternating,
    #[error("shadow has a 1-gon")]
    HasMonogon,
    #[error("crossing {0} out of range")]
    NoSuchCrossing(usize),
    #[error("invalid Conway specification: {0}")]
    Conway(String),
    #[error("census bound {0} outside the supported range 1..=9")]
    CensusBound(usize),
    #[error("{0} crossings is too many for the bracket state sum")]
    TooManyCrossings(usize),
    #[error("knot table: {0}")]
    Table(String),
    #[error("unknown knot {0}")]
    UnknownKnot(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
