use thiserror::Error;

use crate::corpus::ParseError;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown node `{0}`")]
    UnknownNode(String),
    #[error("`{0}` is not an axiom")]
    NotAxiom(String),
    #[error("`{0}` is not a theorem")]
    NotTheorem(String),
    #[error("foliation has no layer for node `{0}`")]
    MissingLayer(String),
    #[error("slice {slice} out of range (foliation has {slices} slices)")]
    SliceOutOfRange { slice: usize, slices: usize },
    #[error("window dt={dt} must satisfy 1 <= dt <= slice ({slice})")]
    BadWindow { slice: usize, dt: usize },
    #[error("growth curve needs at least 3 positive counts, got {0}")]
    CurveTooShort(usize),
    #[error("growth curve count at radius {0} is not positive")]
    NonPositiveCount(usize),
    #[error("count overflowed the chosen integer type at node `{0}`")]
    Overflow(String),
    #[error("i/o: {0}")]
    Io(String),
    #[error("foliation csv: {0}")]
    Csv(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
