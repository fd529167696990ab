use thiserror::Error;

use crate::report::Report;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("missing block: {0}")]
    MissingBlock(String),
    #[error("instance dimension {dim} exceeds HOMHOPF_MAX_DIM={max}")]
    TooLarge { dim: usize, max: usize },
    #[error("{what} is not invertible")]
    NotInvertible { what: String },
    #[error("structure fails its axioms: {}", .0.first_failure().unwrap_or("?"))]
    InvalidStructure(Box<Report>),
    #[error("not a bialgebra automorphism: {identity} fails")]
    NotAutomorphism { identity: String },
    #[error("antipode is not bijective")]
    AntipodeNotBijective,
    #[error("centrality condition violated at ({g}, {h})")]
    CentralityViolated { g: String, h: String },
    #[error("φ is not H-colinear")]
    NotColinear,
    #[error("map does not intertwine the automorphisms")]
    NotIntertwining,
    #[error("structure does not descend to the balanced tensor product; relation {relation}")]
    StructureDoesNotDescend { relation: String },
    #[error("parameter {name} is not coinvariant")]
    ParametersNotCoinvariant { name: String },
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error("total integral existence and the splitting of the coaction disagree")]
    EquivalenceViolated,
    #[error("no total quantum integral is available")]
    NoQuantumIntegral,
}
