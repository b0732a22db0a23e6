use thiserror::Error;

use crate::partitions::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid shape: need 0 < k < n, got k={k}, n={n}")]
    InvalidShape { k: usize, n: usize },

    #[error("partition {0} does not fit in the {rows}x{cols} rectangle", rows = .1, cols = .2)]
    PartitionDoesNotFit(Partition, usize, usize),

    #[error("subset has {got} elements, expected {expected}")]
    WrongCardinality { expected: usize, got: usize },

    #[error("subset element {0} out of range 1..={1}")]
    SubsetOutOfRange(usize, usize),

    #[error("malformed plabic graph: {0}")]
    MalformedGraph(String),

    #[error("illegal move: {0}")]
    IllegalMove(String),

    #[error("face labeling failed: {0}")]
    FaceLabeling(String),

    #[error("no move path from the rectangles graph is known for this graph")]
    NoMovePath,

    #[error("no acyclic perfect orientation with source set {0:?}")]
    NoAcyclicOrientation(Vec<usize>),

    #[error("inexact division")]
    InexactDivision,

    #[error("operation on the zero polynomial")]
    ZeroPolynomial,

    #[error("negative coefficient in a superpotential expression")]
    NegativeCoefficient,

    #[error("polytope is unbounded")]
    Unbounded,

    #[error("polytope is empty")]
    Empty,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("vanishing denominator minor for column set {0:?}")]
    VanishingMinor(Vec<usize>),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("parse error: {0}")]
    Parse(String),
}
