//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graphs on more than 64 vertices are not supported (requested {0})")]
    TooManyVertices(usize),

    #[error("loops are not supported here (vertex {0})")]
    LoopUnsupported(usize),

    #[error("({u}, {v}) is not an edge")]
    NotAnEdge { u: usize, v: usize },

    #[error("({u}, {v}) conflicts with an existing edge or arc")]
    ConflictingPair { u: usize, v: usize },

    #[error("partition does not cover the vertex set exactly: {0}")]
    InvalidPartition(String),

    #[error("partition is over {partition_n} vertices but the graph has {graph_n}")]
    PartitionSizeMismatch { partition_n: usize, graph_n: usize },

    #[error("graph6 parse error: {0}")]
    Graph6(#[from] Graph6Error),

    #[error("character is not invertible: it vanishes on the single vertex")]
    NonInvertible,

    #[error("polynomial is not divisible by X^{x_shift} Y^{y_shift}")]
    NotDivisible { x_shift: usize, y_shift: usize },

    #[error("substitution produced a negative exponent from the term X^{x} Y^{y}")]
    NegativeExponent { x: i64, y: i64 },

    #[error("edge count {edges} exceeds the partial-orientation cap of {cap}")]
    EdgeCapExceeded { edges: usize, cap: usize },

    #[error("element lies outside the augmentation ideal")]
    OutsideAugmentationIdeal,

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("{0}")]
    Unsupported(String),
}

/// Failure modes of the graph6 and digraph6 codecs. Decoding is strict:
/// every deviation from the format is rejected rather than repaired.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("malformed optional header")]
    BadHeader,

    #[error("input ends before the encoding is complete")]
    Truncated,

    #[error("byte {byte:#04x} at position {position} is outside the encoding alphabet")]
    InvalidByte { position: usize, byte: u8 },

    #[error("trailing bytes after the encoded graph")]
    TrailingData,

    #[error("padding bits past the matrix must be zero")]
    NonzeroPadding,

    #[error("digraph6 input encodes a loop, which this library does not support")]
    Loops,

    #[error("sparse6 input is not supported")]
    Sparse6,
}
