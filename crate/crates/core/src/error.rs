use thiserror::Error;

use crate::diagram::Edge;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {0}: left peg must be strictly smaller than right peg")]
    PegOrderViolation(Edge),
    #[error("edge {0}: pegs and heights are 1-based")]
    ZeroIndex(Edge),
    #[error("edge {edge} references peg beyond the declared peg count {n}")]
    PegOutOfRange { edge: Edge, n: u32 },
    #[error("peg {peg}, height {height} is occupied by more than one endpoint")]
    DuplicateSlot { peg: u32, height: u32 },
    #[error("peg {peg}: heights {heights:?} are not a permutation of 1..={expected}")]
    HeightNotPermutation {
        peg: u32,
        heights: Vec<u32>,
        expected: u32,
    },
    #[error("edge {0} is not part of the diagram")]
    EdgeNotInDiagram(Edge),
    #[error("peg {peg}: expected a permutation of length {expected}, got length {found}")]
    ArityMismatch {
        peg: u32,
        expected: usize,
        found: usize,
    },
    #[error("peg {peg}: {values:?} is not a permutation")]
    NotAPermutation { peg: u32, values: Vec<u32> },
    #[error("web world has {size} diagrams, above the limit of {limit}")]
    WorldTooLarge { size: String, limit: usize },
    #[error("colouring has length {found}, diagram has {expected} edges")]
    LengthMismatch { expected: usize, found: usize },
    #[error("colouring {assignment:?} does not use every colour in 1..={colours}")]
    NotSurjective { assignment: Vec<u32>, colours: u32 },
    #[error("no surjective colourings of {edges} edges with {colours} colours")]
    BadRange { edges: usize, colours: usize },
    #[error("diagrams do not belong to the same web world")]
    DifferentWorlds,
    #[error("decomposition has repeated indecomposable blocks")]
    RepeatedBlocks,
    #[error("web graph edge {pair:?} has label {label}, expected 1")]
    LabelNotOne { pair: (u32, u32), label: u32 },
    #[error("matrix is not strictly upper triangular")]
    NotStrictlyUpperTriangular,
    #[error("matrix is not square or has inconsistent rows")]
    MalformedMatrix,
    #[error("enumeration bounds too large: {0}")]
    BoundsTooLarge(String),
    #[error("series truncated at order {order} in variable {variable}, coefficient of degree {requested} requested")]
    SeriesTruncationTooSmall {
        variable: usize,
        order: usize,
        requested: usize,
    },
    #[error("peg {0} is isolated")]
    IsolatedPeg(u32),
    #[error("represent matrix is not transitive")]
    NotTransitive,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid sign code: {0}")]
    InvalidSignCode(String),
    #[error("invalid input: {0}")]
    Input(String),
}

impl Error {
    /// Whether the error comes from a configurable size guard rather than bad input.
    pub fn is_guard(&self) -> bool {
        matches!(
            self,
            Error::WorldTooLarge { .. }
                | Error::BoundsTooLarge(_)
                | Error::SeriesTruncationTooSmall { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
