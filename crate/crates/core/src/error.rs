use thiserror::Error;

use crate::instance::{Edge, NodeId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by the model, the reductions and the solvers.
///
/// Variants are grouped by how a caller is expected to react: malformed
/// input, violated preconditions (the input is well-formed but outside the
/// family an algorithm accepts) and arithmetic failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in cost arithmetic")]
    Overflow,

    #[error("labeling has {got} entries but the instance has {expected} nodes")]
    LabelingLength { expected: usize, got: usize },

    #[error("label {label} of node {node} is out of range (node has {count} labels)")]
    LabelOutOfRange { node: NodeId, label: usize, count: usize },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("instance contains +INF entries, which this operation does not accept")]
    InfiniteEntry,

    #[error("polynomial degree {0} exceeds the supported maximum")]
    DegreeTooHigh(usize),

    #[error("assignment does not cover variable {0}")]
    MissingVariable(usize),

    #[error("invalid clause: {0}")]
    InvalidClause(String),

    #[error("invalid formula: {0}")]
    InvalidFormula(String),

    #[error("expected a binary (2-label) instance, node {0} has {1} labels")]
    NotBinary(NodeId, usize),

    #[error("expected {expected} labels on every node, node {node} has {got}")]
    LabelCountMismatch { node: NodeId, expected: usize, got: usize },

    #[error("instance is not submodular on edge {0}")]
    NotSubmodular(Edge),

    #[error("instance is not metric on edge {0}")]
    NotMetric(Edge),

    #[error("graph contains a cycle through edge {0}")]
    Cycle(Edge),

    #[error("{configurations} configurations exceed the brute-force bound of {limit}")]
    BruteForceLimit { configurations: u128, limit: u64 },

    #[error("elimination table of {size} entries exceeds the bound of {limit}")]
    WidthExceeded { size: u128, limit: u64 },

    #[error("invalid elimination order: {0}")]
    InvalidOrder(String),

    #[error("drawing does not cover node {0}")]
    MissingCoordinate(NodeId),

    #[error("degenerate segment: both endpoints coincide")]
    DegenerateSegment,

    #[error("collinear overlapping segments violate general position")]
    CollinearOverlap,

    #[error("drawing is not in general position: {0}")]
    GeneralPosition(String),

    #[error("point lies on a drawn element: {0}")]
    PointOnElement(String),

    #[error("drawing is empty")]
    EmptyDrawing,

    #[error("edge {0:?} is not a crossing of the current drawing")]
    NotACrossing((Edge, Edge)),

    #[error("crossing replacement failed: {0}")]
    Placement(String),

    #[error("planarization did not terminate within {0} iterations")]
    IterationBound(usize),

    #[error("trace does not match this reduction: {0}")]
    TraceMismatch(String),

    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("oracle failure: {0}")]
    Oracle(String),
}

impl Error {
    /// True for errors that mean "the input is valid but outside what the
    /// operation accepts", as opposed to malformed data.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::InfiniteEntry
                | Error::DegreeTooHigh(_)
                | Error::NotBinary(..)
                | Error::LabelCountMismatch { .. }
                | Error::NotSubmodular(_)
                | Error::NotMetric(_)
                | Error::Cycle(_)
                | Error::BruteForceLimit { .. }
                | Error::WidthExceeded { .. }
                | Error::CollinearOverlap
                | Error::GeneralPosition(_)
                | Error::PointOnElement(_)
                | Error::EmptyDrawing
                | Error::NotACrossing(_)
                | Error::Placement(_)
                | Error::IterationBound(_)
        )
    }
}
