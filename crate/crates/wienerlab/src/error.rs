//! Error type shared across the crate.

use std::fmt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by tree validation, parsing, and the domain operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A tree must have at least one vertex.
    EmptyTree,
    /// Order exceeds the supported range for 64-bit Wiener values.
    OrderTooLarge { n: usize, max: usize },
    /// Edge count differs from n-1.
    EdgeCountMismatch { n: usize, edges: usize },
    /// An edge endpoint is outside 0..n.
    VertexOutOfRange { vertex: usize, n: usize },
    /// An edge joins a vertex to itself.
    SelfLoop { vertex: usize },
    /// The same unordered pair appears twice in the edge list.
    DuplicateEdge { u: usize, v: usize },
    /// Correct edge count but the edges contain a cycle (equivalently, the
    /// graph is disconnected).
    CycleOrDisconnected,
    /// Malformed tree text input.
    Parse { line: usize, reason: String },
    /// Operation asked about a vertex that does not satisfy its role.
    NotALeaf { vertex: usize },
    /// Leaf relocation needs two distinct leaves.
    LeavesNotDistinct { vertex: usize },
    /// Operation requires a larger tree.
    TooSmall { n: usize, min: usize },
    /// A relocation context no longer matches the tree it is applied to.
    StaleContext { reason: String },
    /// Broom parameters violate the family invariants.
    InvalidBroomSpec { reason: String },
    /// No member of the requested broom family exists for (n, d).
    EmptyBroomFamily { kind: &'static str, n: usize, d: usize },
    /// No tree of the requested order and diameter exists.
    EmptyClass { n: usize, d: usize },
    /// Enumeration order exceeds the configured ceiling.
    AboveCeiling { n: usize, ceiling: usize },
    /// A bound is only defined under the paper-scale hypothesis n >= 1636.
    BelowHypothesis { n: usize, min: usize },
    /// Unknown lemma identifier passed to the verification harness.
    UnknownLemma { id: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyTree => write!(f, "tree must have at least one vertex"),
            Error::OrderTooLarge { n, max } => {
                write!(f, "order {n} exceeds the supported maximum {max}")
            }
            Error::EdgeCountMismatch { n, edges } => {
                write!(f, "a tree on {n} vertices needs {} edges, got {edges}", n - 1)
            }
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for order {n}")
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            Error::CycleOrDisconnected => {
                write!(f, "edges contain a cycle (graph is not a connected tree)")
            }
            Error::Parse { line, reason } => write!(f, "parse error on line {line}: {reason}"),
            Error::NotALeaf { vertex } => write!(f, "vertex {vertex} is not a leaf"),
            Error::LeavesNotDistinct { vertex } => {
                write!(f, "need two distinct leaves, got {vertex} twice")
            }
            Error::TooSmall { n, min } => {
                write!(f, "operation needs order >= {min}, tree has {n}")
            }
            Error::StaleContext { reason } => {
                write!(f, "context does not match this tree: {reason}")
            }
            Error::InvalidBroomSpec { reason } => write!(f, "invalid broom parameters: {reason}"),
            Error::EmptyBroomFamily { kind, n, d } => {
                write!(f, "no {kind} broom exists for n={n}, d={d}")
            }
            Error::EmptyClass { n, d } => {
                write!(f, "no tree of order {n} has diameter {d}")
            }
            Error::AboveCeiling { n, ceiling } => {
                write!(f, "order {n} is above the enumeration ceiling {ceiling}")
            }
            Error::BelowHypothesis { n, min } => {
                write!(f, "bound requires n >= {min}, got {n}")
            }
            Error::UnknownLemma { id } => write!(f, "unknown lemma id {id:?}"),
        }
    }
}

impl std::error::Error for Error {}
