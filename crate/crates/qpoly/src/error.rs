//! Error types shared by the whole crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when building graphs, partitions and
/// polynomials or when running one of the counting algorithms.
///
/// [`Error::ResourceCap`] is kept separate from the input errors so callers
/// (the CLI in particular) can distinguish "bad input" from "input too large
/// for an exponential algorithm".
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed graph6 input.
    #[error("graph6 parse error at byte {byte}: {message}")]
    Graph6 { byte: usize, message: String },

    /// Malformed edge-list input.
    #[error("edge list parse error at line {line}: {message}")]
    EdgeList { line: usize, message: String },

    /// A vertex argument does not belong to the graph.
    #[error("unknown vertex: {0}")]
    UnknownVertex(String),

    /// An edge argument does not belong to the graph.
    #[error("unknown edge: ({0}, {1})")]
    UnknownEdge(String, String),

    /// An edge set argument violated a structural precondition.
    #[error("{0}")]
    BadEdgeSet(String),

    /// A vertex set argument violated a structural precondition.
    #[error("{0}")]
    BadVertexSet(String),

    /// Two partitions over different ground sets were combined.
    #[error("ground set mismatch: {0}")]
    GroundMismatch(String),

    /// Size constraints of a graph family were violated.
    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),

    /// The requested family has no formula of the requested kind.
    #[error("no closed form in source for {0}")]
    UnsupportedFamily(String),

    /// A polynomial handed to the invariant extractor is not a partition
    /// polynomial of any graph.
    #[error("malformed polynomial input: {0}")]
    MalformedPolynomial(String),

    /// An exponential-cost operation was asked to exceed its cap.
    #[error("resource cap exceeded: {what} requires {requested}, cap is {cap}")]
    ResourceCap {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    /// Two T-tables over different interface sets were combined.
    #[error("interface mismatch: {0}")]
    InterfaceMismatch(String),

    /// No proper splitting exists for the requested separator.
    #[error("invalid splitting: {0}")]
    BadSplit(String),
}

impl Error {
    /// True for the cap aborts, false for every input-shaped error.
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, Error::ResourceCap { .. })
    }
}
