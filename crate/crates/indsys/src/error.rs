use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The work set must contain at least two elements.
    #[error("work set must have more than one element, got {n}")]
    TooFewElements { n: usize },

    /// Weight vector length disagrees with the element count.
    #[error("expected {expected} weights, got {got}")]
    WeightCountMismatch { expected: usize, got: usize },

    /// The feasibility region may not be empty; in particular the empty
    /// subset must be feasible.
    #[error("feasibility region is empty (the empty subset is infeasible)")]
    EmptyFeasibleRegion,

    /// An element identifier fell outside `[0, n)`.
    #[error("element {element} out of range for work set of size {n}")]
    ElementOutOfRange { element: usize, n: usize },

    /// A solution listed the same element twice.
    #[error("duplicate element {element} in solution")]
    DuplicateElement { element: usize },

    /// Extension queried for an element already in the solution.
    #[error("element {element} is already in the solution")]
    ElementAlreadyPresent { element: usize },

    /// An operation defined only on feasible solutions was handed an
    /// infeasible one.
    #[error("solution {0:?} is infeasible")]
    InfeasibleSolution(Vec<usize>),

    /// The maximal-set representation was not an antichain.
    #[error("maximal sets must form an antichain: set {contained:?} is contained in {container:?}")]
    NotAntichain {
        contained: Vec<usize>,
        container: Vec<usize>,
    },

    /// An exhaustive scan was requested beyond its size guard.
    #[error("{what} requires n <= {guard}, got n = {n}")]
    SizeGuard {
        what: &'static str,
        guard: usize,
        n: usize,
    },

    /// A breadth-first layer outgrew the in-memory bound.
    #[error("frontier layer {layer} exceeded the memory guard of {guard} solutions")]
    FrontierMemory { layer: usize, guard: usize },

    /// The digraph contains a directed cycle (listed in traversal order).
    #[error("digraph is not acyclic: cycle {0:?}")]
    CyclicDigraph(Vec<usize>),

    /// A vertex identifier fell outside the graph.
    #[error("vertex {vertex} out of range for {vertices} vertices")]
    VertexOutOfRange { vertex: usize, vertices: usize },

    /// An arc or edge joined a vertex to itself.
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    /// The same arc or edge was listed twice.
    #[error("duplicate arc or edge ({0}, {1})")]
    DuplicateArc(usize, usize),

    /// A chain partition handed to a transformation search was malformed.
    #[error("invalid chain partition: {0}")]
    InvalidChainPartition(String),

    /// A derived system had too few elements to form an instance.
    #[error("degenerate system: {0}")]
    DegenerateSystem(String),

    /// An unknown generator family name was requested.
    #[error("unknown instance family {0:?}")]
    UnknownFamily(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
