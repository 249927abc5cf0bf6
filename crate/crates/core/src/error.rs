use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cycle length must be at least 3, got {0}")]
    CycleTooShort(usize),

    #[error("threshold must be at least {min}, got {k}")]
    InvalidThreshold { k: usize, min: usize },

    #[error("block size must be at least {min}, got {p}")]
    BlockSizeTooSmall { p: usize, min: usize },

    #[error("vertex {vertex} out of range for a graph with {num_vertices} vertices")]
    VertexOutOfRange { vertex: usize, num_vertices: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("malformed role label {0:?}")]
    InvalidRole(String),

    #[error("{0} is k-inconvertible; only the full vertex set converts")]
    Inconvertible(String),

    #[error("block pattern has length {found}, expected {expected}")]
    PatternLength { expected: usize, found: usize },

    #[error("invalid block label {0:?}")]
    InvalidLabel(char),

    #[error("label {label} at block {block} needs {needed} block vertices but p = {p}")]
    LabelNeedsLargerBlock {
        label: char,
        block: usize,
        needed: usize,
        p: usize,
    },

    #[error("block {block} holds {seeds} seeds and cannot be labelled")]
    UnrepresentableBlock { block: usize, seeds: usize },

    #[error("{0}")]
    Unsupported(String),

    #[error("seed size {size} exceeds the {num_vertices} vertices of the graph")]
    SizeTooLarge { size: usize, num_vertices: usize },

    #[error("enumeration needs {required} simulations, over the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("no conversion set of size at most {0}")]
    SizeLimitReached(usize),

    #[error("invalid input: {0}")]
    Parse(String),
}
