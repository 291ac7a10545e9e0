use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop at line {line}")]
    SelfLoop { line: usize },

    #[error("invalid token {token:?} at line {line}")]
    BadToken { line: usize, token: String },

    #[error("line {line}: expected two vertex ids")]
    MissingEndpoint { line: usize },

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("BFS needs at least one source vertex")]
    EmptySources,

    #[error("shortcut ({0}, {1}) is already an edge of the graph")]
    EdgeExists(usize, usize),

    #[error("shortcut ({0}, {1}) is listed twice")]
    DuplicateShortcut(usize, usize),

    #[error("edge ({0}, {0}) is a self-loop")]
    SelfEdge(usize),

    #[error("budget violation at vertex {vertex}: more than {delta} shortcuts")]
    BudgetViolation { vertex: usize, delta: usize },

    #[error("plan has {added} shortcuts but k = {k}")]
    TooManyShortcuts { added: usize, k: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("infeasible capacity: {0}")]
    InfeasibleCapacity(String),

    #[error("cannot wire tree node {child} under node {parent}: every cross pair is already an edge")]
    BlockedWiring { parent: usize, child: usize },

    #[error("segment family is empty")]
    EmptyFamily,

    #[error("color partition has an empty side")]
    EmptySide,

    #[error("oracle refused: about {estimate} candidate sets exceed the cap of {cap}")]
    OracleCapExceeded { estimate: u128, cap: u128 },

    #[error("invalid set cover instance: {0}")]
    InvalidInstance(String),

    #[error("input graph is not a path")]
    NotAPath,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
