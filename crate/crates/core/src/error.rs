use thiserror::Error;

use crate::graph::{Vertex, VertexType};

/// Errors raised while mutating or analysing a [`GameState`](crate::graph::GameState).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {0}-{1} has already been selected")]
    DuplicateEdge(Vertex, Vertex),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("red component containing {0} is big but has no capital")]
    MissingCapital(Vertex),
    #[error("red component containing {0} has more than one capital")]
    CapitalConflict(Vertex),
    #[error("capital {0} does not lie in a big red component")]
    StrayCapital(String),
    #[error("red host graph contains a cycle")]
    RedCycle,
    #[error("capital {0} was removed")]
    CapitalRemoved(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message}{}", line.map(|l| format!(" (line {l})")).unwrap_or_default())]
pub struct ParseError {
    pub message: String,
    pub line: Option<usize>,
}

impl ParseError {
    pub fn new(message: impl Into<String>) -> Self {
        ParseError { message: message.into(), line: None }
    }

    pub fn at(mut self, line: usize) -> Self {
        self.line.get_or_insert(line);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrategyError {
    #[error("no strategy rule covers the pair ({0}, {1})")]
    NoRule(VertexType, VertexType),
    #[error("capital directive `{directive}` is not executable: {reason}")]
    Directive { directive: String, reason: String },
    #[error("strategy is not total; uncovered pairs: {}", .0.iter().map(|(a, b)| format!("({a}, {b})")).collect::<Vec<_>>().join(" "))]
    NotTotal(Vec<(VertexType, VertexType)>),
    #[error("strategy has no rules")]
    Empty,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("red class {0} is not part of this game's table")]
    UnknownClass(String),
    #[error("table invariant violated: {0}")]
    Invariant(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PotentialError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Table(#[from] TableError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuilderError {
    #[error("vertices {0:?} do not form a blue path")]
    NotBluePath(Vec<Vertex>),
    #[error("the two blue paths share a vertex")]
    NotDisjoint,
    #[error("blue path has {len} vertices but must have more than {min}")]
    TooShort { len: usize, min: usize },
    #[error("edge {0}-{1} between the merge sides is already selected")]
    EdgeTaken(Vertex, Vertex),
    #[error("{0} does not embed in a complete bipartite graph")]
    NotBipartite(String),
    #[error("sub-builder stopped before forcing its target: {0}")]
    Subgame(String),
    #[error("builder has no further move")]
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArenaError {
    #[error("round budget must be at least 1")]
    ZeroBudget,
    #[error("blue graph has {vertices} non-isolated vertices; exhaustive search is capped at {cap}")]
    TooLarge { vertices: usize, cap: usize },
    #[error("transcript replay failed at round {round}: {message}")]
    Replay { round: usize, message: String },
    #[error(transparent)]
    Parse(#[from] ParseError),
}
