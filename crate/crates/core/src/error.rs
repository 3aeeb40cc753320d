use thiserror::Error;

use crate::connectivity::Witness;
use crate::graph::Color;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("parallel edge between {u} and {v} in a simple graph")]
    ParallelEdge { u: usize, v: usize },

    #[error("expected {expected} vertex colors, found {found}")]
    ColorCountMismatch { expected: usize, found: usize },

    #[error("not a partition: {0}")]
    NotAPartition(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("input is not {notion}-connected: {witness}")]
    PreconditionFailed {
        notion: &'static str,
        witness: Witness,
    },

    #[error("matroid is not courteously colored: deleting color {color} lowers the rank")]
    NotCourteous { color: Color },

    #[error("infeasible parameters: {0}")]
    InfeasibleParameters(String),

    #[error("instance has {size} elements, exceeding the exact-search budget of {budget}")]
    BudgetExceeded { size: usize, budget: usize },

    #[error("definitional check refused for n = {n} (cap {cap}); pass force to override")]
    TooLarge { n: usize, cap: usize },

    #[error("expected exactly {expected} colors, found {found}")]
    WrongColorCount { expected: usize, found: usize },

    #[error("color class {color} does not induce a connected subgraph")]
    DisconnectedColorClass { color: Color },

    #[error("invalid order: {0}")]
    InvalidOrder(String),
}
