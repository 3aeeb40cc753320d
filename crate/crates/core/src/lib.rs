//! Color-avoiding connectivity for colored graphs and colored matroids.
//!
//! The crate provides recognition checkers, approximation algorithms for sparse
//! color-avoiding connected spanning subgraphs and rank-preserving courteous restrictions,
//! exact solvers for small instances, and generators for the extremal constructions.
//!
//! ```
//! use coloravoid::{eca_sparsify, is_eca_connected, EdgeColoredGraph, Order};
//!
//! let g = EdgeColoredGraph::from_triples(
//!     3,
//!     &[(0, 1, 0), (1, 2, 0), (0, 1, 1), (1, 2, 1)],
//!     2,
//! )
//! .unwrap();
//! assert!(is_eca_connected(&g).holds);
//! let sparse = eca_sparsify(&g, &Order::Ascending).unwrap();
//! assert_eq!(sparse.len(), 4);
//! ```

pub mod connectivity;
pub mod dsu;
pub mod error;
pub mod exact;
pub mod extremal;
pub mod format;
pub mod graph;
pub mod matroid;
pub mod order;
pub mod random;
pub mod sparsify;

pub use connectivity::{
    articulation_points, bridges, check_vertex, is_eca_connected, is_ivca_connected,
    is_vca_connected, CaVerdict, Notion, Witness,
};
pub use dsu::DisjointSetUnion;
pub use error::{Error, Result};
pub use exact::{
    min_restriction_exact, min_subgraph_exact, verify_lower_bound, ExactOptions, ExactResult,
    LowerBoundReport,
};
pub use extremal::{ColoredGraph, Construction, ConstructionSpec, Family};
pub use format::{parse_instance, to_dot, Instance};
pub use graph::{is_connected, Color, Edge, EdgeColoredGraph, Partition, VertexColoredGraph};
pub use matroid::{
    courteous_restriction, min_elements_bound, prune_restriction, uniform_is_courteous,
    ColoredMatroid, GraphicMatroid, IncreaseRankVariant, IndependenceOracle, UniformMatroid,
};
pub use order::Order;
pub use sparsify::{
    eca_sparsify, ivca_sparsify, min_edges_bound, prune_subgraph, sparsify, vca_optimal_k2,
    vca_sparsify, GraphRef, PhaseTag, SparsifyResult,
};
