//! Incremental betweenness centrality over maintained shortest-path DAGs.
//!
//! The crate keeps, for every source `s`, the distance row `d(s, ·)`, the
//! shortest-path counts `σ(s, ·)` and the shortest-path DAG rooted at `s`.
//! After an incremental update (an edge weight decrease, an edge insertion,
//! or a batch of such updates on the edges incident to one vertex) the DAGs
//! are repaired by scanning only DAG edges, and the betweenness scores are
//! re-accumulated in reverse topological order.
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! ```
//! use incbc_core::{brandes_bc, incremental_bc_edge, EdgeUpdate, Graph, Weight};
//!
//! let g = Graph::from_edges(
//!     4,
//!     [(0, 1, Weight::from_units(1)), (0, 2, Weight::from_units(1)),
//!      (1, 3, Weight::from_units(1)), (2, 3, Weight::from_units(1))],
//!     false,
//! ).unwrap();
//! let mut state = brandes_bc(&g);
//! assert_eq!(state.bc(), &[0.0, 0.5, 0.5, 0.0]);
//!
//! let half = "0.5".parse::<Weight>().unwrap();
//! incremental_bc_edge(&mut state, EdgeUpdate::new(0, 1, half)).unwrap();
//! assert_eq!(state.bc(), &[0.0, 1.0, 0.0, 0.0]);
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod apsp;
pub mod dag;
pub mod edge;
pub mod graph;
pub mod oracle;
pub mod vertex;

pub use apsp::{
    accumulate_dependency, brandes_bc, counting_dijkstra, star_stats, static_bc, static_bc_report,
    ApspState, Mode, SsspResult, StarStats, StateError, StaticReport, WorkCounters,
};
pub use dag::Dag;
pub use edge::{
    classify_pair, incremental_bc_edge, incremental_bc_edge_undirected, update_dag, EdgeUpdate,
    FlagMatrix, PairFlag, UpdateError,
};
pub use graph::{Dist, Graph, GraphError, VertexId, Weight, WeightParseError, INF};
pub use oracle::{
    compare_states, enumerate_paths_bc, from_scratch, Enumerated, OracleError, OracleReport,
    ENUMERATION_LIMIT,
};
pub use vertex::{
    build_r_sets, classify_pair_vertex, compute_dist_to_v, incremental_bc_vertex,
    reverse_dag_candidates, update_dag_vertex, update_reverse_dag, DistToV, DistToVEntry, RSets,
    vertex_flags, Tables, VertexUpdate,
};
