//! Shared fixtures for the benchmark targets.

use pairideal::{Graph, GraphPair};

/// The five-vertex column graph used in the minimal-prime regression: a
/// 4-cycle with a pendant edge.
pub fn pendant_cycle() -> Graph {
    Graph::new(5, [(1, 2), (2, 3), (3, 4), (1, 4), (4, 5)]).unwrap()
}

/// The pair of the path on three vertices with the pendant-cycle graph.
pub fn figure_pair() -> GraphPair {
    GraphPair::new(Graph::path(3), pendant_cycle())
}
