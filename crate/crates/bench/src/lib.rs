//! Benchmark fixtures shared by the criterion suites.

use islabel::{generate, Graph, Index, IndexOptions, VertexId};

/// Sparse random graph with average degree 4 and weights in `1..=100`.
pub fn uniform_graph(n: usize, seed: u64) -> Graph {
    generate::uniform(n, 4.0, 100, false, seed)
}

/// Power-law graph with average degree 4 and weights in `1..=100`.
pub fn power_law_graph(n: usize, seed: u64) -> Graph {
    generate::preferential_attachment(n, 4.0, 100, seed)
}

pub fn build(graph: &Graph) -> Index {
    Index::build_identity(graph, &IndexOptions::default()).expect("index build")
}

pub fn pairs(graph: &Graph, count: usize, seed: u64) -> Vec<(VertexId, VertexId)> {
    generate::random_pairs(graph.vertex_count(), count, seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_consistent() {
        let g = power_law_graph(200, 1);
        let index = build(&g);
        for (s, t) in pairs(&g, 50, 2) {
            assert_eq!(
                index.distance(s, t).unwrap(),
                islabel::oracle::dijkstra_oracle(&g, s, t).unwrap()
            );
        }
    }
}
