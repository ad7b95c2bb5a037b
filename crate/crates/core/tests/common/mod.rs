#![allow(dead_code)]

use islabel::label::{LabelEntry, Via};
use islabel::{Graph, VertexId};

pub const A: VertexId = 0;
pub const B: VertexId = 1;
pub const C: VertexId = 2;
pub const D: VertexId = 3;
pub const E: VertexId = 4;
pub const F: VertexId = 5;
pub const G: VertexId = 6;
pub const H: VertexId = 7;
pub const I: VertexId = 8;

/// The nine-vertex running example, reconstructed from its adjacency as
/// described in the worked examples. All weights are 1 except f-e.
pub fn running_example() -> Graph {
    let edges = [
        (C, B, 1),
        (F, E, 3),
        (F, H, 1),
        (I, E, 1),
        (A, B, 1),
        (A, E, 1),
        (B, E, 1),
        (D, E, 1),
        (D, G, 1),
        (G, H, 1),
    ];
    Graph::from_edges(9, false, edges).unwrap()
}

/// Its five-level decomposition `{c,f,i}, {b,d,h}, {e}, {a}`, top `{g}`.
pub fn running_levels() -> Vec<Vec<VertexId>> {
    vec![vec![C, F, I], vec![B, D, H], vec![E], vec![A]]
}

pub fn label(pairs: &[(VertexId, u64)]) -> Vec<LabelEntry> {
    let mut entries: Vec<LabelEntry> = pairs
        .iter()
        .map(|&(ancestor, bound)| LabelEntry { ancestor, bound, via: Via::Unrecorded })
        .collect();
    entries.sort_by_key(|e| e.ancestor);
    entries
}

pub fn pairs(entries: &[LabelEntry]) -> Vec<(VertexId, u64)> {
    entries.iter().map(|e| (e.ancestor, e.bound)).collect()
}

/// Length of `path` in `g`, or `None` if some step is not an edge.
pub fn path_length(g: &Graph, path: &[VertexId]) -> Option<u64> {
    path.windows(2)
        .map(|w| g.weight(w[0], w[1]).map(u64::from))
        .sum()
}

/// Copy of `g` without vertex `v` (its slot stays, isolated).
pub fn without_vertex(g: &Graph, v: VertexId) -> Graph {
    let kept: Vec<_> = g.edges().filter(|&(a, b, _)| a != v && b != v).collect();
    Graph::from_edges(g.vertex_count(), g.is_directed(), kept).unwrap()
}

/// Copy of `g` with a new vertex attached by `(neighbor, weight)` edges.
pub fn with_vertex(g: &Graph, edges: &[(VertexId, u32)]) -> Graph {
    let u = g.vertex_count() as VertexId;
    let mut all: Vec<_> = g.edges().collect();
    all.extend(edges.iter().map(|&(x, w)| (u, x, w)));
    Graph::from_edges(g.vertex_count() + 1, g.is_directed(), all).unwrap()
}
