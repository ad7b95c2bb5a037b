//! Seeded synthetic graph generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashSet;

use crate::graph::Graph;
use crate::{VertexId, Weight};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random graph with `round(n * avg_degree / 2)` distinct edges
/// (arcs, when `directed`, with `avg_degree` read as the out-degree) and
/// weights drawn uniformly from `1..=max_weight`.
pub fn uniform(n: usize, avg_degree: f64, max_weight: Weight, directed: bool, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let target = if directed {
        (n as f64 * avg_degree).round() as usize
    } else {
        (n as f64 * avg_degree / 2.0).round() as usize
    };
    let capacity = if directed { n * n.saturating_sub(1) } else { n * n.saturating_sub(1) / 2 };
    let target = target.min(capacity);
    let mut seen = FxHashSet::default();
    let mut edges = Vec::with_capacity(target);
    while edges.len() < target {
        let u = rng.random_range(0..n) as VertexId;
        let v = rng.random_range(0..n) as VertexId;
        if u == v {
            continue;
        }
        let key = if directed || u < v { (u, v) } else { (v, u) };
        if seen.insert(key) {
            edges.push((u, v, rng.random_range(1..=max_weight)));
        }
    }
    Graph::from_edges(n, directed, edges).expect("generated edges are valid")
}

/// Preferential-attachment graph: each new vertex links to
/// `round(avg_degree / 2)` distinct existing vertices chosen with
/// probability proportional to their degree.
pub fn preferential_attachment(n: usize, avg_degree: f64, max_weight: Weight, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let m = ((avg_degree / 2.0).round() as usize).max(1);
    let mut edges = Vec::new();
    // Each endpoint appears once per incident edge.
    let mut endpoints: Vec<VertexId> = Vec::new();
    let core = (m + 1).min(n);
    for u in 0..core {
        for v in u + 1..core {
            edges.push((u as VertexId, v as VertexId, rng.random_range(1..=max_weight)));
            endpoints.extend([u as VertexId, v as VertexId]);
        }
    }
    let mut picked = Vec::with_capacity(m);
    for u in core..n {
        picked.clear();
        while picked.len() < m.min(u) {
            let v = if endpoints.is_empty() {
                rng.random_range(0..u) as VertexId
            } else {
                endpoints[rng.random_range(0..endpoints.len())]
            };
            if !picked.contains(&v) {
                picked.push(v);
            }
        }
        for &v in &picked {
            edges.push((u as VertexId, v, rng.random_range(1..=max_weight)));
            endpoints.extend([u as VertexId, v]);
        }
    }
    Graph::from_edges(n, false, edges).expect("generated edges are valid")
}

/// `count` seeded random vertex pairs over `0..n`.
pub fn random_pairs(n: usize, count: usize, seed: u64) -> Vec<(VertexId, VertexId)> {
    if n == 0 {
        return Vec::new();
    }
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            (
                rng.random_range(0..n) as VertexId,
                rng.random_range(0..n) as VertexId,
            )
        })
        .collect()
}
