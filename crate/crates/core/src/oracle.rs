//! Reference shortest-path searches over the original graph.
//!
//! These do not touch the index at all; tests and the `oracle` subcommand
//! use them as ground truth, and the plain bidirectional search is the
//! baseline the indexed queries are compared against.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rustc_hash::FxHashMap;

use crate::distance::{plus, INF};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::{Distance, VertexId};

/// Textbook Dijkstra from `source`; distances to every vertex.
pub fn dijkstra_all(g: &Graph, source: VertexId) -> Result<Vec<Distance>> {
    if !g.contains(source) {
        return Err(Error::InvalidVertex(source));
    }
    let mut dist = vec![INF; g.vertex_count()];
    let mut heap = BinaryHeap::new();
    dist[source as usize] = 0;
    heap.push(Reverse((0u64, source)));
    while let Some(Reverse((d, v))) = heap.pop() {
        if d > dist[v as usize] {
            continue;
        }
        for n in g.neighbors(v) {
            let nd = plus(d, n.weight as u64);
            if nd < dist[n.vertex as usize] {
                dist[n.vertex as usize] = nd;
                heap.push(Reverse((nd, n.vertex)));
            }
        }
    }
    Ok(dist.into_iter().map(Distance::from_raw).collect())
}

/// Textbook Dijkstra from `source`, stopping once `target` is settled.
pub fn dijkstra_oracle(g: &Graph, source: VertexId, target: VertexId) -> Result<Distance> {
    for v in [source, target] {
        if !g.contains(v) {
            return Err(Error::InvalidVertex(v));
        }
    }
    let mut dist: FxHashMap<VertexId, u64> = FxHashMap::default();
    let mut heap = BinaryHeap::new();
    dist.insert(source, 0);
    heap.push(Reverse((0u64, source)));
    while let Some(Reverse((d, v))) = heap.pop() {
        if v == target {
            return Ok(Distance::from_raw(d));
        }
        if d > dist[&v] {
            continue;
        }
        for n in g.neighbors(v) {
            let nd = plus(d, n.weight as u64);
            let slot = dist.entry(n.vertex).or_insert(INF);
            if nd < *slot {
                *slot = nd;
                heap.push(Reverse((nd, n.vertex)));
            }
        }
    }
    Ok(Distance::INFINITY)
}

/// Plain bidirectional Dijkstra over the whole graph, no index.
pub fn bidirectional_dijkstra(g: &Graph, source: VertexId, target: VertexId) -> Result<Distance> {
    for v in [source, target] {
        if !g.contains(v) {
            return Err(Error::InvalidVertex(v));
        }
    }
    if source == target {
        return Ok(Distance::ZERO);
    }
    let mut dist = [FxHashMap::default(), FxHashMap::default()];
    let mut heaps = [BinaryHeap::new(), BinaryHeap::new()];
    dist[0].insert(source, 0u64);
    dist[1].insert(target, 0u64);
    heaps[0].push(Reverse((0u64, source)));
    heaps[1].push(Reverse((0u64, target)));
    let mut best = INF;
    loop {
        let top = |h: &BinaryHeap<Reverse<(u64, VertexId)>>| h.peek().map_or(INF, |e| e.0 .0);
        let (tf, tr) = (top(&heaps[0]), top(&heaps[1]));
        if tf == INF || tr == INF || plus(tf, tr) >= best {
            break;
        }
        let side = if tf <= tr { 0 } else { 1 };
        let Reverse((d, v)) = heaps[side].pop().unwrap();
        if d > dist[side][&v] {
            continue;
        }
        let arcs = if side == 0 { g.neighbors(v) } else { g.in_neighbors(v) };
        for n in arcs {
            let nd = plus(d, n.weight as u64);
            let slot = dist[side].entry(n.vertex).or_insert(INF);
            if nd < *slot {
                *slot = nd;
                heaps[side].push(Reverse((nd, n.vertex)));
                if let Some(&other) = dist[1 - side].get(&n.vertex) {
                    best = best.min(plus(nd, other));
                }
            }
        }
    }
    Ok(Distance::from_raw(best))
}
