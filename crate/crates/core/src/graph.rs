//! Weighted adjacency-list graphs and edge-list ingestion.
//!
//! Vertices carry dense 0-based ids. Edge lists on disk may use arbitrary
//! non-negative integer ids; [`IdMap`] remembers the translation so output
//! can be reported in the caller's ids.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::{VertexId, Weight, NO_VERTEX};

/// One outgoing (or, in the reverse adjacency, incoming) arc.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Neighbor {
    pub vertex: VertexId,
    pub weight: Weight,
}

/// An immutable weighted graph in compressed adjacency form.
///
/// Undirected graphs store every edge as two arcs; parallel edges are
/// collapsed to their minimum weight and self-loops are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    directed: bool,
    out_offsets: Vec<usize>,
    out_arcs: Vec<Neighbor>,
    // Empty for undirected graphs, where the reverse adjacency is `out_*`.
    in_offsets: Vec<usize>,
    in_arcs: Vec<Neighbor>,
}

fn compress(n: usize, mut arcs: Vec<(VertexId, VertexId, Weight)>) -> (Vec<usize>, Vec<Neighbor>) {
    arcs.sort_unstable();
    arcs.dedup_by(|next, kept| next.0 == kept.0 && next.1 == kept.1);
    let mut offsets = vec![0usize; n + 1];
    for &(tail, _, _) in &arcs {
        offsets[tail as usize + 1] += 1;
    }
    for i in 0..n {
        offsets[i + 1] += offsets[i];
    }
    let targets = arcs
        .into_iter()
        .map(|(_, head, weight)| Neighbor { vertex: head, weight })
        .collect();
    (offsets, targets)
}

impl Graph {
    /// Builds a normalized graph from `(tail, head, weight)` triples.
    pub fn from_edges<I>(vertex_count: usize, directed: bool, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (VertexId, VertexId, Weight)>,
    {
        if vertex_count >= NO_VERTEX as usize {
            return Err(Error::TooManyVertices(vertex_count));
        }
        let mut arcs = Vec::new();
        for (u, v, w) in edges {
            for x in [u, v] {
                if x as usize >= vertex_count {
                    return Err(Error::InvalidVertex(x));
                }
            }
            if w == 0 {
                return Err(Error::NonPositiveWeight { line: 0, weight: 0 });
            }
            if u == v {
                continue;
            }
            arcs.push((u, v, w));
            if !directed {
                arcs.push((v, u, w));
            }
        }
        let (in_offsets, in_arcs) = if directed {
            compress(vertex_count, arcs.iter().map(|&(u, v, w)| (v, u, w)).collect())
        } else {
            (Vec::new(), Vec::new())
        };
        let (out_offsets, out_arcs) = compress(vertex_count, arcs);
        Ok(Graph {
            directed,
            out_offsets,
            out_arcs,
            in_offsets,
            in_arcs,
        })
    }

    pub fn empty(directed: bool) -> Graph {
        Graph::from_edges(0, directed, std::iter::empty()).expect("empty graph is valid")
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn vertex_count(&self) -> usize {
        self.out_offsets.len().saturating_sub(1)
    }

    /// Number of stored arcs; an undirected edge counts twice.
    pub fn arc_count(&self) -> usize {
        self.out_arcs.len()
    }

    /// Number of edges as the caller sees them.
    pub fn edge_count(&self) -> usize {
        if self.directed {
            self.out_arcs.len()
        } else {
            self.out_arcs.len() / 2
        }
    }

    /// `|V| + |E|`, with `|E|` counted in arcs.
    pub fn size(&self) -> usize {
        self.vertex_count() + self.arc_count()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        (v as usize) < self.vertex_count()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.vertex_count() as VertexId
    }

    /// Outgoing arcs of `v`, sorted by neighbor id.
    pub fn neighbors(&self, v: VertexId) -> &[Neighbor] {
        let v = v as usize;
        &self.out_arcs[self.out_offsets[v]..self.out_offsets[v + 1]]
    }

    /// Incoming arcs of `v` (the tail is stored in `Neighbor::vertex`).
    pub fn in_neighbors(&self, v: VertexId) -> &[Neighbor] {
        if !self.directed {
            return self.neighbors(v);
        }
        let v = v as usize;
        &self.in_arcs[self.in_offsets[v]..self.in_offsets[v + 1]]
    }

    pub fn weight(&self, u: VertexId, v: VertexId) -> Option<Weight> {
        let arcs = self.neighbors(u);
        arcs.binary_search_by_key(&v, |n| n.vertex)
            .ok()
            .map(|i| arcs[i].weight)
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        if !self.contains(v) {
            return Err(Error::InvalidVertex(v));
        }
        Ok(self.neighbors(v).len())
    }

    /// Every edge once: `u < v` pairs for undirected graphs, all arcs otherwise.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, Weight)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |n| self.directed || u < n.vertex)
                .map(move |n| (u, n.vertex, n.weight))
        })
    }

    /// The same graph with every arc reversed.
    pub fn reversed(&self) -> Graph {
        if !self.directed {
            return self.clone();
        }
        Graph {
            directed: true,
            out_offsets: self.in_offsets.clone(),
            out_arcs: self.in_arcs.clone(),
            in_offsets: self.out_offsets.clone(),
            in_arcs: self.out_arcs.clone(),
        }
    }

    /// Directed copy with both arcs of every undirected edge.
    pub fn to_directed(&self) -> Graph {
        if self.directed {
            return self.clone();
        }
        let arcs = self
            .vertices()
            .flat_map(|u| self.neighbors(u).iter().map(move |n| (u, n.vertex, n.weight)));
        Graph::from_edges(self.vertex_count(), true, arcs.collect::<Vec<_>>())
            .expect("arcs of a valid graph are valid")
    }
}

/// Translation between external vertex ids and dense internal ids.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdMap {
    external: Vec<u64>,
    internal: HashMap<u64, VertexId>,
}

impl IdMap {
    /// Identity mapping over `0..n`.
    pub fn identity(n: usize) -> IdMap {
        IdMap::from_external((0..n as u64).collect())
    }

    pub fn from_external(external: Vec<u64>) -> IdMap {
        let internal = external
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i as VertexId))
            .collect();
        IdMap { external, internal }
    }

    pub fn len(&self) -> usize {
        self.external.len()
    }

    pub fn is_empty(&self) -> bool {
        self.external.is_empty()
    }

    pub fn internal(&self, external: u64) -> Option<VertexId> {
        self.internal.get(&external).copied()
    }

    pub fn external(&self, internal: VertexId) -> u64 {
        self.external[internal as usize]
    }

    pub fn external_ids(&self) -> &[u64] {
        &self.external
    }

    pub(crate) fn push(&mut self, external: u64) -> Result<VertexId> {
        if self.internal.contains_key(&external) {
            return Err(Error::DuplicateVertex(external));
        }
        let id = self.external.len() as VertexId;
        self.external.push(external);
        self.internal.insert(external, id);
        Ok(id)
    }

    /// Forgets the external id of a deleted vertex; its slot stays reserved.
    pub(crate) fn retire(&mut self, internal: VertexId) {
        let ext = self.external[internal as usize];
        if self.internal.get(&ext) == Some(&internal) {
            self.internal.remove(&ext);
        }
    }

    /// Restricts lookups to the slots for which `live` holds.
    pub(crate) fn retain_live(&mut self, live: impl Fn(VertexId) -> bool) {
        self.internal.retain(|_, v| live(*v));
    }
}

/// Parses a whitespace-delimited edge list: `u v [w]` per line, `#` comments.
pub fn parse_edge_list<R: BufRead>(reader: R, directed: bool) -> Result<(Graph, IdMap)> {
    let mut raw = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if !(2..=3).contains(&fields.len()) {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected `u v [w]`, found {} fields", fields.len()),
            });
        }
        let id = |s: &str| {
            s.parse::<u64>().map_err(|e| Error::Parse {
                line: line_no,
                message: format!("bad vertex id `{s}`: {e}"),
            })
        };
        let (u, v) = (id(fields[0])?, id(fields[1])?);
        let w = match fields.get(2) {
            None => 1,
            Some(s) => {
                let w: i128 = s.parse().map_err(|e| Error::Parse {
                    line: line_no,
                    message: format!("bad weight `{s}`: {e}"),
                })?;
                if w <= 0 {
                    return Err(Error::NonPositiveWeight {
                        line: line_no,
                        weight: w,
                    });
                }
                Weight::try_from(w).map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("weight {w} exceeds {}", Weight::MAX),
                })?
            }
        };
        raw.push((u, v, w));
    }

    let mut external: Vec<u64> = raw.iter().flat_map(|&(u, v, _)| [u, v]).collect();
    external.sort_unstable();
    external.dedup();
    if external.len() >= NO_VERTEX as usize {
        return Err(Error::TooManyVertices(external.len()));
    }
    let ids = IdMap::from_external(external);
    let edges = raw
        .into_iter()
        .map(|(u, v, w)| (ids.internal(u).unwrap(), ids.internal(v).unwrap(), w));
    let graph = Graph::from_edges(ids.len(), directed, edges)?;
    Ok((graph, ids))
}

pub fn load_edge_list(path: impl AsRef<Path>, directed: bool) -> Result<(Graph, IdMap)> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    parse_edge_list(BufReader::new(file), directed)
}

/// Writes `graph` as an edge list in external ids.
pub fn write_edge_list<W: Write>(graph: &Graph, ids: &IdMap, mut out: W) -> Result<()> {
    for (u, v, w) in graph.edges() {
        writeln!(out, "{} {} {}", ids.external(u), ids.external(v), w)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str, directed: bool) -> (Graph, IdMap) {
        parse_edge_list(text.as_bytes(), directed).unwrap()
    }

    #[test]
    fn loads_unit_path() {
        let (g, _) = parse("0 1 1\n1 2 1", false);
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(
            g.neighbors(1),
            &[Neighbor { vertex: 0, weight: 1 }, Neighbor { vertex: 2, weight: 1 }]
        );
    }

    #[test]
    fn parallel_edges_keep_minimum() {
        let (g, _) = parse("0 1 3\n0 1 2", false);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.weight(0, 1), Some(2));
        assert_eq!(g.weight(1, 0), Some(2));
    }

    #[test]
    fn self_loop_dropped_vertex_kept() {
        let (g, _) = parse("0 0 1", false);
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.arc_count(), 0);
    }

    #[test]
    fn default_weight_comments_and_crlf() {
        let (g, ids) = parse("# header\r\n\r\n10 20\r\n20 30 4\r\n", false);
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(ids.internal(20), Some(1));
        assert_eq!(g.weight(0, 1), Some(1));
        assert_eq!(g.weight(1, 2), Some(4));
    }

    #[test]
    fn rejects_bad_weights_with_line_numbers() {
        match parse_edge_list("0 1 1\n1 2 0\n".as_bytes(), false) {
            Err(Error::NonPositiveWeight { line: 2, weight: 0 }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match parse_edge_list("0 1 -4\n".as_bytes(), false) {
            Err(Error::NonPositiveWeight { line: 1, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match parse_edge_list("0 1\n1 x 2\n".as_bytes(), false) {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_edge_list("0 1 2 3\n".as_bytes(), false).is_err());
    }

    #[test]
    fn degrees() {
        let (path, _) = parse("0 1\n1 2", false);
        assert_eq!(path.degree(1).unwrap(), 2);
        let (star, _) = parse("0 1\n0 2\n0 3\n0 4\n0 5\n6 6", false);
        assert_eq!(star.degree(0).unwrap(), 5);
        assert_eq!(star.degree(6).unwrap(), 0);
        assert!(star.degree(99).is_err());
    }

    #[test]
    fn directed_keeps_orientation() {
        let (g, _) = parse("0 1 2\n1 2 3", true);
        assert_eq!(g.weight(0, 1), Some(2));
        assert_eq!(g.weight(1, 0), None);
        assert_eq!(g.in_neighbors(2), &[Neighbor { vertex: 1, weight: 3 }]);
        let r = g.reversed();
        assert_eq!(r.weight(2, 1), Some(3));
    }

    #[test]
    fn missing_file_is_io_error() {
        assert!(matches!(
            load_edge_list("/nonexistent/graph.txt", false),
            Err(Error::Io { .. })
        ));
    }

    #[test]
    fn reload_is_idempotent() {
        let (g, ids) = parse("5 7 3\n7 9 1\n9 5 2\n5 7 1\n11 5 6\n", false);
        let mut buf = Vec::new();
        write_edge_list(&g, &ids, &mut buf).unwrap();
        let (g2, ids2) = parse_edge_list(buf.as_slice(), false).unwrap();
        assert_eq!(g, g2);
        assert_eq!(ids, ids2);
    }
}
