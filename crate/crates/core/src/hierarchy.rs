//! Independent-set vertex hierarchy.
//!
//! Level `i` removes an independent set `L_i` from the residual graph `G_i`
//! and reconnects the neighbors of every removed vertex with augmenting
//! edges, so `G_{i+1}` keeps all distances among its vertices. Construction
//! stops after `k - 1` levels; the last residual graph `G_k` is kept whole
//! for query-time search. Each removed vertex keeps a snapshot of its
//! adjacency in the graph it was removed from; labeling, path unpacking and
//! dynamic updates all work from those snapshots.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use log::debug;

use crate::distance::INF;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::VertexId;

/// An arc of a residual graph. `mid` is the removed vertex the arc stands in
/// for, or `None` when the arc is an edge of the input graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HalfEdge {
    pub vertex: VertexId,
    pub weight: u64,
    pub mid: Option<VertexId>,
}

impl HalfEdge {
    pub fn original(vertex: VertexId, weight: u64) -> Self {
        HalfEdge { vertex, weight, mid: None }
    }
}

/// A residual graph `G_i` over a subset of the original vertex ids.
///
/// Adjacency is indexed by original id; absent vertices have empty lists.
/// Undirected graphs keep a single adjacency with both arc directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelGraph {
    directed: bool,
    present: Vec<bool>,
    vertex_count: usize,
    arc_count: usize,
    out: Vec<Vec<HalfEdge>>,
    inn: Vec<Vec<HalfEdge>>,
}

impl LevelGraph {
    pub fn from_graph(g: &Graph) -> LevelGraph {
        let n = g.vertex_count();
        let lift = |v: VertexId, incoming: bool| -> Vec<HalfEdge> {
            let arcs = if incoming { g.in_neighbors(v) } else { g.neighbors(v) };
            arcs.iter()
                .map(|a| HalfEdge::original(a.vertex, a.weight as u64))
                .collect()
        };
        LevelGraph {
            directed: g.is_directed(),
            present: vec![true; n],
            vertex_count: n,
            arc_count: g.arc_count(),
            out: g.vertices().map(|v| lift(v, false)).collect(),
            inn: if g.is_directed() {
                g.vertices().map(|v| lift(v, true)).collect()
            } else {
                Vec::new()
            },
        }
    }

    /// A graph with the given vertices and arcs (both directions are taken
    /// from `arcs` verbatim, so undirected callers list each edge twice).
    pub fn from_arcs(
        universe: usize,
        directed: bool,
        vertices: impl IntoIterator<Item = VertexId>,
        arcs: impl IntoIterator<Item = (VertexId, HalfEdge)>,
    ) -> LevelGraph {
        let mut g = LevelGraph {
            directed,
            present: vec![false; universe],
            vertex_count: 0,
            arc_count: 0,
            out: vec![Vec::new(); universe],
            inn: if directed { vec![Vec::new(); universe] } else { Vec::new() },
        };
        for v in vertices {
            if !g.present[v as usize] {
                g.present[v as usize] = true;
                g.vertex_count += 1;
            }
        }
        for (tail, arc) in arcs {
            g.out[tail as usize].push(arc);
            if directed {
                g.inn[arc.vertex as usize].push(HalfEdge { vertex: tail, ..arc });
            }
            g.arc_count += 1;
        }
        for list in g.out.iter_mut().chain(g.inn.iter_mut()) {
            list.sort_by_key(|a| a.vertex);
        }
        g
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Size of the id universe the adjacency is indexed by.
    pub fn universe(&self) -> usize {
        self.present.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    /// `|V| + |E|` with arcs counted individually.
    pub fn size(&self) -> usize {
        self.vertex_count + self.arc_count
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_count == 0
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.present.get(v as usize).copied().unwrap_or(false)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.present
            .iter()
            .enumerate()
            .filter(|(_, &p)| p)
            .map(|(v, _)| v as VertexId)
    }

    /// Outgoing arcs of `v`, sorted by head.
    pub fn out(&self, v: VertexId) -> &[HalfEdge] {
        self.out.get(v as usize).map_or(&[], Vec::as_slice)
    }

    /// Incoming arcs of `v`, sorted by tail (stored in `HalfEdge::vertex`).
    pub fn inn(&self, v: VertexId) -> &[HalfEdge] {
        if !self.directed {
            return self.out(v);
        }
        self.inn.get(v as usize).map_or(&[], Vec::as_slice)
    }

    pub fn arc(&self, tail: VertexId, head: VertexId) -> Option<HalfEdge> {
        find(self.out(tail), head)
    }

    /// Number of distinct neighbors when directions are ignored.
    pub fn undirected_degree(&self, v: VertexId) -> usize {
        if !self.directed {
            return self.out(v).len();
        }
        let (a, b) = (self.out(v), self.inn(v));
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < a.len() || j < b.len() {
            match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) if x.vertex == y.vertex => {
                    i += 1;
                    j += 1;
                }
                (Some(x), Some(y)) if x.vertex < y.vertex => i += 1,
                (Some(_), None) => i += 1,
                _ => j += 1,
            }
            count += 1;
        }
        count
    }

    fn touch_neighbors(&self, v: VertexId, mut f: impl FnMut(VertexId)) {
        self.out(v).iter().for_each(|a| f(a.vertex));
        if self.directed {
            self.inn(v).iter().for_each(|a| f(a.vertex));
        }
    }

    /// Single-source distances inside this graph (test and audit helper).
    pub fn dijkstra(&self, source: VertexId) -> Vec<u64> {
        let mut dist = vec![INF; self.universe()];
        if !self.contains(source) {
            return dist;
        }
        let mut heap = BinaryHeap::new();
        dist[source as usize] = 0;
        heap.push(Reverse((0u64, source)));
        while let Some(Reverse((d, v))) = heap.pop() {
            if d > dist[v as usize] {
                continue;
            }
            for a in self.out(v) {
                let nd = crate::distance::plus(d, a.weight);
                if nd < dist[a.vertex as usize] {
                    dist[a.vertex as usize] = nd;
                    heap.push(Reverse((nd, a.vertex)));
                }
            }
        }
        dist
    }

    pub(crate) fn push_vertex(&mut self, present: bool) -> VertexId {
        let id = self.present.len() as VertexId;
        self.present.push(present);
        self.out.push(Vec::new());
        if self.directed {
            self.inn.push(Vec::new());
        }
        if present {
            self.vertex_count += 1;
        }
        id
    }

    pub(crate) fn mark_absent(&mut self, v: VertexId) {
        if self.contains(v) {
            self.present[v as usize] = false;
            self.vertex_count -= 1;
        }
    }

    /// Inserts `tail -> arc.vertex`, or lowers an existing arc's weight when
    /// `arc` is strictly lighter. Undirected graphs get both directions.
    pub(crate) fn upsert_arc(&mut self, tail: VertexId, arc: HalfEdge) -> bool {
        let changed = upsert(&mut self.out[tail as usize], arc);
        let reverse = HalfEdge { vertex: tail, ..arc };
        if self.directed {
            upsert(&mut self.inn[arc.vertex as usize], reverse);
        } else {
            upsert(&mut self.out[arc.vertex as usize], reverse);
        }
        if changed.inserted {
            self.arc_count += if self.directed { 1 } else { 2 };
        }
        changed.inserted || changed.lowered
    }

    /// Drops `v` and every arc touching it.
    pub(crate) fn remove_vertex(&mut self, v: VertexId) {
        if !self.contains(v) {
            return;
        }
        let out = std::mem::take(&mut self.out[v as usize]);
        let inn = if self.directed {
            std::mem::take(&mut self.inn[v as usize])
        } else {
            Vec::new()
        };
        for a in &out {
            let list = if self.directed {
                &mut self.inn[a.vertex as usize]
            } else {
                &mut self.out[a.vertex as usize]
            };
            list.retain(|b| b.vertex != v);
        }
        for a in &inn {
            self.out[a.vertex as usize].retain(|b| b.vertex != v);
        }
        self.arc_count -= if self.directed { out.len() + inn.len() } else { 2 * out.len() };
        self.mark_absent(v);
    }

    /// Removes the vertices of `set` and adds the augmenting arcs that keep
    /// the remaining distances intact.
    pub(crate) fn contract(&mut self, set: &LevelSet) -> Result<()> {
        let n = self.universe();
        let mut member = vec![false; n];
        for &v in &set.members {
            if !self.contains(v) {
                return Err(Error::InvalidVertex(v));
            }
            member[v as usize] = true;
        }
        for &v in &set.members {
            let mut clash = None;
            self.touch_neighbors(v, |u| {
                if member[u as usize] {
                    clash = Some(u);
                }
            });
            if let Some(u) = clash {
                return Err(Error::NotIndependent(v.min(u), v.max(u)));
            }
        }

        // Augmenting-arc candidates in creation order: removed vertices by
        // ascending id, then neighbor pairs in adjacency order.
        let mut out_cands: Vec<Candidate> = Vec::new();
        for &v in &set.members {
            if self.directed {
                for a in self.inn(v) {
                    for b in self.out(v) {
                        if a.vertex != b.vertex {
                            out_cands.push(Candidate::new(a.vertex, b.vertex, a.weight, b.weight, v)?);
                        }
                    }
                }
            } else {
                let adj = self.out(v);
                for (i, a) in adj.iter().enumerate() {
                    for b in &adj[i + 1..] {
                        out_cands.push(Candidate::new(a.vertex, b.vertex, a.weight, b.weight, v)?);
                        out_cands.push(Candidate::new(b.vertex, a.vertex, a.weight, b.weight, v)?);
                    }
                }
            }
        }
        let mut in_cands: Vec<Candidate> = if self.directed {
            out_cands
                .iter()
                .map(|c| Candidate { from: c.to, to: c.from, ..*c })
                .collect()
        } else {
            Vec::new()
        };
        out_cands.sort_by_key(|c| (c.from, c.to));
        in_cands.sort_by_key(|c| (c.from, c.to));

        let mut affected: Vec<VertexId> = Vec::new();
        for &v in &set.members {
            self.touch_neighbors(v, |u| affected.push(u));
        }
        affected.sort_unstable();
        affected.dedup();

        for &v in &set.members {
            self.present[v as usize] = false;
            self.vertex_count -= 1;
            self.arc_count -= self.out[v as usize].len();
            self.out[v as usize].clear();
            if self.directed {
                self.inn[v as usize].clear();
            }
        }

        let mut delta_out: isize = 0;
        for &x in &affected {
            let cands = group(&out_cands, x);
            let before = self.out[x as usize].len();
            let merged = merge(&self.out[x as usize], &self.present, cands);
            delta_out += merged.len() as isize - before as isize;
            self.out[x as usize] = merged;
            if self.directed {
                let cands = group(&in_cands, x);
                let merged = merge(&self.inn[x as usize], &self.present, cands);
                self.inn[x as usize] = merged;
            }
        }
        self.arc_count = (self.arc_count as isize + delta_out) as usize;
        Ok(())
    }
}

#[derive(Clone, Copy, Debug)]
struct Candidate {
    from: VertexId,
    to: VertexId,
    weight: u64,
    mid: VertexId,
}

impl Candidate {
    fn new(from: VertexId, to: VertexId, w1: u64, w2: u64, mid: VertexId) -> Result<Self> {
        let weight = w1
            .checked_add(w2)
            .filter(|&w| w != INF)
            .ok_or(Error::DistanceOverflow)?;
        Ok(Candidate { from, to, weight, mid })
    }
}

fn group(cands: &[Candidate], x: VertexId) -> &[Candidate] {
    let lo = cands.partition_point(|c| c.from < x);
    let hi = cands.partition_point(|c| c.from <= x);
    &cands[lo..hi]
}

/// Merges sorted candidates into a sorted adjacency list, dropping arcs to
/// absent vertices. An arc is replaced only by a strictly lighter candidate.
fn merge(old: &[HalfEdge], present: &[bool], cands: &[Candidate]) -> Vec<HalfEdge> {
    let mut out = Vec::with_capacity(old.len() + cands.len());
    let mut old = old.iter().filter(|a| present[a.vertex as usize]).peekable();
    let mut i = 0;
    while i < cands.len() {
        let to = cands[i].to;
        while let Some(a) = old.next_if(|a| a.vertex < to) {
            out.push(*a);
        }
        let mut best = old.next_if(|a| a.vertex == to).copied();
        while i < cands.len() && cands[i].to == to {
            let c = cands[i];
            if best.map_or(true, |b| c.weight < b.weight) {
                best = Some(HalfEdge { vertex: to, weight: c.weight, mid: Some(c.mid) });
            }
            i += 1;
        }
        out.extend(best);
    }
    out.extend(old.copied());
    out
}

struct Upsert {
    inserted: bool,
    lowered: bool,
}

fn upsert(list: &mut Vec<HalfEdge>, arc: HalfEdge) -> Upsert {
    match list.binary_search_by_key(&arc.vertex, |a| a.vertex) {
        Ok(i) if arc.weight < list[i].weight => {
            list[i] = arc;
            Upsert { inserted: false, lowered: true }
        }
        Ok(_) => Upsert { inserted: false, lowered: false },
        Err(i) => {
            list.insert(i, arc);
            Upsert { inserted: true, lowered: false }
        }
    }
}

pub(crate) fn find(list: &[HalfEdge], v: VertexId) -> Option<HalfEdge> {
    list.binary_search_by_key(&v, |a| a.vertex).ok().map(|i| list[i])
}

/// An independent set `L_i` together with the adjacency each member had in
/// `G_i` (`ADJ(L_i)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelSet {
    /// Members in ascending id order.
    pub members: Vec<VertexId>,
    /// Outgoing arcs of each member in `G_i`, parallel to `members`.
    pub out: Vec<Vec<HalfEdge>>,
    /// Incoming arcs of each member; empty for undirected graphs.
    pub inn: Vec<Vec<HalfEdge>>,
}

impl LevelSet {
    /// Takes the snapshots of `members` from `g` without any checks.
    pub fn from_members(g: &LevelGraph, mut members: Vec<VertexId>) -> LevelSet {
        members.sort_unstable();
        members.dedup();
        let out = members.iter().map(|&v| g.out(v).to_vec()).collect();
        let inn = if g.is_directed() {
            members.iter().map(|&v| g.inn(v).to_vec()).collect()
        } else {
            Vec::new()
        };
        LevelSet { members, out, inn }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Greedy maximal independent set: vertices are visited in ascending
/// `(degree, id)` order and admitted unless an admitted vertex is adjacent.
/// Arc directions are ignored.
pub fn select_independent_set(g: &LevelGraph) -> LevelSet {
    let mut order: Vec<(usize, VertexId)> = g
        .vertices()
        .map(|v| (g.undirected_degree(v), v))
        .collect();
    order.sort_unstable();
    let mut excluded = vec![false; g.universe()];
    let mut members = Vec::new();
    for (_, u) in order {
        if excluded[u as usize] {
            continue;
        }
        members.push(u);
        g.touch_neighbors(u, |v| excluded[v as usize] = true);
    }
    LevelSet::from_members(g, members)
}

/// `G_i` from `G_{i-1}` and the independent set removed from it.
pub fn contract_level(g_prev: &LevelGraph, removed: &LevelSet) -> Result<LevelGraph> {
    let mut next = g_prev.clone();
    next.contract(removed)?;
    Ok(next)
}

#[derive(Clone, Debug, PartialEq)]
pub struct HierarchyOptions {
    /// Construction stops at the first level whose residual graph keeps more
    /// than `sigma` of the previous one's `|V| + |E|`.
    pub sigma: f64,
    /// Upper bound on `k`.
    pub max_k: Option<u32>,
    /// Keep every residual graph `G_1..G_k` (for audits on small inputs).
    pub retain_level_graphs: bool,
    /// Ignore `sigma` and keep contracting until no edges are left.
    pub exhaustive: bool,
}

impl Default for HierarchyOptions {
    fn default() -> Self {
        HierarchyOptions {
            sigma: 0.95,
            max_k: None,
            retain_level_graphs: false,
            exhaustive: false,
        }
    }
}

impl HierarchyOptions {
    pub fn with_sigma(sigma: f64) -> Self {
        HierarchyOptions { sigma, ..Default::default() }
    }

    /// Full decomposition: every vertex below the top, whose residual graph
    /// has no edges.
    pub fn exhaustive() -> Self {
        HierarchyOptions { exhaustive: true, ..Default::default() }
    }

    fn validate(&self) -> Result<()> {
        if !(self.sigma > 0.0 && self.sigma <= 1.0) {
            return Err(Error::InvalidSigma(self.sigma));
        }
        if self.max_k == Some(0) {
            return Err(Error::InvalidMaxK);
        }
        Ok(())
    }
}

/// Level numbers, per-level independent sets with their adjacency
/// snapshots, and the residual top graph `G_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexHierarchy {
    pub(crate) directed: bool,
    pub(crate) k: u32,
    /// 1-based level per vertex; 0 marks a deleted vertex.
    pub(crate) level_of: Vec<u32>,
    pub(crate) levels: Vec<Vec<VertexId>>,
    pub(crate) snap_out: Vec<Vec<HalfEdge>>,
    pub(crate) snap_in: Vec<Vec<HalfEdge>>,
    pub(crate) top: LevelGraph,
    pub(crate) level_graphs: Option<Vec<LevelGraph>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HierarchyStats {
    pub k: u32,
    pub top_vertices: usize,
    pub top_arcs: usize,
    /// `|L_1|, ..., |L_{k-1}|`.
    pub level_sizes: Vec<usize>,
}

struct Builder {
    h: VertexHierarchy,
    current: LevelGraph,
}

impl Builder {
    fn new(g: &Graph, retain: bool) -> Builder {
        let n = g.vertex_count();
        let current = LevelGraph::from_graph(g);
        Builder {
            h: VertexHierarchy {
                directed: g.is_directed(),
                k: 1,
                level_of: vec![0; n],
                levels: Vec::new(),
                snap_out: vec![Vec::new(); n],
                snap_in: if g.is_directed() { vec![Vec::new(); n] } else { Vec::new() },
                top: LevelGraph::from_arcs(0, g.is_directed(), [], []),
                level_graphs: retain.then(|| vec![current.clone()]),
            },
            current,
        }
    }

    /// Removes `set` from the current graph as the next level; returns the
    /// `(before, after)` sizes.
    fn push_level(&mut self, set: LevelSet) -> Result<(usize, usize)> {
        let before = self.current.size();
        self.current.contract(&set)?;
        let level = self.h.levels.len() as u32 + 1;
        let LevelSet { members, out, inn } = set;
        for (i, &v) in members.iter().enumerate() {
            self.h.level_of[v as usize] = level;
            self.h.snap_out[v as usize] = out[i].clone();
            if self.h.directed {
                self.h.snap_in[v as usize] = inn[i].clone();
            }
        }
        debug!(
            "level {level}: removed {} vertices, residual |V|={} |E|={}",
            members.len(),
            self.current.vertex_count(),
            self.current.arc_count()
        );
        self.h.levels.push(members);
        if let Some(graphs) = self.h.level_graphs.as_mut() {
            graphs.push(self.current.clone());
        }
        Ok((before, self.current.size()))
    }

    fn finish(mut self) -> VertexHierarchy {
        let k = self.h.levels.len() as u32 + 1;
        self.h.k = k;
        for v in self.current.vertices() {
            self.h.level_of[v as usize] = k;
        }
        self.h.top = self.current;
        self.h
    }
}

/// Builds the k-level hierarchy with greedy independent sets and the
/// `sigma` stopping rule.
///
/// When the residual graph has no edges left, contracting it once more
/// would leave nothing to search, so it is kept as `G_k` instead.
pub fn build_hierarchy(g: &Graph, opts: &HierarchyOptions) -> Result<VertexHierarchy> {
    opts.validate()?;
    let mut b = Builder::new(g, opts.retain_level_graphs);
    loop {
        let level = b.h.levels.len() as u32 + 1;
        if opts.max_k.is_some_and(|max_k| level >= max_k) {
            break;
        }
        if b.current.arc_count() == 0 {
            break;
        }
        let set = select_independent_set(&b.current);
        let (before, after) = b.push_level(set)?;
        if !opts.exhaustive && after as f64 > opts.sigma * before as f64 {
            break;
        }
    }
    Ok(b.finish())
}

impl VertexHierarchy {
    /// A hierarchy whose independent sets are given explicitly; everything
    /// left after the last set forms `G_k` (possibly empty).
    pub fn from_level_sets(
        g: &Graph,
        sets: &[Vec<VertexId>],
        retain_level_graphs: bool,
    ) -> Result<VertexHierarchy> {
        let mut b = Builder::new(g, retain_level_graphs);
        for members in sets {
            let set = LevelSet::from_members(&b.current, members.clone());
            b.push_level(set)?;
        }
        Ok(b.finish())
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of vertex id slots (including deleted ones).
    pub fn universe(&self) -> usize {
        self.level_of.len()
    }

    /// Level number of `v`; 0 for deleted vertices.
    pub fn level(&self, v: VertexId) -> u32 {
        self.level_of[v as usize]
    }

    pub fn levels(&self) -> &[u32] {
        &self.level_of
    }

    pub fn is_live(&self, v: VertexId) -> bool {
        self.level_of.get(v as usize).is_some_and(|&l| l != 0)
    }

    pub fn is_top(&self, v: VertexId) -> bool {
        self.level_of.get(v as usize) == Some(&self.k)
    }

    /// Members of `L_level` for `1 <= level < k`.
    pub fn level_set(&self, level: u32) -> &[VertexId] {
        &self.levels[level as usize - 1]
    }

    /// Arcs leaving `v` in `G_{level(v)}`; for top vertices, arcs of `G_k`.
    pub fn up_out(&self, v: VertexId) -> &[HalfEdge] {
        if self.is_top(v) {
            self.top.out(v)
        } else {
            &self.snap_out[v as usize]
        }
    }

    /// Arcs entering `v` in `G_{level(v)}`.
    pub fn up_in(&self, v: VertexId) -> &[HalfEdge] {
        if self.is_top(v) {
            self.top.inn(v)
        } else if self.directed {
            &self.snap_in[v as usize]
        } else {
            &self.snap_out[v as usize]
        }
    }

    pub fn top(&self) -> &LevelGraph {
        &self.top
    }

    /// Residual graphs `G_1..G_k` when built with `retain_level_graphs`.
    pub fn level_graphs(&self) -> Option<&[LevelGraph]> {
        self.level_graphs.as_deref()
    }

    /// The stored arc `tail -> head` at the level where the lower endpoint
    /// was removed, or in `G_k` when both are top vertices.
    pub fn stored_arc(&self, tail: VertexId, head: VertexId) -> Option<HalfEdge> {
        let (lt, lh) = (self.level(tail), self.level(head));
        if lt == 0 || lh == 0 {
            return None;
        }
        if lt <= lh {
            find(self.up_out(tail), head)
        } else {
            find(self.up_in(head), tail).map(|a| HalfEdge { vertex: head, ..a })
        }
    }

    pub fn stats(&self) -> HierarchyStats {
        HierarchyStats {
            k: self.k,
            top_vertices: self.top.vertex_count(),
            top_arcs: self.top.arc_count(),
            level_sizes: self.levels.iter().map(Vec::len).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::dijkstra_all;

    fn undirected(n: usize, edges: &[(u32, u32, u32)]) -> Graph {
        Graph::from_edges(n, false, edges.iter().copied()).unwrap()
    }

    fn path3() -> Graph {
        undirected(3, &[(0, 1, 1), (1, 2, 1)])
    }

    #[test]
    fn greedy_set_on_path() {
        let g = LevelGraph::from_graph(&path3());
        assert_eq!(select_independent_set(&g).members, vec![0, 2]);
    }

    #[test]
    fn greedy_set_single_vertex() {
        let g = LevelGraph::from_graph(&undirected(1, &[]));
        assert_eq!(select_independent_set(&g).members, vec![0]);
    }

    #[test]
    fn greedy_set_on_triangle_breaks_ties_by_id() {
        let g = LevelGraph::from_graph(&undirected(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]));
        assert_eq!(select_independent_set(&g).members, vec![0]);
    }

    #[test]
    fn contract_path_ends() {
        let g = LevelGraph::from_graph(&path3());
        let set = LevelSet::from_members(&g, vec![0, 2]);
        let next = contract_level(&g, &set).unwrap();
        assert_eq!(next.vertices().collect::<Vec<_>>(), vec![1]);
        assert_eq!(next.arc_count(), 0);
    }

    #[test]
    fn contract_path_middle() {
        let g = LevelGraph::from_graph(&path3());
        let set = LevelSet::from_members(&g, vec![1]);
        let next = contract_level(&g, &set).unwrap();
        assert_eq!(next.arc(0, 2), Some(HalfEdge { vertex: 2, weight: 2, mid: Some(1) }));
        assert_eq!(next.arc(2, 0), Some(HalfEdge { vertex: 0, weight: 2, mid: Some(1) }));
        assert_eq!(next.arc_count(), 2);
    }

    #[test]
    fn contract_square_keeps_first_midpoint() {
        // a=0, b=1, c=2, d=3 on the cycle a-b-c-d-a
        let g = LevelGraph::from_graph(&undirected(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]));
        let set = LevelSet::from_members(&g, vec![0, 2]);
        let next = contract_level(&g, &set).unwrap();
        assert_eq!(next.arc(1, 3), Some(HalfEdge { vertex: 3, weight: 2, mid: Some(0) }));
        assert_eq!(next.arc(3, 1), Some(HalfEdge { vertex: 1, weight: 2, mid: Some(0) }));
    }

    #[test]
    fn contract_keeps_lighter_incumbent_and_replaces_heavier() {
        // 0-1 (1), 1-2 (1), 0-2 (5), 0-3 (1), 3-2 (1)
        let g = undirected(4, &[(0, 1, 1), (1, 2, 1), (0, 2, 5), (0, 3, 1), (3, 2, 1)]);
        let lg = LevelGraph::from_graph(&g);
        let next = contract_level(&lg, &LevelSet::from_members(&lg, vec![1, 3])).unwrap();
        assert_eq!(next.arc(0, 2), Some(HalfEdge { vertex: 2, weight: 2, mid: Some(1) }));

        let g = undirected(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 2)]);
        let lg = LevelGraph::from_graph(&g);
        let next = contract_level(&lg, &LevelSet::from_members(&lg, vec![1])).unwrap();
        assert_eq!(next.arc(0, 2), Some(HalfEdge { vertex: 2, weight: 2, mid: None }));
    }

    #[test]
    fn contract_rejects_dependent_sets() {
        let g = LevelGraph::from_graph(&path3());
        let set = LevelSet::from_members(&g, vec![0, 1]);
        assert!(matches!(contract_level(&g, &set), Err(Error::NotIndependent(0, 1))));
    }

    #[test]
    fn directed_contraction_follows_arcs() {
        let g = Graph::from_edges(3, true, [(0, 1, 1), (1, 2, 1)]).unwrap();
        let lg = LevelGraph::from_graph(&g);
        let next = contract_level(&lg, &LevelSet::from_members(&lg, vec![1])).unwrap();
        assert_eq!(next.arc(0, 2), Some(HalfEdge { vertex: 2, weight: 2, mid: Some(1) }));
        assert_eq!(next.arc(2, 0), None);
        assert_eq!(next.inn(2), &[HalfEdge { vertex: 0, weight: 2, mid: Some(1) }]);
        assert_eq!(next.arc_count(), 1);
    }

    #[test]
    fn sigma_half_on_path_gives_two_levels() {
        let h = build_hierarchy(&path3(), &HierarchyOptions::with_sigma(0.5)).unwrap();
        assert_eq!(h.k(), 2);
        assert_eq!(h.levels(), &[1, 2, 1]);
        assert_eq!(h.top().vertex_count(), 1);
        assert_eq!(h.top().arc_count(), 0);
    }

    #[test]
    fn full_decomposition_keeps_last_residual() {
        let h = build_hierarchy(&path3(), &HierarchyOptions::with_sigma(1.0)).unwrap();
        assert_eq!(h.k(), 2);
        assert!(h.is_top(1));
    }

    #[test]
    fn rule_firing_at_second_level() {
        // K4: one vertex per level, residual shrinks from 4+12 to 3+6.
        let g = undirected(4, &[(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)]);
        let h = build_hierarchy(&g, &HierarchyOptions::with_sigma(0.5)).unwrap();
        assert_eq!(h.k(), 2);
        assert_eq!(h.levels(), &[1, 2, 2, 2]);
    }

    #[test]
    fn max_k_caps_levels() {
        let g = undirected(6, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1)]);
        let h = build_hierarchy(
            &g,
            &HierarchyOptions { sigma: 1.0, max_k: Some(2), ..Default::default() },
        )
        .unwrap();
        assert_eq!(h.k(), 2);
        let h = build_hierarchy(
            &g,
            &HierarchyOptions { sigma: 1.0, max_k: Some(1), ..Default::default() },
        )
        .unwrap();
        assert_eq!(h.k(), 1);
        assert!((0..6).all(|v| h.is_top(v)));
    }

    #[test]
    fn exhaustive_mode_empties_the_top() {
        let g = crate::generate::uniform(80, 4.0, 9, false, 3);
        let h = build_hierarchy(&g, &HierarchyOptions::exhaustive()).unwrap();
        assert_eq!(h.top().arc_count(), 0);
        let capped = build_hierarchy(&g, &HierarchyOptions::with_sigma(1.0)).unwrap();
        assert!(capped.k() <= h.k());
    }

    #[test]
    fn empty_graph_has_single_level() {
        let h = build_hierarchy(&Graph::empty(false), &HierarchyOptions::default()).unwrap();
        assert_eq!(h.k(), 1);
        assert!(h.top().is_empty());
    }

    #[test]
    fn invalid_options() {
        let g = path3();
        assert!(build_hierarchy(&g, &HierarchyOptions::with_sigma(0.0)).is_err());
        assert!(build_hierarchy(&g, &HierarchyOptions::with_sigma(1.5)).is_err());
        let opts = HierarchyOptions { max_k: Some(0), ..Default::default() };
        assert!(build_hierarchy(&g, &opts).is_err());
    }

    #[test]
    fn residual_graphs_preserve_distances() {
        let g = crate::generate::uniform(60, 3.0, 9, false, 5);
        let opts = HierarchyOptions { retain_level_graphs: true, ..HierarchyOptions::exhaustive() };
        let h = build_hierarchy(&g, &opts).unwrap();
        for gi in h.level_graphs().unwrap() {
            for s in gi.vertices() {
                let truth = dijkstra_all(&g, s).unwrap();
                let inner = gi.dijkstra(s);
                for t in gi.vertices() {
                    assert_eq!(inner[t as usize], truth[t as usize].raw());
                }
            }
        }
    }
}
