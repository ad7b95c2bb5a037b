//! Vertex insertion and deletion on a built (undirected) index.
//!
//! A new vertex joins `G_k`. Its edges are pushed up the hierarchy the way
//! contraction would have produced them, then labels of every vertex whose
//! upward closure gained the new vertex are reassembled. Deleting a vertex
//! drops it from all snapshots and the top graph and reassembles the labels
//! below it; if any stored augmenting arc was routed through the deleted
//! vertex the index is flagged stale, since the arc would have to be
//! recomputed from the (no longer available) input graph.

use std::collections::BTreeSet;

use rustc_hash::{FxHashMap, FxHashSet};

use crate::distance::plus;
use crate::error::{Error, Result};
use crate::hierarchy::{HalfEdge, VertexHierarchy};
use crate::index::Index;
use crate::label::{assemble, LabelDirection, LabelEntry, Scratch, Via};
use crate::{VertexId, Weight};

/// Counters of updates applied since the index was built.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct UpdateLog {
    pub inserted: u64,
    pub deleted: u64,
    /// Labels reassembled by updates.
    pub touched_labels: u64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RebuildPolicy {
    /// Rebuild once insertions, deletions or reassembled labels exceed this
    /// fraction of the live vertex count.
    pub max_update_fraction: f64,
}

impl Default for RebuildPolicy {
    fn default() -> Self {
        RebuildPolicy { max_update_fraction: 0.1 }
    }
}

/// Whether an index with this update history should be rebuilt.
pub fn should_rebuild(index: &Index, policy: &RebuildPolicy) -> bool {
    if index.is_stale() {
        return true;
    }
    let log = index.update_log();
    let limit = policy.max_update_fraction * index.vertex_count().max(1) as f64;
    [log.inserted, log.deleted, log.touched_labels]
        .iter()
        .any(|&c| c as f64 > limit)
}

/// Vertices whose snapshot contains an arc to one of `roots`, transitively,
/// together with the roots themselves, sorted by descending level.
fn descendants(h: &VertexHierarchy, roots: &[VertexId]) -> Vec<VertexId> {
    let mut down: FxHashMap<VertexId, Vec<VertexId>> = FxHashMap::default();
    for w in 0..h.universe() as VertexId {
        if h.is_live(w) && !h.is_top(w) {
            for a in h.up_out(w) {
                down.entry(a.vertex).or_default().push(w);
            }
        }
    }
    let mut seen: FxHashSet<VertexId> = roots.iter().copied().collect();
    let mut stack = roots.to_vec();
    while let Some(v) = stack.pop() {
        for &w in down.get(&v).map_or(&[][..], Vec::as_slice) {
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    let mut out: Vec<VertexId> = seen.into_iter().filter(|&v| h.is_live(v)).collect();
    out.sort_unstable_by_key(|&v| (std::cmp::Reverse(h.level(v)), v));
    out
}

impl Index {
    fn relabel(&mut self, vertices: &[VertexId]) {
        let mut scratch = Scratch::new(self.hierarchy.universe());
        let store = self.labels.store_mut(LabelDirection::Out);
        for &v in vertices {
            let mut label = assemble(&self.hierarchy, store, v, LabelDirection::Out, &mut scratch);
            if !self.path_data {
                label.iter_mut().for_each(|e| e.via = Via::Unrecorded);
            }
            store.set(v, label);
        }
        self.log.touched_labels += vertices.len() as u64;
    }

    /// Adds vertex `external` with the given (external id, weight) edges.
    /// Returns its internal id.
    pub fn insert_vertex(&mut self, external: u64, edges: &[(u64, Weight)]) -> Result<VertexId> {
        if self.is_directed() {
            return Err(Error::UnsupportedDirected("vertex insertion"));
        }
        let mut delta: FxHashMap<VertexId, (u64, Option<VertexId>)> = FxHashMap::default();
        for &(x, w) in edges {
            if w == 0 {
                return Err(Error::NonPositiveWeight { line: 0, weight: 0 });
            }
            let x = self.internal(x)?;
            let slot = delta.entry(x).or_insert((w as u64, None));
            slot.0 = slot.0.min(w as u64);
        }
        let u = self.ids.push(external)?;
        let h = &mut self.hierarchy;
        let k = h.k;
        h.level_of.push(k);
        h.snap_out.push(Vec::new());
        let top_id = h.top.push_vertex(true);
        debug_assert_eq!(top_id, u);
        self.labels
            .store_mut(LabelDirection::Out)
            .set(u, vec![LabelEntry { ancestor: u, bound: 0, via: Via::Own }]);

        let mut queue: BTreeSet<(u32, VertexId)> = delta.keys().map(|&x| (h.level(x), x)).collect();
        let mut gained = Vec::new();
        while let Some((level, x)) = queue.pop_first() {
            let (d, mid) = delta[&x];
            let arc = HalfEdge { vertex: u, weight: d, mid };
            if level == k {
                h.top.upsert_arc(x, arc);
                continue;
            }
            let snap = &mut h.snap_out[x as usize];
            match snap.binary_search_by_key(&u, |a| a.vertex) {
                Ok(i) => snap[i] = arc,
                Err(i) => snap.insert(i, arc),
            }
            gained.push(x);
            for y in h.snap_out[x as usize].clone() {
                if y.vertex == u {
                    continue;
                }
                let cand = plus(d, y.weight);
                let better = delta.get(&y.vertex).map_or(true, |&(cur, _)| cand < cur);
                if better {
                    delta.insert(y.vertex, (cand, Some(x)));
                    queue.insert((h.level(y.vertex), y.vertex));
                }
            }
        }
        let affected = descendants(&self.hierarchy, &gained);
        self.relabel(&affected);
        self.log.inserted += 1;
        Ok(u)
    }

    /// Removes vertex `external`. Returns `true` when the deletion left the
    /// index stale.
    pub fn delete_vertex(&mut self, external: u64) -> Result<bool> {
        if self.is_directed() {
            return Err(Error::UnsupportedDirected("vertex deletion"));
        }
        let u = self.internal(external)?;
        let h = &self.hierarchy;
        let snap = h.up_out(u).to_vec();
        let routed_through_u = !h.is_top(u)
            && snap.iter().enumerate().any(|(i, a)| {
                snap[i + 1..].iter().any(|b| {
                    h.stored_arc(a.vertex, b.vertex).is_some_and(|arc| arc.mid == Some(u))
                })
            });
        let mut affected = descendants(h, &[u]);
        affected.retain(|&v| v != u);

        let old_level = h.level(u);
        let h = &mut self.hierarchy;
        for &w in &affected {
            h.snap_out[w as usize].retain(|a| a.vertex != u);
        }
        if h.is_top(u) {
            h.top.remove_vertex(u);
        }
        h.snap_out[u as usize].clear();
        h.level_of[u as usize] = 0;
        if old_level < h.k {
            h.levels[old_level as usize - 1].retain(|&v| v != u);
        }
        self.labels.store_mut(LabelDirection::Out).set(u, Vec::new());
        self.ids.retire(u);
        self.relabel(&affected);
        self.stale |= routed_through_u;
        self.log.deleted += 1;
        Ok(routed_through_u)
    }
}
