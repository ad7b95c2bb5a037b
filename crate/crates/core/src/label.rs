//! Relaxed vertex labels.
//!
//! The out-label of `v` lists ancestors `a` (vertices reachable upward
//! through the hierarchy, including `G_k` vertices) with an upper bound on
//! `d(v, a)` that is exact whenever a shortest path exists whose interior
//! stays below both endpoints. In-labels are the mirror image for directed
//! graphs. Every entry records how its bound was obtained so paths can be
//! unpacked later.

use std::collections::BTreeSet;

use crate::distance::{plus, Distance, INF};
use crate::hierarchy::{HalfEdge, VertexHierarchy};
use crate::VertexId;

/// Provenance of a label entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Via {
    /// The entry `(v, 0)` of `v`'s own label.
    Own,
    /// A stored arc between `v` and the ancestor, with its midpoint if the
    /// arc is augmenting.
    Direct(Option<VertexId>),
    /// Concatenation through the given direct neighbor of `v`.
    Through(VertexId),
    /// Provenance was not kept (index built without path data).
    Unrecorded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LabelEntry {
    pub ancestor: VertexId,
    pub bound: u64,
    pub via: Via,
}

impl LabelEntry {
    pub fn distance(&self) -> Distance {
        Distance::from_raw(self.bound)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabelDirection {
    /// Distances from the labeled vertex to its ancestors.
    Out,
    /// Distances from ancestors to the labeled vertex.
    In,
}

/// One label per vertex id, each sorted by ancestor id.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LabelStore {
    labels: Vec<Vec<LabelEntry>>,
}

impl LabelStore {
    pub fn from_labels(labels: Vec<Vec<LabelEntry>>) -> Self {
        LabelStore { labels }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn get(&self, v: VertexId) -> &[LabelEntry] {
        self.labels.get(v as usize).map_or(&[], Vec::as_slice)
    }

    pub fn entry(&self, v: VertexId, ancestor: VertexId) -> Option<LabelEntry> {
        let label = self.get(v);
        label
            .binary_search_by_key(&ancestor, |e| e.ancestor)
            .ok()
            .map(|i| label[i])
    }

    pub fn total_entries(&self) -> usize {
        self.labels.iter().map(Vec::len).sum()
    }

    pub(crate) fn set(&mut self, v: VertexId, label: Vec<LabelEntry>) {
        if self.labels.len() <= v as usize {
            self.labels.resize(v as usize + 1, Vec::new());
        }
        self.labels[v as usize] = label;
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = &[LabelEntry]> {
        self.labels.iter().map(Vec::as_slice)
    }

    fn forget_vias(&mut self) {
        for e in self.labels.iter_mut().flatten() {
            e.via = Via::Unrecorded;
        }
    }
}

/// Out-labels and, for directed graphs, in-labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labels {
    pub(crate) out: LabelStore,
    pub(crate) inn: Option<LabelStore>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LabelStats {
    pub entries: usize,
    pub max_len: usize,
    pub mean_len: f64,
}

impl Labels {
    /// Labels of every vertex of `h`, computed top-down.
    pub fn compute(h: &VertexHierarchy) -> Labels {
        let out = topdown(h, LabelDirection::Out);
        let inn = h.is_directed().then(|| topdown(h, LabelDirection::In));
        Labels { out, inn }
    }

    pub fn is_directed(&self) -> bool {
        self.inn.is_some()
    }

    pub fn get(&self, v: VertexId, dir: LabelDirection) -> &[LabelEntry] {
        match (dir, &self.inn) {
            (LabelDirection::In, Some(inn)) => inn.get(v),
            _ => self.out.get(v),
        }
    }

    pub fn out(&self, v: VertexId) -> &[LabelEntry] {
        self.out.get(v)
    }

    pub fn inn(&self, v: VertexId) -> &[LabelEntry] {
        self.get(v, LabelDirection::In)
    }

    pub fn store(&self, dir: LabelDirection) -> &LabelStore {
        match (dir, &self.inn) {
            (LabelDirection::In, Some(inn)) => inn,
            _ => &self.out,
        }
    }

    pub(crate) fn store_mut(&mut self, dir: LabelDirection) -> &mut LabelStore {
        match (dir, &mut self.inn) {
            (LabelDirection::In, Some(inn)) => inn,
            _ => &mut self.out,
        }
    }

    /// Drops provenance from every entry.
    pub fn forget_vias(&mut self) {
        self.out.forget_vias();
        if let Some(inn) = self.inn.as_mut() {
            inn.forget_vias();
        }
    }

    pub fn stats(&self) -> LabelStats {
        let stores = std::iter::once(&self.out).chain(self.inn.as_ref());
        let mut entries = 0;
        let mut max_len = 0;
        let mut count = 0;
        for store in stores {
            for label in store.iter().filter(|l| !l.is_empty()) {
                entries += label.len();
                max_len = max_len.max(label.len());
                count += 1;
            }
        }
        LabelStats {
            entries,
            max_len,
            mean_len: if count == 0 { 0.0 } else { entries as f64 / count as f64 },
        }
    }
}

pub(crate) fn up_arcs(h: &VertexHierarchy, v: VertexId, dir: LabelDirection) -> &[HalfEdge] {
    match dir {
        LabelDirection::Out => h.up_out(v),
        LabelDirection::In => h.up_in(v),
    }
}

/// Dense scratch space for assembling one label at a time.
pub(crate) struct Scratch {
    bound: Vec<u64>,
    via: Vec<Via>,
    touched: Vec<VertexId>,
}

impl Scratch {
    pub(crate) fn new(n: usize) -> Self {
        Scratch {
            bound: vec![INF; n],
            via: vec![Via::Unrecorded; n],
            touched: Vec::new(),
        }
    }

    pub(crate) fn offer(&mut self, ancestor: VertexId, bound: u64, via: Via) {
        let i = ancestor as usize;
        if i >= self.bound.len() {
            self.bound.resize(i + 1, INF);
            self.via.resize(i + 1, Via::Unrecorded);
        }
        if self.bound[i] == INF {
            self.touched.push(ancestor);
        }
        if bound < self.bound[i] {
            self.bound[i] = bound;
            self.via[i] = via;
        }
    }

    pub(crate) fn drain(&mut self) -> Vec<LabelEntry> {
        self.touched.sort_unstable();
        let label = self
            .touched
            .iter()
            .map(|&a| LabelEntry {
                ancestor: a,
                bound: self.bound[a as usize],
                via: self.via[a as usize],
            })
            .collect();
        for &a in &self.touched {
            self.bound[a as usize] = INF;
        }
        self.touched.clear();
        label
    }
}

/// Label of a non-top vertex from the already final labels of its direct
/// neighbors, which all sit at higher levels.
pub(crate) fn assemble(
    h: &VertexHierarchy,
    store: &LabelStore,
    v: VertexId,
    dir: LabelDirection,
    scratch: &mut Scratch,
) -> Vec<LabelEntry> {
    scratch.offer(v, 0, Via::Own);
    if h.is_top(v) {
        return scratch.drain();
    }
    let arcs = up_arcs(h, v, dir);
    for a in arcs {
        scratch.offer(a.vertex, a.weight, Via::Direct(a.mid));
    }
    let mut order: Vec<(u32, VertexId, u64)> = arcs
        .iter()
        .map(|a| (h.level(a.vertex), a.vertex, a.weight))
        .collect();
    order.sort_unstable();
    for (_, u, w) in order {
        for e in store.get(u) {
            if e.ancestor != u {
                scratch.offer(e.ancestor, plus(w, e.bound), Via::Through(u));
            }
        }
    }
    scratch.drain()
}

fn topdown(h: &VertexHierarchy, dir: LabelDirection) -> LabelStore {
    let n = h.universe();
    let mut store = LabelStore::from_labels(vec![Vec::new(); n]);
    let mut scratch = Scratch::new(n);
    for v in h.top().vertices() {
        store.set(v, vec![LabelEntry { ancestor: v, bound: 0, via: Via::Own }]);
    }
    for level in (1..h.k()).rev() {
        for &v in h.level_set(level) {
            if h.is_live(v) {
                let label = assemble(h, &store, v, dir, &mut scratch);
                store.set(v, label);
            }
        }
    }
    store
}

/// Label of `v` straight from the definition: start from `v` and its direct
/// neighbors, then repeatedly expand the unexpanded entry of lowest level.
/// Returns `(ancestor, bound)` pairs sorted by ancestor.
pub fn reference_label(h: &VertexHierarchy, v: VertexId, dir: LabelDirection) -> Vec<(VertexId, u64)> {
    let mut bound = std::collections::BTreeMap::new();
    let mut unmarked = BTreeSet::new();
    bound.insert(v, 0u64);
    unmarked.insert((h.level(v), v));
    while let Some((_, u)) = unmarked.pop_first() {
        if h.is_top(u) {
            continue;
        }
        let du = bound[&u];
        for a in up_arcs(h, u, dir) {
            let cand = plus(du, a.weight);
            let slot = bound.entry(a.vertex).or_insert(INF);
            if *slot == INF {
                unmarked.insert((h.level(a.vertex), a.vertex));
            }
            if cand < *slot {
                *slot = cand;
            }
        }
    }
    bound.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::hierarchy::{build_hierarchy, HierarchyOptions};

    fn path3() -> Graph {
        Graph::from_edges(3, false, [(0, 1, 1), (1, 2, 1)]).unwrap()
    }

    #[test]
    fn path_labels_with_two_levels() {
        let h = build_hierarchy(&path3(), &HierarchyOptions::with_sigma(0.5)).unwrap();
        let labels = Labels::compute(&h);
        let pairs = |v| labels.out(v).iter().map(|e| (e.ancestor, e.bound)).collect::<Vec<_>>();
        assert_eq!(pairs(0), vec![(0, 0), (1, 1)]);
        assert_eq!(pairs(1), vec![(1, 0)]);
        assert_eq!(pairs(2), vec![(1, 1), (2, 0)]);
        assert_eq!(labels.out(0)[1].via, Via::Direct(None));
    }

    #[test]
    fn through_entries_chain_labels() {
        // 0-1-2-3 with prescribed levels {0,2}, {1}; top {3}
        let g = Graph::from_edges(4, false, [(0, 1, 2), (1, 2, 3), (2, 3, 4)]).unwrap();
        let h = VertexHierarchy::from_level_sets(&g, &[vec![0, 2], vec![1]], false).unwrap();
        let labels = Labels::compute(&h);
        let e = labels.out.entry(0, 3).unwrap();
        assert_eq!(e.bound, 9);
        assert_eq!(e.via, Via::Through(1));
        assert_eq!(labels.out.entry(1, 3).unwrap().via, Via::Direct(Some(2)));
    }

    #[test]
    fn agrees_with_reference() {
        for seed in 0..5 {
            let g = crate::generate::uniform(40, 3.0, 7, seed % 2 == 1, seed);
            let h = build_hierarchy(&g, &HierarchyOptions::exhaustive()).unwrap();
            let labels = Labels::compute(&h);
            for dir in [LabelDirection::Out, LabelDirection::In] {
                for v in g.vertices() {
                    let got: Vec<_> = labels.get(v, dir).iter().map(|e| (e.ancestor, e.bound)).collect();
                    assert_eq!(got, reference_label(&h, v, dir));
                }
            }
        }
    }

    #[test]
    fn forgetting_vias() {
        let h = build_hierarchy(&path3(), &HierarchyOptions::with_sigma(0.5)).unwrap();
        let mut labels = Labels::compute(&h);
        labels.forget_vias();
        assert!(labels.out(0).iter().all(|e| e.via == Via::Unrecorded));
        assert_eq!(labels.stats().entries, 5);
    }
}
