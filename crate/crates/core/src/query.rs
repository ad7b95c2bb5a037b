//! Distance queries over labels and the top graph.
//!
//! A query whose source out-label or target in-label has no ancestor in
//! `G_k` is answered by label intersection alone (type 1). Otherwise the
//! intersection gives an initial upper bound and a bidirectional Dijkstra
//! over `G_k`, seeded from the top ancestors in both labels, tightens it
//! (type 2).

use std::cell::RefCell;
use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::distance::{plus, Distance, INF};
use crate::hierarchy::LevelGraph;
use crate::label::LabelEntry;
use crate::VertexId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QueryType {
    Type1,
    Type2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QueryOptions {
    /// Stop the search once the two frontiers cannot improve the bound.
    pub prune: bool,
    /// Track enough of the search to rebuild a path afterwards.
    pub track_route: bool,
}

impl Default for QueryOptions {
    fn default() -> Self {
        QueryOptions { prune: true, track_route: false }
    }
}

/// How the optimal distance was obtained, in terms the path unpacker
/// understands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Route {
    /// `s` reaches the common ancestor `witness` through its out-label and
    /// `t` is reached from it through its in-label.
    Label { witness: VertexId },
    /// `s -> entry` through the out-label, then `arcs` inside `G_k`
    /// (`tail, head, mid`), then `exit -> t` through the in-label.
    Top {
        entry: VertexId,
        arcs: Vec<(VertexId, VertexId, Option<VertexId>)>,
        exit: VertexId,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Answer {
    pub distance: Distance,
    pub kind: QueryType,
    /// `None` for unreachable targets or when routes were not tracked.
    pub route: Option<Route>,
    /// Vertices popped from either queue.
    pub settled: usize,
}

/// Minimum of `bound_s(w) + bound_t(w)` over common ancestors `w`, with
/// the smallest such `w` as witness. Both labels must be sorted by ancestor.
pub fn intersect_labels(out_s: &[LabelEntry], in_t: &[LabelEntry]) -> (Distance, Option<VertexId>) {
    let (mut i, mut j) = (0, 0);
    let mut best = INF;
    let mut witness = None;
    while i < out_s.len() && j < in_t.len() {
        let (a, b) = (&out_s[i], &in_t[j]);
        if a.ancestor < b.ancestor {
            i += 1;
        } else if a.ancestor > b.ancestor {
            j += 1;
        } else {
            let d = plus(a.bound, b.bound);
            if d < best {
                best = d;
                witness = Some(a.ancestor);
            }
            i += 1;
            j += 1;
        }
    }
    (Distance::from_raw(best), witness)
}

/// Type 1 when either label has no ancestor in `G_k`.
pub fn classify(top: &LevelGraph, out_s: &[LabelEntry], in_t: &[LabelEntry]) -> QueryType {
    let reaches_top = |label: &[LabelEntry]| label.iter().any(|e| top.contains(e.ancestor));
    if reaches_top(out_s) && reaches_top(in_t) {
        QueryType::Type2
    } else {
        QueryType::Type1
    }
}

/// Answers a query from the two labels, searching `G_k` when needed.
pub fn answer(top: &LevelGraph, out_s: &[LabelEntry], in_t: &[LabelEntry], opts: &QueryOptions) -> Answer {
    let (bound, witness) = intersect_labels(out_s, in_t);
    let kind = classify(top, out_s, in_t);
    match kind {
        QueryType::Type1 => Answer {
            distance: bound,
            kind,
            route: if opts.track_route { witness.map(|w| Route::Label { witness: w }) } else { None },
            settled: 0,
        },
        QueryType::Type2 => {
            let search = bi_dijkstra_from(top, out_s, in_t, bound, witness, opts);
            Answer { kind, ..search }
        }
    }
}

/// Bidirectional Dijkstra over `G_k` seeded from the labels, starting from
/// the label-intersection bound.
pub fn bi_dijkstra(top: &LevelGraph, out_s: &[LabelEntry], in_t: &[LabelEntry], opts: &QueryOptions) -> Answer {
    let (bound, witness) = intersect_labels(out_s, in_t);
    bi_dijkstra_from(top, out_s, in_t, bound, witness, opts)
}

#[derive(Clone, Copy, Debug)]
enum Parent {
    Seed,
    Arc(VertexId, Option<VertexId>),
}

/// One search direction. Distances live in a dense array that is reset
/// through the `touched` list, so the buffers can be reused across queries.
#[derive(Default)]
struct Side {
    dist: Vec<u64>,
    parent: Vec<Parent>,
    touched: Vec<VertexId>,
    heap: BinaryHeap<Reverse<(u64, VertexId)>>,
    track: bool,
}

impl Side {
    fn prepare(&mut self, universe: usize, track: bool) {
        for &v in &self.touched {
            self.dist[v as usize] = INF;
        }
        self.touched.clear();
        self.heap.clear();
        if self.dist.len() < universe {
            self.dist.resize(universe, INF);
            self.parent.resize(universe, Parent::Seed);
        }
        self.track = track;
    }

    fn min_key(&self) -> Option<u64> {
        self.heap.peek().map(|Reverse((d, _))| *d)
    }

    fn improve(&mut self, v: VertexId, d: u64, parent: Parent) -> bool {
        let slot = &mut self.dist[v as usize];
        if d >= *slot {
            return false;
        }
        if *slot == INF {
            self.touched.push(v);
        }
        *slot = d;
        if self.track {
            self.parent[v as usize] = parent;
        }
        self.heap.push(Reverse((d, v)));
        true
    }

    fn get(&self, v: VertexId) -> u64 {
        self.dist[v as usize]
    }

    fn parent(&self, v: VertexId) -> Parent {
        self.parent[v as usize]
    }
}

thread_local! {
    static SIDES: RefCell<(Side, Side)> = RefCell::new((Side::default(), Side::default()));
}

#[derive(Clone, Copy)]
enum Meet {
    Label(VertexId),
    Top(VertexId),
}

fn bi_dijkstra_from(
    top: &LevelGraph,
    out_s: &[LabelEntry],
    in_t: &[LabelEntry],
    bound: Distance,
    witness: Option<VertexId>,
    opts: &QueryOptions,
) -> Answer {
    SIDES.with(|sides| {
        let (fwd, rev) = &mut *sides.borrow_mut();
        fwd.prepare(top.universe(), opts.track_route);
        rev.prepare(top.universe(), opts.track_route);
        search(top, out_s, in_t, bound, witness, opts, fwd, rev)
    })
}

#[allow(clippy::too_many_arguments)]
fn search(
    top: &LevelGraph,
    out_s: &[LabelEntry],
    in_t: &[LabelEntry],
    bound: Distance,
    witness: Option<VertexId>,
    opts: &QueryOptions,
    fwd: &mut Side,
    rev: &mut Side,
) -> Answer {
    let mut mu = bound.raw();
    let mut meet = witness.map(Meet::Label);

    for e in out_s.iter().filter(|e| top.contains(e.ancestor)) {
        fwd.improve(e.ancestor, e.bound, Parent::Seed);
    }
    for e in in_t.iter().filter(|e| top.contains(e.ancestor)) {
        if rev.improve(e.ancestor, e.bound, Parent::Seed) {
            let total = plus(e.bound, fwd.get(e.ancestor));
            if total < mu {
                mu = total;
                meet = Some(Meet::Top(e.ancestor));
            }
        }
    }

    let mut settled = 0;
    while let (Some(kf), Some(kr)) = (fwd.min_key(), rev.min_key()) {
        if opts.prune && plus(kf, kr) >= mu {
            break;
        }
        let forward = kf <= kr;
        let (this, other) = if forward { (&mut *fwd, &*rev) } else { (&mut *rev, &*fwd) };
        let Reverse((d, v)) = this.heap.pop().expect("non-empty queue");
        if d > this.get(v) {
            continue;
        }
        settled += 1;
        let arcs = if forward { top.out(v) } else { top.inn(v) };
        for a in arcs {
            let nd = plus(d, a.weight);
            if this.improve(a.vertex, nd, Parent::Arc(v, a.mid)) {
                let total = plus(nd, other.get(a.vertex));
                if total < mu {
                    mu = total;
                    meet = Some(Meet::Top(a.vertex));
                }
            }
        }
    }

    let route = if opts.track_route && mu != INF {
        meet.map(|m| match m {
            Meet::Label(w) => Route::Label { witness: w },
            Meet::Top(m) => top_route(fwd, rev, m),
        })
    } else {
        None
    };
    Answer {
        distance: Distance::from_raw(mu),
        kind: QueryType::Type2,
        route,
        settled,
    }
}

fn top_route(fwd: &Side, rev: &Side, m: VertexId) -> Route {
    let mut arcs = Vec::new();
    let mut v = m;
    while let Parent::Arc(p, mid) = fwd.parent(v) {
        arcs.push((p, v, mid));
        v = p;
    }
    let entry = v;
    arcs.reverse();
    let mut v = m;
    while let Parent::Arc(p, mid) = rev.parent(v) {
        arcs.push((v, p, mid));
        v = p;
    }
    Route::Top { entry, arcs, exit: v }
}
