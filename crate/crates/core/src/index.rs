//! The assembled index: id map, hierarchy, labels and update bookkeeping.

use std::time::Instant;

use log::info;

use crate::directed::Orientation;
use crate::distance::Distance;
use crate::dynamic::UpdateLog;
use crate::error::{Error, Result};
use crate::graph::{Graph, IdMap};
use crate::hierarchy::{build_hierarchy, HierarchyOptions, VertexHierarchy};
use crate::label::{LabelDirection, LabelEntry, Labels};
use crate::path::unpack_route;
use crate::query::{answer, Answer, QueryOptions, QueryType};
use crate::VertexId;

#[derive(Clone, Debug, PartialEq)]
pub struct IndexOptions {
    pub hierarchy: HierarchyOptions,
    /// Keep label provenance so paths can be reconstructed.
    pub path_data: bool,
}

impl Default for IndexOptions {
    fn default() -> Self {
        IndexOptions {
            hierarchy: HierarchyOptions::default(),
            path_data: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Index {
    pub(crate) ids: IdMap,
    pub(crate) hierarchy: VertexHierarchy,
    pub(crate) labels: Labels,
    pub(crate) path_data: bool,
    pub(crate) stale: bool,
    pub(crate) log: UpdateLog,
}

/// Where the endpoints of a query sit relative to `G_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Membership {
    pub source_in_top: bool,
    pub target_in_top: bool,
    pub kind: QueryType,
}

impl Index {
    pub fn build(graph: &Graph, ids: IdMap, opts: &IndexOptions) -> Result<Index> {
        if ids.len() != graph.vertex_count() {
            return Err(Error::corrupt(format!(
                "id map has {} entries for {} vertices",
                ids.len(),
                graph.vertex_count()
            )));
        }
        let started = Instant::now();
        let hierarchy = build_hierarchy(graph, &opts.hierarchy)?;
        info!(
            "hierarchy: k={} top |V|={} |E|={} in {:.2?}",
            hierarchy.k(),
            hierarchy.top().vertex_count(),
            hierarchy.top().arc_count(),
            started.elapsed()
        );
        let mut labels = Labels::compute(&hierarchy);
        if !opts.path_data {
            labels.forget_vias();
        }
        info!("labels: {} entries in {:.2?}", labels.stats().entries, started.elapsed());
        Ok(Index::from_parts(ids, hierarchy, labels, opts.path_data))
    }

    /// Builds over a graph whose vertex ids are used as external ids.
    pub fn build_identity(graph: &Graph, opts: &IndexOptions) -> Result<Index> {
        Index::build(graph, IdMap::identity(graph.vertex_count()), opts)
    }

    pub fn from_parts(ids: IdMap, hierarchy: VertexHierarchy, labels: Labels, path_data: bool) -> Index {
        Index {
            ids,
            hierarchy,
            labels,
            path_data,
            stale: false,
            log: UpdateLog::default(),
        }
    }

    pub fn is_directed(&self) -> bool {
        self.hierarchy.is_directed()
    }

    pub fn orientation(&self) -> Orientation {
        Orientation::of(self.is_directed())
    }

    pub fn has_path_data(&self) -> bool {
        self.path_data
    }

    /// Set after a deletion that may have broken exactness; answers are no
    /// longer guaranteed until the index is rebuilt.
    pub fn is_stale(&self) -> bool {
        self.stale
    }

    pub fn update_log(&self) -> &UpdateLog {
        &self.log
    }

    pub fn ids(&self) -> &IdMap {
        &self.ids
    }

    pub fn hierarchy(&self) -> &VertexHierarchy {
        &self.hierarchy
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    /// Number of live vertices.
    pub fn vertex_count(&self) -> usize {
        self.hierarchy.levels().iter().filter(|&&l| l != 0).count()
    }

    pub fn internal(&self, external: u64) -> Result<VertexId> {
        self.ids.internal(external).ok_or(Error::UnknownVertex(external))
    }

    fn check(&self, v: VertexId) -> Result<()> {
        if self.hierarchy.is_live(v) {
            Ok(())
        } else {
            Err(Error::InvalidVertex(v))
        }
    }

    pub fn out_label(&self, v: VertexId) -> &[LabelEntry] {
        self.labels.get(v, LabelDirection::Out)
    }

    pub fn in_label(&self, v: VertexId) -> &[LabelEntry] {
        self.labels.get(v, LabelDirection::In)
    }

    /// Exact distance between internal ids `s` and `t`.
    pub fn distance(&self, s: VertexId, t: VertexId) -> Result<Distance> {
        Ok(self.query_with(s, t, &QueryOptions::default())?.distance)
    }

    /// Distance between external ids.
    pub fn distance_external(&self, s: u64, t: u64) -> Result<Distance> {
        self.distance(self.internal(s)?, self.internal(t)?)
    }

    pub fn query_with(&self, s: VertexId, t: VertexId, opts: &QueryOptions) -> Result<Answer> {
        self.check(s)?;
        self.check(t)?;
        Ok(answer(self.hierarchy.top(), self.out_label(s), self.in_label(t), opts))
    }

    pub fn classify(&self, s: VertexId, t: VertexId) -> Result<Membership> {
        self.check(s)?;
        self.check(t)?;
        Ok(Membership {
            source_in_top: self.hierarchy.is_top(s),
            target_in_top: self.hierarchy.is_top(t),
            kind: crate::query::classify(self.hierarchy.top(), self.out_label(s), self.in_label(t)),
        })
    }

    /// Distance and vertex sequence from `s` to `t` (internal ids), or
    /// `None` when `t` is unreachable.
    pub fn shortest_path(&self, s: VertexId, t: VertexId) -> Result<Option<(Distance, Vec<VertexId>)>> {
        if !self.path_data {
            return Err(Error::PathDataUnavailable);
        }
        let opts = QueryOptions { prune: true, track_route: true };
        let a = self.query_with(s, t, &opts)?;
        let Some(route) = a.route else {
            return Ok(None);
        };
        let path = unpack_route(&self.hierarchy, &self.labels, s, t, &route)?;
        Ok(Some((a.distance, path)))
    }

    /// Path between external ids, reported in external ids.
    pub fn shortest_path_external(&self, s: u64, t: u64) -> Result<Option<(Distance, Vec<u64>)>> {
        let found = self.shortest_path(self.internal(s)?, self.internal(t)?)?;
        Ok(found.map(|(d, p)| (d, p.into_iter().map(|v| self.ids.external(v)).collect())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::dijkstra_oracle;

    #[test]
    fn answers_match_dijkstra() {
        let g = crate::generate::uniform(300, 4.0, 20, false, 11);
        let index = Index::build_identity(&g, &IndexOptions::default()).unwrap();
        for (s, t) in crate::generate::random_pairs(300, 300, 3) {
            assert_eq!(index.distance(s, t).unwrap(), dijkstra_oracle(&g, s, t).unwrap());
        }
    }

    #[test]
    fn paths_have_the_reported_length() {
        let g = crate::generate::uniform(200, 3.0, 9, false, 4);
        let index = Index::build_identity(&g, &IndexOptions::default()).unwrap();
        for (s, t) in crate::generate::random_pairs(200, 200, 8) {
            match index.shortest_path(s, t).unwrap() {
                Some((d, path)) => {
                    assert_eq!(path.first(), Some(&s));
                    assert_eq!(path.last(), Some(&t));
                    let len: u64 = path.windows(2).map(|w| g.weight(w[0], w[1]).unwrap() as u64).sum();
                    assert_eq!(Distance::new(len), d);
                }
                None => assert!(!dijkstra_oracle(&g, s, t).unwrap().is_finite()),
            }
        }
    }

    #[test]
    fn self_query_is_zero() {
        let g = crate::generate::uniform(50, 3.0, 9, false, 1);
        let index = Index::build_identity(&g, &IndexOptions::default()).unwrap();
        for v in g.vertices() {
            assert_eq!(index.distance(v, v).unwrap(), Distance::ZERO);
            assert_eq!(index.shortest_path(v, v).unwrap().unwrap().1, vec![v]);
        }
    }

    #[test]
    fn no_path_data() {
        let g = crate::generate::uniform(50, 3.0, 9, false, 1);
        let opts = IndexOptions { path_data: false, ..Default::default() };
        let index = Index::build_identity(&g, &opts).unwrap();
        assert!(matches!(index.shortest_path(0, 1), Err(Error::PathDataUnavailable)));
        assert_eq!(index.distance(0, 1).unwrap(), dijkstra_oracle(&g, 0, 1).unwrap());
    }

    #[test]
    fn unknown_ids_are_rejected() {
        let g = crate::generate::uniform(10, 2.0, 3, false, 1);
        let index = Index::build_identity(&g, &IndexOptions::default()).unwrap();
        assert!(matches!(index.distance(0, 10), Err(Error::InvalidVertex(10))));
        assert!(matches!(index.distance_external(0, 99), Err(Error::UnknownVertex(99))));
    }
}
