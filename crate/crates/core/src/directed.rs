//! Directed graphs.
//!
//! Directed indexes carry both label directions: the out-label of `v` bounds
//! `d(v, a)` for its ancestors and the in-label bounds `d(a, v)`. Hierarchy
//! construction ignores arc directions when choosing independent sets but
//! follows them when adding augmenting arcs (`a -> v -> b` becomes
//! `a -> b`), and the top-graph search walks out-arcs forward and in-arcs
//! backward.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Undirected,
    Directed,
}

impl Orientation {
    pub fn of(directed: bool) -> Self {
        if directed {
            Orientation::Directed
        } else {
            Orientation::Undirected
        }
    }

    pub fn is_directed(self) -> bool {
        self == Orientation::Directed
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Orientation::Undirected => "undirected",
            Orientation::Directed => "directed",
        }
    }

    /// Fails when a request made for `requested` reaches an index built as
    /// `self`.
    pub fn ensure(self, requested: Orientation) -> Result<()> {
        if self == requested {
            Ok(())
        } else {
            Err(Error::DirectednessMismatch {
                index: self.as_str(),
                request: requested.as_str(),
            })
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::index::{Index, IndexOptions};
    use crate::oracle::dijkstra_oracle;
    use crate::Distance;

    #[test]
    fn mismatch_is_an_error() {
        assert!(Orientation::Directed.ensure(Orientation::Directed).is_ok());
        assert!(matches!(
            Orientation::Undirected.ensure(Orientation::Directed),
            Err(Error::DirectednessMismatch { index: "undirected", request: "directed" })
        ));
    }

    #[test]
    fn asymmetric_distances() {
        // 0 -> 1 -> 2 -> 0 with weights 1, 2, 3
        let g = Graph::from_edges(3, true, [(0, 1, 1), (1, 2, 2), (2, 0, 3)]).unwrap();
        let index = Index::build_identity(&g, &IndexOptions::default()).unwrap();
        assert_eq!(index.distance(0, 2).unwrap(), Distance::new(3));
        assert_eq!(index.distance(2, 0).unwrap(), Distance::new(3));
        assert_eq!(index.distance(1, 0).unwrap(), Distance::new(5));
        assert_eq!(index.distance(0, 1).unwrap(), Distance::new(1));
    }

    #[test]
    fn one_way_reachability() {
        let g = Graph::from_edges(3, true, [(0, 1, 1), (1, 2, 1)]).unwrap();
        let index = Index::build_identity(&g, &IndexOptions::default()).unwrap();
        assert_eq!(index.distance(0, 2).unwrap(), Distance::new(2));
        assert_eq!(index.distance(2, 0).unwrap(), Distance::INFINITY);
    }

    #[test]
    fn random_directed_graphs() {
        for seed in 0..4 {
            let g = crate::generate::uniform(150, 4.0, 10, true, seed);
            let index = Index::build_identity(&g, &IndexOptions::default()).unwrap();
            for (s, t) in crate::generate::random_pairs(150, 200, seed + 100) {
                assert_eq!(index.distance(s, t).unwrap(), dijkstra_oracle(&g, s, t).unwrap());
                if let Some((d, path)) = index.shortest_path(s, t).unwrap() {
                    let len: u64 = path.windows(2).map(|w| g.weight(w[0], w[1]).unwrap() as u64).sum();
                    assert_eq!(Distance::new(len), d);
                }
            }
        }
    }
}
