//! Exact point-to-point shortest distances and paths on large weighted
//! graphs through an independent-set vertex hierarchy and relaxed labels.
//!
//! ```
//! use islabel::{generate, Index, IndexOptions};
//!
//! let graph = generate::uniform(200, 4.0, 10, false, 7);
//! let index = Index::build_identity(&graph, &IndexOptions::default()).unwrap();
//! let d = index.distance(3, 42).unwrap();
//! assert_eq!(d, islabel::oracle::dijkstra_oracle(&graph, 3, 42).unwrap());
//! ```

pub mod directed;
mod distance;
pub mod dynamic;
mod error;
pub mod generate;
pub mod graph;
pub mod hierarchy;
mod index;
pub mod label;
pub mod oracle;
pub mod path;
pub mod query;
pub mod store;

/// Dense internal vertex id.
pub type VertexId = u32;

/// Edge weight of an input graph.
pub type Weight = u32;

/// Marker for "no vertex" in fixed-width records.
pub const NO_VERTEX: VertexId = u32::MAX;

pub use directed::Orientation;
pub use distance::Distance;
pub use dynamic::{should_rebuild, RebuildPolicy, UpdateLog};
pub use error::{Error, Result};
pub use graph::{load_edge_list, parse_edge_list, Graph, IdMap, Neighbor};
pub use hierarchy::{build_hierarchy, HierarchyOptions, VertexHierarchy};
pub use index::{Index, IndexOptions, Membership};
pub use label::{LabelDirection, LabelEntry, Labels, Via};
pub use query::{Answer, QueryOptions, QueryType};
pub use store::{load_index, save_index, IndexReader};
