//! Path unpacking.
//!
//! Augmenting arcs remember the removed vertex they bypass, and label
//! entries remember the neighbor they were concatenated through, so any
//! answer can be expanded back into a vertex sequence of the input graph.

use crate::error::{Error, Result};
use crate::hierarchy::{find, VertexHierarchy};
use crate::label::{up_arcs, LabelDirection, Labels, Via};
use crate::query::Route;
use crate::VertexId;

/// Appends the interior and head of the stored arc `tail -> head` to `out`.
pub fn expand_arc(
    h: &VertexHierarchy,
    tail: VertexId,
    head: VertexId,
    mid: Option<VertexId>,
    out: &mut Vec<VertexId>,
) -> Result<()> {
    if let Some(m) = mid {
        if !h.is_live(m) {
            return Err(Error::PathDataUnavailable);
        }
        let first = find(h.up_in(m), tail).ok_or(Error::PathDataUnavailable)?;
        let second = find(h.up_out(m), head).ok_or(Error::PathDataUnavailable)?;
        expand_arc(h, tail, m, first.mid, out)?;
        expand_arc(h, m, head, second.mid, out)?;
    } else {
        out.push(head);
    }
    Ok(())
}

fn direct(h: &VertexHierarchy, v: VertexId, u: VertexId, dir: LabelDirection) -> Result<Option<VertexId>> {
    find(up_arcs(h, v, dir), u)
        .map(|a| a.mid)
        .ok_or(Error::PathDataUnavailable)
}

/// Appends the path `v -> ... -> a` behind the out-label entry of `v` for
/// `a`, excluding `v` itself.
fn extend_out(h: &VertexHierarchy, labels: &Labels, v: VertexId, a: VertexId, out: &mut Vec<VertexId>) -> Result<()> {
    let e = labels.out.entry(v, a).ok_or(Error::PathDataUnavailable)?;
    match e.via {
        Via::Own => Ok(()),
        Via::Direct(mid) => expand_arc(h, v, a, mid, out),
        Via::Through(u) => {
            let mid = direct(h, v, u, LabelDirection::Out)?;
            expand_arc(h, v, u, mid, out)?;
            extend_out(h, labels, u, a, out)
        }
        Via::Unrecorded => Err(Error::PathDataUnavailable),
    }
}

/// Appends the path `a -> ... -> v` behind the in-label entry of `v` for
/// `a`, excluding `a` itself.
fn extend_in(h: &VertexHierarchy, labels: &Labels, v: VertexId, a: VertexId, out: &mut Vec<VertexId>) -> Result<()> {
    if !labels.is_directed() {
        let mut back = vec![v];
        extend_out(h, labels, v, a, &mut back)?;
        back.pop();
        out.extend(back.into_iter().rev());
        return Ok(());
    }
    let store = labels.store(LabelDirection::In);
    let e = store.entry(v, a).ok_or(Error::PathDataUnavailable)?;
    match e.via {
        Via::Own => Ok(()),
        Via::Direct(mid) => expand_arc(h, a, v, mid, out),
        Via::Through(u) => {
            extend_in(h, labels, u, a, out)?;
            let mid = direct(h, v, u, LabelDirection::In)?;
            expand_arc(h, u, v, mid, out)
        }
        Via::Unrecorded => Err(Error::PathDataUnavailable),
    }
}

/// Path `v -> ... -> a` for an ancestor `a` in the out-label of `v`.
pub fn out_path(h: &VertexHierarchy, labels: &Labels, v: VertexId, a: VertexId) -> Result<Vec<VertexId>> {
    let mut path = vec![v];
    extend_out(h, labels, v, a, &mut path)?;
    Ok(path)
}

/// Path `a -> ... -> v` for an ancestor `a` in the in-label of `v`.
pub fn in_path(h: &VertexHierarchy, labels: &Labels, v: VertexId, a: VertexId) -> Result<Vec<VertexId>> {
    let mut path = vec![a];
    extend_in(h, labels, v, a, &mut path)?;
    Ok(path)
}

/// Vertex sequence `s, ..., t` realizing `route`.
pub fn unpack_route(
    h: &VertexHierarchy,
    labels: &Labels,
    s: VertexId,
    t: VertexId,
    route: &Route,
) -> Result<Vec<VertexId>> {
    match route {
        Route::Label { witness } => {
            let mut path = out_path(h, labels, s, *witness)?;
            extend_in(h, labels, t, *witness, &mut path)?;
            Ok(path)
        }
        Route::Top { entry, arcs, exit } => {
            let mut path = out_path(h, labels, s, *entry)?;
            for &(tail, head, mid) in arcs {
                expand_arc(h, tail, head, mid, &mut path)?;
            }
            extend_in(h, labels, t, *exit, &mut path)?;
            Ok(path)
        }
    }
}
