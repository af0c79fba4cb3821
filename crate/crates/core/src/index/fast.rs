use crate::error::Result;
use crate::index::{internal, EdgeLabel, NodeId, Plst};
use crate::pv::PvSym;

/// Fast link of a long edge `(u, v)` between good nodes: the first
/// `SL^k(u)`, `k >= 1`, at which the image edge `v_k` is shorter than the
/// original, carries a nonzero re-encoding sign, or has a bad endpoint. Above
/// that level the matcher would pass its pattern slice down unchanged.
pub(crate) fn fast_link(plst: &Plst, edge: u32) -> Result<NodeId> {
    let e = plst.edge(edge);
    let gap = plst.gap(edge);
    let first = if plst.re_sign(e.child) == 1 {
        PvSym::Num(0)
    } else {
        e.first
    };
    let mut w = e.parent;
    loop {
        w = plst
            .suffix_link(w)
            .ok_or_else(|| internal(format!("fast-link walk from edge {edge} hit a bad node")))?;
        let ek = plst
            .child_edge(w, first)
            .ok_or_else(|| internal(format!("edge {edge} has no image below node {w}")))?;
        let vk = plst.edge(ek).child;
        let shorter = plst.gap(ek) < gap;
        if shorter || plst.re_sign(vk) > 0 || !plst.is_good(w) || !plst.is_good(vk) {
            return Ok(w);
        }
    }
}

pub(crate) fn assign_fast_links(plst: &mut Plst) -> Result<()> {
    for e in 0..plst.edges.len() {
        let edge = &plst.edges[e];
        let eligible = !edge.single
            && matches!(edge.label, EdgeLabel::FirstSym(_))
            && plst.is_good(edge.parent)
            && plst.is_good(edge.child);
        if eligible {
            let fl = fast_link(plst, e as u32)?;
            plst.edges[e].fast_link = Some(fl);
        }
    }
    Ok(())
}
