//! Recovering edge labels without the text.

use crate::index::{EdgeId, EdgeLabel, Plst};
use crate::pv::{reencode_at, PvStr, PvSym};

impl Plst {
    /// Symbol `i` (1-based) of the label of edge `e`.
    ///
    /// For a long edge `(u, v)` between good nodes, `str(u, v)` equals
    /// `str(SL(u), SL(v))` except at offset `Re(v)`, where it holds
    /// `|u| + Re(v) - 1` instead of `0`. Nodes strictly between `SL(u)` and
    /// `SL(v)` are unary, so the lookup only branches at `SL(u)`.
    pub fn label_symbol(&self, e: EdgeId, i: usize) -> PvSym {
        let (mut e, mut i) = (e, i);
        loop {
            let edge = &self.edges[e as usize];
            debug_assert!(1 <= i && i <= self.gap(e));
            if i == 1 {
                return edge.first;
            }
            match edge.label {
                EdgeLabel::TextRef { start, suffix, .. } => {
                    let t = start as usize + i - 1;
                    let raw = self
                        .ref_text
                        .symbol_at(t)
                        .expect("text reference points into the reference text");
                    return reencode_at(raw, t - suffix as usize + 1, 1);
                }
                EdgeLabel::FirstSym(_) => {
                    let u = edge.parent;
                    let re = self.re_sign(edge.child);
                    if i == re {
                        return PvSym::Num((self.depth(u) + re - 1) as u32);
                    }
                    let w = self
                        .suffix_link(u)
                        .expect("long first-symbol edge has good parent");
                    let first = if re == 1 { PvSym::Num(0) } else { edge.first };
                    let mut cur = self
                        .child_edge(w, first)
                        .expect("suffix-link image of an edge exists");
                    let mut off = i;
                    loop {
                        let len = self.gap(cur);
                        if off <= len {
                            break;
                        }
                        off -= len;
                        let below = &self.nodes[self.edges[cur as usize].child as usize];
                        debug_assert_eq!(below.children.len(), 1);
                        cur = below.children[0].1;
                    }
                    e = cur;
                    i = off;
                }
            }
        }
    }

    /// The full path label `str(u, v)` of edge `e`.
    pub fn materialize_label(&self, e: EdgeId) -> PvStr {
        (1..=self.gap(e)).map(|i| self.label_symbol(e, i)).collect()
    }

    /// The string spelled by node `v`, assembled from edge labels.
    pub fn node_string(&self, v: u32) -> PvStr {
        let mut parts = Vec::new();
        let mut cur = v;
        while let Some(e) = self.nodes[cur as usize].parent_edge {
            parts.push(self.materialize_label(e));
            cur = self.edges[e as usize].parent;
        }
        parts.into_iter().rev().flat_map(|p| p.into_vec()).collect()
    }
}

/// Rebuilds `str(u, v)` from its suffix-link image `str(SL(u), SL(v))`:
/// the symbol at offset `Re(v)` becomes `|u| + Re(v) - 1`, all others are
/// copied.
pub fn restore_from_image(image: &[PvSym], re_sign: usize, parent_depth: usize) -> PvStr {
    let mut out = image.to_vec();
    if re_sign >= 1 {
        debug_assert_eq!(out[re_sign - 1], PvSym::Num(0));
        out[re_sign - 1] = PvSym::Num((parent_depth + re_sign - 1) as u32);
    }
    out.into()
}
