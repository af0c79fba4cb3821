//! The linear-size suffix trie for parameterized strings.
//!
//! Nodes are the Type 1 nodes of the parameterized suffix trie (leaves,
//! branching nodes and the root) plus the Type 2 nodes (non-Type 1 nodes
//! whose suffix-link image is Type 1). An edge `(u, v)` of depth gap 1 keeps
//! its single symbol. A longer edge between two good nodes keeps only its
//! first symbol and is decoded through the suffix link of `u`, using the
//! re-encoding sign of `v` to patch the one position that differs. A longer
//! edge touching a bad node refers into the reference text.

mod fast;
mod label;
mod reftext;

use std::fmt;

pub use label::restore_from_image;
pub use reftext::{Chunk, RefText};

use crate::error::{Error, Result};
use crate::pv::{PStr, PvSym};
use crate::trie::{PsTrie, TrieNodeId, DEFAULT_NODE_BUDGET, NIL};

pub type NodeId = u32;
pub type EdgeId = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeType {
    Type1,
    Type2,
}

impl NodeType {
    pub fn number(self) -> u8 {
        match self {
            NodeType::Type1 => 1,
            NodeType::Type2 => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlstNode {
    pub node_type: NodeType,
    /// String depth `|u|`, not the number of tree edges above the node.
    pub depth: u32,
    pub good: bool,
    pub suffix_link: Option<NodeId>,
    pub re_sign: u32,
    pub parent_edge: Option<EdgeId>,
    /// Outgoing edges keyed by the first symbol of their label, sorted.
    pub children: Vec<(PvSym, EdgeId)>,
    /// Start position of the suffix ending here, for leaves.
    pub leaf_suffix: Option<u32>,
}

/// How an edge label is stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeLabel {
    /// Only the first symbol is kept; the rest is recovered via suffix links.
    FirstSym(PvSym),
    /// `⟨T'⟩_suffix[start:end]` in original text coordinates.
    TextRef { start: u32, end: u32, suffix: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlstEdge {
    pub parent: NodeId,
    pub child: NodeId,
    /// First symbol of the label; also the key in the parent's child map.
    pub first: PvSym,
    pub single: bool,
    pub label: EdgeLabel,
    pub fast_link: Option<NodeId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plst {
    pub(crate) nodes: Vec<PlstNode>,
    pub(crate) edges: Vec<PlstEdge>,
    pub(crate) ref_text: RefText,
    pub(crate) text_len: usize,
}

/// Size summary of an index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Stats {
    pub n: usize,
    pub type1: usize,
    pub type2: usize,
    pub bad: usize,
    pub ref_text_len: usize,
    pub edges: usize,
    pub single_edges: usize,
}

impl fmt::Display for Stats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} type1={} type2={} bad={} ref_text_len={} edges={} single_edges={}",
            self.n,
            self.type1,
            self.type2,
            self.bad,
            self.ref_text_len,
            self.edges,
            self.single_edges
        )
    }
}

/// Builds the index of a `$`-terminated text through its full suffix trie.
pub fn build_plst(text: &PStr) -> Result<Plst> {
    Plst::build(text)
}

impl Plst {
    pub const ROOT: NodeId = 0;

    pub fn build(text: &PStr) -> Result<Self> {
        Self::build_with_budget(text, DEFAULT_NODE_BUDGET)
    }

    pub fn build_with_budget(text: &PStr, node_budget: usize) -> Result<Self> {
        let trie = PsTrie::build(text, node_budget)?;
        Self::from_trie(&trie)
    }

    /// Extracts the index from a finished trie.
    pub fn from_trie(trie: &PsTrie) -> Result<Self> {
        let selection = select_nodes(trie);
        let mut plst = assemble(trie, &selection);
        let min_suffix = plst.min_suffix_below();
        plst.assign_re_signs(trie, &min_suffix);
        plst.assign_labels(&min_suffix);
        plst.ref_text = RefText::from_labels(&plst.edges, trie.pv_text());
        fast::assign_fast_links(&mut plst)?;
        Ok(plst)
    }

    pub fn text_len(&self) -> usize {
        self.text_len
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[PlstNode] {
        &self.nodes
    }

    pub fn node(&self, v: NodeId) -> &PlstNode {
        &self.nodes[v as usize]
    }

    pub fn edges(&self) -> &[PlstEdge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &PlstEdge {
        &self.edges[e as usize]
    }

    pub fn ref_text(&self) -> &RefText {
        &self.ref_text
    }

    pub fn depth(&self, v: NodeId) -> usize {
        self.nodes[v as usize].depth as usize
    }

    pub fn is_good(&self, v: NodeId) -> bool {
        self.nodes[v as usize].good
    }

    pub fn suffix_link(&self, v: NodeId) -> Option<NodeId> {
        self.nodes[v as usize].suffix_link
    }

    pub fn re_sign(&self, v: NodeId) -> usize {
        self.nodes[v as usize].re_sign as usize
    }

    pub fn parent(&self, v: NodeId) -> Option<NodeId> {
        self.nodes[v as usize]
            .parent_edge
            .map(|e| self.edges[e as usize].parent)
    }

    /// Edge leaving `u` whose label starts with `sym`.
    pub fn child_edge(&self, u: NodeId, sym: PvSym) -> Option<EdgeId> {
        let children = &self.nodes[u as usize].children;
        children
            .binary_search_by(|(k, _)| k.cmp(&sym))
            .ok()
            .map(|i| children[i].1)
    }

    pub fn child(&self, u: NodeId, sym: PvSym) -> Option<NodeId> {
        self.child_edge(u, sym)
            .map(|e| self.edges[e as usize].child)
    }

    /// Depth difference between the endpoints of `e`.
    pub fn gap(&self, e: EdgeId) -> usize {
        let edge = &self.edges[e as usize];
        self.depth(edge.child) - self.depth(edge.parent)
    }

    /// Sorted suffix numbers of all leaves below `v`.
    pub fn leaves_below(&self, v: NodeId) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            let node = &self.nodes[x as usize];
            if let Some(k) = node.leaf_suffix {
                out.push(k as usize);
            }
            stack.extend(
                node.children
                    .iter()
                    .map(|&(_, e)| self.edges[e as usize].child),
            );
        }
        out.sort_unstable();
        out
    }

    pub fn stats(&self) -> Stats {
        let mut s = Stats {
            n: self.text_len,
            ref_text_len: self.ref_text.len(),
            edges: self.edges.len(),
            ..Stats::default()
        };
        for node in &self.nodes {
            match node.node_type {
                NodeType::Type1 => s.type1 += 1,
                NodeType::Type2 => s.type2 += 1,
            }
            if !node.good {
                s.bad += 1;
            }
        }
        s.single_edges = self.edges.iter().filter(|e| e.single).count();
        s
    }

    /// Depth-first preorder, children in symbol order.
    pub fn preorder(&self) -> Vec<NodeId> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![Self::ROOT];
        while let Some(x) = stack.pop() {
            order.push(x);
            stack.extend(
                self.nodes[x as usize]
                    .children
                    .iter()
                    .rev()
                    .map(|&(_, e)| self.edges[e as usize].child),
            );
        }
        order
    }

    /// Smallest leaf suffix number in each node's subtree.
    fn min_suffix_below(&self) -> Vec<u32> {
        let mut best = vec![u32::MAX; self.nodes.len()];
        for &v in self.preorder().iter().rev() {
            let node = &self.nodes[v as usize];
            let mut m = node.leaf_suffix.unwrap_or(u32::MAX);
            for &(_, e) in &node.children {
                m = m.min(best[self.edges[e as usize].child as usize]);
            }
            best[v as usize] = m;
        }
        best
    }

    /// `Re(v) = i - |u|` for the unique `i` in `(|u|, |v|]` with `v[i] = i - 1`,
    /// else 0. Reading `v` at its leftmost occurrence `s`, `v[i] = i - 1` says
    /// that position `s + i - 1` is the next occurrence of the parameter at
    /// `s`.
    #[allow(clippy::needless_range_loop)]
    fn assign_re_signs(&mut self, trie: &PsTrie, min_suffix: &[u32]) {
        let pv = trie.pv_text();
        let n = pv.len();
        let mut next_same = vec![0usize; n + 1];
        for t in 1..=n {
            if let PvSym::Num(d) = pv.at(t) {
                if d > 0 {
                    next_same[t - d as usize] = t;
                }
            }
        }
        for v in 1..self.nodes.len() {
            let parent = self
                .parent(v as NodeId)
                .expect("non-root node has a parent");
            let s = min_suffix[v] as usize;
            let q = next_same[s];
            let (du, dv) = (self.depth(parent), self.depth(v as NodeId));
            self.nodes[v].re_sign = if q != 0 {
                let i = q - s + 1;
                if du < i && i <= dv {
                    (i - du) as u32
                } else {
                    0
                }
            } else {
                0
            };
        }
    }

    fn assign_labels(&mut self, min_suffix: &[u32]) {
        for e in 0..self.edges.len() {
            let (u, v) = (self.edges[e].parent, self.edges[e].child);
            let (du, dv) = (self.depth(u), self.depth(v));
            let single = dv - du == 1;
            self.edges[e].single = single;
            self.edges[e].label = if single || (self.is_good(u) && self.is_good(v)) {
                EdgeLabel::FirstSym(self.edges[e].first)
            } else {
                let s = min_suffix[v as usize];
                EdgeLabel::TextRef {
                    start: s + du as u32,
                    end: s + dv as u32 - 1,
                    suffix: s,
                }
            };
        }
    }
}

/// Per trie node: NIL when not selected, else the index node id.
struct Selection {
    plst_id: Vec<u32>,
    count: usize,
}

fn select_nodes(trie: &PsTrie) -> Selection {
    let total = trie.node_count();
    let mut plst_id = vec![NIL; total];
    let mut count = 0usize;
    // Root first so it gets id 0; then in trie order.
    for v in 0..total as TrieNodeId {
        if trie.is_type1(v) || trie.is_type2(v) {
            plst_id[v as usize] = count as u32;
            count += 1;
        }
    }
    Selection { plst_id, count }
}

fn assemble(trie: &PsTrie, sel: &Selection) -> Plst {
    let mut nodes = Vec::with_capacity(sel.count);
    let mut trie_of = vec![0 as TrieNodeId; sel.count];
    for v in 0..trie.node_count() as TrieNodeId {
        let id = sel.plst_id[v as usize];
        if id == NIL {
            continue;
        }
        trie_of[id as usize] = v;
        let sl = trie.suffix_target(v).map(|s| sel.plst_id[s as usize]);
        let suffix_link = sl.filter(|&s| s != NIL);
        nodes.push(PlstNode {
            node_type: if trie.is_type1(v) {
                NodeType::Type1
            } else {
                NodeType::Type2
            },
            depth: trie.depth(v) as u32,
            good: suffix_link.is_some(),
            suffix_link,
            re_sign: 0,
            parent_edge: None,
            children: Vec::new(),
            leaf_suffix: trie.suffix_number(v).map(|k| k as u32),
        });
    }

    // Connect each selected node to its nearest selected ancestor.
    let mut edges = Vec::with_capacity(sel.count.saturating_sub(1));
    let mut stack: Vec<(TrieNodeId, NodeId, PvSym)> = trie
        .children(PsTrie::ROOT)
        .map(|(sym, c)| (c, Plst::ROOT, sym))
        .collect();
    while let Some((v, anc, first)) = stack.pop() {
        let id = sel.plst_id[v as usize];
        let below = if id != NIL {
            let e = edges.len() as EdgeId;
            edges.push(PlstEdge {
                parent: anc,
                child: id,
                first,
                single: false,
                label: EdgeLabel::FirstSym(first),
                fast_link: None,
            });
            nodes[id as usize].parent_edge = Some(e);
            nodes[anc as usize].children.push((first, e));
            Some(id)
        } else {
            None
        };
        for (sym, c) in trie.children(v) {
            match below {
                Some(id) => stack.push((c, id, sym)),
                None => stack.push((c, anc, first)),
            }
        }
    }
    for node in &mut nodes {
        node.children.sort_unstable_by_key(|&(k, _)| k);
    }
    Plst {
        nodes,
        edges,
        ref_text: RefText::default(),
        text_len: trie.text_len(),
    }
}

/// Re-encoding sign of `v` given its full string and the depth of its parent.
/// Only positions `i >= 2` count: a leading `0` is a first occurrence, not a
/// reference to position 1.
pub fn compute_re_sign(v: &[PvSym], parent_depth: usize) -> usize {
    ((parent_depth + 1).max(2)..=v.len())
        .find(|&i| v[i - 1] == PvSym::Num(i as u32 - 1))
        .map_or(0, |i| i - parent_depth)
}

pub(crate) fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}
