//! The full parameterized suffix trie.
//!
//! Every node is a distinct prev-encoded substring of the text, so the trie
//! has Θ(n²) nodes in general. It serves as the construction intermediate for
//! [`crate::Plst`] and as a brute-force oracle in tests. Nodes are stored in
//! flat arrays (first-child / next-sibling) to keep the per-node cost low
//! enough for texts of ten thousand symbols or so.

use crate::error::{Error, Result};
use crate::pv::{prev_encode, reencode_at, PStr, PvStr, PvSym, SENTINEL};

pub type TrieNodeId = u32;

pub(crate) const NIL: u32 = u32::MAX;

/// Default cap on the number of trie nodes a build may allocate.
pub const DEFAULT_NODE_BUDGET: usize = 200_000_000;

pub struct PsTrie {
    text: PStr,
    pv_text: PvStr,
    label: Vec<PvSym>,
    parent: Vec<u32>,
    depth: Vec<u32>,
    first_child: Vec<u32>,
    next_sibling: Vec<u32>,
    suffix: Vec<u32>,
    /// `leaf_of_suffix[k - 1]` is the leaf spelling `prev(T[k:])`.
    leaf_of_suffix: Vec<u32>,
}

/// Checks that `text` ends with `$` and has no other `$`.
pub fn check_sentinel(text: &PStr) -> Result<()> {
    if !text.ends_with_sentinel() {
        return Err(Error::MissingSentinel);
    }
    match text.iter().position(|&s| s == SENTINEL) {
        Some(i) if i + 1 < text.len() => Err(Error::EarlySentinel(i + 1)),
        _ => Ok(()),
    }
}

/// Builds the trie with the default node budget.
pub fn build_pstrie(text: &PStr) -> Result<PsTrie> {
    PsTrie::build(text, DEFAULT_NODE_BUDGET)
}

impl PsTrie {
    pub const ROOT: TrieNodeId = 0;

    /// Inserts `prev(T[k:])` for `k = n, n-1, ..., 1`. The path of suffix
    /// `k + 1` is kept while suffix `k` is inserted, so the node for
    /// `prev(T[k:k+i-1])` gets its suffix link to the depth `i - 1` node of
    /// that path as soon as it is created.
    pub fn build(text: &PStr, node_budget: usize) -> Result<Self> {
        check_sentinel(text)?;
        let n = text.len();
        let pv_text = prev_encode(text);
        let mut trie = PsTrie {
            text: text.clone(),
            pv_text,
            label: vec![PvSym::Num(0)],
            parent: vec![NIL],
            depth: vec![0],
            first_child: vec![NIL],
            next_sibling: vec![NIL],
            suffix: vec![NIL],
            leaf_of_suffix: vec![NIL; n],
        };
        let mut prev_path: Vec<u32> = Vec::with_capacity(n + 1);
        let mut cur_path: Vec<u32> = Vec::with_capacity(n + 1);
        prev_path.push(Self::ROOT);
        for k in (1..=n).rev() {
            cur_path.clear();
            cur_path.push(Self::ROOT);
            let mut node = Self::ROOT;
            for t in k..=n {
                let i = t - k + 1;
                let sym = reencode_at(trie.pv_text.at(t), i, 1);
                node = match trie.child(node, sym) {
                    Some(c) => c,
                    None => {
                        if trie.label.len() >= node_budget {
                            return Err(Error::NodeBudgetExceeded {
                                budget: node_budget,
                            });
                        }
                        trie.push_child(node, sym, i as u32, prev_path[i - 1])
                    }
                };
                cur_path.push(node);
            }
            trie.leaf_of_suffix[k - 1] = node;
            std::mem::swap(&mut prev_path, &mut cur_path);
        }
        Ok(trie)
    }

    fn push_child(&mut self, parent: u32, sym: PvSym, depth: u32, suffix: u32) -> u32 {
        let id = self.label.len() as u32;
        self.label.push(sym);
        self.parent.push(parent);
        self.depth.push(depth);
        self.first_child.push(NIL);
        self.next_sibling.push(self.first_child[parent as usize]);
        self.suffix.push(suffix);
        self.first_child[parent as usize] = id;
        id
    }

    pub fn text(&self) -> &PStr {
        &self.text
    }

    pub fn pv_text(&self) -> &PvStr {
        &self.pv_text
    }

    pub fn text_len(&self) -> usize {
        self.text.len()
    }

    pub fn node_count(&self) -> usize {
        self.label.len()
    }

    pub fn depth(&self, v: TrieNodeId) -> usize {
        self.depth[v as usize] as usize
    }

    pub fn parent(&self, v: TrieNodeId) -> Option<TrieNodeId> {
        let p = self.parent[v as usize];
        (p != NIL).then_some(p)
    }

    /// Symbol on the edge entering `v`; `None` for the root.
    pub fn label(&self, v: TrieNodeId) -> Option<PvSym> {
        (v != Self::ROOT).then(|| self.label[v as usize])
    }

    /// Node spelling `sl(v)`; `None` for the root.
    pub fn suffix_target(&self, v: TrieNodeId) -> Option<TrieNodeId> {
        let s = self.suffix[v as usize];
        (s != NIL).then_some(s)
    }

    pub fn child(&self, v: TrieNodeId, sym: PvSym) -> Option<TrieNodeId> {
        let mut c = self.first_child[v as usize];
        while c != NIL {
            if self.label[c as usize] == sym {
                return Some(c);
            }
            c = self.next_sibling[c as usize];
        }
        None
    }

    pub fn children(&self, v: TrieNodeId) -> impl Iterator<Item = (PvSym, TrieNodeId)> + '_ {
        let mut c = self.first_child[v as usize];
        std::iter::from_fn(move || {
            if c == NIL {
                return None;
            }
            let out = (self.label[c as usize], c);
            c = self.next_sibling[c as usize];
            Some(out)
        })
    }

    pub fn is_leaf(&self, v: TrieNodeId) -> bool {
        self.first_child[v as usize] == NIL
    }

    pub fn is_branching(&self, v: TrieNodeId) -> bool {
        let c = self.first_child[v as usize];
        c != NIL && self.next_sibling[c as usize] != NIL
    }

    /// Leaf or branching node. The root always counts.
    pub fn is_type1(&self, v: TrieNodeId) -> bool {
        v == Self::ROOT || self.is_leaf(v) || self.is_branching(v)
    }

    pub fn is_type2(&self, v: TrieNodeId) -> bool {
        !self.is_type1(v) && self.suffix_target(v).is_some_and(|s| self.is_type1(s))
    }

    /// Leaf spelling `prev(T[k:])`, 1-based `k`.
    pub fn leaf_of_suffix(&self, k: usize) -> TrieNodeId {
        self.leaf_of_suffix[k - 1]
    }

    /// Suffix number of a leaf, if `v` is one.
    pub fn suffix_number(&self, v: TrieNodeId) -> Option<usize> {
        if !self.is_leaf(v) || v == Self::ROOT {
            return None;
        }
        Some(self.text.len() - self.depth(v) + 1)
    }

    /// The string a node spells, read off the root path.
    pub fn node_string(&self, v: TrieNodeId) -> PvStr {
        let mut out = Vec::with_capacity(self.depth(v));
        let mut cur = v;
        while cur != Self::ROOT {
            out.push(self.label[cur as usize]);
            cur = self.parent[cur as usize];
        }
        out.reverse();
        out.into()
    }

    /// Path label from `u` down to its descendant `v`.
    pub fn path_label(&self, u: TrieNodeId, v: TrieNodeId) -> Option<PvStr> {
        let mut out = Vec::new();
        let mut cur = v;
        while cur != u {
            if cur == Self::ROOT {
                return None;
            }
            out.push(self.label[cur as usize]);
            cur = self.parent[cur as usize];
        }
        out.reverse();
        Some(out.into())
    }

    /// Walks `s` from the root.
    pub fn find(&self, s: &[PvSym]) -> Option<TrieNodeId> {
        s.iter()
            .try_fold(Self::ROOT, |node, &sym| self.child(node, sym))
    }

    /// Suffix numbers of all leaves below `v`, sorted.
    pub fn leaves_below(&self, v: TrieNodeId) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            if let Some(k) = self.suffix_number(x) {
                out.push(k);
            }
            stack.extend(self.children(x).map(|(_, c)| c));
        }
        out.sort_unstable();
        out
    }

    /// Counts for the suffix-link closure of the Type 1 nodes.
    pub fn closure_counts(&self) -> ClosureCounts {
        let count = self.node_count();
        let mut in_closure = vec![false; count];
        let mut type1 = 0;
        let mut type2 = 0;
        for v in 0..count as u32 {
            if self.is_type1(v) {
                type1 += 1;
                let mut cur = v;
                loop {
                    if in_closure[cur as usize] {
                        break;
                    }
                    in_closure[cur as usize] = true;
                    match self.suffix_target(cur) {
                        Some(s) => cur = s,
                        None => break,
                    }
                }
            } else if self.is_type2(v) {
                type2 += 1;
            }
        }
        let closure = in_closure.iter().filter(|&&b| b).count();
        let excess = (0..count as u32)
            .filter(|&v| in_closure[v as usize] && !self.is_type1(v) && !self.is_type2(v))
            .count();
        ClosureCounts {
            closure,
            type1,
            type2,
            excess,
        }
    }
}

/// Sizes around the closure `C = { sl^i(u) : u Type 1, 0 <= i <= |u| }`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureCounts {
    /// `|C|`, including the root.
    pub closure: usize,
    pub type1: usize,
    pub type2: usize,
    /// `|C \ (V1 ∪ V2)|`: nodes the closure adds beyond the PLST node set.
    pub excess: usize,
}

/// Number of nodes the suffix-link closure of the Type 1 nodes adds on top
/// of the Type 1 and Type 2 nodes.
pub fn closure_excess_count(text: &PStr) -> Result<usize> {
    Ok(build_pstrie(text)?.closure_counts().excess)
}

/// All 1-based start positions `i` with `prev(T[i:i+m-1]) = prev(P)`, found by
/// sliding a window over the text. The empty pattern occurs everywhere.
pub fn naive_pmatch(text: &[crate::pv::PSym], pattern: &[crate::pv::PSym]) -> Vec<usize> {
    let (n, m) = (text.len(), pattern.len());
    if m == 0 {
        return (1..=n).collect();
    }
    if m > n {
        return Vec::new();
    }
    let target = prev_encode(pattern);
    (0..=n - m)
        .filter(|&i| prev_encode(&text[i..i + m]) == target)
        .map(|i| i + 1)
        .collect()
}
