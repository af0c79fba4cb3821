//! Parameterized pattern matching on a [`Plst`].
//!
//! `P-Match(p, u)` finds the highest descendant `v` of `u` such that `p` is a
//! prefix of `str(u, v)`. Crossing a long edge between good nodes is checked
//! by matching the same pattern slice below `SL(u)` (or below the edge's fast
//! link), after patching the one symbol the re-encoding sign singles out.
//!
//! The recursion is run on an explicit stack. A nested check only has to
//! succeed; the landing node comes from the outermost chain of calls. Each
//! task owns a disjoint range of one shared pattern buffer, so in-place
//! rewrites stay local to the query.

use crate::error::{Error, Result};
use crate::index::{NodeId, Plst};
use crate::pv::{prev_encode, PSym, PvSym, SENTINEL};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// Follow suffix links one level at a time.
    SuffixLinks,
    /// Jump along stored fast links.
    FastLinks,
}

/// Work counters of one query.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Trace {
    /// Suffix-link or fast-link traversals.
    pub link_follows: usize,
    /// Pattern symbols rewritten to `0` because of a re-encoding sign.
    pub rewrites: usize,
    /// Invocations of the matching procedure, including empty-pattern ones.
    pub calls: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MatchOutcome {
    pub matched: bool,
    pub landing: Option<NodeId>,
    /// Sorted 1-based start positions; only filled by [`locate`].
    pub occurrences: Vec<usize>,
    pub link_follows: usize,
    pub rewrites: usize,
}

struct Task {
    start: usize,
    end: usize,
    node: NodeId,
    outermost: bool,
}

/// Runs `P-Match(p, u)` and reports the work done.
pub fn p_match_traced(
    plst: &Plst,
    p: &[PvSym],
    u: NodeId,
    variant: Variant,
) -> (Option<NodeId>, Trace) {
    let mut trace = Trace::default();
    let mut buf = p.to_vec();
    let mut landing = None;
    let mut stack = vec![Task {
        start: 0,
        end: buf.len(),
        node: u,
        outermost: true,
    }];
    while let Some(Task {
        start,
        end,
        node: u,
        outermost,
    }) = stack.pop()
    {
        trace.calls += 1;
        if start == end {
            if outermost {
                landing = Some(u);
            }
            continue;
        }
        let Some(e) = plst.child_edge(u, buf[start]) else {
            return (None, trace);
        };
        let edge = plst.edge(e);
        let v = edge.child;
        let len = end - start;
        let l = len.min(plst.gap(e));
        if l >= 2 && !(plst.is_good(u) && plst.is_good(v)) {
            if (2..=l).any(|i| buf[start + i - 1] != plst.label_symbol(e, i)) {
                return (None, trace);
            }
        } else if l >= 2 {
            let re = plst.re_sign(v);
            if (1..=len).contains(&re) {
                let expected = PvSym::Num((plst.depth(u) + re - 1) as u32);
                if buf[start + re - 1] != expected {
                    return (None, trace);
                }
                buf[start + re - 1] = PvSym::Num(0);
                trace.rewrites += 1;
            }
            let below = match variant {
                Variant::SuffixLinks => plst.suffix_link(u),
                Variant::FastLinks => edge.fast_link,
            }
            .expect("long edge between good nodes has its links");
            trace.link_follows += 1;
            // Continuation first so the nested check runs before it.
            stack.push(Task {
                start: start + l,
                end,
                node: v,
                outermost,
            });
            stack.push(Task {
                start,
                end: start + l,
                node: below,
                outermost: false,
            });
            continue;
        }
        stack.push(Task {
            start: start + l,
            end,
            node: v,
            outermost,
        });
    }
    (landing, trace)
}

/// `P-Match(p, u)` following suffix links.
pub fn p_match(plst: &Plst, p: &[PvSym], u: NodeId) -> Option<NodeId> {
    p_match_traced(plst, p, u, Variant::SuffixLinks).0
}

/// `P-Match(p, u)` following fast links.
pub fn p_match_fast(plst: &Plst, p: &[PvSym], u: NodeId) -> Option<NodeId> {
    p_match_traced(plst, p, u, Variant::FastLinks).0
}

fn check_pattern(pattern: &[PSym]) -> Result<()> {
    match pattern.iter().position(|&s| s == SENTINEL) {
        Some(i) => Err(Error::SentinelInPattern(i + 1)),
        None => Ok(()),
    }
}

/// Decides whether the text has a substring that p-matches `pattern`.
pub fn decide(plst: &Plst, pattern: &[PSym]) -> Result<MatchOutcome> {
    check_pattern(pattern)?;
    let (landing, trace) =
        p_match_traced(plst, &prev_encode(pattern), Plst::ROOT, Variant::FastLinks);
    Ok(MatchOutcome {
        matched: landing.is_some(),
        landing,
        occurrences: Vec::new(),
        link_follows: trace.link_follows,
        rewrites: trace.rewrites,
    })
}

/// Like [`decide`], and also lists every start position of an occurrence.
pub fn locate(plst: &Plst, pattern: &[PSym]) -> Result<MatchOutcome> {
    let mut out = decide(plst, pattern)?;
    if let Some(v) = out.landing {
        let last_start = (plst.text_len() + 1).saturating_sub(pattern.len());
        out.occurrences = plst.leaves_below(v);
        out.occurrences.retain(|&i| i <= last_start);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pv::{Alphabet, PvStr};
    use crate::trie::{build_pstrie, naive_pmatch};

    fn sample() -> (Alphabet, Plst) {
        let a = Alphabet::with_params(b"wxyz");
        let plst = Plst::build(&a.encode(b"xyabzwabzxbz$")).unwrap();
        (a, plst)
    }

    #[test]
    fn empty_pattern_lands_on_start() {
        let (_, plst) = sample();
        assert_eq!(p_match(&plst, &[], Plst::ROOT), Some(Plst::ROOT));
        assert_eq!(p_match_fast(&plst, &[], Plst::ROOT), Some(Plst::ROOT));
        let out = locate(&plst, &[]).unwrap();
        assert_eq!(out.occurrences, (1..=13).collect::<Vec<_>>());
    }

    #[test]
    fn landing_node_has_pattern_as_prefix() {
        let (a, plst) = sample();
        let text = a.encode(b"xyabzwabzxbz$");
        let p = prev_encode(&a.encode(b"wabzxb"));
        assert_eq!(p, PvStr::parse("0 a b 0 0 b").unwrap());
        assert_eq!(naive_pmatch(&text, &a.encode(b"wabzxb")), vec![6]);
        let v = p_match(&plst, &p, Plst::ROOT).unwrap();
        assert_eq!(p_match_fast(&plst, &p, Plst::ROOT), Some(v));
        let s = plst.node_string(v);
        assert!(s.starts_with(&p));
        let parent = plst.parent(v).unwrap();
        assert!(plst.depth(parent) < p.len());
        // Cross-check the landing against the trie.
        let trie = build_pstrie(&text).unwrap();
        assert!(trie.find(&s).is_some());
    }

    #[test]
    fn absent_pattern_is_rejected() {
        let (a, plst) = sample();
        let p = prev_encode(&a.encode(b"abab"));
        assert_eq!(p_match(&plst, &p, Plst::ROOT), None);
        assert_eq!(p_match_fast(&plst, &p, Plst::ROOT), None);
        assert!(!decide(&plst, &a.encode(b"abq")).unwrap().matched);
    }

    #[test]
    fn running_example_occurrences() {
        let a = Alphabet::with_params(b"uvxy");
        let text = a.encode(b"auvaubuavbv$");
        let plst = Plst::build(&text).unwrap();
        let out = locate(&plst, &a.encode(b"xayby")).unwrap();
        assert!(out.matched);
        assert_eq!(out.occurrences, vec![3, 7]);
        assert!(decide(&plst, &a.encode(b"auvaubuavbv")).unwrap().matched);
        assert!(!decide(&plst, &a.encode(b"auvaubuavbvaa")).unwrap().matched);
    }

    #[test]
    fn sentinel_in_pattern_is_an_error() {
        let (a, plst) = sample();
        assert!(matches!(
            decide(&plst, &a.encode(b"ab$")),
            Err(Error::SentinelInPattern(3))
        ));
    }

    #[test]
    fn pattern_is_not_mutated() {
        let (a, plst) = sample();
        let p = prev_encode(&a.encode(b"zxbz"));
        let before = p.clone();
        let _ = p_match_fast(&plst, &p, Plst::ROOT);
        let _ = p_match(&plst, &p, Plst::ROOT);
        assert_eq!(p, before);
    }
}
