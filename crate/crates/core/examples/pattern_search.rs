//! Decides and locates parameterized patterns, with work counters.
//!
//!     cargo run --example pattern_search [PATTERN...]

use plst::matching::{p_match_traced, Variant};
use plst::pv::{prev_encode, Alphabet};
use plst::trie::naive_pmatch;
use plst::{locate, Plst};

fn main() -> plst::Result<()> {
    let a = Alphabet::with_params(b"uvxy");
    let text = a.encode(b"auvaubuavbv$");
    let plst = Plst::build(&text)?;

    let mut patterns: Vec<String> = std::env::args().skip(1).collect();
    if patterns.is_empty() {
        patterns = ["xayby", "ya", "xaxby", "auvaubuavbv", "bb"]
            .map(String::from)
            .to_vec();
    }
    for pat in &patterns {
        let p = a.encode(pat.as_bytes());
        let out = locate(&plst, &p)?;
        println!(
            "{pat:>12}: matched={} at {:?} (follows {}, rewrites {}; naive {:?})",
            out.matched,
            out.occurrences,
            out.link_follows,
            out.rewrites,
            naive_pmatch(&text, &p)
        );
    }

    // Suffix links one level at a time against fast links on a long text.
    let fib = plst::corpus::CorpusSpec {
        family: plst::corpus::Family::Fibonacci,
        param: 18,
        mode: plst::corpus::Mode::Parameter,
        seed: 0,
    }
    .generate()
    .with_sentinel();
    let big = Plst::build(&fib)?;
    for m in [100, 400, 1600] {
        let p = prev_encode(&fib[7..7 + m]);
        let (_, slow) = p_match_traced(&big, &p, Plst::ROOT, Variant::SuffixLinks);
        let (_, fast) = p_match_traced(&big, &p, Plst::ROOT, Variant::FastLinks);
        println!(
            "m={m:>5}: calls {:>7} with suffix links, {:>5} with fast links ({} follows)",
            slow.calls, fast.calls, fast.link_follows
        );
    }
    Ok(())
}
