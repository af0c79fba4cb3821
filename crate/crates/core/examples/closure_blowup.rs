//! Closing the Type 1 nodes under suffix links adds quadratically many
//! nodes on the texts T_n.
//!
//!     cargo run --example closure_blowup

use plst::corpus::appendix_tn;
use plst::pv::Alphabet;
use plst::trie::PsTrie;

fn main() -> plst::Result<()> {
    println!(
        "T_3 = {}",
        String::from_utf8_lossy(&Alphabet::decode(&appendix_tn(3)))
    );
    println!(
        "{:>3} {:>5} {:>6} {:>6} {:>8} {:>7} {:>9}",
        "n", "|T|", "type1", "type2", "closure", "excess", "2n(n-1)"
    );
    for n in 2..=8 {
        let text = appendix_tn(n);
        let c = PsTrie::build(&text, 1 << 24)?.closure_counts();
        println!(
            "{n:>3} {:>5} {:>6} {:>6} {:>8} {:>7} {:>9}",
            text.len(),
            c.type1,
            c.type2,
            c.closure,
            c.excess,
            2 * n * (n - 1)
        );
    }
    Ok(())
}
