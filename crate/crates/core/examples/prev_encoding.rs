//! Prev-encoding, p-matching and the suffix link on encoded strings.
//!
//!     cargo run --example prev_encoding

use plst::pv::{is_pmatch, prev_encode, re_encode, sl_str, Alphabet};

fn main() {
    let a = Alphabet::with_params(b"uvxy");

    let w = a.encode(b"uvvvauuvb");
    println!("prev(uvvvauuvb)   = {}", prev_encode(&w));

    // Renaming parameters consistently does not change the encoding.
    for (s, t) in [("vaubu", "uavbv"), ("vaubu", "xayby"), ("vaubu", "uaubu")] {
        println!(
            "{s} ~ {t}: {}",
            is_pmatch(&a.encode(s.as_bytes()), &a.encode(t.as_bytes()))
        );
    }

    // prev of a suffix is recovered from prev of the whole string.
    let pv = prev_encode(&a.encode(b"auvaubuavbv"));
    println!("prev(T)           = {pv}");
    for k in [2, 4, 7] {
        println!("prev(T[{k}:])       = {}", re_encode(&pv[k - 1..], 1));
    }
    println!("sl(prev(T))       = {}", sl_str(&pv).unwrap());
}
