//! The generated text families.
//!
//!     cargo run --example corpora

use plst::corpus::{self, CorpusSpec, Family, Mode};
use plst::pv::{prev_encode, Alphabet};

fn show(name: &str, letters: &[u8]) {
    let s = String::from_utf8_lossy(letters);
    let cut = s.chars().take(60).collect::<String>();
    println!("{name:<22} |{}| {cut}", letters.len());
}

fn main() {
    for k in [1, 2, 5, 11] {
        show(&format!("fibonacci {k}"), &corpus::fibonacci(k));
    }
    for k in [1, 4, 6] {
        show(&format!("thue-morse {k}"), &corpus::thue_morse(k));
        show(&format!("period-doubling {k}"), &corpus::period_doubling(k));
    }
    for seed in 0..3 {
        let t = corpus::random_pstring(40, 2, Mode::Parameter, seed);
        show(&format!("random seed {seed}"), &Alphabet::decode(&t));
    }

    // The same word as constants and as parameters.
    for mode in Mode::BOTH {
        let t = CorpusSpec {
            family: Family::ThueMorse,
            param: 4,
            mode,
            seed: 0,
        }
        .generate();
        println!("{:<9} prev = {}", mode.name(), prev_encode(&t));
    }
}
