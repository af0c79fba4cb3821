//! Writes an index to a file, reads it back and queries the copy.
//!
//!     cargo run --example save_and_load

use std::fs::File;
use std::io::{BufReader, BufWriter};

use plst::pv::Alphabet;
use plst::serial::{read_index, write_index, IndexFile};
use plst::{decide, Plst};

fn main() -> plst::Result<()> {
    let alphabet = Alphabet::with_params(b"wxyz");
    let plst = Plst::build(&alphabet.encode(b"xyabzwabzxbz$"))?;
    let file = IndexFile { alphabet, plst };

    let path = std::env::temp_dir().join("plst-example.idx");
    write_index(BufWriter::new(File::create(&path)?), &file)?;
    let text = std::fs::read_to_string(&path)?;
    println!("{} ({} bytes)", path.display(), text.len());
    for line in text.lines().take(8) {
        println!("  {line}");
    }
    println!("  ...");

    let back = read_index(BufReader::new(File::open(&path)?))?;
    assert_eq!(back, file);
    for pat in ["wabzxb", "abab", "zxbz"] {
        let p = back.alphabet.encode(pat.as_bytes());
        println!("{pat}: {}", decide(&back.plst, &p)?.matched);
    }
    std::fs::remove_file(&path)?;
    Ok(())
}
