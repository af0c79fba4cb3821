//! Node counts over the corpus families, printed as CSV.
//!
//!     cargo run --release --example node_counts [TABLE] [MAX_N]
//!
//! TABLE is one of random, fibonacci, thue_morse, period_doubling, closure.

use plst::experiment::{self, Options, Table};

fn main() -> plst::Result<()> {
    let mut args = std::env::args().skip(1);
    let tables = match args.next() {
        Some(name) => vec![Table::parse(&name)?],
        None => Table::ALL.to_vec(),
    };
    let max_n = args.next().and_then(|s| s.parse().ok()).unwrap_or(1000);
    let opts = Options {
        max_n,
        trials: 20,
        ..Options::default()
    };
    for table in tables {
        let rows = experiment::run(table, &opts)?;
        print!("{}", experiment::to_csv(table, &rows));
        println!();
    }
    Ok(())
}
