//! Node-count experiments over the corpus families, written as CSV.

use std::fmt::Write as _;
use std::io::Write;

use crate::corpus::{self, CorpusSpec, Family, Mode};
use crate::error::{Error, Result};
use crate::index::{Plst, Stats};
use crate::pv::PStr;
use crate::trie::{PsTrie, DEFAULT_NODE_BUDGET};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Table {
    Random,
    Fibonacci,
    ThueMorse,
    PeriodDoubling,
    Closure,
}

impl Table {
    pub const ALL: [Table; 5] = [
        Table::Random,
        Table::Fibonacci,
        Table::ThueMorse,
        Table::PeriodDoubling,
        Table::Closure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Table::Random => "random",
            Table::Fibonacci => "fibonacci",
            Table::ThueMorse => "thue_morse",
            Table::PeriodDoubling => "period_doubling",
            Table::Closure => "closure",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnknownTable(s.to_string()))
    }

    pub fn csv_header(self) -> &'static str {
        match self {
            Table::Random => {
                "family,mode,n,trials,type1_mean,type1_sd,type2_mean,type2_sd,ref_text_len_mean"
            }
            Table::Closure => "family,n,text_len,type1,type2,closure,excess",
            _ => "family,mode,n,type1,type2,ref_text_len",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Options {
    /// Skip rows whose text length (with sentinel) exceeds this.
    pub max_n: usize,
    /// Random strings per length.
    pub trials: usize,
    /// Base seed of the random family.
    pub seed: u64,
    pub node_budget: usize,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            max_n: usize::MAX,
            trials: 100,
            seed: 0,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

/// One row of a deterministic table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRow {
    pub family: Family,
    pub mode: Mode,
    pub stats: Stats,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RandomRow {
    pub mode: Mode,
    pub n: usize,
    pub trials: usize,
    pub type1_mean: f64,
    pub type1_sd: f64,
    pub type2_mean: f64,
    pub type2_sd: f64,
    pub ref_text_len_mean: f64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureRow {
    pub n: usize,
    pub text_len: usize,
    pub type1: usize,
    pub type2: usize,
    pub closure: usize,
    pub excess: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Rows {
    Counts(Vec<CountRow>),
    Random(Vec<RandomRow>),
    Closure(Vec<ClosureRow>),
}

/// Index parameters of the deterministic families: Fibonacci strings 11 to
/// 21 (n = 90 .. 10947) and the 4th to 13th Thue-Morse and Period-doubling
/// strings (n = 17 .. 8193).
pub fn word_indices(family: Family) -> Option<std::ops::RangeInclusive<usize>> {
    match family {
        Family::Fibonacci => Some(11..=21),
        Family::ThueMorse | Family::PeriodDoubling => Some(4..=13),
        _ => None,
    }
}

/// Random-string lengths `10, 20, ..., 10240`.
pub fn random_lengths() -> Vec<usize> {
    (0..=10).map(|i| 10usize << i).collect()
}

/// Seed of the `trial`-th random string of length `n`.
pub fn random_seed(base: u64, n: usize, trial: usize) -> u64 {
    base.wrapping_add((n as u64) << 20)
        .wrapping_add(trial as u64)
}

pub fn stats_of(text: &PStr, node_budget: usize) -> Result<Stats> {
    Ok(Plst::build_with_budget(text, node_budget)?.stats())
}

pub fn count_rows(family: Family, opts: &Options) -> Result<Vec<CountRow>> {
    let mut rows = Vec::new();
    for k in word_indices(family).into_iter().flatten() {
        for mode in Mode::BOTH {
            let text = CorpusSpec {
                family,
                param: k,
                mode,
                seed: 0,
            }
            .generate()
            .with_sentinel();
            if text.len() > opts.max_n {
                continue;
            }
            rows.push(CountRow {
                family,
                mode,
                stats: stats_of(&text, opts.node_budget)?,
            });
        }
    }
    Ok(rows)
}

fn mean_sd(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n;
    (mean, var.sqrt())
}

/// Stats of the `trials` random strings of length `n`: `n - 1` letters plus
/// sentinel, so `n` counts the sentinel like the other families.
pub fn random_trials(n: usize, mode: Mode, opts: &Options) -> Result<Vec<Stats>> {
    (0..opts.trials)
        .map(|trial| {
            let seed = random_seed(opts.seed, n, trial);
            let text = corpus::random_pstring(n - 1, 2, mode, seed).with_sentinel();
            stats_of(&text, opts.node_budget)
        })
        .collect()
}

pub fn summarize(n: usize, mode: Mode, trials: &[Stats]) -> RandomRow {
    let col = |f: fn(&Stats) -> usize| trials.iter().map(|s| f(s) as f64).collect::<Vec<_>>();
    let (type1_mean, type1_sd) = mean_sd(&col(|s| s.type1));
    let (type2_mean, type2_sd) = mean_sd(&col(|s| s.type2));
    RandomRow {
        mode,
        n,
        trials: trials.len(),
        type1_mean,
        type1_sd,
        type2_mean,
        type2_sd,
        ref_text_len_mean: mean_sd(&col(|s| s.ref_text_len)).0,
    }
}

pub fn random_row(n: usize, mode: Mode, opts: &Options) -> Result<RandomRow> {
    Ok(summarize(n, mode, &random_trials(n, mode, opts)?))
}

pub fn closure_row(n: usize) -> Result<ClosureRow> {
    let text = corpus::appendix_tn(n);
    let c = PsTrie::build(&text, DEFAULT_NODE_BUDGET)?.closure_counts();
    Ok(ClosureRow {
        n,
        text_len: text.len(),
        type1: c.type1,
        type2: c.type2,
        closure: c.closure,
        excess: c.excess,
    })
}

pub fn run(table: Table, opts: &Options) -> Result<Rows> {
    Ok(match table {
        Table::Fibonacci => Rows::Counts(count_rows(Family::Fibonacci, opts)?),
        Table::ThueMorse => Rows::Counts(count_rows(Family::ThueMorse, opts)?),
        Table::PeriodDoubling => Rows::Counts(count_rows(Family::PeriodDoubling, opts)?),
        Table::Random => {
            let mut rows = Vec::new();
            for n in random_lengths().into_iter().filter(|&n| n <= opts.max_n) {
                for mode in Mode::BOTH {
                    rows.push(random_row(n, mode, opts)?);
                }
            }
            Rows::Random(rows)
        }
        Table::Closure => Rows::Closure(
            (2..=8)
                .filter(|&n| 6 * n + 2 <= opts.max_n)
                .map(closure_row)
                .collect::<Result<_>>()?,
        ),
    })
}

pub fn to_csv(table: Table, rows: &Rows) -> String {
    let mut out = String::new();
    out.push_str(table.csv_header());
    out.push('\n');
    match rows {
        Rows::Counts(rows) => {
            for r in rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.family.name(),
                    r.mode.name(),
                    r.stats.n,
                    r.stats.type1,
                    r.stats.type2,
                    r.stats.ref_text_len
                );
            }
        }
        Rows::Random(rows) => {
            for r in rows {
                let _ = writeln!(
                    out,
                    "random,{},{},{},{:.2},{:.2},{:.2},{:.2},{:.2}",
                    r.mode.name(),
                    r.n,
                    r.trials,
                    r.type1_mean,
                    r.type1_sd,
                    r.type2_mean,
                    r.type2_sd,
                    r.ref_text_len_mean
                );
            }
        }
        Rows::Closure(rows) => {
            for r in rows {
                let _ = writeln!(
                    out,
                    "appendix_tn,{},{},{},{},{},{}",
                    r.n, r.text_len, r.type1, r.type2, r.closure, r.excess
                );
            }
        }
    }
    out
}

pub fn write_csv<W: Write>(mut w: W, table: Table, rows: &Rows) -> Result<()> {
    w.write_all(to_csv(table, rows).as_bytes())?;
    Ok(())
}
