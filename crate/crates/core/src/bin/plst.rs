use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use plst::corpus::{CorpusSpec, Family, Mode};
use plst::experiment::{self, Table};
use plst::pv::{Alphabet, SENTINEL_BYTE};
use plst::serial::{read_index, write_index, IndexFile};
use plst::trie::DEFAULT_NODE_BUDGET;
use plst::{decide, locate, Plst};

#[derive(Parser)]
#[command(name = "plst", version, about = "Parameterized suffix index tool")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build an index from a text file.
    Build {
        text: PathBuf,
        /// Output index file.
        out: PathBuf,
        /// Characters that are parameters; all others are constants.
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: usize,
    },
    /// Search an index for a pattern. Exit status 0 on match, 1 otherwise.
    Query {
        index: PathBuf,
        pattern: String,
        /// Also list start positions.
        #[arg(long)]
        locate: bool,
    },
    /// Print the size summary of an index.
    Stats { index: PathBuf },
    /// Write a generated text.
    Gen {
        #[arg(value_enum)]
        family: FamilyArg,
        /// Word index, random length or appendix size.
        param: usize,
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Constant)]
        mode: ModeArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write one experiment table as CSV.
    Experiment {
        #[arg(value_enum)]
        table: TableArg,
        /// Output CSV; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Skip rows with longer texts.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Fibonacci,
    ThueMorse,
    PeriodDoubling,
    Random,
    AppendixTn,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Fibonacci => Family::Fibonacci,
            FamilyArg::ThueMorse => Family::ThueMorse,
            FamilyArg::PeriodDoubling => Family::PeriodDoubling,
            FamilyArg::Random => Family::Random,
            FamilyArg::AppendixTn => Family::AppendixTn,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Constant,
    Parameter,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableArg {
    Random,
    Fibonacci,
    ThueMorse,
    PeriodDoubling,
    Closure,
}

impl From<TableArg> for Table {
    fn from(t: TableArg) -> Self {
        match t {
            TableArg::Random => Table::Random,
            TableArg::Fibonacci => Table::Fibonacci,
            TableArg::ThueMorse => Table::ThueMorse,
            TableArg::PeriodDoubling => Table::PeriodDoubling,
            TableArg::Closure => Table::Closure,
        }
    }
}

fn load(path: &Path) -> anyhow::Result<IndexFile> {
    let f = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    read_index(BufReader::new(f)).with_context(|| format!("reading {}", path.display()))
}

fn build(text: &Path, out: &Path, params: &str, node_budget: usize) -> anyhow::Result<()> {
    let mut bytes = std::fs::read(text).with_context(|| format!("reading {}", text.display()))?;
    if bytes.ends_with(b"\r\n") {
        bytes.truncate(bytes.len() - 2);
    } else if bytes.ends_with(b"\n") {
        bytes.pop();
    }
    if params.bytes().any(|b| b == SENTINEL_BYTE) {
        bail!("`$` is the sentinel and cannot be a parameter");
    }
    if bytes.last() != Some(&SENTINEL_BYTE) {
        bytes.push(SENTINEL_BYTE);
        println!("appended sentinel `$`");
    }
    let alphabet = Alphabet::with_params(params.as_bytes());
    let started = Instant::now();
    let plst = Plst::build_with_budget(&alphabet.encode(&bytes), node_budget)?;
    let elapsed = started.elapsed();
    let s = plst.stats();
    let mut w =
        BufWriter::new(File::create(out).with_context(|| format!("creating {}", out.display()))?);
    write_index(&mut w, &IndexFile { alphabet, plst })?;
    w.flush()?;
    println!(
        "n={} type1={} type2={} ref_text_len={} build_time={:.3}s",
        s.n,
        s.type1,
        s.type2,
        s.ref_text_len,
        elapsed.as_secs_f64()
    );
    Ok(())
}

fn query(index: &Path, pattern: &str, want_positions: bool) -> anyhow::Result<bool> {
    let file = load(index)?;
    let p = file.alphabet.encode(pattern.as_bytes());
    let out = if want_positions {
        locate(&file.plst, &p)?
    } else {
        decide(&file.plst, &p)?
    };
    println!("matched={}", out.matched);
    if want_positions {
        let pos: Vec<String> = out.occurrences.iter().map(usize::to_string).collect();
        println!("occurrences={}", pos.join(" "));
    }
    println!(
        "link_follows={} rewrites={}",
        out.link_follows, out.rewrites
    );
    Ok(out.matched)
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.cmd {
        Cmd::Build {
            text,
            out,
            params,
            node_budget,
        } => build(&text, &out, &params, node_budget)?,
        Cmd::Query {
            index,
            pattern,
            locate,
        } => {
            return Ok(if query(&index, &pattern, locate)? {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::Stats { index } => {
            let file = load(&index)?;
            println!("{}", file.plst.stats());
            let params = String::from_utf8_lossy(&file.alphabet.param_bytes()).into_owned();
            println!("params={params}");
        }
        Cmd::Gen {
            family,
            param,
            out,
            mode,
            seed,
        } => {
            let mode = match mode {
                ModeArg::Constant => Mode::Constant,
                ModeArg::Parameter => Mode::Parameter,
            };
            let text = CorpusSpec {
                family: family.into(),
                param,
                mode,
                seed,
            }
            .generate();
            let params: Vec<u8> = {
                let mut p: Vec<u8> = text
                    .iter()
                    .filter(|s| s.is_param())
                    .map(|s| s.code() as u8)
                    .collect();
                p.sort_unstable();
                p.dedup();
                p
            };
            std::fs::write(&out, Alphabet::decode(&text))
                .with_context(|| format!("writing {}", out.display()))?;
            println!(
                "wrote {} symbols; params={}",
                text.len(),
                String::from_utf8_lossy(&params)
            );
        }
        Cmd::Experiment {
            table,
            out,
            max_n,
            trials,
            seed,
            node_budget,
        } => {
            let table: Table = table.into();
            let opts = experiment::Options {
                max_n: max_n.unwrap_or(usize::MAX),
                trials,
                seed,
                node_budget,
            };
            let rows = experiment::run(table, &opts)?;
            match out {
                Some(path) => {
                    let f = File::create(&path)
                        .with_context(|| format!("creating {}", path.display()))?;
                    experiment::write_csv(BufWriter::new(f), table, &rows)?;
                }
                None => experiment::write_csv(io::stdout().lock(), table, &rows)?,
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
