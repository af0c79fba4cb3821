//! Line-oriented index file format.
//!
//! ```text
//! PLST-INDEX 1
//! n 13
//! params 77 78 79 7a
//! nodes 21
//! 0 1 0 0 - 0                  id type depth good suffix-link re-sign
//! ...
//! edges 20
//! 0 0 5 1 c36 f -              id parent child single first label fast-link
//! 1 0 7 0 n0 r 3 6 1 4         label `r start end suffix`, fast link or `-`
//! ...
//! chunks 2
//! 3 ca cb n0 n0                original start, then symbols
//! leaves 13
//! 5 13                         node, suffix number
//! end
//! ```
//!
//! Constants are written `c<code>` and numbers `n<value>`. Writing the same
//! index twice produces identical bytes.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::index::{Chunk, EdgeLabel, NodeType, Plst, PlstEdge, PlstNode, RefText};
use crate::pv::{Alphabet, PvSym};

pub const MAGIC: &str = "PLST-INDEX";
pub const FORMAT_VERSION: u32 = 1;

/// An index together with the alphabet declaration it was built under.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexFile {
    pub alphabet: Alphabet,
    pub plst: Plst,
}

fn sym(s: PvSym) -> String {
    match s {
        PvSym::Const(c) => format!("c{c}"),
        PvSym::Num(d) => format!("n{d}"),
    }
}

fn opt(v: Option<u32>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

pub fn write_index<W: Write>(mut w: W, file: &IndexFile) -> Result<()> {
    let plst = &file.plst;
    writeln!(w, "{MAGIC} {FORMAT_VERSION}")?;
    writeln!(w, "n {}", plst.text_len())?;
    let params: Vec<String> = file
        .alphabet
        .param_bytes()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect();
    if params.is_empty() {
        writeln!(w, "params")?;
    } else {
        writeln!(w, "params {}", params.join(" "))?;
    }

    writeln!(w, "nodes {}", plst.node_count())?;
    for (id, node) in plst.nodes().iter().enumerate() {
        writeln!(
            w,
            "{id} {} {} {} {} {}",
            node.node_type.number(),
            node.depth,
            u8::from(node.good),
            opt(node.suffix_link),
            node.re_sign
        )?;
    }

    writeln!(w, "edges {}", plst.edges().len())?;
    for (id, e) in plst.edges().iter().enumerate() {
        let label = match e.label {
            EdgeLabel::FirstSym(_) => "f".to_string(),
            EdgeLabel::TextRef { start, end, suffix } => format!("r {start} {end} {suffix}"),
        };
        writeln!(
            w,
            "{id} {} {} {} {} {label} {}",
            e.parent,
            e.child,
            u8::from(e.single),
            sym(e.first),
            opt(e.fast_link)
        )?;
    }

    let chunks = plst.ref_text().chunks();
    writeln!(w, "chunks {}", chunks.len())?;
    for c in chunks {
        write!(w, "{}", c.start)?;
        for &s in &c.symbols {
            write!(w, " {}", sym(s))?;
        }
        writeln!(w)?;
    }

    let leaves: Vec<(usize, u32)> = plst
        .nodes()
        .iter()
        .enumerate()
        .filter_map(|(id, n)| n.leaf_suffix.map(|k| (id, k)))
        .collect();
    writeln!(w, "leaves {}", leaves.len())?;
    for (id, k) in leaves {
        writeln!(w, "{id} {k}")?;
    }
    writeln!(w, "end")?;
    Ok(())
}

struct Lines<R> {
    inner: std::io::Lines<R>,
    line: usize,
}

impl<R: BufRead> Lines<R> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Format {
            line: self.line,
            msg: msg.into(),
        }
    }

    fn next_line(&mut self) -> Result<String> {
        self.line += 1;
        match self.inner.next() {
            Some(l) => Ok(l?),
            None => Err(self.err("unexpected end of file")),
        }
    }

    /// Reads `<keyword> <count>`.
    fn section(&mut self, keyword: &str) -> Result<usize> {
        let l = self.next_line()?;
        let mut it = l.split_whitespace();
        if it.next() != Some(keyword) {
            return Err(self.err(format!("expected `{keyword}` section")));
        }
        let count = it.next().ok_or_else(|| self.err("missing count"))?;
        self.num(count)
    }

    fn num<T: std::str::FromStr>(&self, tok: &str) -> Result<T> {
        tok.parse()
            .map_err(|_| self.err(format!("bad number `{tok}`")))
    }

    fn opt(&self, tok: &str) -> Result<Option<u32>> {
        if tok == "-" {
            Ok(None)
        } else {
            self.num(tok).map(Some)
        }
    }

    fn sym(&self, tok: &str) -> Result<PvSym> {
        let (kind, rest) = tok.split_at(tok.len().min(1));
        match kind {
            "c" => Ok(PvSym::Const(self.num(rest)?)),
            "n" => Ok(PvSym::Num(self.num(rest)?)),
            _ => Err(self.err(format!("bad symbol `{tok}`"))),
        }
    }

    fn fields(&self, l: &str, want: usize) -> Result<Vec<String>> {
        let f: Vec<String> = l.split_whitespace().map(str::to_string).collect();
        if f.len() != want {
            return Err(self.err(format!("expected {want} fields, found {}", f.len())));
        }
        Ok(f)
    }
}

pub fn read_index<R: BufRead>(r: R) -> Result<IndexFile> {
    let mut lines = Lines {
        inner: r.lines(),
        line: 0,
    };
    let header = lines.next_line()?;
    let mut it = header.split_whitespace();
    if it.next() != Some(MAGIC) {
        return Err(lines.err("not a PLST index file"));
    }
    let version: u32 = lines.num(it.next().unwrap_or(""))?;
    if version != FORMAT_VERSION {
        return Err(Error::Version {
            found: version,
            expected: FORMAT_VERSION,
        });
    }
    let text_len = lines.section("n")?;

    let l = lines.next_line()?;
    let mut it = l.split_whitespace();
    if it.next() != Some("params") {
        return Err(lines.err("expected `params`"));
    }
    let params = it
        .map(|t| u8::from_str_radix(t, 16).map_err(|_| lines.err(format!("bad byte `{t}`"))))
        .collect::<Result<Vec<u8>>>()?;
    let alphabet = Alphabet::with_params(&params);

    let node_count = lines.section("nodes")?;
    let mut nodes = Vec::with_capacity(node_count);
    for id in 0..node_count {
        let l = lines.next_line()?;
        let f = lines.fields(&l, 6)?;
        if lines.num::<usize>(&f[0])? != id {
            return Err(lines.err("node ids must be consecutive"));
        }
        let node_type = match f[1].as_str() {
            "1" => NodeType::Type1,
            "2" => NodeType::Type2,
            other => return Err(lines.err(format!("bad node type `{other}`"))),
        };
        nodes.push(PlstNode {
            node_type,
            depth: lines.num(&f[2])?,
            good: f[3] == "1",
            suffix_link: lines.opt(&f[4])?,
            re_sign: lines.num(&f[5])?,
            parent_edge: None,
            children: Vec::new(),
            leaf_suffix: None,
        });
    }

    let edge_count = lines.section("edges")?;
    let mut edges = Vec::with_capacity(edge_count);
    for id in 0..edge_count {
        let l = lines.next_line()?;
        let f: Vec<&str> = l.split_whitespace().collect();
        let want = match f.get(5) {
            Some(&"f") => 7,
            Some(&"r") => 10,
            _ => return Err(lines.err("bad edge label kind")),
        };
        if f.len() != want || lines.num::<usize>(f[0])? != id {
            return Err(lines.err("malformed edge record"));
        }
        let parent: u32 = lines.num(f[1])?;
        let child: u32 = lines.num(f[2])?;
        if parent as usize >= node_count || child as usize >= node_count {
            return Err(lines.err("edge endpoint out of range"));
        }
        let first = lines.sym(f[4])?;
        let label = if want == 7 {
            EdgeLabel::FirstSym(first)
        } else {
            EdgeLabel::TextRef {
                start: lines.num(f[6])?,
                end: lines.num(f[7])?,
                suffix: lines.num(f[8])?,
            }
        };
        nodes[child as usize].parent_edge = Some(id as u32);
        nodes[parent as usize].children.push((first, id as u32));
        edges.push(PlstEdge {
            parent,
            child,
            first,
            single: f[3] == "1",
            label,
            fast_link: lines.opt(f[want - 1])?,
        });
    }
    for node in &mut nodes {
        node.children.sort_unstable_by_key(|&(k, _)| k);
    }

    let chunk_count = lines.section("chunks")?;
    let mut chunks = Vec::with_capacity(chunk_count);
    for _ in 0..chunk_count {
        let l = lines.next_line()?;
        let mut it = l.split_whitespace();
        let start = lines.num(it.next().unwrap_or(""))?;
        let symbols = it.map(|t| lines.sym(t)).collect::<Result<Vec<_>>>()?;
        chunks.push(Chunk { start, symbols });
    }
    let ref_text =
        RefText::from_chunks(chunks).ok_or_else(|| lines.err("chunks overlap or are unsorted"))?;

    let leaf_count = lines.section("leaves")?;
    for _ in 0..leaf_count {
        let l = lines.next_line()?;
        let f = lines.fields(&l, 2)?;
        let id: usize = lines.num(&f[0])?;
        if id >= node_count {
            return Err(lines.err("leaf id out of range"));
        }
        nodes[id].leaf_suffix = Some(lines.num(&f[1])?);
    }
    if lines.next_line()?.trim() != "end" {
        return Err(lines.err("expected `end`"));
    }

    Ok(IndexFile {
        alphabet,
        plst: Plst {
            nodes,
            edges,
            ref_text,
            text_len,
        },
    })
}
