//! Builds an index and walks its nodes and edges.
//!
//!     cargo run --example build_index [TEXT] [PARAMS]

use plst::index::{EdgeLabel, NodeType};
use plst::pv::Alphabet;
use plst::Plst;

fn main() -> plst::Result<()> {
    let mut args = std::env::args().skip(1);
    let text = args.next().unwrap_or_else(|| "xyabzwabzxbz$".into());
    let params = args.next().unwrap_or_else(|| "wxyz".into());

    let alphabet = Alphabet::with_params(params.as_bytes());
    let plst = Plst::build(&alphabet.encode(text.as_bytes()).with_sentinel())?;
    println!("{}", plst.stats());
    println!("T' = [{}]", plst.ref_text().concatenated());

    for v in plst.preorder() {
        let node = plst.node(v);
        let mut level = 0;
        let mut x = v;
        while let Some(p) = plst.parent(x) {
            level += 1;
            x = p;
        }
        let indent = "  ".repeat(level);
        let ty = match node.node_type {
            NodeType::Type1 => "1",
            NodeType::Type2 => "2",
        };
        let label = match node.parent_edge.map(|e| plst.edge(e)) {
            None => "(root)".to_string(),
            Some(edge) => {
                let kind = match edge.label {
                    EdgeLabel::FirstSym(_) => "sym".to_string(),
                    EdgeLabel::TextRef { start, end, suffix } => {
                        format!("ref {start}..{end} of {suffix}")
                    }
                };
                format!(
                    "[{}] {kind}",
                    plst.materialize_label(node.parent_edge.unwrap())
                )
            }
        };
        println!(
            "{indent}{label}  type {ty} depth {} {} re {}",
            node.depth,
            if node.good { "good" } else { "bad" },
            node.re_sign
        );
    }
    Ok(())
}
