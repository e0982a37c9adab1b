use anyhow::Result;

use balgraph::canon::graph_hash;
use balgraph::edgelist::format_stream;
use balgraph::generators::named;

use super::verify::corpus;
use crate::args::{GenerateArgs, Global};
use crate::code;

/// Writes an edge-list stream, one `# @graph <index> <hash>` marker per graph.
pub fn run(global: &Global, args: &GenerateArgs) -> Result<u8> {
    let graphs = match &args.named {
        Some(id) => vec![named(id)?],
        None => corpus(global, &args.corpus, &global.limits())?.0,
    };
    let text = format_stream(&graphs, |i, g| format!("{i} {}", graph_hash(g)));
    match &global.out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(code::OK)
}
