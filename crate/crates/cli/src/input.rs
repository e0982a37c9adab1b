use std::path::Path;

use anyhow::{Context, Result};

use balgraph::edgelist::parse_stream;
use balgraph::generators::named;
use balgraph::matrix::{matrix_to_graph, SignedMatrix};
use balgraph::signing::Signing;
use balgraph::BipartiteGraph;

/// One input graph, with the signing a matrix file carries.
pub struct Loaded {
    pub graph: BipartiteGraph,
    pub signing: Option<Signing>,
}

/// `@NAME` for a built-in graph, a `.csv` signed matrix, or an edge-list stream.
pub fn load(spec: &str) -> Result<Vec<Loaded>> {
    if let Some(id) = spec.strip_prefix('@') {
        let graph = named(id)?;
        return Ok(vec![Loaded { graph, signing: None }]);
    }
    let path = Path::new(spec);
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {spec}"))?;
    if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
        let m = SignedMatrix::parse_csv(&text)?;
        let (graph, s) = matrix_to_graph(&m)?;
        return Ok(vec![Loaded {
            graph,
            signing: Some(s),
        }]);
    }
    let graphs = parse_stream(&text)?;
    if graphs.is_empty() {
        anyhow::bail!(balgraph::Error::Parse {
            line: 0,
            msg: format!("{spec} contains no edges"),
        });
    }
    Ok(graphs.into_iter().map(|graph| Loaded { graph, signing: None }).collect())
}

pub fn load_graphs(spec: &str) -> Result<Vec<BipartiteGraph>> {
    Ok(load(spec)?.into_iter().map(|l| l.graph).collect())
}
