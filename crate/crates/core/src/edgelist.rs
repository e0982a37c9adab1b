//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! !sides L: a,c R: b,d
//! a b
//! c d
//! ```
//!
//! One edge per line, names separated by whitespace. The optional `!sides`
//! header pins the bipartition; without it sides are inferred. Several graphs
//! can share one stream, each introduced by a `# @graph` comment line.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Side};

pub const GRAPH_MARKER: &str = "# @graph";

pub fn parse_edge_list(text: &str) -> Result<BipartiteGraph> {
    let mut edges: Vec<(String, String)> = Vec::new();
    let mut sides: Option<HashMap<String, Side>> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("!sides") {
            if sides.is_some() {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: "repeated !sides header".into(),
                });
            }
            sides = Some(parse_sides(rest).map_err(|msg| Error::Parse { line: i + 1, msg })?);
            continue;
        }
        let mut toks = line.split_whitespace();
        match (toks.next(), toks.next(), toks.next()) {
            (Some(a), Some(b), None) => edges.push((a.to_string(), b.to_string())),
            _ => {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!("expected two vertex names, got {line:?}"),
                })
            }
        }
    }
    BipartiteGraph::build(&edges, sides.as_ref())
}

fn parse_sides(rest: &str) -> std::result::Result<HashMap<String, Side>, String> {
    let rest = rest.trim();
    let l_at = rest.find("L:").ok_or("missing L: section")?;
    let r_at = rest.find("R:").ok_or("missing R: section")?;
    let (l_part, r_part) = if l_at < r_at {
        (&rest[l_at + 2..r_at], &rest[r_at + 2..])
    } else {
        (&rest[l_at + 2..], &rest[r_at + 2..l_at])
    };
    let mut map = HashMap::new();
    for (part, side) in [(l_part, Side::L), (r_part, Side::R)] {
        for name in part.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if map.insert(name.to_string(), side).is_some() {
                return Err(format!("vertex {name} listed twice"));
            }
        }
    }
    Ok(map)
}

/// Serialize with a `!sides` header and edges in ascending id order.
pub fn format_edge_list(g: &BipartiteGraph) -> String {
    let mut out = String::new();
    let side_names = |s: Side| -> Vec<&str> {
        g.vertices()
            .filter(|&v| g.side(v) == s)
            .map(|v| g.name(v))
            .collect()
    };
    let _ = writeln!(
        out,
        "!sides L: {} R: {}",
        side_names(Side::L).join(","),
        side_names(Side::R).join(",")
    );
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", g.name(u), g.name(v));
    }
    out
}

/// Several graphs, each introduced by a marker line carrying `label(i)`.
pub fn format_stream<'a>(
    graphs: impl IntoIterator<Item = &'a BipartiteGraph>,
    label: impl Fn(usize, &BipartiteGraph) -> String,
) -> String {
    let mut out = String::new();
    for (i, g) in graphs.into_iter().enumerate() {
        let _ = writeln!(out, "{GRAPH_MARKER} {}", label(i, g));
        out.push_str(&format_edge_list(g));
    }
    out
}

/// Split a multi-graph stream on `# @graph` marker lines.
pub fn parse_stream(text: &str) -> Result<Vec<BipartiteGraph>> {
    let mut chunks: Vec<String> = Vec::new();
    let mut current: Option<String> = None;
    for line in text.lines() {
        if line.trim_start().starts_with(GRAPH_MARKER) {
            if let Some(c) = current.take() {
                chunks.push(c);
            }
            current = Some(String::new());
        } else if let Some(c) = current.as_mut() {
            c.push_str(line);
            c.push('\n');
        } else if !line.trim().is_empty() && !line.trim_start().starts_with('#') {
            current = Some(format!("{line}\n"));
        }
    }
    if let Some(c) = current {
        chunks.push(c);
    }
    chunks.iter().map(|c| parse_edge_list(c)).collect()
}
