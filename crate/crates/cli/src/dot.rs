use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use serde_json::Value;

use balgraph::{BipartiteGraph, Side};

fn collect(v: &Value, names: &HashSet<&str>, out: &mut HashSet<String>) {
    match v {
        Value::String(s) if names.contains(s.as_str()) => {
            out.insert(s.clone());
        }
        Value::Array(a) => a.iter().for_each(|x| collect(x, names, out)),
        Value::Object(o) => o.values().for_each(|x| collect(x, names, out)),
        _ => {}
    }
}

/// DOT drawing; vertices named anywhere in `witness` are filled, edges between
/// two of them drawn bold.
pub fn render(g: &BipartiteGraph, witness: &Value) -> String {
    let names: HashSet<&str> = g.names().iter().map(String::as_str).collect();
    let mut hit = HashSet::new();
    collect(witness, &names, &mut hit);
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in g.vertices() {
        let name = g.name(v);
        let shape = if g.side(v) == Side::L { "circle" } else { "box" };
        let fill = if hit.contains(name) { ", style=filled, fillcolor=orange" } else { "" };
        let _ = writeln!(out, "  \"{name}\" [shape={shape}{fill}];");
    }
    for &(u, v) in g.edges() {
        let (a, b) = (g.name(u), g.name(v));
        let bold = if hit.contains(a) && hit.contains(b) { " [penwidth=3]" } else { "" };
        let _ = writeln!(out, "  \"{a}\" -- \"{b}\"{bold};");
    }
    out.push_str("}\n");
    out
}

pub fn write(path: Option<&Path>, g: &BipartiteGraph, witness: &Value) -> anyhow::Result<()> {
    if let Some(p) = path {
        std::fs::write(p, render(g, witness))?;
    }
    Ok(())
}
