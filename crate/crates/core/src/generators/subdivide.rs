use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{edge_key, BipartiteGraph, Edge};

/// Replace `e` by a path through `k` new vertices `s<u>_<v>_<i>`.
///
/// Odd `k` puts the ends of `e` on the same side; when the result is still
/// bipartite it is returned inside [`Error::OddParityWarning`].
pub fn subdivide(g: &BipartiteGraph, e: Edge, k: usize) -> Result<BipartiteGraph> {
    let (u, v) = edge_key(e.0, e.1);
    if k == 0 {
        return Err(Error::InvalidParams("subdivide needs k >= 1".into()));
    }
    if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
        return Err(Error::NotAnEdge(format!("{u}"), format!("{v}")));
    }
    let mut taken: HashSet<String> = g.names().iter().cloned().collect();
    let mut names = g.names().to_vec();
    let mut edges: Vec<Edge> = g.edges().iter().copied().filter(|&x| x != (u, v)).collect();
    let mut prev = u;
    for i in 1..=k {
        let mut name = format!("s{}_{}_{i}", g.name(u), g.name(v));
        while taken.contains(&name) {
            name.push('\'');
        }
        taken.insert(name.clone());
        names.push(name);
        let id = names.len() - 1;
        edges.push((prev, id));
        prev = id;
    }
    edges.push((prev, v));
    let out = BipartiteGraph::from_parts(names, None, edges)?;
    if k % 2 == 1 {
        return Err(Error::OddParityWarning(
            g.name(u).to_string(),
            g.name(v).to_string(),
            Box::new(out),
        ));
    }
    Ok(out)
}
