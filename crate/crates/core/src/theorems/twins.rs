use serde_json::{json, Value};

use crate::graph::{BipartiteGraph, Vertex};

/// `N(u) = N(v)` with `|N(u)| ≥ 3`, `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct TwinPair {
    pub u: Vertex,
    pub v: Vertex,
}

impl TwinPair {
    pub fn is_valid(&self, g: &BipartiteGraph) -> bool {
        self.u < g.n()
            && self.v < g.n()
            && self.u != self.v
            && g.degree(self.u) >= 3
            && g.neighbors(self.u) == g.neighbors(self.v)
    }

    pub fn to_json(&self, g: &BipartiteGraph) -> Value {
        json!([g.name(self.u), g.name(self.v)])
    }
}

/// All twin pairs in lexicographic order.
pub fn twin_pairs(g: &BipartiteGraph) -> Vec<TwinPair> {
    let mut out = Vec::new();
    for u in g.vertices() {
        if g.degree(u) < 3 {
            continue;
        }
        for v in u + 1..g.n() {
            if g.neighbors(u) == g.neighbors(v) {
                out.push(TwinPair { u, v });
            }
        }
    }
    out
}

pub fn find_twins(g: &BipartiteGraph) -> Option<TwinPair> {
    twin_pairs(g).into_iter().next()
}
