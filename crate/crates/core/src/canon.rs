//! Canonical labeling by individualization and refinement.
//!
//! Cells are refined to an equitable partition; the first smallest non-trivial
//! cell is individualized vertex by vertex and the lexicographically least
//! adjacency certificate over all leaves is kept. Vertices with identical
//! neighborhoods are interchangeable, so only one of each twin class is tried.

use sha2::{Digest, Sha256};

use crate::graph::{BipartiteGraph, Vertex};

/// Adjacency matrix under a canonical ordering, row-major bit words.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub words: Vec<u64>,
}

impl CanonicalForm {
    /// Rebuild the graph the form describes, vertices named `v1..vn`.
    pub fn to_graph(&self) -> BipartiteGraph {
        let wpr = words_per_row(self.n);
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.words[i * wpr + j / 64] >> (j % 64) & 1 == 1 {
                    edges.push((i, j));
                }
            }
        }
        BipartiteGraph::from_edge_ids(self.n, edges).expect("canonical form of a bipartite graph")
    }
}

fn words_per_row(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

pub fn canonical_form(g: &BipartiteGraph) -> CanonicalForm {
    let lab = canonical_labeling(g);
    CanonicalForm {
        n: g.n(),
        words: certificate(g, &lab),
    }
}

/// `lab[i]` is the vertex placed at canonical position `i`.
pub fn canonical_labeling(g: &BipartiteGraph) -> Vec<Vertex> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let cells = vec![(0..n).collect::<Vec<_>>()];
    let mut best: Option<(Vec<u64>, Vec<Vertex>)> = None;
    search(g, cells, &mut best);
    best.expect("search visits at least one leaf").1
}

fn certificate(g: &BipartiteGraph, lab: &[Vertex]) -> Vec<u64> {
    let n = lab.len();
    let wpr = words_per_row(n);
    let mut pos = vec![0usize; n];
    for (i, &v) in lab.iter().enumerate() {
        pos[v] = i;
    }
    let mut words = vec![0u64; n * wpr];
    for (i, &v) in lab.iter().enumerate() {
        for &w in g.neighbors(v) {
            let j = pos[w];
            words[i * wpr + j / 64] |= 1 << (j % 64);
        }
    }
    words
}

fn refine(g: &BipartiteGraph, mut cells: Vec<Vec<Vertex>>) -> Vec<Vec<Vertex>> {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let k = cells.len();
        let mut next: Vec<Vec<Vertex>> = Vec::with_capacity(k);
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, Vertex)> = cell
                .iter()
                .map(|&v| {
                    let mut sig = vec![0u32; k];
                    for &w in g.neighbors(v) {
                        sig[cell_of[w]] += 1;
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|x| x.1).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(g: &BipartiteGraph, cells: Vec<Vec<Vertex>>, best: &mut Option<(Vec<u64>, Vec<Vertex>)>) {
    let cells = refine(g, cells);
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i);
    let Some(t) = target else {
        let lab: Vec<Vertex> = cells.into_iter().map(|c| c[0]).collect();
        let cert = certificate(g, &lab);
        if best.as_ref().is_none_or(|(b, _)| cert < *b) {
            *best = Some((cert, lab));
        }
        return;
    };
    let mut tried: Vec<Vertex> = Vec::new();
    for &v in &cells[t] {
        if tried.iter().any(|&u| g.neighbors(u) == g.neighbors(v)) {
            continue;
        }
        tried.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..t]);
        next.push(vec![v]);
        next.push(cells[t].iter().copied().filter(|&x| x != v).collect());
        next.extend_from_slice(&cells[t + 1..]);
        search(g, next, best);
    }
}

pub fn is_isomorphic(g: &BipartiteGraph, h: &BipartiteGraph) -> bool {
    if g.n() != h.n() || g.m() != h.m() {
        return false;
    }
    let mut dg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = h.vertices().map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_form(g) == canonical_form(h)
}

/// Short hex digest of the canonical form; equal for isomorphic graphs.
pub fn graph_hash(g: &BipartiteGraph) -> String {
    let form = canonical_form(g);
    let mut hasher = Sha256::new();
    hasher.update((form.n as u64).to_le_bytes());
    for w in &form.words {
        hasher.update(w.to_le_bytes());
    }
    let digest = hasher.finalize();
    hex::encode(&digest[..8])
}
