//! Blocks, cut vertices and branches.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, bits, BipartiteGraph, Path, Vertex};

/// Vertices reachable from `from` inside `alive`.
pub fn reach(masks: &[u64], alive: u64, from: u64) -> u64 {
    let mut seen = from & alive;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        for v in bits(frontier) {
            next |= masks[v];
        }
        next &= alive & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// Components of the subgraph induced by `alive`, ordered by lowest vertex.
pub fn mask_components(masks: &[u64], alive: u64) -> Vec<u64> {
    let mut rest = alive;
    let mut out = Vec::new();
    while rest != 0 {
        let start = rest & rest.wrapping_neg();
        let comp = reach(masks, rest, start);
        out.push(comp);
        rest &= !comp;
    }
    out
}

pub fn mask_connected(masks: &[u64], alive: u64) -> bool {
    alive == 0 || reach(masks, alive, alive & alive.wrapping_neg()) == alive
}

/// Block/cut-vertex tree of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockTree {
    /// Vertex sets of the maximal 2-connected pieces (bridges are blocks too).
    pub blocks: Vec<Vec<Vertex>>,
    pub cut_vertices: Vec<Vertex>,
    /// `(block index, cut vertex)` incidences.
    pub tree_edges: Vec<(usize, Vertex)>,
    /// Indices of the leaf blocks; a lone block counts as an end block.
    pub end_blocks: Vec<usize>,
}

pub fn block_tree(g: &BipartiteGraph) -> Result<BlockTree> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (mut blocks, cut_flags) = biconnected(g);
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort();
    let cut_vertices: Vec<Vertex> = g.vertices().filter(|&v| cut_flags[v]).collect();
    let mut tree_edges = Vec::new();
    let mut incidence = vec![0usize; blocks.len()];
    for (i, b) in blocks.iter().enumerate() {
        for &v in b {
            if cut_flags[v] {
                tree_edges.push((i, v));
                incidence[i] += 1;
            }
        }
    }
    let end_blocks = (0..blocks.len()).filter(|&i| incidence[i] <= 1).collect();
    Ok(BlockTree {
        blocks,
        cut_vertices,
        tree_edges,
        end_blocks,
    })
}

/// Articulation points of every component.
pub fn cut_vertices(g: &BipartiteGraph) -> Vec<Vertex> {
    let (_, flags) = biconnected(g);
    g.vertices().filter(|&v| flags[v]).collect()
}

/// Connected, at least three vertices, no cut vertex.
pub fn is_two_connected(g: &BipartiteGraph) -> bool {
    g.n() >= 3 && g.is_connected() && cut_vertices(g).is_empty()
}

/// Hopcroft–Tarjan with an explicit stack. Returns blocks (unsorted) and
/// cut-vertex flags. Isolated vertices form singleton blocks.
fn biconnected(g: &BipartiteGraph) -> (Vec<Vec<Vertex>>, Vec<bool>) {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut blocks: Vec<Vec<Vertex>> = Vec::new();
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut time = 0usize;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        if g.degree(root) == 0 {
            blocks.push(vec![root]);
            continue;
        }
        let mut root_children = 0usize;
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            let nbrs = g.neighbors(v);
            if *idx < nbrs.len() {
                let w = nbrs[*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    edge_stack.push((v, w));
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        if u != root {
                            is_cut[u] = true;
                        }
                        let mut block = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            block.push(a);
                            block.push(b);
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        block.dedup();
                        blocks.push(block);
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    (blocks, is_cut)
}

/// Branch vertices (degree >= 3) and the degree-2 paths joining them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchDecomposition {
    pub branch_vertices: Vec<Vertex>,
    /// Each branch runs from its smaller end; sorted by (first end, length, vertices).
    pub branches: Vec<Path>,
}

impl BranchDecomposition {
    /// Index of the branch containing `v` in its interior.
    pub fn branch_of_interior(&self, v: Vertex) -> Option<usize> {
        self.branches
            .iter()
            .position(|b| b.interior().contains(&v))
    }
}

pub fn branch_decomposition(g: &BipartiteGraph) -> Result<BranchDecomposition> {
    if !is_two_connected(g) {
        return Err(Error::Not2Connected);
    }
    if g.vertices().all(|v| g.degree(v) == 2) {
        return Err(Error::IsCycle);
    }
    let branch_vertices: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
    let mut branches = Vec::new();
    for &b in &branch_vertices {
        for &first in g.neighbors(b) {
            let mut path = vec![b, first];
            let mut prev = b;
            let mut cur = first;
            while g.degree(cur) == 2 {
                let next = g
                    .neighbors(cur)
                    .iter()
                    .copied()
                    .find(|&x| x != prev)
                    .expect("degree-2 vertex has another neighbor");
                prev = cur;
                cur = next;
                path.push(cur);
            }
            if b < cur {
                branches.push(Path::from_vec(path));
            }
        }
    }
    branches.sort_by(|x, y| {
        (x.ends().0, x.len(), x.vertices()).cmp(&(y.ends().0, y.len(), y.vertices()))
    });
    Ok(BranchDecomposition {
        branch_vertices,
        branches,
    })
}

/// Two branches are non-incident when their end sets are disjoint.
pub fn non_incident(b1: &Path, b2: &Path) -> bool {
    let (a1, z1) = b1.ends();
    let (a2, z2) = b2.ends();
    a1 != a2 && a1 != z2 && z1 != a2 && z1 != z2
}

/// Mask of `vs`.
pub fn mask_of(vs: &[Vertex]) -> u64 {
    vs.iter().fold(0, |acc, &v| acc | bit(v))
}
