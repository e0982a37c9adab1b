use serde_json::{json, Value};

use super::{list, mask, names, subsets_by_size};
use crate::connectivity::{is_two_connected, mask_components};
use crate::error::{Error, Result};
use crate::graph::{bit, BipartiteGraph, Vertex};
use crate::limits::Limits;

/// `(u, v, U, V)`: `uv` an edge, `U ⊆ N(u) ∖ {v}`, `V ⊆ N(v) ∖ {u}`, and
/// `S = {u, v} ∪ U ∪ V` disconnects the graph. `components` lists the
/// components of `G ∖ S` by lowest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleStarCutset {
    pub u: Vertex,
    pub v: Vertex,
    pub big_u: Vec<Vertex>,
    pub big_v: Vec<Vertex>,
    pub components: Vec<Vec<Vertex>>,
}

impl DoubleStarCutset {
    pub fn s_mask(&self) -> u64 {
        bit(self.u) | bit(self.v) | mask(&self.big_u) | mask(&self.big_v)
    }

    pub fn s(&self) -> Vec<Vertex> {
        list(self.s_mask())
    }

    pub fn is_valid(&self, g: &BipartiteGraph) -> bool {
        let Ok(masks) = g.masks() else { return false };
        let n = g.n();
        if self.u >= n || self.v >= n || !g.has_edge(self.u, self.v) {
            return false;
        }
        let nu = masks[self.u] & !bit(self.v);
        let nv = masks[self.v] & !bit(self.u);
        if mask(&self.big_u) & !nu != 0 || mask(&self.big_v) & !nv != 0 {
            return false;
        }
        let comps = mask_components(masks, g.full_mask() & !self.s_mask());
        comps.len() >= 2 && comps.iter().map(|&c| list(c)).collect::<Vec<_>>() == self.components
    }

    pub fn to_json(&self, g: &BipartiteGraph) -> Value {
        json!({
            "kind": "DoubleStarCutset",
            "u": g.name(self.u),
            "v": g.name(self.v),
            "U": names(g, &self.big_u),
            "V": names(g, &self.big_v),
            "components": self.components.iter().map(|c| names(g, c)).collect::<Vec<_>>(),
        })
    }
}

/// Every double star cutset of a 2-connected graph: edges in id order, then
/// `U` and `V` by size and lexicographically.
pub fn enumerate_double_star_cutsets(g: &BipartiteGraph, limits: &Limits) -> Result<Vec<DoubleStarCutset>> {
    if !is_two_connected(g) {
        return Err(Error::Not2Connected);
    }
    let masks = g.masks()?;
    let full = g.full_mask();
    let mut out = Vec::new();
    for &(u, v) in g.edges() {
        let nu: Vec<Vertex> = g.neighbors(u).iter().copied().filter(|&w| w != v).collect();
        let nv: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| w != u).collect();
        let widest = nu.len().max(nv.len());
        if widest > limits.star_degree {
            return Err(Error::limit("double star cutset degree", limits.star_degree, widest));
        }
        for um in subsets_by_size(&nu) {
            for vm in subsets_by_size(&nv) {
                let s = bit(u) | bit(v) | um | vm;
                let comps = mask_components(masks, full & !s);
                if comps.len() >= 2 {
                    out.push(DoubleStarCutset {
                        u,
                        v,
                        big_u: list(um),
                        big_v: list(vm),
                        components: comps.into_iter().map(list).collect(),
                    });
                }
            }
        }
    }
    Ok(out)
}

/// A minimally-sided double star cutset with its minimal side.
#[derive(Debug, Clone)]
pub struct MinimalDoubleStar {
    pub cutset: DoubleStarCutset,
    /// Index into `cutset.components` of the component forming the minimal side.
    pub component: usize,
    /// `G[S ∪ C]` for that component.
    pub block: BipartiteGraph,
    /// Ids in `g` of the block's vertices, in block order.
    pub block_vertices: Vec<Vertex>,
}

/// A cutset and block `G[S ∪ C]` such that no block of any double star cutset
/// has a vertex set properly contained in it.
///
/// Every block contains a block `G[S ∪ C]` of a single component, so comparing
/// single-component blocks decides minimality over all groupings.
pub fn minimally_sided_double_star(g: &BipartiteGraph, limits: &Limits) -> Result<Option<MinimalDoubleStar>> {
    let all = enumerate_double_star_cutsets(g, limits)?;
    let mut candidates: Vec<(usize, usize, u64)> = Vec::new();
    for (i, c) in all.iter().enumerate() {
        let s = c.s_mask();
        for (j, comp) in c.components.iter().enumerate() {
            candidates.push((i, j, s | mask(comp)));
        }
    }
    let mut sets: Vec<u64> = candidates.iter().map(|c| c.2).collect();
    sets.sort_unstable();
    sets.dedup();
    let minimal = |b: u64| !sets.iter().any(|&o| o != b && o & !b == 0);
    for &(i, j, b) in &candidates {
        if minimal(b) {
            let (block, block_vertices) = g.induced_mask(b);
            return Ok(Some(MinimalDoubleStar {
                cutset: all[i].clone(),
                component: j,
                block,
                block_vertices,
            }));
        }
    }
    Ok(None)
}
