use serde_json::{json, Value};

use super::{list, mask, names, subsets_by_size};
use crate::connectivity::mask_connected;
use crate::error::{Error, Result};
use crate::graph::{bit, BipartiteGraph, Vertex};
use crate::limits::Limits;

/// `{x} ∪ R` with `R ⊆ N(x)` whose removal leaves at least two components.
/// `R = ∅` means `x` is a cut vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarCutset {
    pub x: Vertex,
    pub r: Vec<Vertex>,
}

impl StarCutset {
    pub fn mask(&self) -> u64 {
        bit(self.x) | mask(&self.r)
    }

    pub fn to_json(&self, g: &BipartiteGraph) -> Value {
        json!({
            "kind": "StarCutset",
            "x": g.name(self.x),
            "R": names(g, &self.r),
        })
    }
}

/// Removing `cut` from `g` leaves at least two nonempty components.
pub(crate) fn disconnects(masks: &[u64], full: u64, cut: u64) -> bool {
    let rest = full & !cut;
    rest != 0 && !mask_connected(masks, rest)
}

pub fn is_star_cutset(g: &BipartiteGraph, c: &StarCutset) -> bool {
    let Ok(masks) = g.masks() else { return false };
    c.x < g.n()
        && c.r.iter().all(|&y| y < g.n() && g.has_edge(c.x, y))
        && disconnects(masks, g.full_mask(), c.mask())
}

/// The star cutset with lexicographically least `(x, |R|, R)`, if any.
pub fn find_star_cutset(g: &BipartiteGraph, limits: &Limits) -> Result<Option<StarCutset>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let masks = g.masks()?;
    let full = g.full_mask();
    for x in g.vertices() {
        let nbrs = g.neighbors(x);
        if nbrs.len() > limits.star_degree {
            // a disconnecting subset may hide among 2^deg candidates
            if disconnects(masks, full, bit(x) | masks[x]) {
                return Err(Error::limit("star cutset center degree", limits.star_degree, nbrs.len()));
            }
            // G - N[x] connected: only pendant neighbours of x can split off
            if nbrs.iter().any(|&y| g.degree(y) == 1) && g.n() > 2 {
                return Err(Error::limit("star cutset center degree", limits.star_degree, nbrs.len()));
            }
            continue;
        }
        for r in subsets_by_size(nbrs) {
            if disconnects(masks, full, bit(x) | r) {
                return Ok(Some(StarCutset { x, r: list(r) }));
            }
        }
    }
    Ok(None)
}

pub fn has_star_cutset(g: &BipartiteGraph, limits: &Limits) -> Result<bool> {
    Ok(find_star_cutset(g, limits)?.is_some())
}

/// `(x, T, A, R)`: `T ∪ A` complete bipartite with `x ∈ T`, `A ∪ R ⊆ N(x)`,
/// `|T| ≥ 2 ⇒ |A| ≥ 2`, and removing `T ∪ A ∪ R` disconnects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedStarCutset {
    pub x: Vertex,
    pub t: Vec<Vertex>,
    pub a: Vec<Vertex>,
    pub r: Vec<Vertex>,
}

impl ExtendedStarCutset {
    pub fn from_star(c: &StarCutset) -> Self {
        ExtendedStarCutset {
            x: c.x,
            t: vec![c.x],
            a: Vec::new(),
            r: c.r.clone(),
        }
    }

    pub fn to_json(&self, g: &BipartiteGraph) -> Value {
        json!({
            "kind": "ExtendedStarCutset",
            "x": g.name(self.x),
            "T": names(g, &self.t),
            "A": names(g, &self.a),
            "R": names(g, &self.r),
        })
    }
}

pub fn verify_extended_star_cutset(g: &BipartiteGraph, c: &ExtendedStarCutset) -> bool {
    let Ok(masks) = g.masks() else { return false };
    let n = g.n();
    if !g.is_connected() || [&c.t, &c.a, &c.r].iter().any(|s| s.iter().any(|&v| v >= n)) || c.x >= n {
        return false;
    }
    let (t, a, r) = (mask(&c.t), mask(&c.a), mask(&c.r));
    let sizes = c.t.len() + c.a.len() + c.r.len();
    if (t | a | r).count_ones() as usize != sizes || t & bit(c.x) == 0 {
        return false;
    }
    if (a | r) & !masks[c.x] != 0 {
        return false;
    }
    let complete = c
        .t
        .iter()
        .all(|&u| g.side(u) == g.side(c.x) && c.a.iter().all(|&w| g.has_edge(u, w)));
    if !complete {
        return false;
    }
    if c.t.len() >= 2 && c.a.len() < 2 {
        return false;
    }
    disconnects(masks, g.full_mask(), t | a | r)
}
