//! Subdivisions of `K3,3`.

use serde_json::{json, Value};

use super::names;
use crate::connectivity::{mask_components, mask_connected};
use crate::error::{Error, Result};
use crate::graph::{bit, bits, BipartiteGraph, Path, Vertex};
use crate::limits::Limits;

/// Branch vertices `left`, `right` and, at index `3i + j`, the path from
/// `left[i]` to `right[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K33Subdivision {
    pub left: [Vertex; 3],
    pub right: [Vertex; 3],
    pub paths: Vec<Path>,
}

impl K33Subdivision {
    /// Nine paths between the right ends, internally disjoint and avoiding
    /// the other branch vertices.
    pub fn is_valid(&self, g: &BipartiteGraph) -> bool {
        if self.paths.len() != 9 {
            return false;
        }
        let branch: Vec<Vertex> = self.left.iter().chain(&self.right).copied().collect();
        let mut seen = 0u64;
        for &b in &branch {
            if b >= g.n() || seen & bit(b) != 0 {
                return false;
            }
            seen |= bit(b);
        }
        for (k, p) in self.paths.iter().enumerate() {
            let (i, j) = (k / 3, k % 3);
            if Path::new(g, p.vertices().to_vec()).is_err() || p.ends() != (self.left[i], self.right[j]) {
                return false;
            }
            for &x in p.interior() {
                if seen & bit(x) != 0 {
                    return false;
                }
                seen |= bit(x);
            }
        }
        true
    }

    /// No edges among its vertices other than path edges.
    pub fn is_induced(&self, g: &BipartiteGraph) -> bool {
        let vs: Vec<Vertex> = self.vertices();
        let path_edges: usize = self.paths.iter().map(Path::len).sum();
        let induced = g
            .edges()
            .iter()
            .filter(|(u, v)| vs.contains(u) && vs.contains(v))
            .count();
        induced == path_edges
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = self.left.iter().chain(&self.right).copied().collect();
        for p in &self.paths {
            vs.extend_from_slice(p.interior());
        }
        vs.sort_unstable();
        vs
    }

    pub fn to_json(&self, g: &BipartiteGraph) -> Value {
        json!({
            "left": names(g, &self.left),
            "right": names(g, &self.right),
            "paths": self.paths.iter().map(|p| p.names(g)).collect::<Vec<_>>(),
        })
    }

    /// Read the subdivision off an induced subgraph whose branch vertices
    /// are exactly `left ∪ right`.
    fn trace(g: &BipartiteGraph, keep: u64, left: [Vertex; 3], right: [Vertex; 3]) -> Option<Self> {
        let masks = g.masks().ok()?;
        let branch = left.iter().chain(&right).fold(0u64, |acc, &v| acc | bit(v));
        let mut paths: Vec<Option<Path>> = vec![None; 9];
        for (i, &a) in left.iter().enumerate() {
            for first in bits(masks[a] & keep) {
                let mut walk = vec![a, first];
                let (mut prev, mut cur) = (a, first);
                while branch & bit(cur) == 0 {
                    let nexts: Vec<Vertex> = bits(masks[cur] & keep & !bit(prev)).collect();
                    if nexts.len() != 1 {
                        return None;
                    }
                    prev = cur;
                    cur = nexts[0];
                    walk.push(cur);
                }
                let j = right.iter().position(|&r| r == cur)?;
                if paths[3 * i + j].is_some() {
                    return None;
                }
                paths[3 * i + j] = Some(Path::from_vec(walk));
            }
        }
        let paths: Vec<Path> = paths.into_iter().collect::<Option<_>>()?;
        let s = K33Subdivision { left, right, paths };
        s.is_valid(g).then_some(s)
    }
}

/// Subdivision built from twins `u1, u2` with common neighbors `v1, v2, v3`
/// in a cubic graph: a minimal connected set `C′` seen by all of `v1, v2, v3`
/// inside one component of `G ∖ {u1, u2, v1, v2, v3}` completes it.
pub(crate) fn from_twins(g: &BipartiteGraph, u1: Vertex, u2: Vertex) -> Option<K33Subdivision> {
    let masks = g.masks().ok()?;
    let vs: Vec<Vertex> = g.neighbors(u1).to_vec();
    if vs.len() != 3 {
        return None;
    }
    let core = bit(u1) | bit(u2) | vs.iter().fold(0u64, |acc, &v| acc | bit(v));
    let sees_all = |set: u64| vs.iter().all(|&v| masks[v] & set != 0);
    let mut c = mask_components(masks, g.full_mask() & !core)
        .into_iter()
        .find(|&comp| sees_all(comp))?;
    // shrink until no single vertex can go; this is inclusion-minimal
    loop {
        let removable = bits(c).find(|&x| {
            let rest = c & !bit(x);
            rest != 0 && sees_all(rest) && mask_connected(masks, rest)
        });
        match removable {
            Some(x) => c &= !bit(x),
            None => break,
        }
    }
    let keep = c | core;
    let third: Vec<Vertex> = bits(c).filter(|&x| (masks[x] & keep).count_ones() >= 3).collect();
    let w = match third.as_slice() {
        [w] => *w,
        _ => return None,
    };
    K33Subdivision::trace(g, keep, [u1, u2, w], [vs[0], vs[1], vs[2]])
}

/// Any subdivision of `K3,3` in `g`, by backtracking over branch sets and
/// paths. Guarded by the cycle enumeration vertex cap.
pub fn find_k33_subdivision(g: &BipartiteGraph, limits: &Limits) -> Result<Option<K33Subdivision>> {
    if g.n() > limits.cycle_vertices {
        return Err(Error::limit("K3,3 subdivision search vertex count", limits.cycle_vertices, g.n()));
    }
    let masks = g.masks()?;
    let cands: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
    let triples = triples(&cands);
    for l in &triples {
        for r in &triples {
            if l[0] > r[0] || l.iter().any(|x| r.contains(x)) {
                continue;
            }
            let branch = l.iter().chain(r).fold(0u64, |acc, &v| acc | bit(v));
            let mut paths = Vec::with_capacity(9);
            if route(masks, l, r, branch, &mut paths) {
                return Ok(Some(K33Subdivision {
                    left: *l,
                    right: *r,
                    paths: paths.into_iter().map(Path::from_vec).collect(),
                }));
            }
        }
    }
    Ok(None)
}

fn triples(vs: &[Vertex]) -> Vec<[Vertex; 3]> {
    let mut out = Vec::new();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            for k in j + 1..vs.len() {
                out.push([vs[i], vs[j], vs[k]]);
            }
        }
    }
    out
}

fn route(masks: &[u64], l: &[Vertex; 3], r: &[Vertex; 3], used: u64, paths: &mut Vec<Vec<Vertex>>) -> bool {
    let k = paths.len();
    if k == 9 {
        return true;
    }
    let (a, b) = (l[k / 3], r[k % 3]);
    let mut walk = vec![a];
    simple_paths(masks, b, used & !bit(b), &mut walk, &mut |p| {
        let inner = p[1..p.len() - 1].iter().fold(0u64, |acc, &v| acc | bit(v));
        paths.push(p.to_vec());
        if route(masks, l, r, used | inner, paths) {
            return true;
        }
        paths.pop();
        false
    })
}

/// Extend `walk` to `to` avoiding `blocked`; stops when `f` returns true.
fn simple_paths(masks: &[u64], to: Vertex, blocked: u64, walk: &mut Vec<Vertex>, f: &mut dyn FnMut(&[Vertex]) -> bool) -> bool {
    let cur = *walk.last().expect("walk starts nonempty");
    if cur == to {
        return f(walk);
    }
    let on_walk = walk.iter().fold(0u64, |acc, &v| acc | bit(v));
    for y in bits(masks[cur] & !blocked & !on_walk) {
        walk.push(y);
        if simple_paths(masks, to, blocked, walk, f) {
            return true;
        }
        walk.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named::{k33, r10};

    #[test]
    fn k33_is_its_own_subdivision() {
        let g = k33();
        let s = find_k33_subdivision(&g, &Limits::DEFAULT).unwrap().unwrap();
        assert!(s.is_valid(&g) && s.is_induced(&g));
        assert!(s.paths.iter().all(|p| p.len() == 1));
    }

    #[test]
    fn r10_has_one() {
        let g = r10();
        let s = find_k33_subdivision(&g, &Limits::DEFAULT).unwrap().unwrap();
        assert!(s.is_valid(&g));
    }

    #[test]
    fn k33_from_twins() {
        let g = k33();
        assert!(from_twins(&g, 0, 1).is_some_and(|s| s.is_valid(&g) && s.is_induced(&g)));
    }

    #[test]
    fn cycle_has_none() {
        let g = crate::generators::named::cycle(8).unwrap();
        assert!(find_k33_subdivision(&g, &Limits::DEFAULT).unwrap().is_none());
    }
}
