//! Odd wheels and odd 3-path configurations.
//!
//! A bipartite graph is balanceable exactly when it contains neither. Both
//! searches are driven by the hole list: a wheel is a hole plus a center, and
//! any two paths of a 3-path configuration form a hole, so every configuration
//! is found as a hole `H`, two non-adjacent opposite-side vertices `u, v` of
//! `H`, and a shortest `u`–`v` path through vertices that see nothing of `H`
//! except possibly `u` and `v`.

use std::collections::VecDeque;

use serde_json::{json, Value};

use crate::error::Result;
use crate::graph::{bit, bits, BipartiteGraph, Path, Vertex};
use crate::holes::{enumerate_holes, Hole, HoleSet};
use crate::limits::Limits;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wheel {
    pub hole: Hole,
    pub center: Vertex,
    pub spokes: Vec<Vertex>,
}

impl Wheel {
    pub fn is_odd(&self) -> bool {
        self.spokes.len() % 2 == 1
    }

    /// Re-check from raw adjacency.
    pub fn is_valid(&self, g: &BipartiteGraph) -> bool {
        if Hole::new(g, self.hole.vertices().to_vec()).is_err() || self.hole.contains(self.center) {
            return false;
        }
        let mut on_hole: Vec<Vertex> = self
            .hole
            .vertices()
            .iter()
            .copied()
            .filter(|&h| g.has_edge(self.center, h))
            .collect();
        on_hole.sort_unstable();
        on_hole.len() >= 3 && on_hole == self.spokes
    }

    pub fn to_json(&self, g: &BipartiteGraph) -> Value {
        json!({
            "kind": "OddWheel",
            "hole": self.hole.names(g),
            "center": g.name(self.center),
            "spokes": names(g, &self.spokes),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreePathConfiguration {
    pub ends: (Vertex, Vertex),
    pub paths: [Path; 3],
}

impl ThreePathConfiguration {
    pub fn is_odd(&self, g: &BipartiteGraph) -> bool {
        g.side(self.ends.0) != g.side(self.ends.1)
    }

    /// Re-check from raw adjacency: chordless `u`–`v` paths, internally
    /// disjoint, every two inducing a hole.
    pub fn is_valid(&self, g: &BipartiteGraph) -> bool {
        let (u, v) = self.ends;
        if u == v || g.has_edge(u, v) {
            return false;
        }
        for p in &self.paths {
            if p.ends() != (u, v) || !p.is_chordless(g) || Path::new(g, p.vertices().to_vec()).is_err() {
                return false;
            }
        }
        for i in 0..3 {
            for j in i + 1..3 {
                let a = self.paths[i].interior();
                let b = self.paths[j].interior();
                if a.iter().any(|x| b.contains(x)) {
                    return false;
                }
                if a.iter().any(|&x| b.iter().any(|&y| g.has_edge(x, y))) {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_json(&self, g: &BipartiteGraph) -> Value {
        json!({
            "kind": "Odd3PC",
            "ends": [g.name(self.ends.0), g.name(self.ends.1)],
            "paths": self.paths.iter().map(|p| p.names(g)).collect::<Vec<_>>(),
        })
    }
}

fn names(g: &BipartiteGraph, vs: &[Vertex]) -> Vec<String> {
    vs.iter().map(|&v| g.name(v).to_string()).collect()
}

pub fn find_odd_wheel(g: &BipartiteGraph, limits: &Limits) -> Result<Option<Wheel>> {
    let holes = enumerate_holes(g, None, limits)?;
    odd_wheel_in(g, &holes)
}

pub(crate) fn odd_wheel_in(g: &BipartiteGraph, holes: &HoleSet) -> Result<Option<Wheel>> {
    let masks = g.masks()?;
    for h in &holes.holes {
        let hm = h.mask();
        for c in g.vertices() {
            if hm & bit(c) != 0 {
                continue;
            }
            let k = (masks[c] & hm).count_ones();
            if k >= 3 && k % 2 == 1 {
                return Ok(Some(Wheel {
                    hole: h.clone(),
                    center: c,
                    spokes: bits(masks[c] & hm).collect(),
                }));
            }
        }
    }
    Ok(None)
}

pub fn find_odd_3pc(g: &BipartiteGraph, limits: &Limits) -> Result<Option<ThreePathConfiguration>> {
    let holes = enumerate_holes(g, None, limits)?;
    odd_3pc_in(g, &holes)
}

pub(crate) fn odd_3pc_in(g: &BipartiteGraph, holes: &HoleSet) -> Result<Option<ThreePathConfiguration>> {
    let masks = g.masks()?;
    let full = g.full_mask();
    for h in &holes.holes {
        let seq = h.vertices();
        let k = seq.len();
        let hm = h.mask();
        for i in 0..k {
            // opposite sides at odd distance; distance 1 would be adjacent
            for j in (i + 3..k).step_by(2) {
                if j == i + k - 1 {
                    continue;
                }
                let (u, v) = (seq[i], seq[j]);
                let rest = hm & !bit(u) & !bit(v);
                let mut touch = 0u64;
                for x in bits(rest) {
                    touch |= masks[x];
                }
                let allowed = (full & !hm & !touch) | bit(u) | bit(v);
                if let Some(p3) = shortest_path(masks, allowed, u, v) {
                    let p1: Vec<Vertex> = seq[i..=j].to_vec();
                    let mut p2: Vec<Vertex> = seq[j..].to_vec();
                    p2.extend_from_slice(&seq[..=i]);
                    p2.reverse();
                    return Ok(Some(ThreePathConfiguration {
                        ends: (u, v),
                        paths: [Path::from_vec(p1), Path::from_vec(p2), Path::from_vec(p3)],
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// BFS shortest path inside `allowed` (ascending neighbor order).
pub(crate) fn shortest_path(masks: &[u64], allowed: u64, from: Vertex, to: Vertex) -> Option<Vec<Vertex>> {
    let mut parent = [usize::MAX; 64];
    let mut seen = bit(from);
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for y in bits(masks[x] & allowed & !seen) {
            seen |= bit(y);
            parent[y] = x;
            queue.push_back(y);
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructuralVerdict {
    Balanceable,
    OddWheel(Wheel),
    Odd3pc(ThreePathConfiguration),
}

impl StructuralVerdict {
    pub fn is_balanceable(&self) -> bool {
        matches!(self, StructuralVerdict::Balanceable)
    }

    pub fn witness_json(&self, g: &BipartiteGraph) -> Value {
        match self {
            StructuralVerdict::Balanceable => Value::Null,
            StructuralVerdict::OddWheel(w) => w.to_json(g),
            StructuralVerdict::Odd3pc(c) => c.to_json(g),
        }
    }
}

/// Balanceable iff there is no odd wheel and no odd 3-path configuration.
pub fn is_balanceable_structural(g: &BipartiteGraph, limits: &Limits) -> Result<StructuralVerdict> {
    let holes = enumerate_holes(g, None, limits)?;
    if let Some(w) = odd_wheel_in(g, &holes)? {
        return Ok(StructuralVerdict::OddWheel(w));
    }
    if let Some(c) = odd_3pc_in(g, &holes)? {
        return Ok(StructuralVerdict::Odd3pc(c));
    }
    Ok(StructuralVerdict::Balanceable)
}
