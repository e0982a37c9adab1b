use std::collections::HashSet;

use serde::Serialize;

use super::{mask, DoubleStarCutset, SixJoinSplit, StarCutset, TwoJoinSplit};
use crate::connectivity::mask_components;
use crate::error::{Error, Result};
use crate::graph::{bits, BipartiteGraph, Side, Vertex};

/// Marker path of a 2-join block, as vertex ids of that block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MarkerPath {
    pub a: Vertex,
    pub b: Vertex,
    pub internal: Vec<Vertex>,
    /// Edges of the marker path, 4 or 5.
    pub length: usize,
    /// Length of the shortest special-set path on the other side.
    pub q_length: usize,
}

#[derive(Debug, Clone)]
pub struct TwoJoinBlocks {
    pub g1: BipartiteGraph,
    pub g2: BipartiteGraph,
    /// Marker path of `g1` (built from `X2`) and of `g2`.
    pub markers: [MarkerPath; 2],
    /// `origin[i][v]` is the id in the host of block vertex `v`, `None` for new vertices.
    pub origin: [Vec<Option<Vertex>>; 2],
}

#[derive(Debug, Clone)]
pub struct SixJoinBlocks {
    pub g1: BipartiteGraph,
    pub g2: BipartiteGraph,
    /// Marker nodes `a2, a4, a6` in `g1` and `a1, a3, a5` in `g2`, as block ids.
    pub markers: [[Vertex; 3]; 2],
    pub origin: [Vec<Vertex>; 2],
}

/// Shortest path length (edges) inside `side` from `from` to `to`.
fn shortest_between(masks: &[u64], side: u64, from: u64, to: u64) -> Option<usize> {
    let mut seen = from;
    let mut frontier = from;
    let mut d = 0;
    while frontier != 0 {
        if frontier & to != 0 {
            return Some(d);
        }
        let mut next = 0;
        for v in bits(frontier) {
            next |= masks[v];
        }
        frontier = next & side & !seen;
        seen |= frontier;
        d += 1;
    }
    None
}

fn fresh(taken: &mut HashSet<String>, base: String) -> String {
    let mut name = base;
    while taken.contains(&name) {
        name.push('\'');
    }
    taken.insert(name.clone());
    name
}

/// `G[Xi]` plus `a`, `b` attached to `Ai`, `Bi` and a marker path between them.
fn two_join_block(
    g: &BipartiteGraph,
    x: &[Vertex],
    a_set: &[Vertex],
    b_set: &[Vertex],
    other: usize,
    q_length: usize,
) -> (BipartiteGraph, MarkerPath, Vec<Option<Vertex>>) {
    let length = if q_length.is_multiple_of(2) { 4 } else { 5 };
    let mut taken: HashSet<String> = g.names().iter().cloned().collect();
    let mut names: Vec<String> = x.iter().map(|&v| g.name(v).to_string()).collect();
    let mut sides: Vec<Side> = x.iter().map(|&v| g.side(v)).collect();
    let mut origin: Vec<Option<Vertex>> = x.iter().map(|&v| Some(v)).collect();
    let pos = |v: Vertex| x.iter().position(|&y| y == v).unwrap();
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|(u, v)| x.contains(u) && x.contains(v))
        .map(|&(u, v)| (pos(u), pos(v)))
        .collect();
    let a = names.len();
    names.push(fresh(&mut taken, format!("@a{other}")));
    sides.push(g.side(a_set[0]).flip());
    origin.push(None);
    let b = names.len();
    names.push(fresh(&mut taken, format!("@b{other}")));
    sides.push(g.side(b_set[0]).flip());
    origin.push(None);
    edges.extend(a_set.iter().map(|&v| (a, pos(v))));
    edges.extend(b_set.iter().map(|&v| (b, pos(v))));
    let mut internal = Vec::new();
    let mut prev = a;
    let mut side = sides[a];
    for k in 1..length {
        let id = names.len();
        names.push(fresh(&mut taken, format!("@m{other}_{k}")));
        side = side.flip();
        sides.push(side);
        origin.push(None);
        edges.push((prev, id));
        internal.push(id);
        prev = id;
    }
    edges.push((prev, b));
    let block = BipartiteGraph::from_parts(names, Some(sides), edges).expect("2-join block is bipartite");
    (
        block,
        MarkerPath {
            a,
            b,
            internal,
            length,
            q_length,
        },
        origin,
    )
}

pub fn blocks_of_2join(g: &BipartiteGraph, split: &TwoJoinSplit) -> Result<TwoJoinBlocks> {
    split.validate(g)?;
    let masks = g.masks()?;
    let q = |x: &[Vertex], a: &[Vertex], b: &[Vertex], i: usize| {
        shortest_between(masks, mask(x), mask(a), mask(b)).ok_or(Error::NoQPath(i))
    };
    let q2 = q(&split.x2, &split.a2, &split.b2, 2)?;
    let q1 = q(&split.x1, &split.a1, &split.b1, 1)?;
    let (g1, m1, o1) = two_join_block(g, &split.x1, &split.a1, &split.b1, 2, q2);
    let (g2, m2, o2) = two_join_block(g, &split.x2, &split.a2, &split.b2, 1, q1);
    Ok(TwoJoinBlocks {
        g1,
        g2,
        markers: [m1, m2],
        origin: [o1, o2],
    })
}

pub fn blocks_of_6join(g: &BipartiteGraph, split: &SixJoinSplit) -> Result<SixJoinBlocks> {
    split.validate(g)?;
    let rep: Vec<Vertex> = split.a.iter().map(|s| s[0]).collect();
    let build = |x: &[Vertex], marks: [Vertex; 3]| {
        let mut keep = x.to_vec();
        keep.extend(marks);
        keep.sort_unstable();
        let (block, origin) = g.induced(&keep);
        let local = marks.map(|v| origin.iter().position(|&o| o == v).unwrap());
        (block, local, origin)
    };
    let (g1, m1, o1) = build(&split.x1, [rep[1], rep[3], rep[5]]);
    let (g2, m2, o2) = build(&split.x2, [rep[0], rep[2], rep[4]]);
    Ok(SixJoinBlocks {
        g1,
        g2,
        markers: [m1, m2],
        origin: [o1, o2],
    })
}

/// `G[S ∪ C1]` and `G[S ∪ C2]` where `side1` is the union `C1` of some
/// components of `G ∖ S` and `C2` the others.
pub fn blocks_of_double_star(
    g: &BipartiteGraph,
    c: &DoubleStarCutset,
    side1: &[Vertex],
) -> Result<(BipartiteGraph, BipartiteGraph)> {
    if !c.is_valid(g) {
        return Err(Error::InvalidCutset("not a double star cutset of this graph".into()));
    }
    let (b1, b2) = split_by_components(g, c.s_mask(), mask(side1))?;
    Ok((g.induced_mask(b1).0, g.induced_mask(b2).0))
}

/// Blocks of a star cutset `S = {x} ∪ R`: the first component of `G ∖ S`
/// against the rest, each together with `S`.
pub fn blocks_of_star(g: &BipartiteGraph, c: &StarCutset) -> Result<(BipartiteGraph, BipartiteGraph)> {
    let masks = g.masks()?;
    let s = c.mask();
    let comps = mask_components(masks, g.full_mask() & !s);
    if comps.len() < 2 || c.r.iter().any(|&y| !g.has_edge(c.x, y)) {
        return Err(Error::InvalidCutset("not a star cutset of this graph".into()));
    }
    let (b1, b2) = split_by_components(g, s, comps[0])?;
    Ok((g.induced_mask(b1).0, g.induced_mask(b2).0))
}

fn split_by_components(g: &BipartiteGraph, s: u64, side1: u64) -> Result<(u64, u64)> {
    let masks = g.masks()?;
    let rest = g.full_mask() & !s;
    if side1 == 0 || side1 & !rest != 0 {
        return Err(Error::InvalidCutset("grouping must lie outside the cutset".into()));
    }
    let mut c1 = 0;
    for comp in mask_components(masks, rest) {
        if comp & side1 == comp {
            c1 |= comp;
        } else if comp & side1 != 0 {
            return Err(Error::InvalidCutset("grouping splits a component".into()));
        }
    }
    let c2 = rest & !c1;
    if c2 == 0 {
        return Err(Error::InvalidCutset("grouping leaves the other side empty".into()));
    }
    Ok((s | c1, s | c2))
}
