//! 1-, 2- and 6-joins by exhaustive bipartition search.
//!
//! Each candidate `X1` (always containing vertex 0) is tested by grouping its
//! vertices by their neighborhood across the partition: a 1-join has one
//! group, a 2-join two with disjoint neighborhoods, a 6-join three on each side
//! whose quotient is a 6-cycle.

use serde_json::{json, Value};

use super::{list, names};
use crate::connectivity::reach;
use crate::error::{Error, Result};
use crate::graph::{bit, bits, BipartiteGraph};
use crate::holes::enumerate_holes;
use crate::limits::Limits;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneJoinSplit {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoJoinSplit {
    pub x1: Vec<usize>,
    pub x2: Vec<usize>,
    pub a1: Vec<usize>,
    pub a2: Vec<usize>,
    pub b1: Vec<usize>,
    pub b2: Vec<usize>,
}

/// `a[0..6]` are `A1..A6`; `A1, A3, A5 ⊆ X1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SixJoinSplit {
    pub x1: Vec<usize>,
    pub x2: Vec<usize>,
    pub a: [Vec<usize>; 6],
}

/// A 2-join or a 6-join.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Join {
    Two(TwoJoinSplit),
    Six(SixJoinSplit),
}

fn m(vs: &[usize]) -> u64 {
    super::mask(vs)
}

fn cross_edges_ok(g: &BipartiteGraph, x1: u64, x2: u64, allowed: &dyn Fn(usize, usize) -> bool) -> bool {
    g.edges().iter().all(|&(u, v)| {
        let (p, q) = if x1 & bit(u) != 0 { (u, v) } else { (v, u) };
        x2 & bit(q) == 0 || x1 & bit(p) == 0 || allowed(p, q)
    })
}

fn complete(g: &BipartiteGraph, a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|&x| b.iter().all(|&y| g.has_edge(x, y)))
}

fn is_partition(g: &BipartiteGraph, x1: &[usize], x2: &[usize]) -> bool {
    let (p, q) = (m(x1), m(x2));
    p & q == 0 && p | q == g.full_mask() && p.count_ones() as usize == x1.len() && q.count_ones() as usize == x2.len()
}

/// `G[x]` is a path graph (connected, acyclic, degrees at most 2).
fn is_path_graph(masks: &[u64], x: u64) -> bool {
    if x == 0 || reach(masks, x, x & x.wrapping_neg()) != x {
        return false;
    }
    let mut edges = 0;
    for v in bits(x) {
        let d = (masks[v] & x).count_ones();
        if d > 2 {
            return false;
        }
        edges += d;
    }
    edges / 2 + 1 == x.count_ones()
}

impl OneJoinSplit {
    pub fn is_valid(&self, g: &BipartiteGraph) -> bool {
        let (a, b) = (m(&self.a), m(&self.b));
        is_partition(g, &self.x, &self.y)
            && self.x.len() >= 2
            && self.y.len() >= 2
            && !self.a.is_empty()
            && !self.b.is_empty()
            && a & !m(&self.x) == 0
            && b & !m(&self.y) == 0
            && complete(g, &self.a, &self.b)
            && cross_edges_ok(g, m(&self.x), m(&self.y), &|p, q| a & bit(p) != 0 && b & bit(q) != 0)
    }

    pub fn to_json(&self, g: &BipartiteGraph) -> Value {
        json!({
            "kind": "OneJoinSplit",
            "X": names(g, &self.x),
            "Y": names(g, &self.y),
            "A": names(g, &self.a),
            "B": names(g, &self.b),
        })
    }
}

impl TwoJoinSplit {
    pub fn validate(&self, g: &BipartiteGraph) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidSplit(why.to_string()));
        let Ok(masks) = g.masks() else {
            return bad("graph too large");
        };
        if !is_partition(g, &self.x1, &self.x2) {
            return bad("X1, X2 do not partition the vertices");
        }
        let (x1, x2) = (m(&self.x1), m(&self.x2));
        let (a1, b1, a2, b2) = (m(&self.a1), m(&self.b1), m(&self.a2), m(&self.b2));
        if [a1, b1, a2, b2].contains(&0) || a1 & b1 != 0 || a2 & b2 != 0 {
            return bad("special sets must be disjoint and nonempty");
        }
        if (a1 | b1) & !x1 != 0 || (a2 | b2) & !x2 != 0 {
            return bad("special sets lie outside their side");
        }
        if !complete(g, &self.a1, &self.a2) || !complete(g, &self.b1, &self.b2) {
            return bad("missing cross edge between special sets");
        }
        let ok = cross_edges_ok(g, x1, x2, &|p, q| {
            (a1 & bit(p) != 0 && a2 & bit(q) != 0) || (b1 & bit(p) != 0 && b2 & bit(q) != 0)
        });
        if !ok {
            return bad("extra edge between X1 and X2");
        }
        for (x, a, b) in [(x1, a1, b1), (x2, a2, b2)] {
            if reach(masks, x, a) & b == 0 {
                return bad("no path between the special sets of a side");
            }
            if a.count_ones() == 1 && b.count_ones() == 1 && is_path_graph(masks, x) {
                return bad("a side with singleton special sets induces a chordless path");
            }
        }
        Ok(())
    }

    pub fn is_valid(&self, g: &BipartiteGraph) -> bool {
        self.validate(g).is_ok()
    }

    /// Same 2-join with the sides exchanged.
    pub fn swapped(&self) -> Self {
        TwoJoinSplit {
            x1: self.x2.clone(),
            x2: self.x1.clone(),
            a1: self.a2.clone(),
            a2: self.a1.clone(),
            b1: self.b2.clone(),
            b2: self.b1.clone(),
        }
    }

    pub fn to_json(&self, g: &BipartiteGraph) -> Value {
        json!({
            "kind": "TwoJoinSplit",
            "X1": names(g, &self.x1),
            "X2": names(g, &self.x2),
            "A1": names(g, &self.a1),
            "A2": names(g, &self.a2),
            "B1": names(g, &self.b1),
            "B2": names(g, &self.b2),
        })
    }
}

impl SixJoinSplit {
    pub fn validate(&self, g: &BipartiteGraph) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidSplit(why.to_string()));
        if !is_partition(g, &self.x1, &self.x2) {
            return bad("X1, X2 do not partition the vertices");
        }
        if self.x1.len() < 4 || self.x2.len() < 4 {
            return bad("each side needs at least 4 vertices");
        }
        let (x1, x2) = (m(&self.x1), m(&self.x2));
        let a: Vec<u64> = self.a.iter().map(|s| m(s)).collect();
        for (i, &ai) in a.iter().enumerate() {
            let side = if i % 2 == 0 { x1 } else { x2 };
            if ai == 0 || ai & !side != 0 {
                return bad("special sets must be nonempty and on their side");
            }
        }
        if a[0] & a[2] != 0 || a[0] & a[4] != 0 || a[2] & a[4] != 0 || a[1] & a[3] != 0 || a[1] & a[5] != 0 || a[3] & a[5] != 0 {
            return bad("special sets must be disjoint");
        }
        for i in 0..6 {
            if !complete(g, &self.a[i], &self.a[(i + 1) % 6]) {
                return bad("missing edge between consecutive special sets");
            }
        }
        let ok = cross_edges_ok(g, x1, x2, &|p, q| {
            (0..6).step_by(2).any(|i| {
                a[i] & bit(p) != 0 && (a[(i + 1) % 6] | a[(i + 5) % 6]) & bit(q) != 0
            })
        });
        if !ok {
            return bad("extra edge between X1 and X2");
        }
        Ok(())
    }

    pub fn is_valid(&self, g: &BipartiteGraph) -> bool {
        self.validate(g).is_ok()
    }

    /// Same 6-join with the sides exchanged (`A_i` becomes `A_{i+1}`).
    pub fn swapped(&self) -> Self {
        let a = std::array::from_fn(|i| self.a[(i + 1) % 6].clone());
        SixJoinSplit {
            x1: self.x2.clone(),
            x2: self.x1.clone(),
            a,
        }
    }

    pub fn to_json(&self, g: &BipartiteGraph) -> Value {
        let mut obj = serde_json::Map::new();
        obj.insert("kind".into(), json!("SixJoinSplit"));
        obj.insert("X1".into(), json!(names(g, &self.x1)));
        obj.insert("X2".into(), json!(names(g, &self.x2)));
        for (i, s) in self.a.iter().enumerate() {
            obj.insert(format!("A{}", i + 1), json!(names(g, s)));
        }
        Value::Object(obj)
    }
}

impl Join {
    pub fn sides(&self) -> (&[usize], &[usize]) {
        match self {
            Join::Two(s) => (&s.x1, &s.x2),
            Join::Six(s) => (&s.x1, &s.x2),
        }
    }

    pub fn swapped(&self) -> Self {
        match self {
            Join::Two(s) => Join::Two(s.swapped()),
            Join::Six(s) => Join::Six(s.swapped()),
        }
    }

    pub fn is_valid(&self, g: &BipartiteGraph) -> bool {
        match self {
            Join::Two(s) => s.is_valid(g),
            Join::Six(s) => s.is_valid(g),
        }
    }

    pub fn to_json(&self, g: &BipartiteGraph) -> Value {
        match self {
            Join::Two(s) => s.to_json(g),
            Join::Six(s) => s.to_json(g),
        }
    }
}

/// Vertices of `side` grouped by their (nonzero) neighborhood in `other`,
/// ordered by lowest member. Gives up past `max` groups.
fn cross_groups(masks: &[u64], side: u64, other: u64, max: usize) -> Option<Vec<(u64, u64)>> {
    let mut groups: Vec<(u64, u64)> = Vec::new();
    for v in bits(side) {
        let c = masks[v] & other;
        if c == 0 {
            continue;
        }
        match groups.iter_mut().find(|(_, gc)| *gc == c) {
            Some(gr) => gr.0 |= bit(v),
            None => {
                if groups.len() == max {
                    return None;
                }
                groups.push((bit(v), c));
            }
        }
    }
    Some(groups)
}

fn one_join_at(masks: &[u64], x: u64, y: u64) -> Option<(u64, u64)> {
    if x.count_ones() < 2 || y.count_ones() < 2 {
        return None;
    }
    let gx = cross_groups(masks, x, y, 1)?;
    let &[(a, b)] = gx.as_slice() else { return None };
    // every vertex of B must see exactly A
    bits(b).all(|w| masks[w] & x == a).then_some((a, b))
}

fn two_join_at(masks: &[u64], x1: u64, x2: u64) -> Option<[u64; 4]> {
    let gx = cross_groups(masks, x1, x2, 2)?;
    let &[(a1, a2), (b1, b2)] = gx.as_slice() else { return None };
    if a2 & b2 != 0 {
        return None;
    }
    for w in bits(x2) {
        let want = if a2 & bit(w) != 0 {
            a1
        } else if b2 & bit(w) != 0 {
            b1
        } else {
            0
        };
        if masks[w] & x1 != want {
            return None;
        }
    }
    for (x, a, b) in [(x1, a1, b1), (x2, a2, b2)] {
        if reach(masks, x, a) & b == 0 {
            return None;
        }
        if a.count_ones() == 1 && b.count_ones() == 1 && is_path_graph(masks, x) {
            return None;
        }
    }
    Some([a1, b1, a2, b2])
}

fn six_join_at(masks: &[u64], x1: u64, x2: u64) -> Option<[u64; 6]> {
    if x1.count_ones() < 4 || x2.count_ones() < 4 {
        return None;
    }
    let g1 = cross_groups(masks, x1, x2, 3)?;
    let g2 = cross_groups(masks, x2, x1, 3)?;
    if g1.len() != 3 || g2.len() != 3 {
        return None;
    }
    // adjacency of the 3x3 quotient; each cross set must be a union of two groups
    let mut nb: [Vec<usize>; 3] = Default::default();
    let mut deg2 = [0usize; 3];
    for (k, &(_, c)) in g1.iter().enumerate() {
        let hits: Vec<usize> = (0..3).filter(|&l| g2[l].0 & !c == 0).collect();
        if hits.len() != 2 || hits.iter().fold(0, |acc, &l| acc | g2[l].0) != c {
            return None;
        }
        for &l in &hits {
            deg2[l] += 1;
        }
        nb[k] = hits;
    }
    if deg2 != [2, 2, 2] {
        return None;
    }
    let other = |v: &Vec<usize>, not: usize| if v[0] == not { v[1] } else { v[0] };
    let k1 = 0;
    let l2 = nb[k1][0];
    let k3 = (0..3).find(|&k| k != k1 && nb[k].contains(&l2))?;
    let l4 = other(&nb[k3], l2);
    let k5 = 3 - k1 - k3;
    let l6 = 3 - l2 - l4;
    Some([g1[k1].0, g2[l2].0, g1[k3].0, g2[l4].0, g1[k5].0, g2[l6].0])
}

fn guard(g: &BipartiteGraph, cap: usize, what: &'static str) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() > cap {
        return Err(Error::limit(what, cap, g.n()));
    }
    Ok(())
}

/// Candidate `X1` masks: every proper subset containing vertex 0.
fn sides(g: &BipartiteGraph) -> impl Iterator<Item = (u64, u64)> {
    let n = g.n();
    let full = g.full_mask();
    (0..1u64 << (n - 1)).filter_map(move |rest| {
        let x1 = 1 | (rest << 1);
        let x2 = full & !x1;
        (x2 != 0).then_some((x1, x2))
    })
}

pub fn enumerate_1joins(g: &BipartiteGraph, limits: &Limits) -> Result<Vec<OneJoinSplit>> {
    guard(g, limits.bipartition_vertices, "1-join bipartition vertex count")?;
    let masks = g.masks()?;
    Ok(sides(g)
        .filter_map(|(x, y)| {
            one_join_at(masks, x, y).map(|(a, b)| OneJoinSplit {
                x: list(x),
                y: list(y),
                a: list(a),
                b: list(b),
            })
        })
        .collect())
}

pub fn find_1join(g: &BipartiteGraph, limits: &Limits) -> Result<Option<OneJoinSplit>> {
    Ok(enumerate_1joins(g, limits)?.into_iter().next())
}

fn two_split(x1: u64, x2: u64, s: [u64; 4]) -> TwoJoinSplit {
    TwoJoinSplit {
        x1: list(x1),
        x2: list(x2),
        a1: list(s[0]),
        b1: list(s[1]),
        a2: list(s[2]),
        b2: list(s[3]),
    }
}

/// All 2-joins, one per unordered partition, `X1` holding vertex 0.
pub fn enumerate_2joins(g: &BipartiteGraph, limits: &Limits) -> Result<Vec<TwoJoinSplit>> {
    guard(g, limits.two_join_vertices, "2-join bipartition vertex count")?;
    let masks = g.masks()?;
    Ok(sides(g)
        .filter_map(|(x1, x2)| two_join_at(masks, x1, x2).map(|s| two_split(x1, x2, s)))
        .collect())
}

pub fn find_2join(g: &BipartiteGraph, limits: &Limits) -> Result<Option<TwoJoinSplit>> {
    guard(g, limits.two_join_vertices, "2-join bipartition vertex count")?;
    let masks = g.masks()?;
    Ok(sides(g).find_map(|(x1, x2)| two_join_at(masks, x1, x2).map(|s| two_split(x1, x2, s))))
}

fn six_split(x1: u64, x2: u64, s: [u64; 6]) -> SixJoinSplit {
    SixJoinSplit {
        x1: list(x1),
        x2: list(x2),
        a: s.map(list),
    }
}

/// All 6-joins, `X1` holding vertex 0. Exhaustive up to the bipartition cap;
/// beyond it only splits with singleton special sets are searched (from the
/// 6-holes), which is complete for 4-hole-free and subcubic graphs without a
/// star cutset.
pub fn enumerate_6joins(g: &BipartiteGraph, limits: &Limits) -> Result<Vec<SixJoinSplit>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let masks = g.masks()?;
    if g.n() <= limits.bipartition_vertices {
        return Ok(sides(g)
            .filter_map(|(x1, x2)| six_join_at(masks, x1, x2).map(|s| six_split(x1, x2, s)))
            .collect());
    }
    let full = g.full_mask();
    let mut found: Vec<u64> = Vec::new();
    for h in enumerate_holes(g, Some(6), limits)?.holes {
        if h.len() != 6 {
            continue;
        }
        let seq = h.vertices();
        let mut cut = masks.to_vec();
        for i in 0..6 {
            let (p, q) = (seq[i], seq[(i + 1) % 6]);
            cut[p] &= !bit(q);
            cut[q] &= !bit(p);
        }
        let odd = bit(seq[0]) | bit(seq[2]) | bit(seq[4]);
        let x1 = reach(&cut, full, odd);
        if x1 & (bit(seq[1]) | bit(seq[3]) | bit(seq[5])) != 0 {
            continue;
        }
        let x1 = if x1 & 1 == 1 { x1 } else { full & !x1 };
        if !found.contains(&x1) && six_join_at(masks, x1, full & !x1).is_some() {
            found.push(x1);
        }
    }
    found.sort_unstable();
    Ok(found
        .into_iter()
        .map(|x1| six_split(x1, full & !x1, six_join_at(masks, x1, full & !x1).unwrap()))
        .collect())
}

pub fn find_6join(g: &BipartiteGraph, limits: &Limits) -> Result<Option<SixJoinSplit>> {
    if g.is_connected() && g.n() <= limits.bipartition_vertices {
        let masks = g.masks()?;
        return Ok(sides(g).find_map(|(x1, x2)| six_join_at(masks, x1, x2).map(|s| six_split(x1, x2, s))));
    }
    Ok(enumerate_6joins(g, limits)?.into_iter().next())
}

/// 2-joins and 6-joins together, ordered by `X1` as a bitmask, 2-joins first.
pub fn enumerate_26joins(g: &BipartiteGraph, limits: &Limits) -> Result<Vec<Join>> {
    let mut all: Vec<(u64, u8, Join)> = Vec::new();
    for s in enumerate_2joins(g, limits)? {
        all.push((m(&s.x1), 0, Join::Two(s)));
    }
    for s in enumerate_6joins(g, limits)? {
        all.push((m(&s.x1), 1, Join::Six(s)));
    }
    all.sort_by_key(|(k, kind, _)| (*k, *kind));
    Ok(all.into_iter().map(|(_, _, j)| j).collect())
}

/// First join in `family` with a side that properly contains no side of any
/// join in the family, oriented so that `X1` is that minimal side.
fn minimally_sided(family: &[Join]) -> Option<Join> {
    let all_sides: Vec<u64> = family
        .iter()
        .flat_map(|j| {
            let (a, b) = j.sides();
            [m(a), m(b)]
        })
        .collect();
    let minimal = |s: u64| !all_sides.iter().any(|&o| o != s && o & !s == 0);
    family.iter().find_map(|j| {
        let (a, b) = j.sides();
        if minimal(m(a)) {
            Some(j.clone())
        } else if minimal(m(b)) {
            Some(j.swapped())
        } else {
            None
        }
    })
}

/// A minimally-sided 2-join with `X1` a minimal side.
pub fn minimally_sided_2join(g: &BipartiteGraph, limits: &Limits) -> Result<Option<TwoJoinSplit>> {
    let family: Vec<Join> = enumerate_2joins(g, limits)?.into_iter().map(Join::Two).collect();
    Ok(minimally_sided(&family).map(|j| match j {
        Join::Two(s) => s,
        Join::Six(_) => unreachable!("family holds 2-joins only"),
    }))
}

/// A minimally-sided {2,6}-join with `X1` a minimal side.
pub fn minimally_sided_26join(g: &BipartiteGraph, limits: &Limits) -> Result<Option<Join>> {
    Ok(minimally_sided(&enumerate_26joins(g, limits)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> BipartiteGraph {
        BipartiteGraph::from_edge_ids(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn k33() -> BipartiteGraph {
        BipartiteGraph::from_edge_ids(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap()
    }

    #[test]
    fn four_hole_one_join() {
        let g = cycle(4);
        let all = enumerate_1joins(&g, &Limits::DEFAULT).unwrap();
        assert!(all.iter().all(|s| s.is_valid(&g)));
        assert!(all.iter().any(|s| s.x == vec![0, 2] && s.a == vec![0, 2] && s.b == vec![1, 3]));
        assert!(find_1join(&cycle(8), &Limits::DEFAULT).unwrap().is_none());
    }

    #[test]
    fn cycles_have_no_2join() {
        assert!(enumerate_2joins(&cycle(8), &Limits::DEFAULT).unwrap().is_empty());
        assert!(enumerate_6joins(&k33(), &Limits::DEFAULT).unwrap().is_empty());
        assert!(enumerate_6joins(&cycle(8), &Limits::DEFAULT).unwrap().is_empty());
    }

    #[test]
    fn k33_two_join() {
        // {a1, a2, b1} | {a3, b2, b3}: A1 = {a1, a2} sees A2 = {b2, b3}, b1 sees a3
        let g = k33();
        let all = enumerate_2joins(&g, &Limits::DEFAULT).unwrap();
        assert!(all.iter().all(|s| s.is_valid(&g)));
        assert!(all.iter().any(|s| s.x1 == vec![0, 1, 3] && s.a1 == vec![0, 1] && s.b1 == vec![3]));
    }

    #[test]
    fn cube_six_join() {
        // 6-hole 0..5, c = 6 on 0,2,4 and d = 7 on 1,3,5
        let mut e: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        e.extend([(6, 0), (6, 2), (6, 4), (7, 1), (7, 3), (7, 5)]);
        let g = BipartiteGraph::from_edge_ids(8, e).unwrap();
        let all = enumerate_6joins(&g, &Limits::DEFAULT).unwrap();
        assert!(!all.is_empty());
        assert!(all.iter().all(|s| s.is_valid(&g)));
        let s = all.iter().find(|s| s.x1 == vec![0, 2, 4, 6]).unwrap();
        assert_eq!(s.a[0], vec![0]);
        assert!(s.swapped().is_valid(&g));
        // the 6-hole search agrees with the exhaustive one
        let small = Limits {
            bipartition_vertices: 4,
            ..Limits::DEFAULT
        };
        let via_holes = enumerate_6joins(&g, &small).unwrap();
        assert_eq!(via_holes, all);
    }

    #[test]
    fn path_graph_detection() {
        let g = BipartiteGraph::from_edge_ids(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let masks = g.masks().unwrap();
        assert!(is_path_graph(masks, 0b1111));
        assert!(!is_path_graph(masks, 0b1011));
        assert!(!is_path_graph(cycle(4).masks().unwrap(), 0b1111));
    }
}
