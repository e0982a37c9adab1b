//! Chordless cycles and the unsigned balance checks.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, bits, edge_key, BipartiteGraph, Edge, Vertex};
use crate::limits::Limits;

/// A chordless cycle of length at least 4, stored in canonical rotation:
/// smallest id first, then the smaller of its two cyclic neighbors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Hole(Vec<Vertex>);

impl Hole {
    /// Validate a cyclic sequence against `g` and canonicalize it.
    pub fn new(g: &BipartiteGraph, seq: Vec<Vertex>) -> Result<Self> {
        let k = seq.len();
        if k < 4 {
            return Err(Error::InvalidParams("a hole has at least 4 vertices".into()));
        }
        let mut sorted = seq.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != k || sorted[k - 1] >= g.n() {
            return Err(Error::InvalidParams("hole vertices must be distinct".into()));
        }
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if g.has_edge(seq[i], seq[j]) != consecutive {
                    return Err(Error::InvalidParams(format!(
                        "{}-{} breaks the chordless cycle",
                        g.name(seq[i]),
                        g.name(seq[j])
                    )));
                }
            }
        }
        Ok(Self::canonical(seq))
    }

    pub(crate) fn canonical(seq: Vec<Vertex>) -> Self {
        let k = seq.len();
        let start = (0..k).min_by_key(|&i| seq[i]).unwrap();
        let next = seq[(start + 1) % k];
        let prev = seq[(start + k - 1) % k];
        let out = if next < prev {
            (0..k).map(|i| seq[(start + i) % k]).collect()
        } else {
            (0..k).map(|i| seq[(start + k - i) % k]).collect()
        };
        Hole(out)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |acc, &v| acc | bit(v))
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let k = self.0.len();
        (0..k).map(move |i| edge_key(self.0[i], self.0[(i + 1) % k]))
    }

    pub fn names(&self, g: &BipartiteGraph) -> Vec<String> {
        self.0.iter().map(|&v| g.name(v).to_string()).collect()
    }
}

impl PartialOrd for Hole {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Holes order by length, then by vertex sequence.
impl Ord for Hole {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.0.len(), &self.0).cmp(&(other.0.len(), &other.0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HoleSet {
    pub holes: Vec<Hole>,
    /// False when a length cap pruned part of the search.
    pub complete: bool,
}

/// All holes of `g` (of length at most `max_len`, when given), sorted.
pub fn enumerate_holes(g: &BipartiteGraph, max_len: Option<usize>, limits: &Limits) -> Result<HoleSet> {
    if g.n() > limits.hole_vertices {
        return Err(Error::limit("hole enumeration vertex count", limits.hole_vertices, g.n()));
    }
    let masks = g.masks()?;
    let mut holes = Vec::new();
    let mut truncated = false;
    for s in 0..g.n() {
        let allowed = g.full_mask() & !((bit(s) << 1) - 1);
        rooted_holes(masks, s, allowed, max_len, &mut |seq| {
            holes.push(Hole(seq.to_vec()));
            true
        }, &mut truncated);
    }
    holes.sort();
    Ok(HoleSet {
        holes,
        complete: !truncated,
    })
}

/// DFS over chordless paths starting at `s` through `allowed` vertices.
/// Each hole is reported once, oriented `s, p1, .., w` with `p1 < w`.
/// The callback returns `false` to stop the search.
fn rooted_holes(
    masks: &[u64],
    s: Vertex,
    allowed: u64,
    max_len: Option<usize>,
    on_hole: &mut dyn FnMut(&[Vertex]) -> bool,
    truncated: &mut bool,
) -> bool {
    let mut path = vec![s];
    for p1 in bits(masks[s] & allowed) {
        path.push(p1);
        if !extend(masks, &mut path, bit(s) | bit(p1), 0, allowed, max_len, on_hole, truncated) {
            return false;
        }
        path.pop();
    }
    true
}

#[allow(clippy::too_many_arguments)]
fn extend(
    masks: &[u64],
    path: &mut Vec<Vertex>,
    on_path: u64,
    blocked: u64,
    allowed: u64,
    max_len: Option<usize>,
    on_hole: &mut dyn FnMut(&[Vertex]) -> bool,
    truncated: &mut bool,
) -> bool {
    let s = path[0];
    let last = *path.last().unwrap();
    let k = path.len() - 1;
    let candidates = masks[last] & allowed & !on_path & !blocked;
    for w in bits(candidates) {
        if masks[w] & bit(s) != 0 {
            if k >= 2 && path[1] < w && max_len.is_none_or(|m| k + 2 <= m) {
                path.push(w);
                let go = on_hole(path);
                path.pop();
                if !go {
                    return false;
                }
            }
            continue;
        }
        if max_len.is_some_and(|m| k + 3 > m) {
            *truncated = true;
            continue;
        }
        path.push(w);
        let go = extend(
            masks,
            path,
            on_path | bit(w),
            blocked | masks[last],
            allowed,
            max_len,
            on_hole,
            truncated,
        );
        path.pop();
        if !go {
            return false;
        }
    }
    true
}

/// True if some hole passes through both `u` and `v`.
pub fn exists_hole_through(masks: &[u64], full: u64, u: Vertex, v: Vertex) -> bool {
    let mut found = false;
    let mut path = vec![u];
    for p1 in bits(masks[u] & full) {
        path.push(p1);
        let go = extend_rooted(masks, &mut path, bit(u) | bit(p1), 0, full, &mut |seq| {
            if seq.contains(&v) {
                found = true;
                false
            } else {
                true
            }
        });
        path.pop();
        if !go {
            break;
        }
    }
    found
}

// Like `extend` but without the orientation filter: every hole through the root
// is visited (twice, once per direction).
fn extend_rooted(
    masks: &[u64],
    path: &mut Vec<Vertex>,
    on_path: u64,
    blocked: u64,
    allowed: u64,
    on_hole: &mut dyn FnMut(&[Vertex]) -> bool,
) -> bool {
    let s = path[0];
    let last = *path.last().unwrap();
    let k = path.len() - 1;
    for w in bits(masks[last] & allowed & !on_path & !blocked) {
        path.push(w);
        let go = if masks[w] & bit(s) != 0 {
            k < 2 || on_hole(path)
        } else {
            extend_rooted(masks, path, on_path | bit(w), blocked | masks[last], allowed, on_hole)
        };
        path.pop();
        if !go {
            return false;
        }
    }
    true
}

/// First hole (in canonical order) containing both `u` and `v`.
pub fn hole_through_pair(g: &BipartiteGraph, u: Vertex, v: Vertex, limits: &Limits) -> Result<Option<Hole>> {
    if u == v {
        return Err(Error::InvalidParams("hole_through_pair needs two distinct vertices".into()));
    }
    let set = enumerate_holes(g, None, limits)?;
    Ok(set.holes.into_iter().find(|h| h.contains(u) && h.contains(v)))
}

/// Shortest cycle length, `None` for forests.
pub fn girth(g: &BipartiteGraph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let len = dist[x] + dist[y] + 1;
                    if best.is_none_or(|b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

/// Every hole has length divisible by 4.
pub fn is_balanced(g: &BipartiteGraph, limits: &Limits) -> Result<bool> {
    Ok(enumerate_holes(g, None, limits)?
        .holes
        .iter()
        .all(|h| h.len() % 4 == 0))
}

/// Every hole has length exactly 4.
pub fn is_totally_balanced(g: &BipartiteGraph, limits: &Limits) -> Result<bool> {
    Ok(enumerate_holes(g, None, limits)?
        .holes
        .iter()
        .all(|h| h.len() == 4))
}

/// An edge `uv` is bisimplicial when `N(u) ∪ N(v)` induces a complete bipartite graph.
pub fn is_bisimplicial(g: &BipartiteGraph, e: Edge) -> bool {
    let (u, v) = e;
    g.neighbors(u)
        .iter()
        .all(|&b| g.neighbors(v).iter().all(|&a| g.has_edge(a, b)))
}

/// Lexicographically least bisimplicial edge.
pub fn find_bisimplicial_edge(g: &BipartiteGraph) -> Option<Edge> {
    g.edges().iter().copied().find(|&e| is_bisimplicial(g, e))
}

/// Every cycle (chords allowed), rooted at its smallest vertex, sorted like holes.
pub fn enumerate_cycles(g: &BipartiteGraph, limits: &Limits) -> Result<Vec<Vec<Vertex>>> {
    let mut out: Vec<Vec<Vertex>> = Vec::new();
    for_each_cycle(g, limits, &mut |c| {
        out.push(c.to_vec());
        true
    })?;
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    Ok(out)
}

/// Stream every cycle once; the callback returns `false` to stop early.
/// Returns the number of cycles visited.
pub fn for_each_cycle(
    g: &BipartiteGraph,
    limits: &Limits,
    f: &mut dyn FnMut(&[Vertex]) -> bool,
) -> Result<usize> {
    if g.n() > limits.cycle_vertices {
        return Err(Error::limit("cycle enumeration vertex count", limits.cycle_vertices, g.n()));
    }
    let masks = g.masks()?;
    let mut state = CycleWalk {
        masks,
        count: 0,
        cap: limits.cycle_count,
        stop: false,
        overflow: false,
    };
    for s in 0..g.n() {
        let allowed = g.full_mask() & !((bit(s) << 1) - 1);
        let mut path = vec![s];
        state.dfs(&mut path, bit(s), allowed, f);
        if state.overflow {
            return Err(Error::limit("cycle count", limits.cycle_count, state.count));
        }
        if state.stop {
            break;
        }
    }
    Ok(state.count)
}

struct CycleWalk<'a> {
    masks: &'a [u64],
    count: usize,
    cap: usize,
    stop: bool,
    overflow: bool,
}

impl CycleWalk<'_> {
    fn dfs(&mut self, path: &mut Vec<Vertex>, on_path: u64, allowed: u64, f: &mut dyn FnMut(&[Vertex]) -> bool) {
        if self.stop || self.overflow {
            return;
        }
        let s = path[0];
        let last = *path.last().unwrap();
        if path.len() >= 3 && self.masks[last] & bit(s) != 0 && path[1] < last {
            if self.count >= self.cap {
                self.overflow = true;
                return;
            }
            self.count += 1;
            if !f(path) {
                self.stop = true;
                return;
            }
        }
        for w in bits(self.masks[last] & allowed & !on_path) {
            path.push(w);
            self.dfs(path, on_path | bit(w), allowed, f);
            path.pop();
            if self.stop || self.overflow {
                return;
            }
        }
    }
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
    fn c8_has_one_hole() {
        let set = enumerate_holes(&cycle(8), None, &Limits::DEFAULT).unwrap();
        assert_eq!(set.holes.len(), 1);
        assert_eq!(set.holes[0].vertices(), &[0, 1, 2, 3, 4, 5, 6, 7]);
        assert!(set.complete);
    }

    #[test]
    fn k33_has_nine_squares() {
        let set = enumerate_holes(&k33(), None, &Limits::DEFAULT).unwrap();
        assert_eq!(set.holes.len(), 9);
        assert!(set.holes.iter().all(|h| h.len() == 4));
        assert!(is_balanced(&k33(), &Limits::DEFAULT).unwrap());
        assert!(is_totally_balanced(&k33(), &Limits::DEFAULT).unwrap());
        assert!(g_all_bisimplicial(&k33()));
    }

    fn g_all_bisimplicial(g: &BipartiteGraph) -> bool {
        g.edges().iter().all(|&e| is_bisimplicial(g, e))
    }

    #[test]
    fn c8_not_totally_balanced() {
        let g = cycle(8);
        assert!(is_balanced(&g, &Limits::DEFAULT).unwrap());
        assert!(!is_totally_balanced(&g, &Limits::DEFAULT).unwrap());
        assert_eq!(find_bisimplicial_edge(&g), None);
    }

    #[test]
    fn single_edge_is_bisimplicial() {
        let g = BipartiteGraph::from_edge_ids(2, [(0, 1)]).unwrap();
        assert!(is_totally_balanced(&g, &Limits::DEFAULT).unwrap());
        assert_eq!(find_bisimplicial_edge(&g), Some((0, 1)));
    }

    #[test]
    fn girth_values() {
        assert_eq!(girth(&cycle(6)), Some(6));
        let tree = BipartiteGraph::from_edge_ids(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(girth(&tree), None);
        assert_eq!(girth(&k33()), Some(4));
    }

    #[test]
    fn c6_unbalanced() {
        assert!(!is_balanced(&cycle(6), &Limits::DEFAULT).unwrap());
    }

    #[test]
    fn length_cap_marks_incomplete() {
        let set = enumerate_holes(&cycle(8), Some(6), &Limits::DEFAULT).unwrap();
        assert!(set.holes.is_empty());
        assert!(!set.complete);
        let set = enumerate_holes(&k33(), Some(4), &Limits::DEFAULT).unwrap();
        assert_eq!(set.holes.len(), 9);
    }

    #[test]
    fn guard_fires() {
        let limits = Limits {
            hole_vertices: 6,
            ..Limits::DEFAULT
        };
        assert!(matches!(
            enumerate_holes(&cycle(8), None, &limits),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn hole_through_pair_cases() {
        let g = cycle(8);
        let h = hole_through_pair(&g, 0, 4, &Limits::DEFAULT).unwrap().unwrap();
        assert_eq!(h.len(), 8);
        let tree = BipartiteGraph::from_edge_ids(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(hole_through_pair(&tree, 0, 2, &Limits::DEFAULT).unwrap().is_none());
        assert!(exists_hole_through(g.masks().unwrap(), g.full_mask(), 0, 4));
    }

    #[test]
    fn hole_validation() {
        let g = cycle(6);
        let h = Hole::new(&g, vec![3, 2, 1, 0, 5, 4]).unwrap();
        assert_eq!(h.vertices(), &[0, 1, 2, 3, 4, 5]);
        assert!(Hole::new(&g, vec![0, 1, 2, 3]).is_err());
        let k = k33();
        assert!(Hole::new(&k, vec![0, 3, 1, 4, 2, 5]).is_err());
    }

    #[test]
    fn cycles_of_k33() {
        let cycles = enumerate_cycles(&k33(), &Limits::DEFAULT).unwrap();
        // 9 four-cycles and 6 six-cycles
        assert_eq!(cycles.iter().filter(|c| c.len() == 4).count(), 9);
        assert_eq!(cycles.iter().filter(|c| c.len() == 6).count(), 6);
    }
}
