//! Signings, balanceability and the unique-chord checks.
//!
//! A signing is balanced when every hole weighs 0 mod 4. Writing `x_e = 1` for a
//! negative edge, a hole `H` weighs `|H| - 2 * sum x_e`, so balance is the GF(2)
//! system `sum_{e in H} x_e = |H|/2 (mod 2)`. Fixing a BFS spanning forest to
//! `+1` (always possible by resigning) leaves one variable per co-tree edge.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::Gf2System;
use crate::graph::{BipartiteGraph, Edge, Vertex};
use crate::holes::{enumerate_holes, exists_hole_through, for_each_cycle, Hole};
use crate::limits::Limits;

/// A `±1` weight on every edge of one host graph, indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signing {
    host: u64,
    weights: Vec<i8>,
}

impl Signing {
    pub fn all_plus(g: &BipartiteGraph) -> Self {
        Signing {
            host: g.fingerprint(),
            weights: vec![1; g.m()],
        }
    }

    pub fn from_weights(g: &BipartiteGraph, weights: Vec<i8>) -> Result<Self> {
        if weights.len() != g.m() || weights.iter().any(|&w| w != 1 && w != -1) {
            return Err(Error::InvalidParams("signing needs one ±1 weight per edge".into()));
        }
        Ok(Signing {
            host: g.fingerprint(),
            weights,
        })
    }

    /// All `+1` except the listed edges, given by vertex names.
    pub fn with_negative(g: &BipartiteGraph, negative: &[(&str, &str)]) -> Result<Self> {
        let mut s = Self::all_plus(g);
        for (a, b) in negative {
            let (u, v) = (g.vertex_or_err(a)?, g.vertex_or_err(b)?);
            let i = g
                .edge_index(u, v)
                .ok_or_else(|| Error::NotAnEdge(a.to_string(), b.to_string()))?;
            s.weights[i] = -1;
        }
        Ok(s)
    }

    pub fn weights(&self) -> &[i8] {
        &self.weights
    }

    pub fn weight(&self, edge_id: usize) -> i8 {
        self.weights[edge_id]
    }

    pub fn belongs_to(&self, g: &BipartiteGraph) -> bool {
        self.host == g.fingerprint() && self.weights.len() == g.m()
    }

    fn check(&self, g: &BipartiteGraph) -> Result<()> {
        if self.belongs_to(g) {
            Ok(())
        } else {
            Err(Error::ForeignSigning)
        }
    }

    pub fn negative_edges(&self, g: &BipartiteGraph) -> Vec<Edge> {
        g.edges()
            .iter()
            .zip(&self.weights)
            .filter(|(_, &w)| w < 0)
            .map(|(&e, _)| e)
            .collect()
    }

    pub fn to_json(&self, g: &BipartiteGraph) -> SigningJson {
        SigningJson {
            negative: self
                .negative_edges(g)
                .into_iter()
                .map(|e| g.edge_names(e))
                .collect(),
        }
    }
}

/// Serialized form: the negative edges by vertex name; every other edge is `+1`.
#[derive(Debug, Clone, Serialize)]
pub struct SigningJson {
    pub negative: Vec<(String, String)>,
}

pub fn hole_weight(g: &BipartiteGraph, sigma: &Signing, h: &Hole) -> Result<i64> {
    sigma.check(g)?;
    let mut total = 0i64;
    for (u, v) in h.edges() {
        if u >= g.n() || v >= g.n() {
            return Err(Error::ForeignHole);
        }
        let i = g.edge_index(u, v).ok_or(Error::ForeignHole)?;
        total += sigma.weights[i] as i64;
    }
    Ok(total)
}

pub fn is_balanced_signing(g: &BipartiteGraph, sigma: &Signing, limits: &Limits) -> Result<bool> {
    sigma.check(g)?;
    for h in &enumerate_holes(g, None, limits)?.holes {
        if hole_weight(g, sigma, h)?.rem_euclid(4) != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Flip every edge at `v`.
pub fn resign(g: &BipartiteGraph, sigma: &Signing, v: Vertex) -> Result<Signing> {
    sigma.check(g)?;
    let mut out = sigma.clone();
    for &w in g.neighbors(v) {
        let i = g.edge_index(v, w).expect("neighbor edge");
        out.weights[i] = -out.weights[i];
    }
    Ok(out)
}

/// BFS spanning forest (roots: smallest unvisited id) as an edge-id mask, and
/// the co-tree edge ids in ascending order.
pub fn spanning_forest(g: &BipartiteGraph) -> (Vec<bool>, Vec<usize>) {
    let mut in_tree = vec![false; g.m()];
    let mut seen = vec![false; g.n()];
    for root in g.vertices() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    in_tree[g.edge_index(x, y).unwrap()] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    let cotree = (0..g.m()).filter(|&i| !in_tree[i]).collect();
    (in_tree, cotree)
}

/// Co-tree dimension `m - n + c`.
pub fn cotree_rank(g: &BipartiteGraph) -> usize {
    spanning_forest(g).1.len()
}

fn signing_from_cotree(g: &BipartiteGraph, cotree: &[usize], x: &[bool]) -> Signing {
    let mut s = Signing::all_plus(g);
    for (k, &i) in cotree.iter().enumerate() {
        if x[k] {
            s.weights[i] = -1;
        }
    }
    s
}

fn cotree_columns<'a>(
    g: &'a BipartiteGraph,
    col_of: &'a [Option<usize>],
    cycle: &'a [Vertex],
) -> impl Iterator<Item = usize> + 'a {
    let k = cycle.len();
    (0..k).filter_map(move |i| col_of[g.edge_index(cycle[i], cycle[(i + 1) % k]).unwrap()])
}

fn column_map(g: &BipartiteGraph, cotree: &[usize]) -> Vec<Option<usize>> {
    let mut col_of = vec![None; g.m()];
    for (k, &i) in cotree.iter().enumerate() {
        col_of[i] = Some(k);
    }
    col_of
}

/// A balanced signing, or `None` when `g` is not balanceable.
///
/// Spanning-forest edges are `+1`; among co-tree sign vectors (bit `i` = co-tree
/// edge `i` negative) the numerically least balanced one is returned. It is found
/// by solving the hole parity system directly, so no rank cap is needed; see
/// [`find_balanced_signing_enumerative`] for the literal search.
pub fn find_balanced_signing(g: &BipartiteGraph, limits: &Limits) -> Result<Option<Signing>> {
    let holes = enumerate_holes(g, None, limits)?;
    let (_, cotree) = spanning_forest(g);
    let col_of = column_map(g, &cotree);
    let mut sys = Gf2System::new(cotree.len());
    for h in &holes.holes {
        let rhs = (h.len() / 2) % 2 == 1;
        if !sys.add(cotree_columns(g, &col_of, h.vertices()), rhs) {
            return Ok(None);
        }
    }
    Ok(sys.least_solution().map(|x| signing_from_cotree(g, &cotree, &x)))
}

/// Literal search: co-tree sign vectors in increasing binary order, first
/// balanced one wins. Guarded by the co-tree rank cap.
pub fn find_balanced_signing_enumerative(g: &BipartiteGraph, limits: &Limits) -> Result<Option<Signing>> {
    let (_, cotree) = spanning_forest(g);
    if cotree.len() > limits.cotree_rank {
        return Err(Error::limit("co-tree rank", limits.cotree_rank, cotree.len()));
    }
    let holes = enumerate_holes(g, None, limits)?;
    let col_of = column_map(g, &cotree);
    // each hole as (co-tree bit mask, required parity)
    let rows: Vec<(u64, u32)> = holes
        .holes
        .iter()
        .map(|h| {
            let mask = cotree_columns(g, &col_of, h.vertices()).fold(0u64, |a, c| a ^ (1 << c));
            (mask, ((h.len() / 2) % 2) as u32)
        })
        .collect();
    let total: u64 = 1 << cotree.len();
    for v in 0..total {
        if rows.iter().all(|&(mask, r)| (v & mask).count_ones() % 2 == r) {
            let x: Vec<bool> = (0..cotree.len()).map(|i| v >> i & 1 == 1).collect();
            return Ok(Some(signing_from_cotree(g, &cotree, &x)));
        }
    }
    Ok(None)
}

pub fn is_balanceable(g: &BipartiteGraph, limits: &Limits) -> Result<bool> {
    Ok(find_balanced_signing(g, limits)?.is_some())
}

/// `e` is the unique chord of some cycle iff `G - e` has a hole through both ends.
pub fn is_unique_chord_of_some_cycle(g: &BipartiteGraph, e: Edge, limits: &Limits) -> Result<bool> {
    let (u, v) = e;
    if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
        return Err(Error::NotAnEdge(format!("{u}"), format!("{v}")));
    }
    if g.n() > limits.hole_vertices {
        return Err(Error::limit("hole enumeration vertex count", limits.hole_vertices, g.n()));
    }
    let h = g.without_edge(e);
    Ok(exists_hole_through(h.masks()?, h.full_mask(), u, v))
}

/// Least edge (by id) that is not the unique chord of any cycle.
pub fn find_non_unique_chord_edge(g: &BipartiteGraph, limits: &Limits) -> Result<Option<Edge>> {
    for &e in g.edges() {
        if !is_unique_chord_of_some_cycle(g, e, limits)? {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

/// Least edge (by id) that is the unique chord of some cycle.
pub fn find_unique_chord_edge(g: &BipartiteGraph, limits: &Limits) -> Result<Option<Edge>> {
    for &e in g.edges() {
        if is_unique_chord_of_some_cycle(g, e, limits)? {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

/// Balanceable and no edge is the unique chord of a cycle.
pub fn is_strongly_balanceable(g: &BipartiteGraph, limits: &Limits) -> Result<bool> {
    Ok(is_balanceable(g, limits)? && find_unique_chord_edge(g, limits)?.is_none())
}

/// Some signing makes every cycle, chordless or not, weigh 0 mod 4.
///
/// Such a graph is balanceable and has no unique chord (the two cycles a chord
/// splits off would force the chord's weight to be even), so those are checked
/// first; the remaining graphs are decided over the full cycle list.
pub fn is_restricted_balanceable(g: &BipartiteGraph, limits: &Limits) -> Result<bool> {
    Ok(find_restricted_signing(g, limits)?.is_some())
}

pub fn find_restricted_signing(g: &BipartiteGraph, limits: &Limits) -> Result<Option<Signing>> {
    if !is_balanceable(g, limits)? || find_unique_chord_edge(g, limits)?.is_some() {
        return Ok(None);
    }
    let (_, cotree) = spanning_forest(g);
    let col_of = column_map(g, &cotree);
    let mut sys = Gf2System::new(cotree.len());
    for_each_cycle(g, limits, &mut |c| {
        sys.add(cotree_columns(g, &col_of, c), (c.len() / 2) % 2 == 1)
    })?;
    Ok(sys.least_solution().map(|x| signing_from_cotree(g, &cotree, &x)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> BipartiteGraph {
        BipartiteGraph::from_edge_ids(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn r10() -> BipartiteGraph {
        let mut edges: Vec<Edge> = (0..10).map(|i| (i, (i + 1) % 10)).collect();
        edges.extend((0..5).map(|i| (i, i + 5)));
        BipartiteGraph::from_edge_ids(10, edges).unwrap()
    }

    #[test]
    fn c8_weights() {
        let g = cycle(8);
        let h = Hole::new(&g, (0..8).collect()).unwrap();
        let s = Signing::all_plus(&g);
        assert_eq!(hole_weight(&g, &s, &h).unwrap(), 8);
        let s = Signing::with_negative(&g, &[("v1", "v2")]).unwrap();
        assert_eq!(hole_weight(&g, &s, &h).unwrap(), 6);
    }

    #[test]
    fn c6_needs_one_negative_edge() {
        let g = cycle(6);
        assert!(!is_balanced_signing(&g, &Signing::all_plus(&g), &Limits::DEFAULT).unwrap());
        let s = find_balanced_signing(&g, &Limits::DEFAULT).unwrap().unwrap();
        assert_eq!(s.negative_edges(&g).len(), 1);
        assert_eq!(Some(s), find_balanced_signing_enumerative(&g, &Limits::DEFAULT).unwrap());
    }

    #[test]
    fn resign_is_an_involution() {
        let g = cycle(8);
        let s = Signing::all_plus(&g);
        let t = resign(&g, &s, 0).unwrap();
        let neg: Vec<_> = t.negative_edges(&g).into_iter().map(|e| g.edge_names(e)).collect();
        assert_eq!(
            neg,
            vec![("v1".to_string(), "v2".to_string()), ("v1".to_string(), "v8".to_string())]
        );
        assert_eq!(resign(&g, &t, 0).unwrap(), s);
    }

    #[test]
    fn foreign_signing_rejected() {
        let s = Signing::all_plus(&cycle(6));
        assert!(matches!(
            is_balanced_signing(&cycle(8), &s, &Limits::DEFAULT),
            Err(Error::ForeignSigning)
        ));
    }

    #[test]
    fn r10_facts() {
        let g = r10();
        let chords: Vec<(String, String)> =
            (1..=5).map(|i| (format!("v{i}"), format!("v{}", i + 5))).collect();
        let refs: Vec<(&str, &str)> = chords.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        let s = Signing::with_negative(&g, &refs).unwrap();
        assert!(is_balanced_signing(&g, &s, &Limits::DEFAULT).unwrap());
        assert!(is_balanceable(&g, &Limits::DEFAULT).unwrap());
        assert_eq!(find_non_unique_chord_edge(&g, &Limits::DEFAULT).unwrap(), None);
        assert!(!is_strongly_balanceable(&g, &Limits::DEFAULT).unwrap());
        assert!(!is_restricted_balanceable(&g, &Limits::DEFAULT).unwrap());
    }

    #[test]
    fn cycles_are_restricted_balanceable() {
        assert!(is_restricted_balanceable(&cycle(8), &Limits::DEFAULT).unwrap());
        assert!(is_restricted_balanceable(&cycle(6), &Limits::DEFAULT).unwrap());
        assert_eq!(
            find_non_unique_chord_edge(&cycle(8), &Limits::DEFAULT).unwrap(),
            Some((0, 1))
        );
    }

    #[test]
    fn enumerative_rank_guard() {
        let limits = Limits {
            cotree_rank: 0,
            ..Limits::DEFAULT
        };
        assert!(find_balanced_signing_enumerative(&cycle(6), &limits).is_err());
        assert!(find_balanced_signing(&cycle(6), &limits).unwrap().is_some());
    }
}
