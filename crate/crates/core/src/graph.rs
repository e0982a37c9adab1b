use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// An undirected edge stored with `0 < 1`.
pub type Edge = (Vertex, Vertex);

#[inline]
pub fn edge_key(a: Vertex, b: Vertex) -> Edge {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    L,
    R,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::L => Side::R,
            Side::R => Side::L,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::L => "L",
            Side::R => "R",
        })
    }
}

/// Iterate the set bits of a vertex mask in ascending order.
pub fn bits(mut mask: u64) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as Vertex;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[inline]
pub fn bit(v: Vertex) -> u64 {
    1u64 << v
}

/// A simple bipartite graph with named, sided vertices.
///
/// Vertex ids are dense `0..n`; neighbor lists and the edge list are sorted, so
/// every iteration order is ascending by id. For `n <= 64` an adjacency bit mask
/// per vertex is kept for the exponential searches.
#[derive(Debug, Clone)]
pub struct BipartiteGraph {
    names: Vec<String>,
    sides: Vec<Side>,
    adj: Vec<Vec<Vertex>>,
    edges: Vec<Edge>,
    masks: Vec<u64>,
    index: HashMap<String, Vertex>,
}

impl PartialEq for BipartiteGraph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.sides == other.sides && self.edges == other.edges
    }
}

impl Eq for BipartiteGraph {}

impl BipartiteGraph {
    /// Build a graph from name pairs. Ids follow first appearance in `edges`;
    /// names that occur only in `sides` are appended afterwards in sorted order.
    /// Without `sides`, each component is 2-colored with its smallest id on `L`.
    pub fn build<S: AsRef<str>>(
        edges: &[(S, S)],
        sides: Option<&HashMap<String, Side>>,
    ) -> Result<Self> {
        let mut b = GraphBuilder::new();
        for (x, y) in edges {
            b.edge(x.as_ref(), y.as_ref())?;
        }
        if let Some(sides) = sides {
            let mut extra: Vec<&String> = sides.keys().filter(|k| b.get(k).is_none()).collect();
            extra.sort();
            for name in extra {
                b.vertex(name)?;
            }
            for i in 0..b.names.len() {
                let side = *sides
                    .get(&b.names[i])
                    .ok_or_else(|| Error::MissingSide(b.names[i].clone()))?;
                b.sides[i] = Some(side);
            }
        }
        b.finish()
    }

    /// Assemble from id-level parts. `sides = None` infers sides.
    pub fn from_parts(
        names: Vec<String>,
        sides: Option<Vec<Side>>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Self> {
        let n = names.len();
        let mut b = GraphBuilder::new();
        for name in &names {
            b.vertex(name)?;
        }
        if b.names.len() != n {
            return Err(Error::InvalidParams("duplicate vertex names".into()));
        }
        if let Some(s) = sides {
            if s.len() != n {
                return Err(Error::InvalidParams("side vector length mismatch".into()));
            }
            b.sides = s.into_iter().map(Some).collect();
        }
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParams(format!("edge ({u},{v}) out of range")));
            }
            b.edge_ids(u, v)?;
        }
        b.finish()
    }

    /// Graph on `n` vertices named `v1..vn` with inferred sides.
    pub fn from_edge_ids(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let names = (1..=n).map(|i| format!("v{i}")).collect();
        Self::from_parts(names, None, edges)
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn side(&self, v: Vertex) -> Side {
        self.sides[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        self.index.get(name).copied()
    }

    pub fn vertex_or_err(&self, name: &str) -> Result<Vertex> {
        self.vertex(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_cubic(&self) -> bool {
        self.n() > 0 && self.adj.iter().all(|a| a.len() == 3)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        if !self.masks.is_empty() {
            self.masks[u] & bit(v) != 0
        } else {
            self.adj[u].binary_search(&v).is_ok()
        }
    }

    /// Position of an edge in [`Self::edges`].
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edges.binary_search(&edge_key(u, v)).ok()
    }

    /// Adjacency masks, available when `n <= 64`.
    pub fn masks(&self) -> Result<&[u64]> {
        if self.n() > 64 {
            Err(Error::limit("vertex count for bit-mask searches", 64, self.n()))
        } else {
            Ok(&self.masks)
        }
    }

    pub fn full_mask(&self) -> u64 {
        if self.n() >= 64 {
            u64::MAX
        } else {
            bit(self.n()) - 1
        }
    }

    pub fn side_mask(&self, side: Side) -> u64 {
        self.vertices()
            .filter(|&v| v < 64 && self.sides[v] == side)
            .fold(0, |acc, v| acc | bit(v))
    }

    pub fn edge_names(&self, e: Edge) -> (String, String) {
        (self.names[e.0].clone(), self.names[e.1].clone())
    }

    /// Connected components as ascending vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True for graphs with exactly one component (the empty graph is not connected).
    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components().len() == 1
    }

    /// Induced subgraph on `keep`; new ids follow ascending old id.
    /// Returns the subgraph and the map new id -> old id.
    pub fn induced(&self, keep: &[Vertex]) -> (BipartiteGraph, Vec<Vertex>) {
        let mut old: Vec<Vertex> = keep.to_vec();
        old.sort_unstable();
        old.dedup();
        let mut new_of = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let names = old.iter().map(|&v| self.names[v].clone()).collect();
        let sides = old.iter().map(|&v| self.sides[v]).collect();
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_of[u] != usize::MAX && new_of[v] != usize::MAX)
            .map(|&(u, v)| (new_of[u], new_of[v]));
        let g = BipartiteGraph::from_parts(names, Some(sides), edges)
            .expect("induced subgraph of a valid graph is valid");
        (g, old)
    }

    pub fn induced_mask(&self, keep: u64) -> (BipartiteGraph, Vec<Vertex>) {
        let keep: Vec<Vertex> = bits(keep).collect();
        self.induced(&keep)
    }

    /// Copy of the graph with one edge removed; ids unchanged.
    pub fn without_edge(&self, e: Edge) -> BipartiteGraph {
        let e = edge_key(e.0, e.1);
        let edges = self.edges.iter().copied().filter(|&x| x != e);
        BipartiteGraph::from_parts(self.names.clone(), Some(self.sides.clone()), edges)
            .expect("edge deletion keeps the graph valid")
    }

    /// Stable fingerprint of names and edges, used to tie signings to their host.
    pub fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.names.hash(&mut h);
        self.edges.hash(&mut h);
        h.finish()
    }

    pub fn has_four_hole(&self) -> bool {
        // two vertices with two common neighbors
        let n = self.n();
        for u in 0..n {
            let mut count: HashMap<Vertex, usize> = HashMap::new();
            for &x in &self.adj[u] {
                for &w in &self.adj[x] {
                    if w > u {
                        let c = count.entry(w).or_insert(0);
                        *c += 1;
                        if *c >= 2 {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }
}

/// Incremental construction by vertex name.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    names: Vec<String>,
    sides: Vec<Option<Side>>,
    index: HashMap<String, Vertex>,
    edges: Vec<Edge>,
    edge_set: std::collections::HashSet<Edge>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, name: &str) -> Option<Vertex> {
        self.index.get(name).copied()
    }

    pub fn vertex(&mut self, name: &str) -> Result<Vertex> {
        if name.is_empty() {
            return Err(Error::EmptyName);
        }
        if let Some(&v) = self.index.get(name) {
            return Ok(v);
        }
        let v = self.names.len();
        self.names.push(name.to_string());
        self.sides.push(None);
        self.index.insert(name.to_string(), v);
        Ok(v)
    }

    pub fn sided_vertex(&mut self, name: &str, side: Side) -> Result<Vertex> {
        let v = self.vertex(name)?;
        self.sides[v] = Some(side);
        Ok(v)
    }

    pub fn edge(&mut self, a: &str, b: &str) -> Result<()> {
        let u = self.vertex(a)?;
        let v = self.vertex(b)?;
        self.edge_ids(u, v)
    }

    fn edge_ids(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(self.names[u].clone()));
        }
        let e = edge_key(u, v);
        if !self.edge_set.insert(e) {
            return Err(Error::DuplicateEdge(
                self.names[u].clone(),
                self.names[v].clone(),
            ));
        }
        self.edges.push(e);
        Ok(())
    }

    /// Validate and freeze. Sides must be either all given or all absent.
    pub fn finish(self) -> Result<BipartiteGraph> {
        let n = self.names.len();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        let given = self.sides.iter().filter(|s| s.is_some()).count();
        let sides: Vec<Side> = if given == n {
            let sides: Vec<Side> = self.sides.iter().map(|s| s.unwrap()).collect();
            for &(u, v) in &self.edges {
                if sides[u] == sides[v] {
                    return Err(Error::SideConflict(
                        self.names[u].clone(),
                        self.names[v].clone(),
                    ));
                }
            }
            sides
        } else if given == 0 {
            infer_sides(&self.names, &adj)?
        } else {
            let missing = self
                .sides
                .iter()
                .position(|s| s.is_none())
                .expect("some side missing");
            return Err(Error::MissingSide(self.names[missing].clone()));
        };
        let mut edges = self.edges;
        edges.sort_unstable();
        let masks = if n <= 64 {
            adj.iter()
                .map(|a| a.iter().fold(0u64, |acc, &v| acc | bit(v)))
                .collect()
        } else {
            Vec::new()
        };
        Ok(BipartiteGraph {
            names: self.names,
            sides,
            adj,
            edges,
            masks,
            index: self.index,
        })
    }
}

fn infer_sides(names: &[String], adj: &[Vec<Vertex>]) -> Result<Vec<Side>> {
    let n = names.len();
    let mut side: Vec<Option<Side>> = vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(Side::L);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let sx = side[x].unwrap();
            for &y in &adj[x] {
                match side[y] {
                    None => {
                        side[y] = Some(sx.flip());
                        queue.push_back(y);
                    }
                    Some(sy) if sy == sx => return Err(Error::NotBipartite(names[y].clone())),
                    _ => {}
                }
            }
        }
    }
    Ok(side.into_iter().map(Option::unwrap).collect())
}

/// A path given by its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Path {
    vertices: Vec<Vertex>,
}

impl Path {
    /// Checked constructor: distinct vertices, consecutive pairs adjacent.
    pub fn new(g: &BipartiteGraph, vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidParams("empty path".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for &v in &vertices {
            if v >= g.n() || !seen.insert(v) {
                return Err(Error::InvalidParams("path vertices must be distinct".into()));
            }
        }
        for w in vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Error::NotAnEdge(
                    g.name(w[0]).to_string(),
                    g.name(w[1]).to_string(),
                ));
            }
        }
        Ok(Path { vertices })
    }

    pub(crate) fn from_vec(vertices: Vec<Vertex>) -> Self {
        Path { vertices }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() <= 1
    }

    pub fn ends(&self) -> (Vertex, Vertex) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    pub fn interior(&self) -> &[Vertex] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }

    pub fn is_chordless(&self, g: &BipartiteGraph) -> bool {
        let vs = &self.vertices;
        for i in 0..vs.len() {
            for j in i + 2..vs.len() {
                if g.has_edge(vs[i], vs[j]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn names(&self, g: &BipartiteGraph) -> Vec<String> {
        self.vertices.iter().map(|&v| g.name(v).to_string()).collect()
    }
}
