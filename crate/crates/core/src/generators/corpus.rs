//! Exhaustive and seeded random corpora of connected bipartite graphs.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalForm};
use crate::connectivity::is_two_connected;
use crate::decomposition::is_r10;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Edge, Side};
use crate::holes::is_balanced;
use crate::limits::Limits;
use crate::signing::{find_balanced_signing, is_strongly_balanceable};

/// Largest exhaustive order; raised for subcubic corpora, which stay small.
pub const EXHAUSTIVE_MAX: usize = 11;
pub const EXHAUSTIVE_MAX_SUBCUBIC: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CorpusMode {
    Exhaustive,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    Balanced,
    Balanceable,
    FourHoleFree,
    Cubic,
    TwoConnected,
    NotR10,
    NotStronglyBalanceable,
}

impl Filter {
    pub fn accepts(self, g: &BipartiteGraph, limits: &Limits) -> Result<bool> {
        Ok(match self {
            Filter::Balanced => is_balanced(g, limits)?,
            Filter::Balanceable => find_balanced_signing(g, limits)?.is_some(),
            Filter::FourHoleFree => !g.has_four_hole(),
            Filter::Cubic => g.is_cubic(),
            Filter::TwoConnected => is_two_connected(g),
            Filter::NotR10 => !is_r10(g),
            Filter::NotStronglyBalanceable => !is_strongly_balanceable(g, limits)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct CorpusSpec {
    pub mode: CorpusMode,
    pub n_min: usize,
    pub n_max: usize,
    pub max_degree: Option<usize>,
    pub filters: Vec<Filter>,
    pub seed: u64,
    /// Graphs wanted in random mode.
    pub count: usize,
    /// Random candidates tried per wanted graph before giving up.
    pub attempts_per_graph: usize,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            mode: CorpusMode::Exhaustive,
            n_min: 1,
            n_max: 8,
            max_degree: None,
            filters: Vec::new(),
            seed: 0,
            count: 0,
            attempts_per_graph: 2000,
        }
    }
}

impl CorpusSpec {
    pub fn exhaustive(n_min: usize, n_max: usize) -> Self {
        CorpusSpec {
            n_min,
            n_max,
            ..Default::default()
        }
    }

    pub fn random(n_min: usize, n_max: usize, count: usize, seed: u64) -> Self {
        CorpusSpec {
            mode: CorpusMode::Random,
            n_min,
            n_max,
            count,
            seed,
            ..Default::default()
        }
    }

    pub fn with_filters(mut self, filters: &[Filter]) -> Self {
        self.filters = filters.to_vec();
        self
    }

    pub fn with_max_degree(mut self, d: usize) -> Self {
        self.max_degree = Some(d);
        self
    }

    fn accepts(&self, g: &BipartiteGraph, limits: &Limits) -> Result<bool> {
        if !g.is_connected() || self.max_degree.is_some_and(|d| g.max_degree() > d) {
            return Ok(false);
        }
        for f in &self.filters {
            if !f.accepts(g, limits)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Run a corpus specification. Output order is deterministic: exhaustive
/// corpora by order then canonical form, random corpora by draw index.
pub fn generate(spec: &CorpusSpec, limits: &Limits) -> Result<Vec<BipartiteGraph>> {
    if spec.n_min > spec.n_max || spec.n_min == 0 && spec.n_max == 0 {
        return Err(Error::InvalidParams(format!(
            "bad order range {}..={}",
            spec.n_min, spec.n_max
        )));
    }
    match spec.mode {
        CorpusMode::Exhaustive => {
            let all = connected_bipartite_graphs(spec.n_max, spec.max_degree)?;
            let picked: Vec<Option<BipartiteGraph>> = all
                .into_par_iter()
                .filter(|g| g.n() >= spec.n_min)
                .map(|g| spec.accepts(&g, limits).map(|ok| ok.then_some(g)))
                .collect::<Result<_>>()?;
            Ok(picked.into_iter().flatten().collect())
        }
        CorpusMode::Random => random_corpus(spec, limits),
    }
}

/// Every connected bipartite graph with at most `n_max` vertices up to
/// isomorphism, canonically labeled, ordered by order then canonical form.
///
/// A connected graph always has a vertex whose removal leaves it connected,
/// so each graph arises from a smaller one by adding a vertex joined to a
/// nonempty set on one side.
pub fn connected_bipartite_graphs(n_max: usize, max_degree: Option<usize>) -> Result<Vec<BipartiteGraph>> {
    let cap = if max_degree.is_some_and(|d| d <= 3) {
        EXHAUSTIVE_MAX_SUBCUBIC
    } else {
        EXHAUSTIVE_MAX
    };
    if n_max > cap {
        return Err(Error::limit("exhaustive corpus order", cap, n_max));
    }
    let dcap = max_degree.unwrap_or(usize::MAX);
    let mut out = Vec::new();
    if n_max == 0 {
        return Ok(out);
    }
    let mut level: Vec<CanonicalForm> = vec![canonical_form(
        &BipartiteGraph::from_edge_ids(1, []).expect("single vertex"),
    )];
    out.extend(level.iter().map(CanonicalForm::to_graph));
    for _ in 2..=n_max {
        let children: Vec<Vec<CanonicalForm>> = level
            .par_iter()
            .map(|form| extensions(&form.to_graph(), dcap))
            .collect();
        let next: BTreeSet<CanonicalForm> = children.into_iter().flatten().collect();
        level = next.into_iter().collect();
        out.extend(level.iter().map(CanonicalForm::to_graph));
    }
    Ok(out)
}

fn extensions(g: &BipartiteGraph, dcap: usize) -> Vec<CanonicalForm> {
    let n = g.n();
    let mut seen = BTreeSet::new();
    for side in [Side::L, Side::R] {
        let open: Vec<usize> = g.vertices().filter(|&v| g.side(v) == side && g.degree(v) < dcap).collect();
        for subset in 1u64..1 << open.len() {
            if subset.count_ones() as usize > dcap {
                continue;
            }
            let mut edges: Vec<Edge> = g.edges().to_vec();
            edges.extend(open.iter().enumerate().filter(|(i, _)| subset >> i & 1 == 1).map(|(_, &v)| (v, n)));
            let h = BipartiteGraph::from_edge_ids(n + 1, edges).expect("extension stays bipartite");
            seen.insert(canonical_form(&h));
        }
    }
    seen.into_iter().collect()
}

const EDGE_PROBABILITIES: [f64; 7] = [0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8];
const BATCH: usize = 256;

fn random_corpus(spec: &CorpusSpec, limits: &Limits) -> Result<Vec<BipartiteGraph>> {
    let budget = spec.count.saturating_mul(spec.attempts_per_graph.max(1));
    let mut out = Vec::with_capacity(spec.count);
    let mut next = 0usize;
    while out.len() < spec.count {
        if next >= budget {
            return Err(Error::Starvation {
                accepted: out.len(),
                attempts: next,
            });
        }
        let end = (next + BATCH).min(budget);
        let batch: Vec<Option<BipartiteGraph>> = (next..end)
            .into_par_iter()
            .map(|i| {
                let g = random_candidate(spec, i as u64);
                match g {
                    Some(g) => spec.accepts(&g, limits).map(|ok| ok.then_some(g)),
                    None => Ok(None),
                }
            })
            .collect::<Result<_>>()?;
        for g in batch.into_iter().flatten() {
            if out.len() < spec.count {
                out.push(g);
            }
        }
        next = end;
    }
    Ok(out)
}

/// Candidate number `index` of the seeded stream, before filtering.
pub fn random_candidate(spec: &CorpusSpec, index: u64) -> Option<BipartiteGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    rng.set_stream(index);
    let n = rng.gen_range(spec.n_min.max(2)..=spec.n_max.max(2));
    let cubic = spec.filters.contains(&Filter::Cubic);
    let edges = if cubic {
        cubic_candidate(&mut rng, n)?
    } else {
        let p = *EDGE_PROBABILITIES.choose(&mut rng).expect("nonempty");
        sparse_candidate(
            &mut rng,
            n,
            p,
            spec.max_degree.unwrap_or(usize::MAX),
            spec.filters.contains(&Filter::FourHoleFree),
        )
    };
    BipartiteGraph::from_edge_ids(n, edges).ok().filter(BipartiteGraph::is_connected)
}

/// Union of three random perfect matchings between two halves; `None` when
/// they overlap.
fn cubic_candidate(rng: &mut ChaCha8Rng, n: usize) -> Option<Vec<Edge>> {
    if n % 2 == 1 || n < 6 {
        return None;
    }
    let k = n / 2;
    let mut edges = Vec::with_capacity(3 * k);
    for _ in 0..3 {
        let mut perm: Vec<usize> = (k..n).collect();
        perm.shuffle(rng);
        for (a, &b) in perm.iter().enumerate() {
            if edges.contains(&(a, b)) {
                return None;
            }
            edges.push((a, b));
        }
    }
    Some(edges)
}

/// Random spanning tree of `K_{a,b}` plus each remaining pair with
/// probability `p`, scaled so the expected extra degree stays constant.
fn sparse_candidate(rng: &mut ChaCha8Rng, n: usize, p: f64, dcap: usize, no_four_holes: bool) -> Vec<Edge> {
    let a = if n % 2 == 1 && rng.gen_bool(0.5) { n / 2 + 1 } else { n / 2 }.max(1);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    // first vertex of each side seeds the tree
    let left = |v: usize| v < a;
    let mut adj = vec![Vec::new(); n];
    let mut edges = Vec::new();
    let mut placed: Vec<usize> = Vec::new();
    let first_left = *order.iter().find(|&&v| left(v)).expect("left side nonempty");
    let first_right = *order.iter().find(|&&v| !left(v)).expect("right side nonempty");
    let add = |u: usize, v: usize, adj: &mut Vec<Vec<usize>>, edges: &mut Vec<Edge>| {
        adj[u].push(v);
        adj[v].push(u);
        edges.push((u.min(v), u.max(v)));
    };
    add(first_left, first_right, &mut adj, &mut edges);
    placed.push(first_left);
    placed.push(first_right);
    for &v in &order {
        if v == first_left || v == first_right {
            continue;
        }
        let opts: Vec<usize> = placed
            .iter()
            .copied()
            .filter(|&u| left(u) != left(v) && adj[u].len() < dcap)
            .collect();
        let Some(&u) = opts.choose(rng) else {
            return edges;
        };
        add(u, v, &mut adj, &mut edges);
        placed.push(v);
    }
    let mut pairs: Vec<Edge> = (0..a)
        .flat_map(|u| (a..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !adj[u].contains(&v))
        .collect();
    pairs.shuffle(rng);
    let q = (2.0 * p / (n as f64 / 2.0).max(1.0)).min(1.0);
    for (u, v) in pairs {
        if !rng.gen_bool(q) || adj[u].len() >= dcap || adj[v].len() >= dcap {
            continue;
        }
        if no_four_holes && adj[u].iter().any(|&x| adj[v].iter().any(|&y| adj[x].contains(&y))) {
            continue;
        }
        add(u, v, &mut adj, &mut edges);
    }
    edges
}
