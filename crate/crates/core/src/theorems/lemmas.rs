//! Checks of the lemmas behind the decomposition results, run per graph.

use serde_json::json;

use super::TheoremReport;
use crate::connectivity::{is_two_connected, mask_components};
use crate::decomposition::{
    blocks_of_2join, blocks_of_6join, enumerate_1joins, enumerate_26joins, enumerate_2joins, enumerate_6joins,
    find_star_cutset, mask, minimally_sided_double_star, subsets_by_size, verify_extended_star_cutset,
    ExtendedStarCutset, Join,
};
use crate::error::Result;
use crate::graph::{bits, BipartiteGraph, Vertex};
use crate::limits::Limits;
use crate::signing::find_balanced_signing;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Lemma {
    /// Structure of the sides of a 2-join in a graph with no star cutset.
    L1,
    /// A bipartite graph with a 1-join and no star cutset is a 4-hole.
    L1Prime,
    /// 2-join blocks inherit balanceability and the absence of star cutsets and 6-joins.
    L2j,
    /// Structure of a 6-join in a graph with no star cutset.
    SixJl1,
    /// The minimal side of a minimally-sided 2-join.
    Extreme,
    /// The minimal-side block of a minimally-sided {2,6}-join has no {2,6}-join.
    SixJl2,
    /// The minimal side of a minimally-sided double star cutset has no star cutset.
    ExtremeStar,
    /// Extended star cutsets reduce to star cutsets in the two classes.
    ExtStarReduction,
}

impl Lemma {
    pub const ALL: [Lemma; 8] = [
        Lemma::L1,
        Lemma::L1Prime,
        Lemma::L2j,
        Lemma::SixJl1,
        Lemma::Extreme,
        Lemma::SixJl2,
        Lemma::ExtremeStar,
        Lemma::ExtStarReduction,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Lemma::L1 => "l1",
            Lemma::L1Prime => "l1prime",
            Lemma::L2j => "l2j",
            Lemma::SixJl1 => "6jl1",
            Lemma::Extreme => "extreme",
            Lemma::SixJl2 => "6jl2",
            Lemma::ExtremeStar => "extremeStar",
            Lemma::ExtStarReduction => "ext-star-reduction",
        }
    }

    pub fn parse(s: &str) -> Option<Lemma> {
        Lemma::ALL.into_iter().find(|l| l.id() == s)
    }
}

/// Connected with no star cutset.
fn star_free(g: &BipartiteGraph, limits: &Limits) -> Result<bool> {
    Ok(g.is_connected() && find_star_cutset(g, limits)?.is_none())
}

fn balanceable(g: &BipartiteGraph, limits: &Limits) -> Result<bool> {
    Ok(find_balanced_signing(g, limits)?.is_some())
}

pub fn check_lemma(lemma: Lemma, g: &BipartiteGraph, limits: &Limits) -> Result<TheoremReport> {
    let id = lemma.id();
    let verdict = match lemma {
        Lemma::L1 => l1(g, limits)?,
        Lemma::L1Prime => l1prime(g, limits)?,
        Lemma::L2j => l2j(g, limits)?,
        Lemma::SixJl1 => six_jl1(g, limits)?,
        Lemma::Extreme => extreme(g, limits)?,
        Lemma::SixJl2 => six_jl2(g, limits)?,
        Lemma::ExtremeStar => extreme_star(g, limits)?,
        Lemma::ExtStarReduction => ext_star_reduction(g, limits)?,
    };
    Ok(match verdict {
        Outcome::Inapplicable(why) => TheoremReport::inapplicable(id, g, why),
        Outcome::Holds(checked) => TheoremReport::holds(id, g, json!({ "checked": checked })),
        Outcome::Fails(why) => TheoremReport::fails(id, g, &why),
    })
}

enum Outcome {
    Inapplicable(&'static str),
    /// Number of splits, cutsets or blocks examined.
    Holds(usize),
    Fails(String),
}

use Outcome::{Fails, Holds, Inapplicable};

fn l1(g: &BipartiteGraph, limits: &Limits) -> Result<Outcome> {
    if !star_free(g, limits)? {
        return Ok(Inapplicable("has a star cutset"));
    }
    let splits = enumerate_2joins(g, limits)?;
    if splits.is_empty() {
        return Ok(Inapplicable("no 2-join"));
    }
    let masks = g.masks()?;
    for s in &splits {
        for (x, a, b) in [(&s.x1, &s.a1, &s.b1), (&s.x2, &s.a2, &s.b2)] {
            let xm = mask(x);
            let comps = mask_components(masks, xm);
            if comps.iter().any(|&c| c & mask(a) == 0 || c & mask(b) == 0) {
                return Ok(Fails("a component of G[Xi] misses Ai or Bi".into()));
            }
            if x.iter().any(|&u| masks[u] & xm == 0) {
                return Ok(Fails("a vertex of Xi has no neighbor in Xi".into()));
            }
            let sees_all = |v: Vertex, set: &[Vertex]| set.iter().all(|&w| g.has_edge(v, w));
            if a.iter().any(|&v| sees_all(v, b)) || b.iter().any(|&v| sees_all(v, a)) {
                return Ok(Fails("a special vertex is complete to the other special set".into()));
            }
            if x.len() < 4 {
                return Ok(Fails("a side has fewer than 4 vertices".into()));
            }
        }
    }
    Ok(Holds(splits.len()))
}

fn l1prime(g: &BipartiteGraph, limits: &Limits) -> Result<Outcome> {
    if !star_free(g, limits)? {
        return Ok(Inapplicable("has a star cutset"));
    }
    let splits = enumerate_1joins(g, limits)?;
    if splits.is_empty() {
        return Ok(Inapplicable("no 1-join"));
    }
    let is_four_hole = g.n() == 4 && g.m() == 4 && g.vertices().all(|v| g.degree(v) == 2);
    Ok(if is_four_hole {
        Holds(splits.len())
    } else {
        Fails("graph with a 1-join is not a 4-hole".into())
    })
}

fn l2j(g: &BipartiteGraph, limits: &Limits) -> Result<Outcome> {
    if !star_free(g, limits)? {
        return Ok(Inapplicable("has a star cutset"));
    }
    let splits = enumerate_2joins(g, limits)?;
    if splits.is_empty() {
        return Ok(Inapplicable("no 2-join"));
    }
    let bal = balanceable(g, limits)?;
    let no_six = enumerate_6joins(g, limits)?.is_empty();
    for s in &splits {
        let blocks = blocks_of_2join(g, s)?;
        for block in [&blocks.g1, &blocks.g2] {
            if bal && !balanceable(block, limits)? {
                return Ok(Fails("a block of a balanceable graph is not balanceable".into()));
            }
            if !star_free(block, limits)? {
                return Ok(Fails("a block has a star cutset".into()));
            }
            if no_six && !enumerate_6joins(block, limits)?.is_empty() {
                return Ok(Fails("a block has a 6-join while the graph has none".into()));
            }
        }
    }
    Ok(Holds(splits.len()))
}

fn six_jl1(g: &BipartiteGraph, limits: &Limits) -> Result<Outcome> {
    if !star_free(g, limits)? {
        return Ok(Inapplicable("has a star cutset"));
    }
    let splits = enumerate_6joins(g, limits)?;
    if splits.is_empty() {
        return Ok(Inapplicable("no 6-join"));
    }
    let masks = g.masks()?;
    let four_free = !g.has_four_hole();
    let small = four_free || g.max_degree() <= 3;
    let bal = balanceable(g, limits)?;
    for s in &splits {
        for (x, start) in [(&s.x1, 0), (&s.x2, 1)] {
            let own: Vec<u64> = (start..6).step_by(2).map(|i| mask(&s.a[i])).collect();
            let rest = mask(x) & !own.iter().fold(0, |acc, m| acc | m);
            if rest == 0 {
                return Ok(Fails("a side consists of its special sets only".into()));
            }
            for c in mask_components(masks, rest) {
                let seen = |a: u64| bits(a).any(|v| masks[v] & c != 0);
                if !own.iter().all(|&a| seen(a)) {
                    return Ok(Fails("a component of a side misses one of its special sets".into()));
                }
            }
        }
        if small && s.a.iter().any(|a| a.len() != 1 || g.degree(a[0]) < 3) {
            return Ok(Fails("special sets are not single vertices of degree at least 3".into()));
        }
        let blocks = blocks_of_6join(g, s)?;
        for block in [&blocks.g1, &blocks.g2] {
            if bal && !balanceable(block, limits)? {
                return Ok(Fails("a block of a balanceable graph is not balanceable".into()));
            }
            if four_free && !star_free(block, limits)? {
                return Ok(Fails("a block of a 4-hole-free graph has a star cutset".into()));
            }
        }
    }
    Ok(Holds(splits.len()))
}

/// Every (join, minimal side) pair of the family, oriented with `X1` minimal.
fn minimal_orientations(family: &[Join]) -> Vec<Join> {
    let sides: Vec<u64> = family
        .iter()
        .flat_map(|j| {
            let (a, b) = j.sides();
            [mask(a), mask(b)]
        })
        .collect();
    let minimal = |s: u64| !sides.iter().any(|&o| o != s && o & !s == 0);
    let mut out = Vec::new();
    for j in family {
        let (a, b) = j.sides();
        if minimal(mask(a)) {
            out.push(j.clone());
        }
        if minimal(mask(b)) {
            out.push(j.swapped());
        }
    }
    out
}

fn extreme(g: &BipartiteGraph, limits: &Limits) -> Result<Outcome> {
    if !star_free(g, limits)? {
        return Ok(Inapplicable("has a star cutset"));
    }
    let family: Vec<Join> = enumerate_2joins(g, limits)?.into_iter().map(Join::Two).collect();
    if family.is_empty() {
        return Ok(Inapplicable("no 2-join"));
    }
    let oriented = minimal_orientations(&family);
    for j in &oriented {
        let Join::Two(s) = j else { unreachable!("2-join family") };
        if s.a1.len() < 2 || s.b1.len() < 2 {
            return Ok(Fails("a special set of the minimal side is a single vertex".into()));
        }
        if s.a2.iter().chain(&s.b2).any(|&v| g.degree(v) < 3) {
            return Ok(Fails("a special vertex of the other side has degree below 3".into()));
        }
        let blocks = blocks_of_2join(g, s)?;
        if star_free(&blocks.g1, limits)?
            && star_free(&blocks.g2, limits)?
            && !enumerate_2joins(&blocks.g1, limits)?.is_empty()
        {
            return Ok(Fails("the minimal-side block has a 2-join".into()));
        }
    }
    Ok(Holds(oriented.len()))
}

fn minimal_block(g: &BipartiteGraph, j: &Join) -> Result<BipartiteGraph> {
    Ok(match j {
        Join::Two(s) => blocks_of_2join(g, s)?.g1,
        Join::Six(s) => blocks_of_6join(g, s)?.g1,
    })
}

fn six_jl2(g: &BipartiteGraph, limits: &Limits) -> Result<Outcome> {
    if g.has_four_hole() {
        return Ok(Inapplicable("has a 4-hole"));
    }
    if !star_free(g, limits)? {
        return Ok(Inapplicable("has a star cutset"));
    }
    let family = enumerate_26joins(g, limits)?;
    if family.is_empty() {
        return Ok(Inapplicable("no {2,6}-join"));
    }
    let oriented = minimal_orientations(&family);
    for j in &oriented {
        let block = minimal_block(g, j)?;
        if !enumerate_26joins(&block, limits)?.is_empty() {
            return Ok(Fails("the minimal-side block has a {2,6}-join".into()));
        }
    }
    Ok(Holds(oriented.len()))
}

fn extreme_star(g: &BipartiteGraph, limits: &Limits) -> Result<Outcome> {
    if g.has_four_hole() {
        return Ok(Inapplicable("has a 4-hole"));
    }
    if !is_two_connected(g) {
        return Ok(Inapplicable("not 2-connected"));
    }
    if find_star_cutset(g, limits)?.is_none() {
        return Ok(Inapplicable("no star cutset"));
    }
    let Some(m) = minimally_sided_double_star(g, limits)? else {
        return Ok(Fails("a 2-connected graph with a star cutset has no double star cutset".into()));
    };
    Ok(if star_free(&m.block, limits)? {
        Holds(1)
    } else {
        Fails("the minimal side has a star cutset".into())
    })
}

/// Candidate extended star cutsets with `|T| ≥ 2`.
fn extended_candidates(g: &BipartiteGraph) -> Vec<ExtendedStarCutset> {
    let mut out = Vec::new();
    for x in g.vertices() {
        let nx = g.neighbors(x);
        for am in subsets_by_size(nx).filter(|m| m.count_ones() >= 2) {
            let a: Vec<Vertex> = bits(am).collect();
            let common: Vec<Vertex> = g
                .vertices()
                .filter(|&t| t != x && a.iter().all(|&w| g.has_edge(t, w)))
                .collect();
            let others: Vec<Vertex> = nx.iter().copied().filter(|&w| !a.contains(&w)).collect();
            for tm in subsets_by_size(&common).filter(|&m| m != 0) {
                let mut t: Vec<Vertex> = bits(tm).collect();
                t.push(x);
                t.sort_unstable();
                for rm in subsets_by_size(&others) {
                    out.push(ExtendedStarCutset {
                        x,
                        t: t.clone(),
                        a: a.clone(),
                        r: bits(rm).collect(),
                    });
                }
            }
        }
    }
    out
}

fn ext_star_reduction(g: &BipartiteGraph, limits: &Limits) -> Result<Outcome> {
    if g.has_four_hole() && g.max_degree() > 3 {
        return Ok(Inapplicable("neither 4-hole-free nor subcubic"));
    }
    if !g.is_connected() {
        return Ok(Inapplicable("disconnected"));
    }
    if g.max_degree() > limits.star_degree {
        return Ok(Inapplicable("degree above the star cutset guard"));
    }
    let found = extended_candidates(g)
        .into_iter()
        .filter(|c| verify_extended_star_cutset(g, c))
        .count();
    if found == 0 {
        return Ok(Inapplicable("no extended star cutset with |T| >= 2"));
    }
    Ok(if find_star_cutset(g, limits)?.is_some() {
        Holds(found)
    } else {
        Fails("an extended star cutset exists but no star cutset".into())
    })
}
