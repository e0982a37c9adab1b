//! Cutsets, joins, blocks of decomposition and the decomposition verdict.

mod blocks;
mod double_star;
mod joins;
mod star;
mod verdict;

pub use blocks::{
    blocks_of_2join, blocks_of_6join, blocks_of_double_star, blocks_of_star, MarkerPath, SixJoinBlocks,
    TwoJoinBlocks,
};
pub use double_star::{enumerate_double_star_cutsets, minimally_sided_double_star, DoubleStarCutset, MinimalDoubleStar};
pub use joins::{
    enumerate_1joins, enumerate_26joins, enumerate_2joins, enumerate_6joins, find_1join, find_2join, find_6join,
    minimally_sided_26join, minimally_sided_2join, Join, OneJoinSplit, SixJoinSplit, TwoJoinSplit,
};
pub use star::{
    find_star_cutset, has_star_cutset, is_star_cutset, verify_extended_star_cutset, ExtendedStarCutset, StarCutset,
};
pub use verdict::{decompose, is_basic, is_r10, DecompositionVerdict, VerdictTag};

use serde_json::Value;

use crate::graph::{bit, bits, BipartiteGraph, Vertex};

/// Any decomposition structure, for uniform reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutsetWitness {
    Star(StarCutset),
    DoubleStar(DoubleStarCutset),
    OneJoin(OneJoinSplit),
    TwoJoin(TwoJoinSplit),
    SixJoin(SixJoinSplit),
    ExtendedStar(ExtendedStarCutset),
}

impl CutsetWitness {
    pub fn is_valid(&self, g: &BipartiteGraph) -> bool {
        match self {
            CutsetWitness::Star(c) => is_star_cutset(g, c),
            CutsetWitness::DoubleStar(c) => c.is_valid(g),
            CutsetWitness::OneJoin(s) => s.is_valid(g),
            CutsetWitness::TwoJoin(s) => s.is_valid(g),
            CutsetWitness::SixJoin(s) => s.is_valid(g),
            CutsetWitness::ExtendedStar(c) => verify_extended_star_cutset(g, c),
        }
    }

    pub fn to_json(&self, g: &BipartiteGraph) -> Value {
        match self {
            CutsetWitness::Star(c) => c.to_json(g),
            CutsetWitness::DoubleStar(c) => c.to_json(g),
            CutsetWitness::OneJoin(s) => s.to_json(g),
            CutsetWitness::TwoJoin(s) => s.to_json(g),
            CutsetWitness::SixJoin(s) => s.to_json(g),
            CutsetWitness::ExtendedStar(c) => c.to_json(g),
        }
    }
}

pub(crate) fn names(g: &BipartiteGraph, vs: &[Vertex]) -> Vec<String> {
    vs.iter().map(|&v| g.name(v).to_string()).collect()
}

pub(crate) fn mask(vs: &[Vertex]) -> u64 {
    vs.iter().fold(0, |acc, &v| acc | bit(v))
}

pub(crate) fn list(mask: u64) -> Vec<Vertex> {
    bits(mask).collect()
}

/// Subsets of `items` by size, then lexicographically, as masks.
pub(crate) fn subsets_by_size(items: &[Vertex]) -> impl Iterator<Item = u64> + '_ {
    (0..=items.len()).flat_map(move |k| Combinations::new(items.len(), k).map(move |idx| {
        idx.iter().fold(0u64, |acc, &i| acc | bit(items[i]))
    }))
}

struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}
