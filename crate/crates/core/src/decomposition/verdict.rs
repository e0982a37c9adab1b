use serde_json::{json, Value};

use super::{find_2join, find_6join, find_star_cutset, CutsetWitness};
use crate::canon::is_isomorphic;
use crate::edgelist::format_edge_list;
use crate::error::{Error, Result};
use crate::generators::named::r10;
use crate::graph::{BipartiteGraph, Side};
use crate::limits::Limits;
use crate::signing::find_balanced_signing;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictTag {
    Basic,
    R10,
    StarCutset,
    TwoJoin,
    SixJoin,
}

impl VerdictTag {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictTag::Basic => "Basic",
            VerdictTag::R10 => "R10",
            VerdictTag::StarCutset => "StarCutset",
            VerdictTag::TwoJoin => "TwoJoin",
            VerdictTag::SixJoin => "SixJoin",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionVerdict {
    pub tag: VerdictTag,
    pub witness: Option<CutsetWitness>,
}

impl DecompositionVerdict {
    pub fn is_valid(&self, g: &BipartiteGraph) -> bool {
        match (&self.tag, &self.witness) {
            (VerdictTag::Basic, None) => is_basic(g),
            (VerdictTag::R10, None) => is_r10(g),
            (VerdictTag::StarCutset, Some(w @ CutsetWitness::Star(_)))
            | (VerdictTag::TwoJoin, Some(w @ CutsetWitness::TwoJoin(_)))
            | (VerdictTag::SixJoin, Some(w @ CutsetWitness::SixJoin(_))) => w.is_valid(g),
            _ => false,
        }
    }

    pub fn to_json(&self, g: &BipartiteGraph) -> Value {
        json!({
            "tag": self.tag.as_str(),
            "witness": self.witness.as_ref().map_or(Value::Null, |w| w.to_json(g)),
        })
    }
}

/// Some side of the bipartition has all degrees at most 2 (per component).
pub fn is_basic(g: &BipartiteGraph) -> bool {
    g.components().iter().all(|comp| {
        [Side::L, Side::R]
            .iter()
            .any(|&s| comp.iter().filter(|&&v| g.side(v) == s).all(|&v| g.degree(v) <= 2))
    })
}

pub fn is_r10(g: &BipartiteGraph) -> bool {
    g.n() == 10 && g.m() == 15 && g.is_cubic() && is_isomorphic(g, &r10())
}

/// Basic, R10, or a star cutset, 2-join or 6-join, checked in that order.
///
/// The input must be connected, balanceable, and 4-hole-free or of maximum
/// degree at most 3.
pub fn decompose(g: &BipartiteGraph, limits: &Limits) -> Result<DecompositionVerdict> {
    if !g.is_connected() {
        return Err(Error::OutOfTheoremScope("graph is disconnected".into()));
    }
    if g.has_four_hole() && g.max_degree() > 3 {
        return Err(Error::OutOfTheoremScope(
            "graph has a 4-hole and a vertex of degree above 3".into(),
        ));
    }
    if find_balanced_signing(g, limits)?.is_none() {
        return Err(Error::OutOfTheoremScope("graph is not balanceable".into()));
    }
    let verdict = |tag, witness| Ok(DecompositionVerdict { tag, witness });
    if is_basic(g) {
        return verdict(VerdictTag::Basic, None);
    }
    if is_r10(g) {
        return verdict(VerdictTag::R10, None);
    }
    if let Some(c) = find_star_cutset(g, limits)? {
        return verdict(VerdictTag::StarCutset, Some(CutsetWitness::Star(c)));
    }
    if let Some(s) = find_2join(g, limits)? {
        return verdict(VerdictTag::TwoJoin, Some(CutsetWitness::TwoJoin(s)));
    }
    if let Some(s) = find_6join(g, limits)? {
        return verdict(VerdictTag::SixJoin, Some(CutsetWitness::SixJoin(s)));
    }
    Err(Error::TheoremViolation {
        dump: format_edge_list(g),
    })
}
