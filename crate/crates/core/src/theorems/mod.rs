//! Executable checks of the structural results, each producing a report with
//! a witness that can be re-validated from raw adjacency.

mod k33;
pub mod lemmas;
mod reports;
mod twins;

pub use k33::{find_k33_subdivision, K33Subdivision};
pub use lemmas::{check_lemma, Lemma};
pub use reports::{
    conjecture_sweep, cr_cubic_report, cr_square_report, main_trichotomy, twins_no_cutvertex, verify_deg2_square,
    MainWitness, Theorem,
};
pub use twins::{find_twins, twin_pairs, TwinPair};

use serde::Serialize;
use serde_json::{json, Value};

use crate::canon::graph_hash;
use crate::edgelist::format_edge_list;
use crate::graph::BipartiteGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    Inapplicable,
    /// An open statement could not be confirmed; recorded, never asserted.
    Unresolved,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub applicable: bool,
    pub verdict: Verdict,
    pub witness: Value,
    pub graph_hash: String,
}

impl TheoremReport {
    pub fn holds(theorem: &str, g: &BipartiteGraph, witness: Value) -> Self {
        Self::new(theorem, g, true, Verdict::Holds, witness)
    }

    pub fn inapplicable(theorem: &str, g: &BipartiteGraph, reason: &str) -> Self {
        Self::new(theorem, g, false, Verdict::Inapplicable, json!({ "reason": reason }))
    }

    /// A failure always carries the full graph as a reproducer.
    pub fn fails(theorem: &str, g: &BipartiteGraph, reason: &str) -> Self {
        Self::new(
            theorem,
            g,
            true,
            Verdict::Fails,
            json!({ "reason": reason, "graph": format_edge_list(g) }),
        )
    }

    pub fn unresolved(theorem: &str, g: &BipartiteGraph, reason: &str) -> Self {
        Self::new(
            theorem,
            g,
            true,
            Verdict::Unresolved,
            json!({ "reason": reason, "graph": format_edge_list(g) }),
        )
    }

    fn new(theorem: &str, g: &BipartiteGraph, applicable: bool, verdict: Verdict, witness: Value) -> Self {
        TheoremReport {
            theorem: theorem.to_string(),
            applicable,
            verdict,
            witness,
            graph_hash: graph_hash(g),
        }
    }

    pub fn is_failure(&self) -> bool {
        self.verdict == Verdict::Fails
    }
}

fn names(g: &BipartiteGraph, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| g.name(v).to_string()).collect()
}
