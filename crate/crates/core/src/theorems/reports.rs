use serde_json::{json, Value};

use super::k33::{find_k33_subdivision, from_twins};
use super::twins::{twin_pairs, TwinPair};
use super::{names, TheoremReport};
use crate::connectivity::{branch_decomposition, cut_vertices, is_two_connected, non_incident, BranchDecomposition};
use crate::decomposition::is_r10;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Edge, Vertex};
use crate::holes::{girth, is_balanced};
use crate::limits::Limits;
use crate::signing::{find_balanced_signing, find_non_unique_chord_edge};

/// Theorem selectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    Deg2Square,
    RemovableEdge,
    Main,
    Twins,
    CubicGirthPlanarity,
    Conjectures,
}

impl Theorem {
    pub const ALL: [Theorem; 6] = [
        Theorem::Deg2Square,
        Theorem::RemovableEdge,
        Theorem::Main,
        Theorem::Twins,
        Theorem::CubicGirthPlanarity,
        Theorem::Conjectures,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::Deg2Square => "deg2-square",
            Theorem::RemovableEdge => "removable-edge",
            Theorem::Main => "main",
            Theorem::Twins => "twins",
            Theorem::CubicGirthPlanarity => "cubic-girth-planarity",
            Theorem::Conjectures => "conjectures",
        }
    }

    pub fn parse(s: &str) -> Option<Theorem> {
        Theorem::ALL.into_iter().find(|t| t.id() == s)
    }

    pub fn check(self, g: &BipartiteGraph, limits: &Limits) -> Result<Vec<TheoremReport>> {
        Ok(match self {
            Theorem::Deg2Square => vec![verify_deg2_square(g, limits)?],
            Theorem::RemovableEdge => vec![cr_square_report(g, limits)?],
            Theorem::Main => vec![main_trichotomy(g, limits)?],
            Theorem::Twins => vec![twins_no_cutvertex(g, limits)?],
            Theorem::CubicGirthPlanarity => vec![cr_cubic_report(g, limits)?],
            Theorem::Conjectures => conjecture_sweep(g, limits)?,
        })
    }
}

fn balanceable(g: &BipartiteGraph, limits: &Limits) -> Result<bool> {
    Ok(find_balanced_signing(g, limits)?.is_some())
}

fn edge_json(g: &BipartiteGraph, e: Edge) -> Value {
    json!([g.name(e.0), g.name(e.1)])
}

/// Linear balanceable graphs on at least two vertices have two vertices of
/// degree at most 2.
pub fn verify_deg2_square(g: &BipartiteGraph, limits: &Limits) -> Result<TheoremReport> {
    const ID: &str = "deg2-square";
    if g.n() < 2 {
        return Ok(TheoremReport::inapplicable(ID, g, "fewer than two vertices"));
    }
    if g.has_four_hole() {
        return Ok(TheoremReport::inapplicable(ID, g, "has a 4-hole"));
    }
    if !balanceable(g, limits)? {
        return Ok(TheoremReport::inapplicable(ID, g, "not balanceable"));
    }
    let low: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) <= 2).take(2).collect();
    Ok(if low.len() == 2 {
        TheoremReport::holds(ID, g, json!(names(g, &low)))
    } else {
        TheoremReport::fails(ID, g, "fewer than two vertices of degree at most 2")
    })
}

/// Linear balanceable graphs with an edge have an edge that is not the
/// unique chord of a cycle.
pub fn cr_square_report(g: &BipartiteGraph, limits: &Limits) -> Result<TheoremReport> {
    const ID: &str = "removable-edge";
    if g.m() == 0 {
        return Ok(TheoremReport::inapplicable(ID, g, "no edges"));
    }
    if g.has_four_hole() {
        return Ok(TheoremReport::inapplicable(ID, g, "has a 4-hole"));
    }
    if !balanceable(g, limits)? {
        return Ok(TheoremReport::inapplicable(ID, g, "not balanceable"));
    }
    Ok(match find_non_unique_chord_edge(g, limits)? {
        Some(e) => TheoremReport::holds(ID, g, edge_json(g, e)),
        None => TheoremReport::fails(ID, g, "every edge is the unique chord of a cycle"),
    })
}

/// Witness for the subcubic trichotomy, in clause order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MainWitness {
    /// Two degree-2 vertices in non-incident branches.
    NonIncident { u: Vertex, v: Vertex, branches: [Vec<Vertex>; 2] },
    TwinsAndDegree2 { twins: TwinPair, w: Vertex },
    TwoTwinPairs([TwinPair; 2]),
}

impl MainWitness {
    pub fn clause(&self) -> &'static str {
        match self {
            MainWitness::NonIncident { .. } => "i",
            MainWitness::TwinsAndDegree2 { .. } => "ii",
            MainWitness::TwoTwinPairs(_) => "iii",
        }
    }

    pub fn is_valid(&self, g: &BipartiteGraph) -> bool {
        match self {
            MainWitness::NonIncident { u, v, branches } => {
                let Ok(bd) = branch_decomposition(g) else { return false };
                let find = |x: Vertex| bd.branch_of_interior(x).map(|i| &bd.branches[i]);
                match (find(*u), find(*v)) {
                    (Some(b1), Some(b2)) => {
                        g.degree(*u) == 2
                            && g.degree(*v) == 2
                            && non_incident(b1, b2)
                            && b1.vertices() == branches[0].as_slice()
                            && b2.vertices() == branches[1].as_slice()
                    }
                    _ => false,
                }
            }
            MainWitness::TwinsAndDegree2 { twins, w } => twins.is_valid(g) && *w < g.n() && g.degree(*w) == 2,
            MainWitness::TwoTwinPairs([p, q]) => {
                p.is_valid(g) && q.is_valid(g) && [p.u, p.v].iter().all(|x| *x != q.u && *x != q.v)
            }
        }
    }

    pub fn to_json(&self, g: &BipartiteGraph) -> Value {
        match self {
            MainWitness::NonIncident { u, v, branches } => json!({
                "clause": self.clause(),
                "vertices": [g.name(*u), g.name(*v)],
                "branches": [names(g, &branches[0]), names(g, &branches[1])],
            }),
            MainWitness::TwinsAndDegree2 { twins, w } => json!({
                "clause": self.clause(),
                "twins": twins.to_json(g),
                "degree2": g.name(*w),
            }),
            MainWitness::TwoTwinPairs([p, q]) => json!({
                "clause": self.clause(),
                "twins": [p.to_json(g), q.to_json(g)],
            }),
        }
    }
}

fn non_incident_pair(g: &BipartiteGraph, bd: &BranchDecomposition) -> Option<MainWitness> {
    let low: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) == 2).collect();
    for (i, &u) in low.iter().enumerate() {
        let bu = &bd.branches[bd.branch_of_interior(u)?];
        for &v in &low[i + 1..] {
            let bv = &bd.branches[bd.branch_of_interior(v)?];
            if non_incident(bu, bv) {
                return Some(MainWitness::NonIncident {
                    u,
                    v,
                    branches: [bu.vertices().to_vec(), bv.vertices().to_vec()],
                });
            }
        }
    }
    None
}

fn main_witness(g: &BipartiteGraph, bd: &BranchDecomposition) -> Option<MainWitness> {
    if let Some(w) = non_incident_pair(g, bd) {
        return Some(w);
    }
    let twins = twin_pairs(g);
    if let (Some(&t), Some(w)) = (twins.first(), g.vertices().find(|&v| g.degree(v) == 2)) {
        return Some(MainWitness::TwinsAndDegree2 { twins: t, w });
    }
    for (i, p) in twins.iter().enumerate() {
        if let Some(q) = twins[i + 1..].iter().find(|q| ![q.u, q.v].iter().any(|x| *x == p.u || *x == p.v)) {
            return Some(MainWitness::TwoTwinPairs([*p, *q]));
        }
    }
    None
}

/// 2-connected balanceable subcubic graphs other than R10 with at least three
/// branch vertices satisfy one of three clauses.
pub fn main_trichotomy(g: &BipartiteGraph, limits: &Limits) -> Result<TheoremReport> {
    const ID: &str = "main";
    if !is_two_connected(g) {
        return Ok(TheoremReport::inapplicable(ID, g, "not 2-connected"));
    }
    if g.max_degree() > 3 {
        return Ok(TheoremReport::inapplicable(ID, g, "maximum degree above 3"));
    }
    if is_r10(g) {
        return Ok(TheoremReport::inapplicable(ID, g, "is R10"));
    }
    let bd = match branch_decomposition(g) {
        Ok(bd) => bd,
        Err(Error::IsCycle) => return Ok(TheoremReport::inapplicable(ID, g, "is a cycle")),
        Err(e) => return Err(e),
    };
    if bd.branch_vertices.len() < 3 {
        return Ok(TheoremReport::inapplicable(ID, g, "fewer than three branch vertices"));
    }
    if !balanceable(g, limits)? {
        return Ok(TheoremReport::inapplicable(ID, g, "not balanceable"));
    }
    Ok(match main_witness(g, &bd) {
        Some(w) if w.is_valid(g) => TheoremReport::holds(ID, g, w.to_json(g)),
        Some(_) => TheoremReport::fails(ID, g, "witness did not re-validate"),
        None => TheoremReport::fails(ID, g, "no clause holds"),
    })
}

fn cubic_scope(g: &BipartiteGraph, limits: &Limits, id: &str) -> Result<Option<TheoremReport>> {
    if g.n() == 0 || !g.is_cubic() {
        return Ok(Some(TheoremReport::inapplicable(id, g, "not cubic")));
    }
    if !g.is_connected() {
        return Ok(Some(TheoremReport::inapplicable(id, g, "disconnected")));
    }
    if !balanceable(g, limits)? {
        return Ok(Some(TheoremReport::inapplicable(id, g, "not balanceable")));
    }
    Ok(None)
}

fn twins_clear_of_cut_vertices(g: &BipartiteGraph) -> Option<TwinPair> {
    let cuts = cut_vertices(g);
    twin_pairs(g)
        .into_iter()
        .find(|t| g.neighbors(t.u).iter().all(|w| !cuts.contains(w)))
}

/// Connected cubic balanceable graphs other than R10 have twins none of whose
/// neighbors is a cut vertex.
pub fn twins_no_cutvertex(g: &BipartiteGraph, limits: &Limits) -> Result<TheoremReport> {
    const ID: &str = "twins";
    if let Some(r) = cubic_scope(g, limits, ID)? {
        return Ok(r);
    }
    if is_r10(g) {
        return Ok(TheoremReport::inapplicable(ID, g, "is R10"));
    }
    Ok(match twins_clear_of_cut_vertices(g) {
        Some(t) => TheoremReport::holds(ID, g, t.to_json(g)),
        None => TheoremReport::fails(ID, g, "no twin pair clear of cut vertices"),
    })
}

/// Cubic balanceable graphs have girth 4, a removable edge unless R10, and
/// a subdivision of `K3,3`.
pub fn cr_cubic_report(g: &BipartiteGraph, limits: &Limits) -> Result<TheoremReport> {
    const ID: &str = "cubic-girth-planarity";
    if let Some(r) = cubic_scope(g, limits, ID)? {
        return Ok(r);
    }
    let r10 = is_r10(g);
    let gi = girth(g);
    if gi != Some(4) {
        return Ok(TheoremReport::fails(ID, g, "girth is not 4"));
    }
    let removable = if r10 {
        Value::Null
    } else {
        match find_non_unique_chord_edge(g, limits)? {
            Some(e) => edge_json(g, e),
            None => return Ok(TheoremReport::fails(ID, g, "every edge is the unique chord of a cycle")),
        }
    };
    let subdivision = if r10 {
        find_k33_subdivision(g, limits)?
    } else {
        twins_clear_of_cut_vertices(g).and_then(|t| from_twins(g, t.u, t.v))
    };
    let Some(s) = subdivision.filter(|s| s.is_valid(g)) else {
        return Ok(TheoremReport::fails(ID, g, "no K3,3 subdivision found"));
    };
    if !r10 && !s.is_induced(g) {
        return Ok(TheoremReport::fails(ID, g, "twin-built subdivision is not induced"));
    }
    Ok(TheoremReport::holds(
        ID,
        g,
        json!({ "girth": 4, "removable_edge": removable, "k33_subdivision": s.to_json(g) }),
    ))
}

/// Both open statements about removable edges. A failure is recorded as
/// `unresolved`, never as a violation.
pub fn conjecture_sweep(g: &BipartiteGraph, limits: &Limits) -> Result<Vec<TheoremReport>> {
    const BALANCED: &str = "conjecture-balanced";
    const BALANCEABLE: &str = "conjecture-balanceable";
    if g.m() == 0 {
        return Ok(vec![
            TheoremReport::inapplicable(BALANCED, g, "no edges"),
            TheoremReport::inapplicable(BALANCEABLE, g, "no edges"),
        ]);
    }
    if !balanceable(g, limits)? {
        return Ok(vec![
            TheoremReport::inapplicable(BALANCED, g, "not balanced"),
            TheoremReport::inapplicable(BALANCEABLE, g, "not balanceable"),
        ]);
    }
    let edge = find_non_unique_chord_edge(g, limits)?;
    let first = if !is_balanced(g, limits)? {
        TheoremReport::inapplicable(BALANCED, g, "not balanced")
    } else {
        match edge {
            Some(e) => TheoremReport::holds(BALANCED, g, edge_json(g, e)),
            None => TheoremReport::unresolved(BALANCED, g, "every edge is the unique chord of a cycle"),
        }
    };
    let second = match edge {
        Some(e) => TheoremReport::holds(BALANCEABLE, g, json!({ "removable_edge": edge_json(g, e) })),
        None => match edges_in_induced_r10(g, limits)? {
            true => TheoremReport::holds(BALANCEABLE, g, json!({ "every_edge_in_r10": true })),
            false => TheoremReport::unresolved(BALANCEABLE, g, "an edge lies in no induced R10"),
        },
    };
    Ok(vec![first, second])
}

/// Every edge lies in some induced copy of R10.
fn edges_in_induced_r10(g: &BipartiteGraph, limits: &Limits) -> Result<bool> {
    if g.n() > limits.r10_search_vertices {
        return Err(Error::limit("induced R10 search vertex count", limits.r10_search_vertices, g.n()));
    }
    let cands: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
    let mut covered = vec![false; g.m()];
    let mut pick = Vec::with_capacity(10);
    cover(g, &cands, 0, &mut pick, &mut covered);
    Ok(covered.iter().all(|&c| c))
}

fn cover(g: &BipartiteGraph, cands: &[Vertex], start: usize, pick: &mut Vec<Vertex>, covered: &mut [bool]) {
    if covered.iter().all(|&c| c) {
        return;
    }
    if pick.len() == 10 {
        let (h, _) = g.induced(pick);
        if is_r10(&h) {
            for &(a, b) in h.edges() {
                if let Some(i) = g.edge_index(pick[a], pick[b]) {
                    covered[i] = true;
                }
            }
        }
        return;
    }
    for i in start..cands.len() {
        if cands.len() - i < 10 - pick.len() {
            break;
        }
        let v = cands[i];
        // inside an induced cubic subgraph a vertex keeps at most three picked neighbors
        if pick.iter().filter(|&&p| g.has_edge(p, v)).count() > 3 {
            continue;
        }
        pick.push(v);
        cover(g, cands, i + 1, pick, covered);
        pick.pop();
    }
}
