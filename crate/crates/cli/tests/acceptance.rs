//! Acceptance criteria 1–9, one PASS/FAIL line each.
//!
//! Every witness is re-checked here from raw adjacency, not through the
//! library routine that produced it.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::{BTreeSet, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::Value;

use balgraph::canon::graph_hash;
use balgraph::decomposition::{decompose, is_r10, VerdictTag};
use balgraph::generators::corpus::connected_bipartite_graphs;
use balgraph::generators::{generate, named, CorpusSpec, Filter};
use balgraph::holes::{enumerate_holes, is_balanced};
use balgraph::signing::{find_balanced_signing, is_unique_chord_of_some_cycle};
use balgraph::theorems::{
    check_lemma, cr_cubic_report, cr_square_report, find_twins, main_trichotomy, twins_no_cutvertex,
    verify_deg2_square, Lemma, TheoremReport, Verdict,
};
use balgraph::truemper::is_balanceable_structural;
use balgraph::{BipartiteGraph, Limits, Vertex};

const L: Limits = Limits::DEFAULT;
const EXHAUSTIVE_MAX: usize = 10;
const SUBCUBIC_MAX: usize = 14;

type Graphs = Vec<BipartiteGraph>;
type Criterion = (&'static str, fn() -> Outcome);

fn exhaustive() -> &'static Graphs {
    static C: OnceLock<Graphs> = OnceLock::new();
    C.get_or_init(|| connected_bipartite_graphs(EXHAUSTIVE_MAX, None).unwrap())
}

fn exhaustive_subcubic() -> &'static Graphs {
    static C: OnceLock<Graphs> = OnceLock::new();
    C.get_or_init(|| connected_bipartite_graphs(SUBCUBIC_MAX, Some(3)).unwrap())
}

fn random(n_min: usize, n_max: usize, count: usize, seed: u64, filters: &[Filter], max_degree: Option<usize>) -> Graphs {
    let mut spec = CorpusSpec::random(n_min, n_max, count, seed).with_filters(filters);
    spec.max_degree = max_degree;
    spec.attempts_per_graph = 20_000;
    generate(&spec, &L).unwrap()
}

/// Random linear balanceable graphs on 11–18 vertices, plus 2-connected ones.
fn random_linear() -> &'static Graphs {
    static C: OnceLock<Graphs> = OnceLock::new();
    C.get_or_init(|| {
        let linear = [Filter::Balanceable, Filter::FourHoleFree];
        let mut g = random(11, 18, 1000, 2, &linear, None);
        g.extend(random(11, 18, 300, 3, &[Filter::Balanceable, Filter::FourHoleFree, Filter::TwoConnected], None));
        g
    })
}

/// One line of the report.
struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

// ---- raw-adjacency re-validation --------------------------------------------

fn id(g: &BipartiteGraph, v: &Value) -> Option<Vertex> {
    g.vertex(v.as_str()?)
}

fn adjacent(g: &BipartiteGraph, u: Vertex, v: Vertex) -> bool {
    g.neighbors(u).contains(&v)
}

fn connected_without(g: &BipartiteGraph, removed: Vertex) -> bool {
    let alive: Vec<Vertex> = g.vertices().filter(|&v| v != removed).collect();
    let Some(&start) = alive.first() else { return true };
    let mut seen = HashSet::from([start]);
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &y in g.neighbors(x) {
            if y != removed && seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen.len() == alive.len()
}

fn two_connected(g: &BipartiteGraph) -> bool {
    g.n() >= 3 && g.is_connected() && g.vertices().all(|v| connected_without(g, v))
}

/// Shortest cycle length by BFS from every vertex.
fn girth_bfs(g: &BipartiteGraph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for s in g.vertices() {
        let mut dist = vec![usize::MAX; g.n()];
        let mut parent = vec![usize::MAX; g.n()];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let c = dist[x] + dist[y] + 1;
                    best = Some(best.map_or(c, |b| b.min(c)));
                }
            }
        }
    }
    best
}

fn path_ids(g: &BipartiteGraph, p: &Value) -> Option<Vec<Vertex>> {
    let vs: Option<Vec<Vertex>> = p.as_array()?.iter().map(|x| id(g, x)).collect();
    let vs = vs?;
    let distinct: HashSet<&Vertex> = vs.iter().collect();
    (distinct.len() == vs.len() && vs.windows(2).all(|w| adjacent(g, w[0], w[1]))).then_some(vs)
}

fn twins_ok(g: &BipartiteGraph, pair: &Value) -> Option<(Vertex, Vertex)> {
    let a = pair.as_array()?;
    let (u, v) = (id(g, &a[0])?, id(g, &a[1])?);
    let nu: BTreeSet<_> = g.neighbors(u).iter().collect();
    let nv: BTreeSet<_> = g.neighbors(v).iter().collect();
    (u != v && nu.len() >= 3 && nu == nv).then_some((u, v))
}

/// A branch: maximal path whose ends have degree ≥ 3 and interior degree 2.
fn is_branch(g: &BipartiteGraph, p: &[Vertex]) -> bool {
    p.len() >= 2
        && g.degree(p[0]) >= 3
        && g.degree(*p.last().unwrap()) >= 3
        && p[1..p.len() - 1].iter().all(|&x| g.degree(x) == 2)
}

fn main_witness_ok(g: &BipartiteGraph, w: &Value) -> bool {
    match w["clause"].as_str() {
        Some("i") => (|| {
            let u = id(g, &w["vertices"][0])?;
            let v = id(g, &w["vertices"][1])?;
            let b1 = path_ids(g, &w["branches"][0])?;
            let b2 = path_ids(g, &w["branches"][1])?;
            let ends = |b: &[Vertex]| [b[0], *b.last().unwrap()];
            let disjoint = ends(&b1).iter().all(|x| !ends(&b2).contains(x));
            Some(
                g.degree(u) == 2
                    && g.degree(v) == 2
                    && is_branch(g, &b1)
                    && is_branch(g, &b2)
                    && b1[1..b1.len() - 1].contains(&u)
                    && b2[1..b2.len() - 1].contains(&v)
                    && disjoint,
            )
        })()
        .unwrap_or(false),
        Some("ii") => twins_ok(g, &w["twins"]).is_some() && id(g, &w["degree2"]).is_some_and(|x| g.degree(x) == 2),
        Some("iii") => match (twins_ok(g, &w["twins"][0]), twins_ok(g, &w["twins"][1])) {
            (Some((a, b)), Some((c, d))) => a != c && a != d && b != c && b != d,
            _ => false,
        },
        _ => false,
    }
}

fn k33_subdivision_ok(g: &BipartiteGraph, s: &Value) -> bool {
    (|| {
        let left: Vec<Vertex> = s["left"].as_array()?.iter().map(|x| id(g, x)).collect::<Option<_>>()?;
        let right: Vec<Vertex> = s["right"].as_array()?.iter().map(|x| id(g, x)).collect::<Option<_>>()?;
        let paths = s["paths"].as_array()?;
        if left.len() != 3 || right.len() != 3 || paths.len() != 9 {
            return Some(false);
        }
        let branch: HashSet<Vertex> = left.iter().chain(&right).copied().collect();
        let mut used: HashSet<Vertex> = HashSet::new();
        for (k, p) in paths.iter().enumerate() {
            let p = path_ids(g, p)?;
            let (a, b) = (p[0], *p.last().unwrap());
            let (want_a, want_b) = (left[k / 3], right[k % 3]);
            if !((a, b) == (want_a, want_b) || (b, a) == (want_a, want_b)) {
                return Some(false);
            }
            for &x in &p[1..p.len() - 1] {
                if branch.contains(&x) || !used.insert(x) {
                    return Some(false);
                }
            }
        }
        Some(branch.len() == 6)
    })()
    .unwrap_or(false)
}

// ---- sweeps ---------------------------------------------------------------

#[derive(Default)]
struct Tally {
    applicable: usize,
    holds: usize,
    bad: Vec<String>,
}

impl Tally {
    fn add(&mut self, g: &BipartiteGraph, r: &TheoremReport, witness_ok: bool) {
        if r.applicable {
            self.applicable += 1;
        }
        match r.verdict {
            Verdict::Holds if witness_ok => self.holds += 1,
            Verdict::Holds => self.bad.push(format!("{} witness rejected on {}", r.theorem, graph_hash(g))),
            Verdict::Inapplicable => {}
            _ => self.bad.push(format!("{} {:?} on {}", r.theorem, r.verdict, graph_hash(g))),
        }
    }

    fn summary(&self, label: &str) -> String {
        let mut s = format!("{label}: {} applicable, {} hold", self.applicable, self.holds);
        if let Some(first) = self.bad.first() {
            s.push_str(&format!(", {} problems (first: {first})", self.bad.len()));
        }
        s
    }
}

fn sweep<F>(graphs: &[BipartiteGraph], check: F) -> Tally
where
    F: Fn(&BipartiteGraph) -> Vec<(TheoremReport, bool)> + Sync,
{
    let per_graph: Vec<Vec<(TheoremReport, bool)>> = graphs.par_iter().map(&check).collect();
    let mut t = Tally::default();
    for (g, reports) in graphs.iter().zip(per_graph) {
        for (r, ok) in reports {
            t.add(g, &r, ok);
        }
    }
    t
}

// ---- criteria ---------------------------------------------------------------

fn criterion1() -> Outcome {
    let mut graphs = exhaustive().clone();
    let ex = graphs.len();
    graphs.extend(random(11, 16, 1000, 1, &[], None));
    let disagreements: Vec<String> = graphs
        .par_iter()
        .filter_map(|g| {
            let s = is_balanceable_structural(g, &L).unwrap().is_balanceable();
            let t = find_balanced_signing(g, &L).unwrap().is_some();
            (s != t).then(|| graph_hash(g))
        })
        .collect();
    outcome(
        disagreements.is_empty(),
        format!(
            "{ex} exhaustive (n ≤ {EXHAUSTIVE_MAX}) + {} random (11–16): {} disagreements",
            graphs.len() - ex,
            disagreements.len()
        ),
    )
}

fn linear_corpus() -> Vec<&'static BipartiteGraph> {
    exhaustive().iter().chain(random_linear()).collect()
}

fn criterion2() -> Outcome {
    let graphs: Graphs = linear_corpus().into_iter().cloned().collect();
    let t = sweep(&graphs, |g| {
        let r = verify_deg2_square(g, &L).unwrap();
        let ok = r.witness.as_array().is_some_and(|w| {
            let ids: Option<Vec<Vertex>> = w.iter().map(|x| id(g, x)).collect();
            ids.is_some_and(|v| v.len() == 2 && v[0] != v[1] && v.iter().all(|&x| g.degree(x) <= 2))
        });
        vec![(r, ok)]
    });
    let random_applicable = random_linear().len();
    outcome(
        t.bad.is_empty() && t.applicable >= random_applicable,
        t.summary(&format!("exhaustive n ≤ {EXHAUSTIVE_MAX} + {random_applicable} random linear (11–18)")),
    )
}

fn criterion3() -> Outcome {
    let graphs: Graphs = linear_corpus().into_iter().cloned().collect();
    let t = sweep(&graphs, |g| {
        let r = cr_square_report(g, &L).unwrap();
        let ok = (|| {
            let e = r.witness.as_array()?;
            let (u, v) = (id(g, &e[0])?, id(g, &e[1])?);
            if !adjacent(g, u, v) {
                return Some(false);
            }
            Some(if g.n() <= 12 {
                !common::unique_chords_brute(g).contains(&(u.min(v), u.max(v)))
            } else {
                !is_unique_chord_of_some_cycle(g, (u, v), &L).ok()?
            })
        })()
        .unwrap_or(false);
        vec![(r, ok)]
    });
    outcome(t.bad.is_empty() && t.holds > 0, t.summary("linear corpus"))
}

fn criterion4() -> Outcome {
    let mut graphs = exhaustive().clone();
    graphs.extend(exhaustive_subcubic().iter().filter(|g| g.n() > EXHAUSTIVE_MAX).cloned());
    let filters = [Filter::Balanceable, Filter::TwoConnected];
    graphs.extend(random(11, 24, 500, 4, &filters, Some(3)));
    let t = sweep(&graphs, |g| {
        let r = main_trichotomy(g, &L).unwrap();
        let scope_ok = !r.applicable
            || (two_connected(g)
                && g.max_degree() <= 3
                && !is_r10(g)
                && g.vertices().filter(|&v| g.degree(v) >= 3).count() >= 3);
        let ok = scope_ok && main_witness_ok(g, &r.witness);
        vec![(r, ok)]
    });
    outcome(
        t.bad.is_empty() && t.holds > 0,
        t.summary(&format!(
            "{} graphs (exhaustive n ≤ {EXHAUSTIVE_MAX}, subcubic n ≤ {SUBCUBIC_MAX}, 500 random subcubic 2-connected balanceable)",
            graphs.len()
        )),
    )
}

fn criterion5() -> Outcome {
    let mut graphs: Graphs = exhaustive_subcubic().iter().filter(|g| g.is_cubic()).cloned().collect();
    graphs.extend(random(12, 20, 20, 5, &[Filter::Cubic, Filter::Balanceable], Some(3)));
    if !graphs.iter().any(is_r10) {
        graphs.push(named("R10").unwrap());
    }
    graphs.retain(|g| find_balanced_signing(g, &L).unwrap().is_some());
    let t = sweep(&graphs, |g| {
        let twins = twins_no_cutvertex(g, &L).unwrap();
        let twins_ok = twins_ok(g, &twins.witness).is_some_and(|(u, _)| {
            g.neighbors(u).iter().all(|&w| connected_without(g, w))
        });
        let cubic = cr_cubic_report(g, &L).unwrap();
        let w = &cubic.witness;
        let cubic_ok = girth_bfs(g) == Some(4)
            && w["girth"] == 4
            && k33_subdivision_ok(g, &w["k33_subdivision"])
            && (is_r10(g) || !w["removable_edge"].is_null());
        let mut out = vec![(cubic, cubic_ok)];
        if !is_r10(g) {
            out.push((twins, twins_ok));
        }
        out
    });
    let r10s = graphs.iter().filter(|g| is_r10(g)).count();
    let all_applicable = r10s == 1 && t.applicable == 2 * graphs.len() - r10s;
    outcome(
        t.bad.is_empty() && all_applicable,
        t.summary(&format!("{} cubic balanceable graphs (R10 included)", graphs.len())),
    )
}

fn criterion6() -> Outcome {
    let graphs = exhaustive();
    let mut pass = true;
    let mut parts = Vec::new();
    for lemma in Lemma::ALL {
        let t = sweep(graphs, |g| vec![(check_lemma(lemma, g, &L).unwrap(), true)]);
        pass &= t.bad.is_empty();
        parts.push(format!("{} {}/{}", lemma.id(), t.holds, t.applicable));
    }
    outcome(pass, format!("exhaustive n ≤ {EXHAUSTIVE_MAX}, holds/applicable: {}", parts.join(", ")))
}

fn criterion7() -> Outcome {
    let r = named("R10").unwrap();
    let brute = common::unique_chords_brute(&r);
    let checks = [
        ("not balanced", !is_balanced(&r, &L).unwrap()),
        ("balanceable by signing", find_balanced_signing(&r, &L).unwrap().is_some()),
        ("balanceable structurally", is_balanceable_structural(&r, &L).unwrap().is_balanceable()),
        ("girth 4", girth_bfs(&r) == Some(4) && balgraph::holes::girth(&r) == Some(4)),
        ("no twins", find_twins(&r).is_none()),
        (
            "every edge a unique chord",
            r.edges()
                .iter()
                .all(|&e| is_unique_chord_of_some_cycle(&r, e, &L).unwrap() && brute.contains(&e)),
        ),
        ("is_r10", is_r10(&r)),
        ("decompose = R10", decompose(&r, &L).unwrap().tag == VerdictTag::R10),
    ];
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    outcome(
        failed.is_empty(),
        if failed.is_empty() {
            format!("{} facts confirmed", checks.len())
        } else {
            format!("failed: {}", failed.join(", "))
        },
    )
}

fn criterion8() -> Outcome {
    let graphs = exhaustive();
    let hole_bad = graphs
        .par_iter()
        .filter(|g| {
            let ours: BTreeSet<Vec<Vertex>> = enumerate_holes(g, None, &L)
                .unwrap()
                .holes
                .iter()
                .map(|h| {
                    let mut v = h.vertices().to_vec();
                    v.sort_unstable();
                    v
                })
                .collect();
            ours != common::holes_by_subsets(g)
        })
        .count();
    let small_m: Vec<&BipartiteGraph> = graphs.iter().filter(|g| g.m() <= 14).collect();
    let signing_bad = small_m
        .par_iter()
        .filter(|g| {
            let ours = find_balanced_signing(g, &L).unwrap();
            let ok = ours.as_ref().is_none_or(|s| common::signing_balances(g, s.weights()));
            !ok || ours.is_some() != common::balanceable_by_all_signings(g)
        })
        .count();
    let chord_bad = graphs
        .par_iter()
        .filter(|g| {
            let brute = common::unique_chords_brute(g);
            g.edges()
                .iter()
                .any(|&e| is_unique_chord_of_some_cycle(g, e, &L).unwrap() != brute.contains(&e))
        })
        .count();
    outcome(
        hole_bad + signing_bad + chord_bad == 0,
        format!(
            "holes {} graphs / signings {} graphs (m ≤ 14) / unique chords {} graphs: {hole_bad}+{signing_bad}+{chord_bad} mismatches",
            graphs.len(),
            small_m.len(),
            graphs.len()
        ),
    )
}

fn strip_timestamp(text: &str) -> Vec<Value> {
    text.lines()
        .map(|l| {
            let mut v: Value = serde_json::from_str(l).unwrap();
            if let Some(s) = v.get_mut("summary").and_then(Value::as_object_mut) {
                s.remove("timestamp");
            }
            v
        })
        .collect()
}

fn criterion9() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, threads: &str| {
        let out = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_balgraph"))
            .args(["verify", "--theorem", "main", "--theorem", "deg2-square", "--random", "--count", "300"])
            .args(["--seed", "7", "--max-degree", "3", "--n-min", "11", "--n-max", "18", "--out"])
            .arg(&out)
            .env("RAYON_NUM_THREADS", threads)
            .status()
            .unwrap();
        (status.code(), std::fs::read_to_string(out).unwrap())
    };
    let (c1, a) = run("a.jsonl", "1");
    let (c2, b) = run("b.jsonl", "4");
    let lines = a.lines().count();
    let same = strip_timestamp(&a) == strip_timestamp(&b);
    outcome(
        same && c1 == Some(0) && c2 == Some(0),
        format!("two runs of verify (1 and 4 threads), {lines} lines each, identical modulo timestamp: {same}"),
    )
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("balanceability: structural = signing", criterion1),
        ("degree-2 vertices in linear balanceable graphs", criterion2),
        ("removable edge in linear balanceable graphs", criterion3),
        ("subcubic trichotomy", criterion4),
        ("cubic: twins, girth 4, K3,3 subdivision", criterion5),
        ("lemma suite", criterion6),
        ("R10 regression block", criterion7),
        ("oracle cross-checks", criterion8),
        ("determinism", criterion9),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            outcome(false, format!("panicked: {msg}"))
        });
        failed += usize::from(!o.pass);
        println!(
            "criterion {}: {} - {name}: {} [{:.1}s]",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            start.elapsed().as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
