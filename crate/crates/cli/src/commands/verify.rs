use std::collections::BTreeMap;

use anyhow::Result;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use balgraph::canon::graph_hash;
use balgraph::edgelist::format_stream;
use balgraph::generators::generate;
use balgraph::theorems::{check_lemma, Lemma, Theorem, TheoremReport, Verdict};
use balgraph::{BipartiteGraph, Limits};

use super::{code_of, error_json, worst};
use crate::args::{CorpusArgs, Global, LemmaArg, TheoremArg, VerifyArgs};
use crate::code;
use crate::input::load_graphs;
use crate::output::{repro_path, Report};

/// Graphs checked in parallel per batch; output order is the corpus order.
const CHUNK: usize = 256;

#[derive(Debug, Clone, Copy)]
enum Selector {
    Theorem(Theorem),
    Lemma(Lemma),
}

impl Selector {
    fn id(self) -> &'static str {
        match self {
            Selector::Theorem(t) => t.id(),
            Selector::Lemma(l) => l.id(),
        }
    }

    fn check(self, g: &BipartiteGraph, limits: &Limits) -> balgraph::Result<Vec<TheoremReport>> {
        match self {
            Selector::Theorem(t) => t.check(g, limits),
            Selector::Lemma(l) => Ok(vec![check_lemma(l, g, limits)?]),
        }
    }
}

fn theorem(t: TheoremArg) -> Theorem {
    match t {
        TheoremArg::Deg2Square => Theorem::Deg2Square,
        TheoremArg::RemovableEdge => Theorem::RemovableEdge,
        TheoremArg::Main => Theorem::Main,
        TheoremArg::Twins => Theorem::Twins,
        TheoremArg::CubicGirthPlanarity => Theorem::CubicGirthPlanarity,
        TheoremArg::Conjectures => Theorem::Conjectures,
    }
}

fn lemma(l: LemmaArg) -> Lemma {
    match l {
        LemmaArg::L1 => Lemma::L1,
        LemmaArg::L1prime => Lemma::L1Prime,
        LemmaArg::L2j => Lemma::L2j,
        LemmaArg::SixJl1 => Lemma::SixJl1,
        LemmaArg::Extreme => Lemma::Extreme,
        LemmaArg::SixJl2 => Lemma::SixJl2,
        LemmaArg::ExtremeStar => Lemma::ExtremeStar,
        LemmaArg::ExtStarReduction => Lemma::ExtStarReduction,
    }
}

#[derive(Debug, Default, Serialize)]
struct Counts {
    applicable: usize,
    holds: usize,
    inapplicable: usize,
    fails: usize,
    unresolved: usize,
    errors: usize,
}

/// The corpus a sweep runs over, with its descriptor and seed.
pub fn corpus(global: &Global, args: &CorpusArgs, limits: &Limits) -> Result<(Vec<BipartiteGraph>, Value, Option<u64>)> {
    if let Some(input) = &args.input {
        return Ok((load_graphs(input)?, json!({ "file": input }), None));
    }
    let spec = args.spec(global.seed)?;
    let graphs = generate(&spec, limits)?;
    Ok((graphs, serde_json::to_value(&spec)?, Some(spec.seed)))
}

pub fn run(global: &Global, args: &VerifyArgs) -> Result<u8> {
    let limits = global.limits();
    let mut selectors: Vec<Selector> = args.theorem.iter().map(|&t| Selector::Theorem(theorem(t))).collect();
    selectors.extend(args.lemma.iter().map(|&l| Selector::Lemma(lemma(l))));
    let (graphs, descriptor, seed) = corpus(global, &args.corpus, &limits)?;
    let mut report = Report::open(global, false)?;
    report.header(
        "verify",
        json!({
            "corpus": descriptor,
            "selectors": selectors.iter().map(|s| s.id()).collect::<Vec<_>>(),
            "graphs": graphs.len(),
        }),
        seed,
        global,
    )?;
    let mut counts: BTreeMap<&str, Counts> = selectors.iter().map(|s| (s.id(), Counts::default())).collect();
    let mut exit = code::OK;
    let mut failing: Vec<(usize, String, &BipartiteGraph)> = Vec::new();
    for (c, chunk) in graphs.chunks(CHUNK).enumerate() {
        let results: Vec<Vec<(Selector, balgraph::Result<Vec<TheoremReport>>)>> = chunk
            .par_iter()
            .map(|g| selectors.iter().map(|&s| (s, s.check(g, &limits))).collect())
            .collect();
        for (k, per_graph) in results.into_iter().enumerate() {
            let i = c * CHUNK + k;
            let g = &chunk[k];
            for (sel, result) in per_graph {
                let tally = counts.get_mut(sel.id()).expect("selector counted");
                match result {
                    Ok(reports) => {
                        for r in reports {
                            tally.applicable += r.applicable as usize;
                            match r.verdict {
                                Verdict::Holds => tally.holds += 1,
                                Verdict::Inapplicable => tally.inapplicable += 1,
                                Verdict::Unresolved => tally.unresolved += 1,
                                Verdict::Fails => {
                                    tally.fails += 1;
                                    exit = worst(exit, code::VIOLATION);
                                    failing.push((i, r.theorem.clone(), g));
                                }
                            }
                            report.line(&report_line(i, &r)?)?;
                        }
                    }
                    Err(e) => {
                        tally.errors += 1;
                        exit = worst(exit, code_of(&e));
                        report.line(&json!({
                            "graph": i,
                            "theorem": sel.id(),
                            "graph_hash": graph_hash(g),
                            "error": error_json(&e),
                        }))?;
                    }
                }
            }
        }
    }
    if !failing.is_empty() {
        let path = repro_path(args.repro.as_deref(), global);
        let text = format_stream(failing.iter().map(|f| f.2), |j, g| {
            format!("{} {} {}", failing[j].0, graph_hash(g), failing[j].1)
        });
        std::fs::write(&path, text)?;
        eprintln!("theorem failures written to {}", path.display());
    }
    let mut s = Map::new();
    s.insert("graphs".into(), json!(graphs.len()));
    s.insert("counts".into(), serde_json::to_value(&counts)?);
    report.summary(s)?;
    Ok(exit)
}

fn report_line(i: usize, r: &TheoremReport) -> Result<Value> {
    let mut line = Map::new();
    line.insert("graph".into(), json!(i));
    if let Value::Object(fields) = serde_json::to_value(r)? {
        line.extend(fields);
    }
    Ok(Value::Object(line))
}
