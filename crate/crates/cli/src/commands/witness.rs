use anyhow::Result;
use serde_json::{json, Map, Value};

use balgraph::canon::graph_hash;
use balgraph::decomposition::{enumerate_double_star_cutsets, find_1join, find_2join, find_6join, find_star_cutset};
use balgraph::signing::{find_balanced_signing, find_non_unique_chord_edge};
use balgraph::theorems::find_twins;
use balgraph::truemper::{find_odd_3pc, find_odd_wheel};
use balgraph::{BipartiteGraph, Limits};

use super::{code_of, error_json, worst};
use crate::args::{Global, WitnessArgs, WitnessKind};
use crate::input::load_graphs;
use crate::output::Report;
use crate::{code, dot};

pub fn run(global: &Global, args: &WitnessArgs) -> Result<u8> {
    let limits = global.limits();
    let graphs = load_graphs(&args.input)?;
    let kind = kind_name(args.kind);
    let mut report = Report::open(global, false)?;
    report.header("witness", json!({ "input": args.input, "kind": kind }), None, global)?;
    let mut exit = code::OK;
    let (mut found, mut none, mut errors) = (0, 0, 0);
    for (i, g) in graphs.iter().enumerate() {
        let mut line = Map::new();
        line.insert("graph".into(), json!(i));
        line.insert("graph_hash".into(), json!(graph_hash(g)));
        line.insert("kind".into(), json!(kind));
        match find(g, args.kind, &limits) {
            Ok(Some(w)) => {
                if i == 0 {
                    dot::write(global.dot.as_deref(), g, &w)?;
                }
                line.insert("witness".into(), w);
                found += 1;
            }
            Ok(None) => {
                line.insert("witness".into(), json!("none"));
                none += 1;
            }
            Err(e) => {
                line.insert("error".into(), error_json(&e));
                errors += 1;
                exit = worst(exit, code_of(&e));
            }
        }
        report.line(&Value::Object(line))?;
    }
    let mut s = Map::new();
    s.insert("graphs".into(), json!(graphs.len()));
    s.insert("found".into(), json!(found));
    s.insert("none".into(), json!(none));
    s.insert("errors".into(), json!(errors));
    report.summary(s)?;
    Ok(exit)
}

fn kind_name(kind: WitnessKind) -> String {
    use clap::ValueEnum;
    kind.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

pub fn find(g: &BipartiteGraph, kind: WitnessKind, limits: &Limits) -> balgraph::Result<Option<Value>> {
    Ok(match kind {
        WitnessKind::OddWheel => find_odd_wheel(g, limits)?.map(|w| w.to_json(g)),
        WitnessKind::Odd3pc => find_odd_3pc(g, limits)?.map(|c| c.to_json(g)),
        WitnessKind::Twins => find_twins(g).map(|t| t.to_json(g)),
        WitnessKind::NonUniqueChord => find_non_unique_chord_edge(g, limits)?.map(|e| {
            let (a, b) = g.edge_names(e);
            json!({ "kind": "NonUniqueChordEdge", "edge": [a, b] })
        }),
        WitnessKind::StarCutset => find_star_cutset(g, limits)?.map(|c| c.to_json(g)),
        WitnessKind::DoubleStar => enumerate_double_star_cutsets(g, limits)?.first().map(|c| c.to_json(g)),
        WitnessKind::OneJoin => find_1join(g, limits)?.map(|s| s.to_json(g)),
        WitnessKind::TwoJoin => find_2join(g, limits)?.map(|s| s.to_json(g)),
        WitnessKind::SixJoin => find_6join(g, limits)?.map(|s| s.to_json(g)),
        WitnessKind::Signing => find_balanced_signing(g, limits)?.map(|s| json!(s.to_json(g))),
    })
}

