use anyhow::Result;
use serde_json::{json, Map, Value};

use balgraph::canon::graph_hash;
use balgraph::holes::{girth, is_balanced, is_totally_balanced};
use balgraph::signing::{find_balanced_signing, is_balanced_signing, is_restricted_balanceable, is_strongly_balanceable};
use balgraph::truemper::is_balanceable_structural;
use balgraph::{BipartiteGraph, Limits};

use super::{code_of, error_json, worst};
use crate::args::{CheckArgs, Global};
use crate::input::{load, Loaded};
use crate::output::Report;
use crate::{code, dot};

pub fn run(global: &Global, args: &CheckArgs) -> Result<u8> {
    let limits = global.limits();
    let inputs = load(&args.input)?;
    let mut report = Report::open(global, false)?;
    report.header("check", json!(args.input), None, global)?;
    let mut exit = code::OK;
    let (mut checked, mut errors) = (0, 0);
    for (i, item) in inputs.iter().enumerate() {
        let g = &item.graph;
        let mut line = Map::new();
        line.insert("graph".into(), json!(i));
        line.insert("graph_hash".into(), json!(graph_hash(g)));
        line.insert("n".into(), json!(g.n()));
        line.insert("m".into(), json!(g.m()));
        match properties(item, &limits) {
            Ok((props, witness)) => {
                line.extend(props);
                checked += 1;
                if i == 0 {
                    dot::write(global.dot.as_deref(), g, &witness)?;
                }
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
    s.insert("graphs".into(), json!(inputs.len()));
    s.insert("checked".into(), json!(checked));
    s.insert("errors".into(), json!(errors));
    report.summary(s)?;
    Ok(exit)
}

/// Every property of one graph, and the witness the DOT drawing highlights.
fn properties(item: &Loaded, limits: &Limits) -> balgraph::Result<(Map<String, Value>, Value)> {
    let g = &item.graph;
    let mut p = Map::new();
    p.insert("connected".into(), json!(g.is_connected()));
    p.insert("balanced".into(), json!(is_balanced(g, limits)?));
    let signing = find_balanced_signing(g, limits)?;
    let structural = is_balanceable_structural(g, limits)?;
    let by_signing = signing.is_some();
    p.insert(
        "balanceable".into(),
        json!({
            "signing": by_signing,
            "structural": structural.is_balanceable(),
            "agree": by_signing == structural.is_balanceable(),
        }),
    );
    p.insert("signing".into(), json!(signing.as_ref().map(|s| s.to_json(g))));
    let witness = structural.witness_json(g);
    p.insert("structural_witness".into(), witness.clone());
    if let Some(given) = &item.signing {
        p.insert("matrix_balanced".into(), json!(is_balanced_signing(g, given, limits)?));
    }
    let four_hole = g.has_four_hole();
    p.insert("four_hole_free".into(), json!(!four_hole));
    p.insert("linear".into(), json!(by_signing && !four_hole));
    p.insert("subcubic".into(), json!(g.max_degree() <= 3));
    p.insert("cubic".into(), json!(g.is_cubic()));
    p.insert("girth".into(), json!(girth(g)));
    p.insert("strongly_balanceable".into(), json!(is_strongly_balanceable(g, limits)?));
    p.insert("restricted_balanceable".into(), restricted(g, limits)?);
    p.insert("totally_balanced".into(), json!(is_totally_balanced(g, limits)?));
    let highlight = if witness.is_null() {
        signing.map_or(Value::Null, |s| json!(s.to_json(g)))
    } else {
        witness
    };
    Ok((p, highlight))
}

/// `null` when the all-cycle enumeration exceeds its guard.
fn restricted(g: &BipartiteGraph, limits: &Limits) -> balgraph::Result<Value> {
    match is_restricted_balanceable(g, limits) {
        Ok(b) => Ok(json!(b)),
        Err(e) if e.is_resource_limit() => Ok(Value::Null),
        Err(e) => Err(e),
    }
}
