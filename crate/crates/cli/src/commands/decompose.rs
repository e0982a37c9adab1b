use std::collections::{BTreeMap, VecDeque};
use std::path::Path;

use anyhow::{bail, Result};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use balgraph::canon::graph_hash;
use balgraph::connectivity::{is_two_connected, mask_components};
use balgraph::decomposition::{
    blocks_of_2join, blocks_of_6join, blocks_of_double_star, blocks_of_star, decompose, CutsetWitness,
    DecompositionVerdict, DoubleStarCutset, StarCutset, VerdictTag,
};
use balgraph::edgelist::{format_edge_list, parse_edge_list};
use balgraph::graph::bits;
use balgraph::{BipartiteGraph, Error};

use super::{code_of, error_json, worst};
use crate::args::{DecomposeArgs, Global};
use crate::input::load_graphs;
use crate::output::{repro_path, Report};
use crate::{code, dot};

#[derive(Debug, Clone, Serialize, Deserialize)]
struct Pending {
    node: usize,
    parent: Option<usize>,
    depth: usize,
    graph: String,
}

/// Resumable work queue of the decomposition tree.
#[derive(Debug, Serialize, Deserialize)]
struct State {
    input: String,
    recursive: bool,
    max_depth: usize,
    next_id: usize,
    exit: u8,
    pending: VecDeque<Pending>,
}

impl State {
    fn save(&self, path: Option<&Path>) -> Result<()> {
        if let Some(p) = path {
            let tmp = p.with_extension("tmp");
            std::fs::write(&tmp, serde_json::to_vec_pretty(self)?)?;
            std::fs::rename(tmp, p)?;
        }
        Ok(())
    }
}

pub fn run(global: &Global, args: &DecomposeArgs) -> Result<u8> {
    let limits = global.limits();
    let state_path = args.state.as_deref();
    let resumed = state_path.is_some_and(Path::exists);
    let mut state = if resumed {
        serde_json::from_slice(&std::fs::read(state_path.unwrap())?)?
    } else {
        let Some(input) = &args.input else {
            bail!(Error::InvalidParams("decompose needs an input graph or an existing --state".into()));
        };
        let graphs = load_graphs(input)?;
        State {
            input: input.clone(),
            recursive: args.recursive,
            max_depth: args.max_depth,
            next_id: graphs.len(),
            exit: code::OK,
            pending: graphs
                .iter()
                .enumerate()
                .map(|(i, g)| Pending {
                    node: i,
                    parent: None,
                    depth: 0,
                    graph: format_edge_list(g),
                })
                .collect(),
        }
    };
    let mut report = Report::open(global, resumed)?;
    report.header(
        "decompose",
        json!({
            "input": state.input,
            "recursive": state.recursive,
            "max_depth": state.max_depth,
            "resumed": resumed,
        }),
        None,
        global,
    )?;
    state.save(state_path)?;
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    let mut processed = 0;
    let mut violations = String::new();
    while let Some(item) = state.pending.pop_front() {
        let g = parse_edge_list(&item.graph)?;
        let mut line = Map::new();
        line.insert("node".into(), json!(item.node));
        line.insert("parent".into(), json!(item.parent));
        line.insert("depth".into(), json!(item.depth));
        line.insert("graph_hash".into(), json!(graph_hash(&g)));
        line.insert("n".into(), json!(g.n()));
        line.insert("m".into(), json!(g.m()));
        let mut children = Vec::new();
        match decompose(&g, &limits) {
            Ok(v) => {
                let tag = v.tag.as_str();
                *counts.entry(tag).or_insert(0usize) += 1;
                let witness = v.to_json(&g);
                if item.parent.is_none() && item.node == 0 {
                    dot::write(global.dot.as_deref(), &g, &witness)?;
                }
                line.insert("verdict".into(), witness);
                let leaf = matches!(v.tag, VerdictTag::Basic | VerdictTag::R10);
                if state.recursive && !leaf {
                    if item.depth >= state.max_depth {
                        line.insert("depth_cap".into(), json!(true));
                    } else {
                        match blocks(&g, &v) {
                            Ok(bs) => children = bs,
                            Err(e) => {
                                line.insert("error".into(), error_json(&e));
                                state.exit = worst(state.exit, code_of(&e));
                            }
                        }
                    }
                }
            }
            Err(e) => {
                if let Error::TheoremViolation { dump } = &e {
                    eprintln!("decomposition theorem violated; reproducer:\n{dump}");
                    violations.push_str(dump);
                }
                line.insert("error".into(), error_json(&e));
                state.exit = worst(state.exit, code_of(&e));
            }
        }
        processed += 1;
        let ids: Vec<usize> = (state.next_id..state.next_id + children.len()).collect();
        state.next_id += children.len();
        line.insert("children".into(), json!(ids));
        line.insert("graph".into(), json!(item.graph));
        report.line(&Value::Object(line))?;
        for (id, child) in ids.into_iter().zip(children) {
            state.pending.push_back(Pending {
                node: id,
                parent: Some(item.node),
                depth: item.depth + 1,
                graph: format_edge_list(&child),
            });
        }
        state.save(state_path)?;
    }
    if !violations.is_empty() {
        std::fs::write(repro_path(None, global), violations)?;
    }
    let mut s = Map::new();
    s.insert("nodes".into(), json!(processed));
    s.insert("verdicts".into(), json!(counts));
    report.summary(s)?;
    if let Some(p) = state_path {
        std::fs::remove_file(p)?;
    }
    Ok(state.exit)
}

/// Children of a non-leaf node: join blocks, or the blocks of the cutset seen
/// as a double star cutset when the graph is 2-connected.
fn blocks(g: &BipartiteGraph, v: &DecompositionVerdict) -> balgraph::Result<Vec<BipartiteGraph>> {
    let (b1, b2) = match &v.witness {
        Some(CutsetWitness::Star(c)) => star_blocks(g, c)?,
        Some(CutsetWitness::TwoJoin(s)) => {
            let b = blocks_of_2join(g, s)?;
            (b.g1, b.g2)
        }
        Some(CutsetWitness::SixJoin(s)) => {
            let b = blocks_of_6join(g, s)?;
            (b.g1, b.g2)
        }
        _ => return Ok(Vec::new()),
    };
    Ok(vec![b1, b2])
}

fn star_blocks(g: &BipartiteGraph, c: &StarCutset) -> balgraph::Result<(BipartiteGraph, BipartiteGraph)> {
    if c.r.is_empty() || !is_two_connected(g) {
        return blocks_of_star(g, c);
    }
    let mut d = DoubleStarCutset {
        u: c.x,
        v: c.r[0],
        big_u: c.r[1..].to_vec(),
        big_v: Vec::new(),
        components: Vec::new(),
    };
    let rest = g.full_mask() & !d.s_mask();
    d.components = mask_components(g.masks()?, rest).into_iter().map(|m| bits(m).collect()).collect();
    let first = d.components[0].clone();
    blocks_of_double_star(g, &d, &first)
}
