use serde_json::json;

use balgraph::generators::corpus::connected_bipartite_graphs;
use balgraph::generators::named;
use balgraph::theorems::{
    check_lemma, conjecture_sweep, cr_cubic_report, cr_square_report, find_k33_subdivision, find_twins,
    main_trichotomy, twins_no_cutvertex, verify_deg2_square, Lemma, Theorem, TheoremReport, Verdict,
};
use balgraph::{BipartiteGraph, Limits};

const L: Limits = Limits::DEFAULT;

fn g(id: &str) -> BipartiteGraph {
    named(id).unwrap()
}

fn assert_holds(r: &TheoremReport) {
    assert!(r.applicable, "{r:?}");
    assert_eq!(r.verdict, Verdict::Holds, "{r:?}");
}

fn assert_inapplicable(r: &TheoremReport) {
    assert!(!r.applicable, "{r:?}");
    assert_eq!(r.verdict, Verdict::Inapplicable);
}

#[test]
fn deg2_square_examples() {
    let r = verify_deg2_square(&g("C8"), &L).unwrap();
    assert_holds(&r);
    assert_eq!(r.witness, json!(["v1", "v2"]));
    let theta = g("THETA_2,4,4");
    let r = verify_deg2_square(&theta, &L).unwrap();
    assert_holds(&r);
    for name in r.witness.as_array().unwrap() {
        assert_eq!(theta.degree(theta.vertex(name.as_str().unwrap()).unwrap()), 2);
    }
    assert_inapplicable(&verify_deg2_square(&g("R10"), &L).unwrap());
}

#[test]
fn removable_edge_examples() {
    let r = cr_square_report(&g("C8"), &L).unwrap();
    assert_holds(&r);
    assert_eq!(r.witness, json!(["v1", "v2"]));
    assert_inapplicable(&cr_square_report(&g("R10"), &L).unwrap());
}

#[test]
fn twins_examples() {
    let k = g("K33");
    let t = find_twins(&k).unwrap();
    assert_eq!(t.to_json(&k), json!(["a1", "a2"]));
    assert!(find_twins(&g("R10")).is_none());
    assert!(find_twins(&g("C8")).is_none());
    assert_holds(&twins_no_cutvertex(&k, &L).unwrap());
    assert_inapplicable(&twins_no_cutvertex(&g("R10"), &L).unwrap());
    assert_inapplicable(&twins_no_cutvertex(&g("Q3"), &L).unwrap());
}

#[test]
fn main_examples() {
    let r = main_trichotomy(&g("TT"), &L).unwrap();
    assert_holds(&r);
    assert_eq!(r.witness["clause"], "i");
    assert_eq!(r.witness["vertices"], json!(["x1", "x2"]));
    assert_eq!(r.witness["branches"], json!([["a1", "x1", "b1"], ["a2", "x2", "b2"]]));
    let r = main_trichotomy(&g("K33"), &L).unwrap();
    assert_holds(&r);
    assert_eq!(r.witness["clause"], "iii");
    assert_inapplicable(&main_trichotomy(&g("C8"), &L).unwrap());
    assert_inapplicable(&main_trichotomy(&g("R10"), &L).unwrap());
}

#[test]
fn cubic_examples() {
    let k = g("K33");
    let r = cr_cubic_report(&k, &L).unwrap();
    assert_holds(&r);
    assert_eq!(r.witness["girth"], 4);
    assert!(!r.witness["removable_edge"].is_null());
    let paths = r.witness["k33_subdivision"]["paths"].as_array().unwrap();
    assert_eq!(paths.len(), 9);
    assert!(paths.iter().all(|p| p.as_array().unwrap().len() == 2));

    let ten = g("R10");
    let r = cr_cubic_report(&ten, &L).unwrap();
    assert_holds(&r);
    assert!(r.witness["removable_edge"].is_null());
    let s = find_k33_subdivision(&ten, &L).unwrap().unwrap();
    assert!(s.is_valid(&ten));
    assert_inapplicable(&cr_cubic_report(&g("Q3"), &L).unwrap());
}

#[test]
fn conjecture_examples() {
    let c8 = conjecture_sweep(&g("C8"), &L).unwrap();
    assert!(c8.iter().all(|r| r.verdict == Verdict::Holds));
    let r10 = conjecture_sweep(&g("R10"), &L).unwrap();
    assert_eq!(r10[0].verdict, Verdict::Inapplicable);
    assert_holds(&r10[1]);
    assert_eq!(r10[1].witness, json!({ "every_edge_in_r10": true }));
    let k = conjecture_sweep(&g("K33"), &L).unwrap();
    assert!(k.iter().all(|r| r.verdict == Verdict::Holds));
}

#[test]
fn report_json_shape() {
    let r = verify_deg2_square(&g("C8"), &L).unwrap();
    let text = serde_json::to_string(&r).unwrap();
    assert!(text.starts_with(r#"{"theorem":"deg2-square","applicable":true,"verdict":"holds","witness":"#));
    assert!(text.contains(r#""graph_hash":""#));
}

#[test]
fn failures_carry_the_graph() {
    let r = TheoremReport::fails("main", &g("C8"), "example");
    assert!(r.is_failure());
    assert!(r.witness["graph"].as_str().unwrap().contains("v1 v2"));
}

#[test]
fn selectors_round_trip() {
    for t in Theorem::ALL {
        assert_eq!(Theorem::parse(t.id()), Some(t));
    }
    for l in Lemma::ALL {
        assert_eq!(Lemma::parse(l.id()), Some(l));
    }
    assert_eq!(Lemma::parse("6jl1"), Some(Lemma::SixJl1));
    assert_eq!(Lemma::parse("extremeStar"), Some(Lemma::ExtremeStar));
}

#[test]
fn lemmas_hold_on_named_and_small_graphs() {
    let mut graphs: Vec<BipartiteGraph> = ["TT", "C8C", "R10", "K33", "Q3", "THETA_2,4,4"].map(g).to_vec();
    graphs.extend(connected_bipartite_graphs(8, None).unwrap());
    for gr in &graphs {
        for l in Lemma::ALL {
            let r = check_lemma(l, gr, &L).unwrap();
            assert_ne!(r.verdict, Verdict::Fails, "{} on {:?}", l.id(), gr.edges());
        }
    }
}

#[test]
fn theorems_hold_on_small_graphs() {
    for gr in connected_bipartite_graphs(8, None).unwrap() {
        for t in Theorem::ALL {
            for r in t.check(&gr, &L).unwrap() {
                assert!(!r.is_failure(), "{r:?}");
            }
        }
    }
}
