use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

fn from_names(order: &[String], edges: &[(String, String)]) -> BipartiteGraph {
    let idx = |s: &str| order.iter().position(|x| x == s).expect("named vertex");
    BipartiteGraph::from_parts(
        order.to_vec(),
        None,
        edges.iter().map(|(a, b)| (idx(a), idx(b))),
    )
    .expect("named graphs are bipartite")
}

fn s(v: &str) -> String {
    v.to_string()
}

fn pairs(list: &[(&str, &str)]) -> Vec<(String, String)> {
    list.iter().map(|(a, b)| (s(a), s(b))).collect()
}

/// The 10-cycle `x1..x10` with chords `xi x(i+5)`.
pub fn r10() -> BipartiteGraph {
    let order: Vec<String> = (1..=10).map(|i| format!("x{i}")).collect();
    let mut edges: Vec<(String, String)> = (1..=10)
        .map(|i| (format!("x{i}"), format!("x{}", i % 10 + 1)))
        .collect();
    edges.extend((1..=5).map(|i| (format!("x{i}"), format!("x{}", i + 5))));
    from_names(&order, &edges)
}

/// `a1, a2, a3` complete to `b1, b2, b3`.
pub fn k33() -> BipartiteGraph {
    complete_bipartite(3, 3)
}

pub fn complete_bipartite(p: usize, q: usize) -> BipartiteGraph {
    let mut order: Vec<String> = (1..=p).map(|i| format!("a{i}")).collect();
    order.extend((1..=q).map(|j| format!("b{j}")));
    let edges: Vec<(String, String)> = (1..=p)
        .flat_map(|i| (1..=q).map(move |j| (format!("a{i}"), format!("b{j}"))))
        .collect();
    from_names(&order, &edges)
}

/// Hole `v1..vn`, `n` even and at least 4.
pub fn cycle(n: usize) -> Result<BipartiteGraph> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::InvalidParams(format!("C{n}: need an even length of at least 4")));
    }
    let order: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let edges: Vec<(String, String)> = (1..=n).map(|i| (format!("v{i}"), format!("v{}", i % n + 1))).collect();
    Ok(from_names(&order, &edges))
}

/// Ends `u`, `v` joined by internally disjoint paths of the given lengths;
/// path `k` has internal vertices `p{k}_1, p{k}_2, ..` from `u` towards `v`.
pub fn theta(lengths: [usize; 3]) -> Result<BipartiteGraph> {
    if lengths.iter().any(|&l| l < 2) {
        return Err(Error::InvalidParams("theta path lengths must be at least 2".into()));
    }
    if lengths.iter().any(|&l| l % 2 != lengths[0] % 2) {
        return Err(Error::InvalidParams("theta path lengths must share parity".into()));
    }
    let mut order = vec![s("u"), s("v")];
    let mut edges = Vec::new();
    for (k, &len) in lengths.iter().enumerate() {
        let mut prev = s("u");
        for i in 1..len {
            let name = format!("p{}_{i}", k + 1);
            order.push(name.clone());
            edges.push((prev, name.clone()));
            prev = name;
        }
        edges.push((prev, s("v")));
    }
    Ok(from_names(&order, &edges))
}

/// 6-hole `u1 v1 u2 v2 u3 v3` plus `x` adjacent to `v1, v2, v3`.
pub fn ow7() -> BipartiteGraph {
    let order: Vec<String> = ["u1", "v1", "u2", "v2", "u3", "v3", "x"].map(s).to_vec();
    let edges = pairs(&[
        ("u1", "v1"),
        ("v1", "u2"),
        ("u2", "v2"),
        ("v2", "u3"),
        ("u3", "v3"),
        ("v3", "u1"),
        ("x", "v1"),
        ("x", "v2"),
        ("x", "v3"),
    ]);
    from_names(&order, &edges)
}

/// 6-hole `a1..a6` plus `c` on `a1, a3, a5` and `d` on `a2, a4, a6`.
pub fn q3() -> BipartiteGraph {
    let order: Vec<String> = ["a1", "a2", "a3", "a4", "a5", "a6", "c", "d"].map(s).to_vec();
    let mut edges: Vec<(String, String)> = (1..=6).map(|i| (format!("a{i}"), format!("a{}", i % 6 + 1))).collect();
    edges.extend(pairs(&[("c", "a1"), ("c", "a3"), ("c", "a5"), ("d", "a2"), ("d", "a4"), ("d", "a6")]));
    from_names(&order, &edges)
}

/// `C8` plus the chord `v1 v6`.
pub fn c8c() -> BipartiteGraph {
    let order: Vec<String> = (1..=8).map(|i| format!("v{i}")).collect();
    let mut edges: Vec<(String, String)> = (1..=8).map(|i| (format!("v{i}"), format!("v{}", i % 8 + 1))).collect();
    edges.push((s("v1"), s("v6")));
    from_names(&order, &edges)
}

/// Two 6-holes `a1 x1 b1 y3 y2 y1` and `a2 x2 b2 z3 z2 z1` linked by `a1a2`, `b1b2`.
pub fn tt() -> BipartiteGraph {
    let order: Vec<String> = ["a1", "b1", "x1", "y1", "y2", "y3", "a2", "b2", "x2", "z1", "z2", "z3"]
        .map(s)
        .to_vec();
    let edges = pairs(&[
        ("a1", "x1"),
        ("x1", "b1"),
        ("a1", "y1"),
        ("y1", "y2"),
        ("y2", "y3"),
        ("y3", "b1"),
        ("a2", "x2"),
        ("x2", "b2"),
        ("a2", "z1"),
        ("z1", "z2"),
        ("z2", "z3"),
        ("z3", "b2"),
        ("a1", "a2"),
        ("b1", "b2"),
    ]);
    from_names(&order, &edges)
}

/// Look up a named graph: `R10`, `K33`, `C<2k>`, `THETA_p,q,r`, `OW7`, `Q3`, `C8C`, `TT`.
pub fn named(id: &str) -> Result<BipartiteGraph> {
    match id {
        "R10" => Ok(r10()),
        "K33" => Ok(k33()),
        "OW7" => Ok(ow7()),
        "Q3" => Ok(q3()),
        "C8C" => Ok(c8c()),
        "TT" => Ok(tt()),
        _ => {
            if let Some(rest) = id.strip_prefix("THETA_") {
                let parts: Vec<usize> = rest
                    .split(',')
                    .map(|p| p.trim().parse::<usize>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| Error::InvalidParams(format!("bad theta lengths in {id}")))?;
                let lengths: [usize; 3] = parts
                    .try_into()
                    .map_err(|_| Error::InvalidParams(format!("{id}: need three lengths")))?;
                return theta(lengths);
            }
            if let Some(k) = id.strip_prefix('C').and_then(|r| r.parse::<usize>().ok()) {
                return cycle(k);
            }
            Err(Error::UnknownName(id.to_string()))
        }
    }
}

pub const NAMED_IDS: &[&str] = &["R10", "K33", "C8", "THETA_2,4,4", "THETA_3,3,3", "OW7", "Q3", "C8C", "TT"];
