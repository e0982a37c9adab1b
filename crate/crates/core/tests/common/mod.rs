//! Brute-force oracles, written against raw adjacency only.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use balgraph::{BipartiteGraph, Side, Vertex};

fn adjacent(g: &BipartiteGraph, u: Vertex, v: Vertex) -> bool {
    g.neighbors(u).contains(&v)
}

/// Vertex sets of all holes: subsets of size ≥ 4 inducing a connected 2-regular graph.
pub fn holes_by_subsets(g: &BipartiteGraph) -> BTreeSet<Vec<Vertex>> {
    let n = g.n();
    assert!(n <= 16, "subset oracle is exponential");
    let mut out = BTreeSet::new();
    for s in 0u32..(1 << n) {
        if s.count_ones() < 4 {
            continue;
        }
        let vs: Vec<Vertex> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        let two_regular = vs
            .iter()
            .all(|&v| vs.iter().filter(|&&w| adjacent(g, v, w)).count() == 2);
        if two_regular && induced_connected(g, &vs) {
            out.insert(vs);
        }
    }
    out
}

fn induced_connected(g: &BipartiteGraph, vs: &[Vertex]) -> bool {
    let mut seen = vec![vs[0]];
    let mut stack = vec![vs[0]];
    while let Some(x) = stack.pop() {
        for &y in vs {
            if adjacent(g, x, y) && !seen.contains(&y) {
                seen.push(y);
                stack.push(y);
            }
        }
    }
    seen.len() == vs.len()
}

/// Edges of the hole with vertex set `vs`, as indices into `g.edges()`.
fn hole_edge_ids(g: &BipartiteGraph, vs: &[Vertex]) -> Vec<usize> {
    g.edges()
        .iter()
        .enumerate()
        .filter(|(_, (u, v))| vs.contains(u) && vs.contains(v))
        .map(|(i, _)| i)
        .collect()
}

/// Whether some ±1 vector over all `2^m` signings makes every hole weigh 0 mod 4.
///
/// With `neg` the set of negative edges, a hole `H` weighs `|H| - 2|H ∩ neg|`,
/// so it is balanced iff `|H ∩ neg| ≡ |H|/2 (mod 2)`.
pub fn balanceable_by_all_signings(g: &BipartiteGraph) -> bool {
    let m = g.m();
    assert!(m <= 24, "signing oracle is exponential");
    let holes: Vec<(u32, u32)> = holes_by_subsets(g)
        .iter()
        .map(|h| {
            let mask = hole_edge_ids(g, h).iter().fold(0u32, |acc, &e| acc | 1 << e);
            (mask, (h.len() as u32 / 2) % 2)
        })
        .collect();
    (0u32..(1 << m)).any(|neg| holes.iter().all(|&(mask, parity)| (neg & mask).count_ones() % 2 == parity))
}

/// Weight check of an explicit signing against the subset hole oracle.
pub fn signing_balances(g: &BipartiteGraph, weights: &[i8]) -> bool {
    holes_by_subsets(g).iter().all(|h| {
        let w: i64 = hole_edge_ids(g, h).iter().map(|&e| weights[e] as i64).sum();
        w.rem_euclid(4) == 0
    })
}

/// All simple cycles as vertex sequences, each listed once per direction.
fn cycles(g: &BipartiteGraph) -> Vec<Vec<Vertex>> {
    fn walk(g: &BipartiteGraph, path: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        let start = path[0];
        let last = *path.last().unwrap();
        for &y in g.neighbors(last) {
            if y == start && path.len() >= 4 {
                out.push(path.clone());
            } else if y > start && !path.contains(&y) {
                path.push(y);
                walk(g, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in g.vertices() {
        walk(g, &mut vec![s], &mut out);
    }
    out
}

/// Edges that are the only chord of some cycle, by inspecting every cycle.
pub fn unique_chords_brute(g: &BipartiteGraph) -> BTreeSet<(Vertex, Vertex)> {
    let mut out = BTreeSet::new();
    for c in cycles(g) {
        let k = c.len();
        let on_cycle: HashSet<(Vertex, Vertex)> = (0..k)
            .flat_map(|i| {
                let (a, b) = (c[i], c[(i + 1) % k]);
                [(a, b), (b, a)]
            })
            .collect();
        let mut chords = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                let (a, b) = (c[i], c[j]);
                if adjacent(g, a, b) && !on_cycle.contains(&(a, b)) {
                    chords.push((a.min(b), a.max(b)));
                    if chords.len() > 1 {
                        break;
                    }
                }
            }
            if chords.len() > 1 {
                break;
            }
        }
        if chords.len() == 1 {
            out.insert(chords[0]);
        }
    }
    out
}

/// Isomorphism key of a connected bipartite graph: the biadjacency matrix with
/// rows taken from a smallest side, minimised over row orders with columns sorted.
pub fn matrix_key(g: &BipartiteGraph) -> Vec<u32> {
    let l: Vec<Vertex> = g.vertices().filter(|&v| g.side(v) == Side::L).collect();
    let r: Vec<Vertex> = g.vertices().filter(|&v| g.side(v) == Side::R).collect();
    let orient = |rows: &[Vertex], cols: &[Vertex]| -> Vec<Vec<bool>> {
        rows.iter()
            .map(|&x| cols.iter().map(|&y| adjacent(g, x, y)).collect())
            .collect()
    };
    let mut options = Vec::new();
    if l.len() <= r.len() {
        options.push(orient(&l, &r));
    }
    if r.len() <= l.len() {
        options.push(orient(&r, &l));
    }
    options.iter().map(|m| min_key(m)).min().unwrap()
}

fn min_key(m: &[Vec<bool>]) -> Vec<u32> {
    let a = m.len();
    let b = m.first().map_or(0, Vec::len);
    let mut best: Option<Vec<u32>> = None;
    let mut perm: Vec<usize> = (0..a).collect();
    permutations(&mut perm, 0, &mut |p| {
        let mut cols: Vec<u32> = (0..b)
            .map(|j| p.iter().enumerate().fold(0, |acc, (i, &row)| acc | (m[row][j] as u32) << i))
            .collect();
        cols.sort_unstable();
        let mut key = vec![a as u32, b as u32];
        key.extend(cols);
        if best.as_ref().is_none_or(|k| key < *k) {
            best = Some(key);
        }
    });
    best.unwrap_or_else(|| vec![0, 0])
}

fn permutations(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, f);
        p.swap(k, i);
    }
}

/// Number of connected bipartite graphs on `n` vertices up to isomorphism, by
/// enumerating every biadjacency matrix.
pub fn connected_count_by_matrices(n: usize) -> usize {
    if n <= 1 {
        return n;
    }
    let mut keys = BTreeSet::new();
    for a in 1..=n / 2 {
        let b = n - a;
        for bits in 0u64..(1 << (a * b)) {
            let m: Vec<Vec<bool>> = (0..a)
                .map(|i| (0..b).map(|j| bits >> (i * b + j) & 1 == 1).collect())
                .collect();
            if !matrix_connected(&m) {
                continue;
            }
            let mut key = min_key(&m);
            if a == b {
                let t: Vec<Vec<bool>> = (0..b).map(|j| (0..a).map(|i| m[i][j]).collect()).collect();
                key = key.min(min_key(&t));
            }
            keys.insert(key);
        }
    }
    keys.len()
}

fn matrix_connected(m: &[Vec<bool>]) -> bool {
    let (a, b) = (m.len(), m[0].len());
    let mut row_seen = vec![false; a];
    let mut col_seen = vec![false; b];
    row_seen[0] = true;
    let mut stack = vec![(true, 0)];
    while let Some((is_row, i)) = stack.pop() {
        if is_row {
            for j in 0..b {
                if m[i][j] && !col_seen[j] {
                    col_seen[j] = true;
                    stack.push((false, j));
                }
            }
        } else {
            for r in 0..a {
                if m[r][i] && !row_seen[r] {
                    row_seen[r] = true;
                    stack.push((true, r));
                }
            }
        }
    }
    row_seen.iter().all(|&x| x) && col_seen.iter().all(|&x| x)
}
