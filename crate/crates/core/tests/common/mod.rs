//! Test-only oracles, independent of the library's BFS/DP code paths.

#![allow(dead_code)]

use netskel::Graph;
use proptest::prelude::*;

/// Search information by exhaustive enumeration of simple paths.
///
/// Every simple path from `s` to `d` is listed by DFS; the shortest length
/// is taken over that list, and the walker probabilities of all paths of
/// that length are summed.
pub fn brute_force_pair_bits(g: &Graph, s: usize, d: usize) -> Option<f64> {
    if s == d {
        return Some(0.0);
    }
    let mut paths: Vec<Vec<usize>> = Vec::new();
    let mut stack = vec![s];
    let mut on_path = vec![false; g.node_count()];
    on_path[s] = true;
    all_paths(g, d, &mut stack, &mut on_path, &mut paths);
    let shortest = paths.iter().map(Vec::len).min()?;
    let p: f64 = paths
        .iter()
        .filter(|p| p.len() == shortest)
        .map(|p| {
            let interior: f64 = p[1..p.len() - 1]
                .iter()
                .map(|&j| 1.0 / (g.degree(j) - 1) as f64)
                .product();
            interior / g.degree(s) as f64
        })
        .sum();
    Some(-p.log2())
}

fn all_paths(
    g: &Graph,
    d: usize,
    stack: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    let u = *stack.last().unwrap();
    if u == d {
        out.push(stack.clone());
        return;
    }
    for &w in g.neighbors(u) {
        if !on_path[w] {
            on_path[w] = true;
            stack.push(w);
            all_paths(g, d, stack, on_path, out);
            stack.pop();
            on_path[w] = false;
        }
    }
}

/// Σ over ordered pairs of the brute-force pair values.
pub fn brute_force_total(g: &Graph) -> f64 {
    let n = g.node_count();
    (0..n)
        .flat_map(|s| (0..n).map(move |d| (s, d)))
        .map(|(s, d)| brute_force_pair_bits(g, s, d).unwrap())
        .sum()
}

/// Connected graph from a random parent forest plus optional extra links.
pub fn connected_graph(n: usize, parents: &[usize], extra: &[bool]) -> Graph {
    let mut links = std::collections::BTreeSet::new();
    for v in 1..n {
        let p = parents[v - 1] % v;
        links.insert((p, v));
    }
    let mut k = 0;
    for a in 0..n {
        for b in a + 1..n {
            if extra.get(k).copied().unwrap_or(false) {
                links.insert((a, b));
            }
            k += 1;
        }
    }
    Graph::from_links(n, links).unwrap()
}

/// Strategy for connected graphs with `lo..=hi` nodes; `density` is the
/// chance of each extra link.
pub fn arb_connected_graph(lo: usize, hi: usize, density: f64) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(move |n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (
            Just(n),
            proptest::collection::vec(any::<usize>(), n.saturating_sub(1)),
            proptest::collection::vec(proptest::bool::weighted(density), pairs),
        )
            .prop_map(|(n, parents, extra)| connected_graph(n, &parents, &extra))
    })
}

/// Spearman rank correlation with average ranks for ties; `None` when
/// either side is constant.
pub fn spearman(xs: &[f64], ys: &[f64]) -> Option<f64> {
    let rx = ranks(xs);
    let ry = ranks(ys);
    let n = xs.len() as f64;
    let mx = rx.iter().sum::<f64>() / n;
    let my = ry.iter().sum::<f64>() / n;
    let cov: f64 = rx.iter().zip(&ry).map(|(a, b)| (a - mx) * (b - my)).sum();
    let vx: f64 = rx.iter().map(|a| (a - mx).powi(2)).sum();
    let vy: f64 = ry.iter().map(|b| (b - my).powi(2)).sum();
    if vx == 0.0 || vy == 0.0 {
        return None;
    }
    Some(cov / (vx * vy).sqrt())
}

fn ranks(v: &[f64]) -> Vec<f64> {
    let mut idx: Vec<usize> = (0..v.len()).collect();
    idx.sort_by(|&a, &b| v[a].total_cmp(&v[b]));
    let mut r = vec![0.0; v.len()];
    let mut i = 0;
    while i < idx.len() {
        let mut j = i;
        while j + 1 < idx.len() && v[idx[j + 1]] == v[idx[i]] {
            j += 1;
        }
        let avg = (i + j) as f64 / 2.0 + 1.0;
        for k in i..=j {
            r[idx[k]] = avg;
        }
        i = j + 1;
    }
    r
}

pub fn karate() -> Graph {
    netskel::graph::load_edge_list(netskel::KARATE_EDGES).unwrap()
}
