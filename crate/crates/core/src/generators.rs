//! Synthetic graphs, degree-preserving rewiring and the tree-scaling run.

use std::collections::{BTreeSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::estimator::{fit_power_law, PowerLawFit};
use crate::graph::Graph;
use crate::search_info::total_search_information;

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Cycle `0-1-…-(n-1)-0`.
pub fn gen_ring(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::arg(format!("ring needs at least 3 nodes, got {n}")));
    }
    Graph::from_links(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Path `0-1-…-(n-1)`.
pub fn gen_chain(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::arg("chain needs at least 1 node"));
    }
    Graph::from_links(n, (1..n).map(|i| (i - 1, i)))
}

pub fn gen_complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::arg("complete graph needs at least 1 node"));
    }
    Graph::from_links(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
}

/// Uniform labelled tree via a random Prüfer sequence.
pub fn gen_random_tree(n: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_tree_with(n, &mut rng)
}

fn random_tree_with(n: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    match n {
        0 => Err(Error::arg("tree needs at least 1 node")),
        1 => Graph::from_links(1, []),
        2 => Graph::from_links(2, [(0, 1)]),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            Graph::from_links(n, prufer_decode(&seq, n))
        }
    }
}

/// Linear-time Prüfer decoding.
fn prufer_decode(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut links = Vec::with_capacity(n - 1);
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    for &v in seq {
        links.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    links.push((leaf, n - 1));
    links
}

/// Erdős–Rényi `G(n, p)` resampled until connected, with a spanning tree
/// fallback so the call always terminates: after 100 failed draws, a random
/// tree's links are added to the last sample.
pub fn gen_connected_random(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::arg("graph needs at least 1 node"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::arg(format!("link probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut links = BTreeSet::new();
    for _ in 0..100 {
        links.clear();
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(p) {
                    links.insert((a, b));
                }
            }
        }
        let g = Graph::from_links(n, links.iter().copied())?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    let tree = random_tree_with(n, &mut rng)?;
    links.extend(tree.links().iter().copied());
    Graph::from_links(n, links)
}

/// Random tree plus `chords` extra links between non-adjacent pairs.
pub fn gen_tree_with_chords(n: usize, chords: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tree = random_tree_with(n, &mut rng)?;
    let max_links = n * (n - 1) / 2;
    if tree.link_count() + chords > max_links {
        return Err(Error::arg(format!(
            "{chords} chords do not fit in a {n}-node simple graph"
        )));
    }
    let mut links: BTreeSet<(usize, usize)> = tree.links().iter().copied().collect();
    let target = links.len() + chords;
    while links.len() < target {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b {
            links.insert((a.min(b), a.max(b)));
        }
    }
    Graph::from_links(n, links)
}

/// Degree-preserving, connectivity-preserving double-edge swaps.
///
/// Each attempt picks two links `{a,b}`, `{c,d}` and one of the two
/// rewirings `{a,c},{b,d}` / `{a,d},{b,c}`. Swaps that would create a
/// self-loop or multilink are skipped; swaps that disconnect the graph are
/// undone. Labels are kept.
pub fn rewire_degree_preserving(g: &Graph, swap_attempts: usize, seed: u64) -> Result<Graph> {
    g.ensure_connected()?;
    if g.link_count() < 2 {
        return Err(Error::arg("rewiring needs at least 2 links"));
    }
    let n = g.node_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut links: Vec<(usize, usize)> = g.links().to_vec();
    let mut adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();

    for _ in 0..swap_attempts {
        let i = rng.gen_range(0..links.len());
        let j = rng.gen_range(0..links.len());
        if i == j {
            continue;
        }
        let (a, b) = links[i];
        let (c, d) = if rng.gen_bool(0.5) {
            links[j]
        } else {
            (links[j].1, links[j].0)
        };
        // new links {a,c} and {b,d}
        if a == c || b == d || adj[a].contains(&c) || adj[b].contains(&d) {
            continue;
        }
        let old_cd = links[j];
        set_link(&mut adj, a, b, false);
        set_link(&mut adj, old_cd.0, old_cd.1, false);
        set_link(&mut adj, a, c, true);
        set_link(&mut adj, b, d, true);
        if connected(&adj) {
            links[i] = (a.min(c), a.max(c));
            links[j] = (b.min(d), b.max(d));
        } else {
            set_link(&mut adj, a, c, false);
            set_link(&mut adj, b, d, false);
            set_link(&mut adj, a, b, true);
            set_link(&mut adj, old_cd.0, old_cd.1, true);
        }
    }
    Graph::with_labels(g.labels().to_vec(), links)
}

fn set_link(adj: &mut [BTreeSet<usize>], u: usize, v: usize, present: bool) {
    if present {
        adj[u].insert(v);
        adj[v].insert(u);
    } else {
        adj[u].remove(&v);
        adj[v].remove(&u);
    }
}

fn connected(adj: &[BTreeSet<usize>]) -> bool {
    let mut seen = vec![false; adj.len()];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == adj.len()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TreeScalingRow {
    pub n: usize,
    pub mean_bits: f64,
    /// Population standard deviation (0 for a single sample).
    pub std_bits: f64,
    pub samples: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TreeScaling {
    pub rows: Vec<TreeScalingRow>,
    pub fit: PowerLawFit,
}

/// Mean total search information of uniform random trees for each size in
/// `n_min..=n_max` (stepping by `step`), and a power law through the means.
pub fn tree_scaling_experiment(
    n_min: usize,
    n_max: usize,
    step: usize,
    samples: usize,
    seed: u64,
) -> Result<TreeScaling> {
    if n_min < 2 || n_min > n_max {
        return Err(Error::arg(format!(
            "need 2 <= n_min <= n_max, got {n_min}..{n_max}"
        )));
    }
    if step == 0 || samples == 0 {
        return Err(Error::arg("step and samples must be positive"));
    }

    let sizes: Vec<usize> = (n_min..=n_max).step_by(step).collect();
    let rows = sizes
        .iter()
        .map(|&n| {
            let values = (0..samples)
                .into_par_iter()
                .map(|i| {
                    let mut rng = rng_for(seed, ((n as u64) << 32) | i as u64);
                    total_search_information(&random_tree_with(n, &mut rng)?)
                })
                .collect::<Result<Vec<f64>>>()?;
            let mean = values.iter().sum::<f64>() / samples as f64;
            let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / samples as f64;
            Ok(TreeScalingRow {
                n,
                mean_bits: mean,
                std_bits: var.sqrt(),
                samples,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    // A fit needs three distinct positive points; n = 2 trees have H = 0.
    let points: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.mean_bits > 0.0)
        .map(|r| (r.n as f64, r.mean_bits))
        .collect();
    let fit = fit_power_law(&points)?;
    Ok(TreeScaling { rows, fit })
}
