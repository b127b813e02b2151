//! Search information over degenerate shortest paths.
//!
//! A non-backtracking random walker starting at `s` picks its first link with
//! probability `1/k_s` and every later link with probability `1/(k_j - 1)`.
//! The probability of reaching `d` along *some* shortest path is the sum over
//! all shortest paths of those products, and the search information is its
//! negative base-2 logarithm.
//!
//! Summing over paths explicitly blows up combinatorially, so the sum is
//! pushed forward through the BFS shortest-path DAG instead: the mass at `v`
//! is the sum of its predecessors' masses, each divided by the predecessor's
//! number of onward choices.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Distance sentinel for nodes the source cannot reach.
pub const UNREACHABLE: usize = usize::MAX;

/// All shortest paths from one source, as a predecessor DAG.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortestPathDag {
    pub source: usize,
    /// Hop distance per node, [`UNREACHABLE`] if none.
    pub dist: Vec<usize>,
    /// Neighbours `u` of `v` with `dist[u] + 1 == dist[v]`, ascending.
    pub predecessors: Vec<Vec<usize>>,
    /// Reachable nodes in BFS order, source first.
    pub order: Vec<usize>,
}

impl ShortestPathDag {
    pub fn is_reachable(&self, v: usize) -> bool {
        self.dist[v] != UNREACHABLE
    }
}

pub fn shortest_path_dag(g: &Graph, source: usize) -> Result<ShortestPathDag> {
    let n = g.node_count();
    if source >= n {
        return Err(Error::arg(format!(
            "source index {source} out of range for {n} nodes"
        )));
    }
    let mut dist = vec![UNREACHABLE; n];
    let mut predecessors = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        let next = dist[u] + 1;
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = next;
                queue.push_back(w);
            }
            if dist[w] == next {
                predecessors[w].push(u);
            }
        }
    }
    // BFS pops in nondecreasing distance and visits u ascending, so each
    // predecessor list is already sorted.
    Ok(ShortestPathDag {
        source,
        dist,
        predecessors,
        order,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchInfoOptions {
    /// Below this, path probabilities are merged in log space.
    pub underflow_threshold: f64,
    /// Keep the full `H(s→d)` matrix in the report.
    pub keep_pairs: bool,
}

impl Default for SearchInfoOptions {
    fn default() -> Self {
        SearchInfoOptions {
            underflow_threshold: 1e-300,
            keep_pairs: false,
        }
    }
}

/// Probability mass at a DAG node, linear while comfortably representable.
#[derive(Debug, Clone, Copy)]
enum Mass {
    Linear(f64),
    /// Natural log of the probability.
    Log(f64),
}

impl Mass {
    fn ln(self) -> f64 {
        match self {
            Mass::Linear(p) => p.ln(),
            Mass::Log(l) => l,
        }
    }

    fn bits(self) -> f64 {
        let h = -self.ln() / std::f64::consts::LN_2;
        // -log2(1) comes out as -0.0
        if h == 0.0 {
            0.0
        } else {
            h
        }
    }
}

/// `H(source→d)` in bits for every `d`; `None` where unreachable.
pub fn source_search_information(
    g: &Graph,
    source: usize,
    threshold: f64,
) -> Result<Vec<Option<f64>>> {
    let dag = shortest_path_dag(g, source)?;
    Ok(search_information_on_dag(g, &dag, threshold))
}

fn search_information_on_dag(g: &Graph, dag: &ShortestPathDag, threshold: f64) -> Vec<Option<f64>> {
    let n = g.node_count();
    let mut mass: Vec<Option<Mass>> = vec![None; n];
    let source_choices = g.degree(dag.source) as f64;

    for &v in &dag.order {
        mass[v] = Some(match dag.dist[v] {
            0 => Mass::Linear(1.0),
            1 => Mass::Linear(1.0 / source_choices),
            _ => merge(g, &dag.predecessors[v], &mass, threshold),
        });
    }

    mass.into_iter()
        .enumerate()
        .map(|(v, m)| {
            if v == dag.source {
                Some(0.0)
            } else {
                m.map(Mass::bits)
            }
        })
        .collect()
}

fn merge(g: &Graph, preds: &[usize], mass: &[Option<Mass>], threshold: f64) -> Mass {
    // Interior nodes of a shortest path have degree >= 2, so the divisor is
    // at least 1.
    let choices = |u: usize| (g.degree(u) - 1) as f64;

    let mut linear = 0.0;
    let mut all_linear = true;
    for &u in preds {
        match mass[u].expect("predecessor settled before successor") {
            Mass::Linear(p) => {
                let c = p / choices(u);
                if c < threshold {
                    all_linear = false;
                    break;
                }
                linear += c;
            }
            Mass::Log(_) => {
                all_linear = false;
                break;
            }
        }
    }
    if all_linear {
        return Mass::Linear(linear);
    }

    let logs: Vec<f64> = preds
        .iter()
        .map(|&u| mass[u].unwrap().ln() - choices(u).ln())
        .collect();
    let max = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let sum: f64 = logs.iter().map(|l| (l - max).exp()).sum();
    Mass::Log(max + sum.ln())
}

/// `H(s→d)` in bits; zero when `s == d`.
pub fn pair_search_information(g: &Graph, s: usize, d: usize) -> Result<f64> {
    if d >= g.node_count() {
        return Err(Error::arg(format!("destination index {d} out of range")));
    }
    let row = source_search_information(g, s, SearchInfoOptions::default().underflow_threshold)?;
    row[d].ok_or_else(|| Error::Unreachable {
        from: g.label(s).to_string(),
        to: g.label(d).to_string(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchInfoReport {
    pub n: usize,
    pub l: usize,
    pub total_bits: f64,
    /// `total_bits / n²`; the diagonal counts as zero.
    pub average_bits: f64,
    pub per_source_bits: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair_bits: Option<Vec<Vec<f64>>>,
}

/// Whole-network search information, one BFS + DP per source.
///
/// Sources run in parallel; the total is reduced in source order so the
/// result does not depend on scheduling.
pub fn search_info_report(g: &Graph, opts: SearchInfoOptions) -> Result<SearchInfoReport> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::arg("search information of an empty graph"));
    }
    g.ensure_connected()?;

    let rows: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|s| {
            let dag = shortest_path_dag(g, s).expect("source in range");
            search_information_on_dag(g, &dag, opts.underflow_threshold)
                .into_iter()
                .map(|h| h.expect("connected graph"))
                .collect()
        })
        .collect();

    let per_source_bits: Vec<f64> = rows.iter().map(|r| r.iter().sum()).collect();
    let total_bits: f64 = per_source_bits.iter().sum();
    Ok(SearchInfoReport {
        n,
        l: g.link_count(),
        total_bits,
        average_bits: total_bits / (n * n) as f64,
        per_source_bits,
        pair_bits: opts.keep_pairs.then_some(rows),
    })
}

/// `Σ_s Σ_{d≠s} H(s→d)` in bits.
pub fn total_search_information(g: &Graph) -> Result<f64> {
    Ok(search_info_report(g, SearchInfoOptions::default())?.total_bits)
}

/// Network average `H̄ = total / N²`.
pub fn average_search_information(g: &Graph) -> Result<f64> {
    Ok(search_info_report(g, SearchInfoOptions::default())?.average_bits)
}

/// Closed form for a path of `n` nodes: `(n-2)(n-1)`, and 0 for `n <= 2`.
pub fn chain_search_information(n: usize) -> Result<f64> {
    match n {
        0 => Err(Error::arg("chain needs at least one node")),
        1 | 2 => Ok(0.0),
        _ => Ok(((n - 2) * (n - 1)) as f64),
    }
}

/// Least `H_simp` of a contracted ring: a triangle skeleton (6 bits) plus
/// three chains whose sizes differ by at most one. Parts are returned
/// largest first.
pub fn ring_min_simplified_h(n: usize) -> Result<(f64, [usize; 3])> {
    if n < 3 {
        return Err(Error::arg(format!("ring needs at least 3 nodes, got {n}")));
    }
    let base = n / 3;
    let extra = n % 3;
    let parts: [usize; 3] = std::array::from_fn(|i| base + usize::from(i < extra));
    let chains: f64 = parts
        .iter()
        .map(|&p| chain_search_information(p).unwrap())
        .sum();
    Ok((6.0 + chains, parts))
}
