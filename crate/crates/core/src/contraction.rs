//! Tree-contraction into a skeleton of super-nodes.
//!
//! Links are visited once, in a caller-chosen order. A link is contracted
//! when its endpoints sit in different super-nodes that share no neighbour in
//! the current skeleton; merging two super-nodes with a common neighbour
//! would create a multilink. Every accepted contraction removes one node and
//! one link, so the cyclomatic number is unchanged and each super-node is
//! internally a tree.
//!
//! A rejected link stays rejected: its endpoints keep a common neighbour
//! through every later merge, so one pass over the links is exhaustive.

use std::collections::{BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{connected_components, cyclomatic_number, Graph};
use crate::search_info::total_search_information;

/// A permutation of a graph's link indices (positions in [`Graph::links`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkOrder(Vec<usize>);

impl LinkOrder {
    pub fn new(indices: Vec<usize>) -> Self {
        LinkOrder(indices)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The ordered links as node pairs.
    pub fn links(&self, g: &Graph) -> Vec<(usize, usize)> {
        self.0.iter().map(|&i| g.links()[i]).collect()
    }

    fn validate(&self, link_count: usize) -> Result<()> {
        if self.0.len() != link_count {
            return Err(Error::arg(format!(
                "link order has {} entries for {link_count} links",
                self.0.len()
            )));
        }
        let mut seen = vec![false; link_count];
        for &i in &self.0 {
            if i >= link_count || std::mem::replace(&mut seen[i], true) {
                return Err(Error::arg(format!(
                    "link order is not a permutation (bad or repeated index {i})"
                )));
            }
        }
        Ok(())
    }
}

/// How a contraction pass orders the links.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContractionStrategy {
    /// Uniformly shuffled links.
    Random { seed: u64 },
    /// Ascending degree sum of the endpoints.
    DegreeSum,
}

impl ContractionStrategy {
    pub fn order(&self, g: &Graph) -> LinkOrder {
        match *self {
            ContractionStrategy::Random { seed } => order_links_random(g, seed),
            ContractionStrategy::DegreeSum => order_links_degree(g),
        }
    }
}

pub fn order_links_random(g: &Graph, seed: u64) -> LinkOrder {
    shuffled(g.link_count(), ChaCha8Rng::seed_from_u64(seed))
}

/// Ordering for trial `trial` of a run seeded with `seed`. Each trial draws
/// from its own ChaCha stream, so trials are independent of execution order.
pub fn order_links_for_trial(g: &Graph, seed: u64, trial: u64) -> LinkOrder {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    shuffled(g.link_count(), rng)
}

fn shuffled(n: usize, mut rng: ChaCha8Rng) -> LinkOrder {
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(&mut rng);
    LinkOrder(idx)
}

/// Links sorted by `k_a + k_b` (original degrees), ties by endpoints.
pub fn order_links_degree(g: &Graph) -> LinkOrder {
    let deg = g.degrees();
    let mut idx: Vec<usize> = (0..g.link_count()).collect();
    // links() is already lexicographic, so a stable sort by weight settles
    // ties by (min endpoint, max endpoint).
    idx.sort_by_key(|&i| {
        let (a, b) = g.links()[i];
        deg[a] + deg[b]
    });
    LinkOrder(idx)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperNode {
    /// Original node indices, ascending.
    pub members: Vec<usize>,
    /// Original links joining two members; a spanning tree of `members`.
    pub internal_links: Vec<(usize, usize)>,
}

impl SuperNode {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// The internal tree on its own, nodes renumbered by position in
    /// `members` and labelled with the original indices.
    pub fn tree(&self) -> Graph {
        let local = |v: usize| self.members.binary_search(&v).expect("member");
        let labels = self.members.iter().map(|v| v.to_string()).collect();
        Graph::with_labels(
            labels,
            self.internal_links
                .iter()
                .map(|&(u, v)| (local(u), local(v))),
        )
        .expect("internal links are distinct")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplifiedNetwork {
    /// Graph over super-node indices.
    pub skeleton: Graph,
    /// Ordered by smallest member.
    pub supernodes: Vec<SuperNode>,
    /// Super-node index of every original node.
    pub membership: Vec<usize>,
    /// The order the pass visited links in.
    pub link_order: LinkOrder,
}

impl SimplifiedNetwork {
    pub fn supernode_sizes(&self) -> Vec<usize> {
        self.supernodes.iter().map(SuperNode::size).collect()
    }

    /// Checks partition, spanning-tree, simplicity, link-count and
    /// cyclomatic-conservation invariants against the original graph.
    pub fn validate(&self, original: &Graph) -> Result<()> {
        let bad = |msg: String| Err(Error::Domain(msg));
        let n = original.node_count();
        if self.membership.len() != n {
            return bad("membership does not cover the original nodes".into());
        }
        let mut covered = vec![false; n];
        for (i, sn) in self.supernodes.iter().enumerate() {
            for &v in &sn.members {
                if covered[v] || self.membership[v] != i {
                    return bad(format!("node {v} is not in exactly super-node {i}"));
                }
                covered[v] = true;
            }
            if sn.internal_links.len() + 1 != sn.members.len() {
                return bad(format!("super-node {i} has the wrong internal link count"));
            }
            for &(u, v) in &sn.internal_links {
                if !original.has_link(u, v) || self.membership[u] != i || self.membership[v] != i {
                    return bad(format!("super-node {i} holds a foreign link ({u}, {v})"));
                }
            }
            if connected_components(&sn.tree()).count != 1 {
                return bad(format!("super-node {i} is not connected"));
            }
        }
        if covered.iter().any(|c| !c) {
            return bad("some node belongs to no super-node".into());
        }
        if self.skeleton.node_count() != self.supernodes.len() {
            return bad("skeleton size differs from super-node count".into());
        }
        let internal: usize = self.supernodes.iter().map(|s| s.internal_links.len()).sum();
        if self.skeleton.link_count() + internal != original.link_count() {
            return bad("skeleton and internal links do not add up to L".into());
        }
        let crossing: BTreeSet<(usize, usize)> = original
            .links()
            .iter()
            .filter_map(|&(u, v)| {
                let (a, b) = (self.membership[u], self.membership[v]);
                (a != b).then(|| (a.min(b), a.max(b)))
            })
            .collect();
        if crossing
            .iter()
            .copied()
            .ne(self.skeleton.links().iter().copied())
        {
            return bad("skeleton links do not match the crossing links".into());
        }
        if cyclomatic_number(&self.skeleton) != cyclomatic_number(original) {
            return bad("cyclomatic number changed".into());
        }
        Ok(())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }
}

/// One contraction pass over `g` in the given order.
pub fn tree_contract(g: &Graph, order: &LinkOrder) -> Result<SimplifiedNetwork> {
    order.validate(g.link_count())?;
    g.ensure_connected()?;

    let n = g.node_count();
    let mut uf = UnionFind::new(n);
    // Skeleton adjacency keyed by union-find root.
    let mut nbrs: Vec<HashSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut contracted = vec![false; g.link_count()];

    for &li in order.as_slice() {
        let (a, b) = g.links()[li];
        let (ra, rb) = (uf.find(a), uf.find(b));
        if ra == rb {
            continue;
        }
        let (small, large) = if nbrs[ra].len() <= nbrs[rb].len() {
            (ra, rb)
        } else {
            (rb, ra)
        };
        if nbrs[small].iter().any(|x| nbrs[large].contains(x)) {
            continue;
        }

        // absorb the smaller neighbour set into the larger one
        let absorbed = std::mem::take(&mut nbrs[small]);
        for x in absorbed {
            if x == large {
                continue;
            }
            nbrs[x].remove(&small);
            nbrs[x].insert(large);
            nbrs[large].insert(x);
        }
        nbrs[large].remove(&small);
        uf.parent[small] = large;
        contracted[li] = true;
    }

    let mut root_index = vec![usize::MAX; n];
    let mut membership = vec![0; n];
    let mut supernodes: Vec<SuperNode> = Vec::new();
    for (v, slot) in membership.iter_mut().enumerate() {
        let r = uf.find(v);
        if root_index[r] == usize::MAX {
            root_index[r] = supernodes.len();
            supernodes.push(SuperNode {
                members: Vec::new(),
                internal_links: Vec::new(),
            });
        }
        *slot = root_index[r];
        supernodes[root_index[r]].members.push(v);
    }

    let mut skeleton_links = Vec::new();
    for (li, &(u, v)) in g.links().iter().enumerate() {
        if contracted[li] {
            supernodes[membership[u]].internal_links.push((u, v));
        } else {
            skeleton_links.push((membership[u], membership[v]));
        }
    }
    let skeleton = Graph::from_links(supernodes.len(), skeleton_links)
        .expect("tree contraction never creates multilinks or self-loops");

    Ok(SimplifiedNetwork {
        skeleton,
        supernodes,
        membership,
        link_order: order.clone(),
    })
}

/// Search information of a simplified network, split into its parts.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplifiedSearchInfo {
    pub h_skeleton: f64,
    /// Per super-node, each tree taken in isolation.
    pub h_supernodes: Vec<f64>,
    pub h_supernodes_total: f64,
    /// `h_skeleton + h_supernodes_total`.
    pub h_simp: f64,
}

pub fn simplified_search_information(s: &SimplifiedNetwork) -> Result<SimplifiedSearchInfo> {
    let h_skeleton = total_search_information(&s.skeleton)?;
    let h_supernodes = s
        .supernodes
        .par_iter()
        .map(|sn| {
            if sn.size() <= 2 {
                Ok(0.0)
            } else {
                total_search_information(&sn.tree())
            }
        })
        .collect::<Result<Vec<f64>>>()?;
    let h_supernodes_total: f64 = h_supernodes.iter().sum();
    Ok(SimplifiedSearchInfo {
        h_skeleton,
        h_supernodes,
        h_supernodes_total,
        h_simp: h_skeleton + h_supernodes_total,
    })
}

/// One row of a minimisation run, enough for an `H` vs skeleton-size scatter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialSample {
    pub trial: usize,
    pub skeleton_nodes: usize,
    pub h_skeleton: f64,
    pub h_supernodes: f64,
    pub h_simp: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialResult {
    pub trial: usize,
    pub network: SimplifiedNetwork,
    pub info: SimplifiedSearchInfo,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Minimization {
    pub best: TrialResult,
    pub worst: TrialResult,
    pub samples: Vec<TrialSample>,
}

fn run_trial(g: &Graph, seed: u64, trial: usize) -> Result<TrialResult> {
    let order = order_links_for_trial(g, seed, trial as u64);
    let network = tree_contract(g, &order)?;
    let info = simplified_search_information(&network)?;
    Ok(TrialResult {
        trial,
        network,
        info,
    })
}

/// Runs `trials` random contractions and keeps the least and most
/// informative simplifications. Ties go to the lowest trial index.
pub fn minimize_h_simp(g: &Graph, trials: usize, seed: u64) -> Result<Minimization> {
    if trials == 0 {
        return Err(Error::arg("trials must be at least 1"));
    }
    g.ensure_connected()?;

    let samples = (0..trials)
        .into_par_iter()
        .map(|t| {
            let r = run_trial(g, seed, t)?;
            Ok(TrialSample {
                trial: t,
                skeleton_nodes: r.network.skeleton.node_count(),
                h_skeleton: r.info.h_skeleton,
                h_supernodes: r.info.h_supernodes_total,
                h_simp: r.info.h_simp,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut best = 0;
    let mut worst = 0;
    for (i, s) in samples.iter().enumerate() {
        if s.h_simp < samples[best].h_simp {
            best = i;
        }
        if s.h_simp > samples[worst].h_simp {
            worst = i;
        }
    }
    // Only the two extremes are kept in full; re-running a trial is cheaper
    // than holding every network.
    Ok(Minimization {
        best: run_trial(g, seed, best)?,
        worst: run_trial(g, seed, worst)?,
        samples,
    })
}
