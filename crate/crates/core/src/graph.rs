//! Undirected simple graphs with dense node indices.
//!
//! External labels are mapped to `0..n` at construction; every algorithm in
//! the crate works on indices and translates back through [`Graph::label`]
//! only when producing reports.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Immutable undirected simple graph.
///
/// Links are stored once each as `(u, v)` with `u < v`, sorted
/// lexicographically. Adjacency lists are sorted ascending, which keeps BFS
/// and contraction passes reproducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    links: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `n` nodes labelled `"0".."n-1"`.
    pub fn from_links<I>(n: usize, links: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::with_labels((0..n).map(|i| i.to_string()).collect(), links)
    }

    /// Builds a graph with explicit labels. Self-loops and repeated links are
    /// rejected.
    pub fn with_labels<I>(labels: Vec<String>, links: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = labels.len();
        let mut set = BTreeSet::new();
        for (a, b) in links {
            if a >= n || b >= n {
                return Err(Error::arg(format!(
                    "link ({a}, {b}) references a node outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::SelfLoop {
                    label: labels[a].clone(),
                });
            }
            let key = (a.min(b), a.max(b));
            if !set.insert(key) {
                return Err(Error::DuplicateEdge {
                    a: labels[a].clone(),
                    b: labels[b].clone(),
                });
            }
        }
        let links: Vec<_> = set.into_iter().collect();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &links {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            labels,
            links,
            adjacency,
        })
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn link_count(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn links(&self) -> &[(usize, usize)] {
        &self.links
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn has_link(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Label → index lookup table.
    pub fn label_index(&self) -> HashMap<&str, usize> {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect()
    }

    /// Subgraph induced by `nodes`, relabelled densely in the given order.
    /// Labels are carried over from `self`.
    pub fn induced_subgraph(&self, nodes: &[usize]) -> Graph {
        let mut local = HashMap::with_capacity(nodes.len());
        for (i, &v) in nodes.iter().enumerate() {
            local.insert(v, i);
        }
        let labels = nodes.iter().map(|&v| self.labels[v].clone()).collect();
        let links = self
            .links
            .iter()
            .filter_map(|&(u, v)| Some((*local.get(&u)?, *local.get(&v)?)));
        Graph::with_labels(labels, links).expect("subgraph of a simple graph is simple")
    }

    /// `Ok(())` when every node reaches every other node; otherwise names a
    /// pair that cannot reach each other.
    pub fn ensure_connected(&self) -> Result<()> {
        let comps = connected_components(self);
        if comps.count <= 1 {
            return Ok(());
        }
        let other = comps
            .labels
            .iter()
            .position(|&c| c != comps.labels[0])
            .expect("more than one component");
        Err(Error::Disconnected {
            a: self.labels[0].clone(),
            b: self.labels[other].clone(),
        })
    }

    pub fn is_connected(&self) -> bool {
        connected_components(self).count <= 1
    }
}

/// Parses the whitespace-separated edge-list format.
///
/// Labels get indices in order of first appearance. `#` lines and blank lines
/// are skipped.
pub fn load_edge_list(text: &str) -> Result<Graph> {
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut labels = Vec::new();
    let mut links = Vec::new();
    let mut seen = BTreeSet::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: lineno + 1,
                message: format!("expected 2 labels, found {}", tokens.len()),
            });
        }
        let mut id = |tok: &str| -> usize {
            if let Some(&i) = index.get(tok) {
                return i;
            }
            let i = labels.len();
            labels.push(tok.to_string());
            index.insert(tok.to_string(), i);
            i
        };
        let a = id(tokens[0]);
        let b = id(tokens[1]);
        if a == b {
            return Err(Error::SelfLoop {
                label: tokens[0].to_string(),
            });
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(Error::DuplicateEdge {
                a: tokens[0].to_string(),
                b: tokens[1].to_string(),
            });
        }
        links.push((a, b));
    }
    Graph::with_labels(labels, links)
}

/// Writes one `LABEL LABEL` line per link. Isolated nodes have no
/// representation in this format and are dropped.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for &(u, v) in g.links() {
        let _ = writeln!(out, "{} {}", g.label(u), g.label(v));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub count: usize,
    /// Component index per node, numbered in order of lowest member.
    pub labels: Vec<usize>,
}

pub fn connected_components(g: &Graph) -> Components {
    let n = g.node_count();
    let mut labels = vec![usize::MAX; n];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for start in 0..n {
        if labels[start] != usize::MAX {
            continue;
        }
        labels[start] = count;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if labels[w] == usize::MAX {
                    labels[w] = count;
                    queue.push_back(w);
                }
            }
        }
        count += 1;
    }
    Components { count, labels }
}

/// Number of independent cycles, `L - N + P`.
pub fn cyclomatic_number(g: &Graph) -> usize {
    let p = connected_components(g).count;
    // L >= N - P always holds, so this never underflows.
    g.link_count() + p - g.node_count()
}

/// Assignment of every node to one of `group_count` non-empty groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    assignment: Vec<usize>,
    group_count: usize,
}

impl Partition {
    /// Validates that group indices are dense and that no group is empty.
    pub fn new(assignment: Vec<usize>) -> Result<Self> {
        let group_count = assignment.iter().map(|&g| g + 1).max().unwrap_or(0);
        let mut used = vec![false; group_count];
        for &g in &assignment {
            used[g] = true;
        }
        if let Some(empty) = used.iter().position(|u| !u) {
            return Err(Error::arg(format!("partition group {empty} is empty")));
        }
        Ok(Partition {
            assignment,
            group_count,
        })
    }

    /// Every node in its own group.
    pub fn singletons(n: usize) -> Self {
        Partition {
            assignment: (0..n).collect(),
            group_count: n,
        }
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn group_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn group_count(&self) -> usize {
        self.group_count
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }
}

/// Reads `LABEL GROUP` lines for the nodes of `g`.
///
/// Group ids may be any non-negative integers; they are renumbered densely
/// in ascending order. Every node of `g` must appear exactly once.
pub fn load_partition(text: &str, g: &Graph) -> Result<Partition> {
    let index = g.label_index();
    let mut raw = vec![None; g.node_count()];
    let mut assigned = 0;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let parse_err = |message: String| Error::Parse {
            line: lineno + 1,
            message,
        };
        if tokens.len() != 2 {
            return Err(parse_err(format!(
                "expected LABEL GROUP, found {} tokens",
                tokens.len()
            )));
        }
        let &v = index
            .get(tokens[0])
            .ok_or_else(|| parse_err(format!("unknown node label '{}'", tokens[0])))?;
        let group: usize = tokens[1]
            .parse()
            .map_err(|_| parse_err(format!("bad group index '{}'", tokens[1])))?;
        if raw[v].replace(group).is_some() {
            return Err(parse_err(format!("node '{}' assigned twice", tokens[0])));
        }
        assigned += 1;
    }
    if assigned != g.node_count() {
        return Err(Error::PartitionMismatch {
            partition: assigned,
            graph: g.node_count(),
        });
    }
    let ids: BTreeSet<usize> = raw.iter().flatten().copied().collect();
    let dense: HashMap<usize, usize> = ids.into_iter().enumerate().map(|(i, g)| (g, i)).collect();
    Partition::new(raw.into_iter().map(|g| dense[&g.unwrap()]).collect())
}

/// The network of groups: groups `A != B` are linked iff some link of `g`
/// crosses between them. Intra-group links vanish and parallel cross-links
/// collapse into one.
pub fn quotient_graph(g: &Graph, p: &Partition) -> Result<Graph> {
    if p.len() != g.node_count() {
        return Err(Error::PartitionMismatch {
            partition: p.len(),
            graph: g.node_count(),
        });
    }
    let links: BTreeSet<(usize, usize)> = g
        .links()
        .iter()
        .filter_map(|&(u, v)| {
            let (a, b) = (p.group_of(u), p.group_of(v));
            (a != b).then(|| (a.min(b), a.max(b)))
        })
        .collect();
    Graph::from_links(p.group_count(), links)
}

/// Graphviz rendering. With `node_weights`, each vertex gets a `width`
/// proportional to its weight.
pub fn to_dot(g: &Graph, node_weights: Option<&[usize]>) -> String {
    let mut out = String::from("graph G {\n");
    if let Some(w) = node_weights {
        out.push_str("  node [shape=circle, fixedsize=true];\n");
        for v in 0..g.node_count() {
            let weight = w.get(v).copied().unwrap_or(1);
            let _ = writeln!(
                out,
                "  {v} [label=\"{}\", width={:.2}, weight={weight}];",
                escape(g.label(v)),
                0.3 * weight as f64
            );
        }
    } else {
        for v in 0..g.node_count() {
            let _ = writeln!(out, "  {v} [label=\"{}\"];", escape(g.label(v)));
        }
    }
    for &(u, v) in g.links() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
