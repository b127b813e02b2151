//! Navigability analysis of networks through their skeletons.
//!
//! * [`search_info`] measures how many binary decisions a walker needs to
//!   follow shortest paths, with degenerate paths summed exactly.
//! * [`contraction`] merges nodes that carry no alternative routes into
//!   tree-shaped super-nodes, leaving a skeleton with the same cyclomatic
//!   number, and searches orderings for the least informative result.
//! * [`estimator`] fits power laws and estimates a network's search
//!   information from its skeleton alone.
//! * [`generators`] builds rings, chains, random trees, random connected
//!   graphs and degree-preserving randomizations.
//! * [`cli`] wires all of it into the `netskel` binary.
//!
//! ```
//! use netskel::{generators::gen_ring, contraction::minimize_h_simp};
//!
//! let ring = gen_ring(12).unwrap();
//! let m = minimize_h_simp(&ring, 200, 1).unwrap();
//! assert_eq!(m.best.info.h_simp, 24.0);
//! ```

pub mod cli;
pub mod contraction;
pub mod error;
pub mod estimator;
pub mod generators;
pub mod graph;
pub mod search_info;

pub use error::{Error, Result};
pub use graph::{Graph, Partition};

/// The Zachary karate club network bundled with the crate.
pub const KARATE_EDGES: &str = include_str!("../data/karate.edges");
