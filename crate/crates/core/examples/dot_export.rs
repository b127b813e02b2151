//! Writes the best karate skeleton as Graphviz DOT, node widths scaled by
//! super-node size.
//!
//! Run with `cargo run --release --example dot_export | dot -Tsvg > skeleton.svg`.

use netskel::contraction::minimize_h_simp;
use netskel::graph::{load_edge_list, to_dot};
use netskel::KARATE_EDGES;

fn main() -> netskel::Result<()> {
    let g = load_edge_list(KARATE_EDGES)?;
    let best = minimize_h_simp(&g, 500, 42)?.best;
    let sizes = best.network.supernode_sizes();
    print!("{}", to_dot(&best.network.skeleton, Some(&sizes)));
    Ok(())
}
