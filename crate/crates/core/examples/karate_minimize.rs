//! Minimises the simplified search information of the karate network over
//! random contraction orderings and prints every trial as CSV, ready for a
//! scatter plot of h_simp against h_skeleton.
//!
//! Run with `cargo run --release --example karate_minimize > trials.csv`.

use netskel::contraction::minimize_h_simp;
use netskel::graph::{cyclomatic_number, load_edge_list};
use netskel::search_info::total_search_information;
use netskel::KARATE_EDGES;

fn main() -> netskel::Result<()> {
    let g = load_edge_list(KARATE_EDGES)?;
    let h = total_search_information(&g)?;
    let m = minimize_h_simp(&g, 500, 42)?;

    eprintln!(
        "original H {h:.2} bits, cyclomatic number {}",
        cyclomatic_number(&g)
    );
    for (tag, r) in [("best", &m.best), ("worst", &m.worst)] {
        eprintln!(
            "{tag:>5}: trial {:>3}, skeleton {} nodes, h_skeleton {:.2}, h_simp {:.2}",
            r.trial,
            r.network.skeleton.node_count(),
            r.info.h_skeleton,
            r.info.h_simp
        );
    }

    println!("trial,skeleton_nodes,h_skeleton,h_supernodes,h_simp");
    for s in &m.samples {
        println!(
            "{},{},{:.4},{:.4},{:.4}",
            s.trial, s.skeleton_nodes, s.h_skeleton, s.h_supernodes, s.h_simp
        );
    }
    Ok(())
}
