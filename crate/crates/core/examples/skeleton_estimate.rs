//! Estimates total search information from the degree-sum skeleton alone and
//! reports the error against the exact value as the skeleton shrinks.
//!
//! Run with `cargo run --release --example skeleton_estimate`.

use netskel::contraction::{order_links_degree, tree_contract};
use netskel::estimator::{relative_error, ScalingConstants, SkeletonEstimate};
use netskel::generators::{gen_connected_random, gen_tree_with_chords};
use netskel::graph::{load_edge_list, Graph};
use netskel::search_info::total_search_information;
use netskel::KARATE_EDGES;

fn row(name: &str, g: &Graph, c: &ScalingConstants) -> netskel::Result<()> {
    let h = total_search_information(g)?;
    let net = tree_contract(g, &order_links_degree(g))?;
    let h_sk = total_search_information(&net.skeleton)?;
    let est = SkeletonEstimate::new(h_sk, net.skeleton.node_count(), g.node_count(), c)?;
    println!(
        "{name:<16} {:>4} {:>4} {:>6.3} {:>11.1} {:>11.1} {:>+8.3} {}",
        g.node_count(),
        net.skeleton.node_count(),
        est.ratio,
        h,
        est.estimate_bits,
        relative_error(est.estimate_bits, h)?,
        if est.low_confidence {
            "low-confidence"
        } else {
            ""
        }
    );
    Ok(())
}

fn main() -> netskel::Result<()> {
    let c = ScalingConstants::default();
    println!(
        "{:<16} {:>4} {:>4} {:>6} {:>11} {:>11} {:>8}",
        "graph", "N", "N_sk", "ratio", "H", "estimate", "rel.err"
    );
    row("karate", &load_edge_list(KARATE_EDGES)?, &c)?;
    for chords in [60, 30, 15, 8, 4] {
        row(
            &format!("tree+{chords} chords"),
            &gen_tree_with_chords(120, chords, 7)?,
            &c,
        )?;
    }
    for p in [0.2, 0.1, 0.05, 0.03] {
        row(&format!("ER p={p}"), &gen_connected_random(120, p, 7)?, &c)?;
    }
    Ok(())
}
