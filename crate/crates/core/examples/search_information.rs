//! Search information of the karate club network, per source and in total.
//!
//! Run with `cargo run --example search_information`.

use netskel::graph::load_edge_list;
use netskel::search_info::{pair_search_information, search_info_report, SearchInfoOptions};
use netskel::KARATE_EDGES;

fn main() -> netskel::Result<()> {
    let g = load_edge_list(KARATE_EDGES)?;
    let report = search_info_report(&g, SearchInfoOptions::default())?;

    println!("nodes {}  links {}", report.n, report.l);
    println!("total   {:.2} bits", report.total_bits);
    println!("average {:.4} bits per ordered pair", report.average_bits);

    let mut by_source: Vec<(usize, f64)> =
        report.per_source_bits.iter().copied().enumerate().collect();
    by_source.sort_by(|a, b| a.1.total_cmp(&b.1));
    println!("\neasiest sources to navigate from:");
    for &(s, bits) in by_source.iter().take(5) {
        println!(
            "  {:>3}  degree {:>2}  {:8.2} bits",
            g.label(s),
            g.degree(s),
            bits
        );
    }
    println!("hardest:");
    for &(s, bits) in by_source.iter().rev().take(5) {
        println!(
            "  {:>3}  degree {:>2}  {:8.2} bits",
            g.label(s),
            g.degree(s),
            bits
        );
    }

    let idx = g.label_index();
    let (a, b) = (idx["1"], idx["34"]);
    println!(
        "\nH(1 -> 34) = {:.4} bits",
        pair_search_information(&g, a, b)?
    );
    println!(
        "H(34 -> 1) = {:.4} bits",
        pair_search_information(&g, b, a)?
    );
    Ok(())
}
