//! Compares the average search information of a network with that of
//! degree-preserving random counterparts.
//!
//! Run with `cargo run --release --example randomized_baseline`.

use netskel::generators::{gen_tree_with_chords, rewire_degree_preserving};
use netskel::graph::{load_edge_list, Graph};
use netskel::search_info::average_search_information;
use netskel::KARATE_EDGES;

const REALISATIONS: u64 = 20;

fn compare(name: &str, g: &Graph) -> netskel::Result<()> {
    let h = average_search_information(g)?;
    let mut random = Vec::new();
    for seed in 0..REALISATIONS {
        let r = rewire_degree_preserving(g, 10 * g.link_count(), seed)?;
        random.push(average_search_information(&r)?);
    }
    let mean = random.iter().sum::<f64>() / random.len() as f64;
    let var = random.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / random.len() as f64;
    println!(
        "{name:<18} H {h:>7.4}  H_R {mean:>7.4} +- {:.4}  H/H_R {:.4}",
        var.sqrt(),
        h / mean
    );
    Ok(())
}

fn main() -> netskel::Result<()> {
    compare("karate", &load_edge_list(KARATE_EDGES)?)?;
    compare("tree+10 chords", &gen_tree_with_chords(80, 10, 3)?)?;
    compare("tree+40 chords", &gen_tree_with_chords(80, 40, 3)?)?;
    Ok(())
}
