//! Collapses a partition of the karate network into a quotient graph and
//! compares path diversity before and after.
//!
//! Run with `cargo run --example quotient_partition [partition-file]`.

use netskel::graph::{
    cyclomatic_number, load_edge_list, load_partition, quotient_graph, Partition,
};
use netskel::KARATE_EDGES;

const FOUR_GROUPS: &str = include_str!("../data/karate_4groups.partition");

fn main() -> netskel::Result<()> {
    let g = load_edge_list(KARATE_EDGES)?;
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable partition file"),
        None => FOUR_GROUPS.to_string(),
    };
    let p = load_partition(&text, &g)?;

    let report = |name: &str, p: &Partition| -> netskel::Result<()> {
        let q = quotient_graph(&g, p)?;
        println!(
            "{name:<12} groups {:>2}  links {:>2}  cyclomatic {:>2}",
            p.group_count(),
            q.link_count(),
            cyclomatic_number(&q)
        );
        Ok(())
    };
    report("original", &Partition::singletons(g.node_count()))?;
    report("partition", &p)?;
    Ok(())
}
