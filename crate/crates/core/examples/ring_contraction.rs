//! Tree-contraction of rings: the best random ordering against the
//! closed-form optimum, and the spread over orderings.
//!
//! Run with `cargo run --example ring_contraction`.

use netskel::contraction::minimize_h_simp;
use netskel::generators::gen_ring;
use netskel::search_info::{ring_min_simplified_h, total_search_information};

fn main() -> netskel::Result<()> {
    println!(
        "{:>4} {:>10} {:>10} {:>10} {:>10}  best parts",
        "N", "H", "best", "optimum", "worst"
    );
    for n in [6, 9, 12, 15, 18, 24, 30] {
        let g = gen_ring(n)?;
        let h = total_search_information(&g)?;
        let m = minimize_h_simp(&g, 500, 1)?;
        let (optimum, _) = ring_min_simplified_h(n)?;
        let mut parts = m.best.network.supernode_sizes();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        println!(
            "{n:>4} {h:>10.0} {:>10.0} {optimum:>10.0} {:>10.0}  {parts:?}",
            m.best.info.h_simp, m.worst.info.h_simp
        );
    }
    Ok(())
}
