//! Mean search information of uniform random labelled trees and the power
//! law through it.
//!
//! Run with `cargo run --release --example tree_scaling [n_min n_max step samples]`.

use netskel::generators::tree_scaling_experiment;

fn main() -> netskel::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("arguments are integers"))
        .collect();
    let (n_min, n_max, step, samples) = match args[..] {
        [a, b, c, d] => (a, b, c, d),
        [] => (10, 100, 10, 1000),
        _ => panic!("expected no arguments or n_min n_max step samples"),
    };

    let s = tree_scaling_experiment(n_min, n_max, step, samples, 42)?;
    println!("{:>6} {:>14} {:>12} {:>14}", "N", "mean bits", "std", "fit");
    for r in &s.rows {
        println!(
            "{:>6} {:>14.2} {:>12.2} {:>14.2}",
            r.n,
            r.mean_bits,
            r.std_bits,
            s.fit.predict(r.n as f64)
        );
    }
    println!(
        "\nH_tree ~ {:.4} N^{:.4}  (r2 {:.5}, {} sizes)",
        s.fit.amplitude, s.fit.exponent, s.fit.r_squared, s.fit.n_points
    );
    Ok(())
}
