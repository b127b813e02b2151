//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use netskel::contraction::{
    minimize_h_simp, order_links_degree, order_links_for_trial, order_links_random, tree_contract,
};
use netskel::estimator::{
    estimate_h_from_skeleton, fit_power_law, relative_error, ScalingConstants, SkeletonEstimate,
    RELIABLE_RATIO,
};
use netskel::generators::{
    gen_chain, gen_complete, gen_connected_random, gen_ring, gen_tree_with_chords,
    rewire_degree_preserving, tree_scaling_experiment,
};
use netskel::graph::{cyclomatic_number, Graph};
use netskel::search_info::{pair_search_information, total_search_information};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(
        elapsed < limit,
        format!("took {:.2?}, limit {:.0?}", elapsed, limit),
    )
}

fn chain_closed_form() -> Check {
    let t = Instant::now();
    for n in 2..=100usize {
        let h = total_search_information(&gen_chain(n).unwrap()).unwrap();
        let expect = ((n - 2) * (n - 1)) as f64;
        ensure(h == expect, format!("n={n}: {h} != {expect}"))?;
    }
    let el = t.elapsed();
    within(el, Duration::from_secs(1))?;
    Ok(format!("n=2..100 exact, {el:.2?}"))
}

fn ring_minimum() -> Check {
    let t = Instant::now();
    let m = minimize_h_simp(&gen_ring(12).unwrap(), 500, 42).unwrap();
    ensure(
        m.best.info.h_simp == 24.0,
        format!("ring 12 best {}", m.best.info.h_simp),
    )?;
    ensure(
        m.worst.info.h_simp == 78.0,
        format!("ring 12 worst {}", m.worst.info.h_simp),
    )?;
    for n in [6usize, 9, 12, 15] {
        let best = minimize_h_simp(&gen_ring(n).unwrap(), 500, 42)
            .unwrap()
            .best
            .info
            .h_simp;
        let expect = (n * n) as f64 / 3.0 - 3.0 * n as f64 + 12.0;
        ensure(
            (best - expect).abs() < 1e-9,
            format!("ring {n}: best {best}, expected {expect}"),
        )?;
    }
    let el = t.elapsed();
    within(el, Duration::from_secs(5))?;
    Ok(format!(
        "ring 12 best 24 worst 78; N=6,9,12,15 minimal; {el:.2?}"
    ))
}

fn triangle() -> Check {
    let h = total_search_information(&gen_complete(3).unwrap()).unwrap();
    ensure(h == 6.0, format!("K3 gives {h}"))?;
    Ok("K3 = 6 bits".into())
}

fn karate_regression() -> Check {
    let t = Instant::now();
    let g = common::karate();
    let h = total_search_information(&g).unwrap();
    ensure((h - 6061.0).abs() <= 1.0, format!("H = {h}"))?;
    let c = cyclomatic_number(&g);
    ensure(c == 45, format!("C = {c}"))?;
    let m = minimize_h_simp(&g, 500, 42).unwrap();
    let best = m.best.info.h_simp;
    let size = m.best.network.skeleton.node_count();
    ensure(best <= 4320.0, format!("best h_simp {best}"))?;
    ensure((28..=31).contains(&size), format!("skeleton size {size}"))?;
    let el = t.elapsed();
    within(el, Duration::from_secs(30))?;
    Ok(format!(
        "H = {h:.2}, C = {c}, best h_simp {best:.2} at N_sk = {size}, {el:.2?}"
    ))
}

fn brute_force_oracle() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst = 0.0f64;
    for case in 0..200 {
        let n = rng.gen_range(2..=8);
        let p = rng.gen_range(0.1..0.9);
        let g = gen_connected_random(n, p, rng.gen()).unwrap();
        for s in 0..n {
            for d in 0..n {
                let dp = pair_search_information(&g, s, d).unwrap();
                let bf = common::brute_force_pair_bits(&g, s, d).unwrap();
                let diff = (dp - bf).abs();
                worst = worst.max(diff);
                ensure(
                    diff <= 1e-9,
                    format!("case {case} ({s}->{d}): dp {dp}, enumeration {bf}"),
                )?;
            }
        }
    }
    Ok(format!("200 graphs, max deviation {worst:.1e} bits"))
}

fn structural_invariants() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut checked = 0;
    for case in 0..500 {
        let n = rng.gen_range(2..=60);
        let p = rng.gen_range(0.02..0.3);
        let g = gen_connected_random(n, p, rng.gen()).unwrap();
        let seed: u64 = rng.gen();
        for trial in 0..5 {
            let order = if trial == 0 {
                order_links_degree(&g)
            } else {
                order_links_for_trial(&g, seed, trial)
            };
            let net = tree_contract(&g, &order).unwrap();
            net.validate(&g)
                .map_err(|e| format!("case {case} trial {trial}: {e}"))?;
            let again =
                tree_contract(&net.skeleton, &order_links_random(&net.skeleton, seed)).unwrap();
            ensure(
                again.skeleton.node_count() == net.skeleton.node_count()
                    && again.skeleton.links() == net.skeleton.links(),
                format!("case {case} trial {trial}: re-contraction changed the skeleton"),
            )?;
            checked += 1;
        }
    }
    Ok(format!("{checked} simplifications valid and idempotent"))
}

fn tree_scaling() -> Check {
    let t = Instant::now();
    let s = tree_scaling_experiment(10, 100, 10, 1000, 42).unwrap();
    let el = t.elapsed();
    let summary = format!(
        "amplitude {:.3}, exponent {:.3}, r2 {:.4}, {el:.2?}",
        s.fit.amplitude, s.fit.exponent, s.fit.r_squared
    );
    ensure(
        (2.45..=2.65).contains(&s.fit.exponent),
        format!("exponent outside [2.45, 2.65]: {summary}"),
    )?;
    ensure(s.fit.r_squared >= 0.99, format!("r2 below 0.99: {summary}"))?;
    within(el, Duration::from_secs(600))?;
    Ok(summary)
}

fn estimator_sanity() -> Check {
    let c = ScalingConstants::default();
    for n in 2..=20 {
        let g = gen_complete(n).unwrap();
        let h = total_search_information(&g).unwrap();
        let net = tree_contract(&g, &order_links_degree(&g)).unwrap();
        let h_sk = total_search_information(&net.skeleton).unwrap();
        let n_sk = net.skeleton.node_count();
        if n_sk == n {
            let est = estimate_h_from_skeleton(h_sk, n_sk, n, &c).unwrap();
            ensure(
                (est - 1.012 * h).abs() <= 1e-9 * h.max(1.0),
                format!("K{n}: {est} vs {}", 1.012 * h),
            )?;
        }
        let direct = estimate_h_from_skeleton(h, n, n, &c).unwrap();
        ensure(
            (direct - 1.012 * h).abs() <= 1e-9 * h.max(1.0),
            format!("K{n} ratio 1: {direct}"),
        )?;
    }

    let g = common::karate();
    let h = total_search_information(&g).unwrap();
    let net = tree_contract(&g, &order_links_degree(&g)).unwrap();
    let h_sk = total_search_information(&net.skeleton).unwrap();
    let est = SkeletonEstimate::new(h_sk, net.skeleton.node_count(), g.node_count(), &c).unwrap();
    let err = relative_error(est.estimate_bits, h).unwrap();
    ensure(err.abs() < 0.5, format!("karate relative error {err}"))?;
    ensure(
        est.ratio < RELIABLE_RATIO || !est.low_confidence,
        format!("ratio {} flagged low confidence", est.ratio),
    )?;
    for (n_sk, n_o) in [(3, 10), (29, 100), (30, 100), (50, 60)] {
        let e = SkeletonEstimate::new(10.0, n_sk, n_o, &c).unwrap();
        ensure(
            e.low_confidence == (e.ratio < RELIABLE_RATIO),
            format!("flag wrong at ratio {}", e.ratio),
        )?;
    }
    Ok(format!(
        "complete graphs give 1.012 H; karate ratio {:.3}, relative error {:+.3}",
        est.ratio, err
    ))
}

fn sorted_degrees(g: &Graph) -> Vec<usize> {
    let mut d = g.degrees();
    d.sort_unstable();
    d
}

fn randomization() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut changed = 0;
    for case in 0..50 {
        let n = rng.gen_range(5..=60);
        let g = if case % 2 == 0 {
            gen_connected_random(n, rng.gen_range(0.05..0.3), rng.gen()).unwrap()
        } else {
            gen_tree_with_chords(n, rng.gen_range(1..=n), rng.gen()).unwrap()
        };
        if g.link_count() < 2 {
            continue;
        }
        for seed in 0..5 {
            let r = rewire_degree_preserving(&g, 10 * g.link_count(), seed).unwrap();
            ensure(
                r.degrees() == g.degrees(),
                format!("case {case} seed {seed}: degrees changed"),
            )?;
            ensure(
                sorted_degrees(&r) == sorted_degrees(&g),
                format!("case {case}: multiset changed"),
            )?;
            ensure(
                r.is_connected(),
                format!("case {case} seed {seed}: disconnected"),
            )?;
            ensure(
                r.link_count() == g.link_count(),
                format!("case {case}: link count changed"),
            )?;
            if r.links() != g.links() {
                changed += 1;
            }
        }
    }
    Ok(format!(
        "50 graphs x 5 seeds preserved; {changed} rewirings changed the graph"
    ))
}

fn synthetic_scaling() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut corpus = Vec::new();
    for i in 0..10 {
        corpus.push(gen_ring(8 + 6 * i).unwrap());
        let n = rng.gen_range(20..=80);
        corpus.push(gen_tree_with_chords(n, rng.gen_range(2..=n / 3), rng.gen()).unwrap());
        let n = rng.gen_range(20..=80);
        corpus.push(gen_connected_random(n, rng.gen_range(0.04..0.15), rng.gen()).unwrap());
    }
    let points: Vec<(f64, f64)> = corpus
        .iter()
        .map(|g| {
            let h = total_search_information(g).unwrap();
            let net = tree_contract(g, &order_links_degree(g)).unwrap();
            let h_sk = total_search_information(&net.skeleton).unwrap();
            (
                net.skeleton.node_count() as f64 / g.node_count() as f64,
                h_sk / h,
            )
        })
        .collect();
    let fit = fit_power_law(&points).map_err(|e| e.to_string())?;
    let summary = format!(
        "30 graphs: amplitude {:.3}, exponent {:.3}, r2 {:.4}",
        fit.amplitude, fit.exponent, fit.r_squared
    );
    ensure(
        fit.exponent > 0.0,
        format!("non-positive exponent: {summary}"),
    )?;
    ensure(fit.r_squared >= 0.9, format!("r2 below 0.9: {summary}"))?;
    Ok(summary)
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 chain closed form", chain_closed_form),
        ("2 ring minimum", ring_minimum),
        ("3 triangle", triangle),
        ("4 karate regression", karate_regression),
        ("5 brute-force oracle", brute_force_oracle),
        ("6 structural invariants", structural_invariants),
        ("7 tree scaling", tree_scaling),
        ("8 estimator sanity", estimator_sanity),
        ("9 randomization", randomization),
        ("10 synthetic scaling law", synthetic_scaling),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
