mod common;

use common::{arb_connected_graph, brute_force_pair_bits, brute_force_total, karate};
use netskel::generators::{gen_chain, gen_random_tree, gen_ring};
use netskel::search_info::{
    chain_search_information, pair_search_information, ring_min_simplified_h, search_info_report,
    shortest_path_dag, total_search_information, SearchInfoOptions,
};
use netskel::Graph;
use proptest::prelude::*;

#[test]
fn brute_force_small_cases() {
    let square = gen_ring(4).unwrap();
    assert_eq!(brute_force_pair_bits(&square, 0, 2), Some(0.0));
    let path = gen_chain(3).unwrap();
    assert_eq!(brute_force_pair_bits(&path, 1, 0), Some(1.0));
    // path of 3 and of 4, enumerated
    assert_eq!(brute_force_total(&path), 2.0);
    assert_eq!(brute_force_total(&gen_chain(4).unwrap()), 6.0);
    assert_eq!(brute_force_total(&gen_ring(3).unwrap()), 6.0);
}

#[test]
fn chain_totals_match_closed_form() {
    for n in 1..=50 {
        let g = gen_chain(n).unwrap();
        assert_eq!(
            total_search_information(&g).unwrap(),
            chain_search_information(n).unwrap(),
            "n = {n}"
        );
    }
}

#[test]
fn ring_minimum_divisible_by_three() {
    for n in (3..=90).step_by(3) {
        let (h, parts) = ring_min_simplified_h(n).unwrap();
        let n = n as f64;
        assert_eq!(h, n * n / 3.0 - 3.0 * n + 12.0);
        assert!(parts.iter().all(|&p| p as f64 == n / 3.0));
    }
}

#[test]
fn karate_total_matches_published_value() {
    let g = karate();
    let r = search_info_report(&g, SearchInfoOptions::default()).unwrap();
    assert!((r.total_bits - 6061.0).abs() <= 1.0, "{}", r.total_bits);
    assert!((r.average_bits * 34.0 * 34.0 - r.total_bits).abs() < 1e-9);
}

/// The unique tree path from s to d, by parent pointers.
fn tree_path(g: &Graph, s: usize, d: usize) -> Vec<usize> {
    let dag = shortest_path_dag(g, s).unwrap();
    let mut path = vec![d];
    let mut v = d;
    while v != s {
        assert_eq!(dag.predecessors[v].len(), 1);
        v = dag.predecessors[v][0];
        path.push(v);
    }
    path.reverse();
    path
}

#[test]
fn trees_reduce_to_single_products() {
    for seed in 0..20 {
        let g = gen_random_tree(15, seed).unwrap();
        for s in 0..15 {
            for d in 0..15 {
                if s == d {
                    continue;
                }
                let path = tree_path(&g, s, d);
                let mut p = 1.0 / g.degree(s) as f64;
                for &j in &path[1..path.len() - 1] {
                    p /= (g.degree(j) - 1) as f64;
                }
                let h = pair_search_information(&g, s, d).unwrap();
                assert!((h + p.log2()).abs() < 1e-12);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dp_matches_enumeration(g in arb_connected_graph(1, 8, 0.3)) {
        let n = g.node_count();
        for s in 0..n {
            for d in 0..n {
                let dp = pair_search_information(&g, s, d).unwrap();
                let oracle = brute_force_pair_bits(&g, s, d).unwrap();
                prop_assert!((dp - oracle).abs() < 1e-9, "{s}->{d}: {dp} vs {oracle}");
                prop_assert!(dp >= 0.0 && dp.is_finite());
            }
        }
    }

    #[test]
    fn extra_disjoint_shortest_path_never_hurts(
        g in arb_connected_graph(3, 10, 0.2),
        pick in any::<(usize, usize)>(),
    ) {
        let n = g.node_count();
        let (s, d) = (pick.0 % n, pick.1 % n);
        let dag = shortest_path_dag(&g, s).unwrap();
        let dist = dag.dist[d];
        prop_assume!(s != d && dist >= 2);

        // fresh interior nodes n .. n + dist - 2
        let mut links: Vec<(usize, usize)> = g.links().to_vec();
        let fresh: Vec<usize> = (n..n + dist - 1).collect();
        let mut prev = s;
        for &f in &fresh {
            links.push((prev, f));
            prev = f;
        }
        links.push((prev, d));
        let bigger = Graph::from_links(n + fresh.len(), links).unwrap();

        let before = pair_search_information(&g, s, d).unwrap();
        let after = pair_search_information(&bigger, s, d).unwrap();
        prop_assert!(after <= before + 1e-12, "{before} -> {after}");
    }

    #[test]
    fn report_invariants(g in arb_connected_graph(1, 20, 0.15)) {
        let r = search_info_report(&g, SearchInfoOptions { keep_pairs: true, ..Default::default() }).unwrap();
        let n = g.node_count();
        let pairs = r.pair_bits.unwrap();
        for (s, row) in pairs.iter().enumerate() {
            prop_assert_eq!(row[s], 0.0);
            prop_assert!(row.iter().all(|&h| h >= 0.0 && h.is_finite()));
        }
        let total: f64 = r.per_source_bits.iter().sum();
        prop_assert!((total - r.total_bits).abs() <= 1e-9 * total.max(1.0));
        prop_assert!((r.average_bits * (n * n) as f64 - r.total_bits).abs() <= 1e-9 * total.max(1.0));
    }
}
