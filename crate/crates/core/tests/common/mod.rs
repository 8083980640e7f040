#![allow(dead_code)]

use bergex_core::search::k_subsets;
use bergex_core::{Hypergraph, Multigraph};
use proptest::prelude::*;

/// Random `r`-graph on `n` vertices with at most `max_edges` distinct edges.
pub fn hypergraph(n: std::ops::RangeInclusive<usize>, r: usize, max_edges: usize) -> impl Strategy<Value = Hypergraph> {
    n.prop_flat_map(move |n| {
        let all = k_subsets(n, r);
        let cap = max_edges.min(all.len());
        proptest::sample::subsequence(all, 0..=cap).prop_map(move |edges| Hypergraph::new(n, r, edges).unwrap())
    })
}

/// Random simple graph on `n` vertices.
pub fn graph(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Multigraph> {
    n.prop_flat_map(|n| {
        let pairs: Vec<(u32, u32)> = k_subsets(n, 2).into_iter().map(|p| (p[0], p[1])).collect();
        let len = pairs.len();
        proptest::sample::subsequence(pairs, 0..=len).prop_map(move |e| Multigraph::new(n, e).unwrap())
    })
}

pub fn pattern_pool() -> Vec<Multigraph> {
    let mut pool: Vec<Multigraph> = ["C2", "K3", "C4", "P3", "P4", "K1,3", "C5", "K2,3", "K4"]
        .iter()
        .map(|n| Multigraph::named(n).unwrap())
        .collect();
    pool.push(Multigraph::new(4, vec![(0, 1), (2, 3)]).unwrap());
    pool.push(Multigraph::new(3, vec![(0, 1), (0, 1), (1, 2)]).unwrap());
    pool
}

pub fn pattern() -> impl Strategy<Value = Multigraph> {
    proptest::sample::select(pattern_pool())
}

/// Naive count of `r`-subsets spanning a clique.
pub fn naive_cliques(g: &Multigraph, r: usize) -> u64 {
    k_subsets(g.n(), r)
        .iter()
        .filter(|s| {
            s.iter()
                .enumerate()
                .all(|(i, &a)| s[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        })
        .count() as u64
}
