mod common;

use bergex_core::audit::{audit, profile};
use bergex_core::engine::{classify_pairs, clique_bound_check, eliminate, find_bad_set, Colour, EngineStatus};
use bergex_core::matching::maximum_matching;
use bergex_core::reduction::{gp2_certify, gp2_decompose, shuffled_order, PairRule};
use bergex_core::berge::find_subgraph;
use bergex_core::cliques::binomial;
use bergex_core::{count_cliques, is_berge_free, Hypergraph, Multigraph};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn degree_sum(h in (2usize..=5).prop_flat_map(|r| common::hypergraph(r..=9, r, 20))) {
        let total: usize = (0..h.n() as u32).map(|v| h.degree(v)).sum();
        prop_assert_eq!(total, h.r() * h.edge_count());
    }

    #[test]
    fn clique_counts_match_naive(g in common::graph(1..=8)) {
        prop_assert_eq!(count_cliques(&g, 1).unwrap().count, g.n() as u64);
        prop_assert_eq!(count_cliques(&g, 2).unwrap().count, g.edge_count() as u64);
        for r in 3..=5 {
            prop_assert_eq!(count_cliques(&g, r).unwrap().count, common::naive_cliques(&g, r));
        }
    }

    #[test]
    fn gp2_identity_for_every_order(h in common::hypergraph(3..=8, 3, 16), seed in any::<u64>(), f in common::pattern()) {
        for order in [None, Some(shuffled_order(h.edge_count(), seed))] {
            for rule in [PairRule::Lexicographic, PairRule::Random(seed)] {
                let d = gp2_decompose(&h, order.as_deref(), rule).unwrap();
                let rep = gp2_certify(&h, &f, &d).unwrap();
                prop_assert!(rep.check_identity && rep.check_cliques);
                if rep.h_berge_free {
                    prop_assert!(rep.check_freeness);
                }
                if let Some(w) = &rep.lifted_witness {
                    prop_assert!(w.verify(&h, &f));
                }
            }
        }
    }

    #[test]
    fn colouring_partitions_covered_pairs(h in (3usize..=5).prop_flat_map(|r| common::hypergraph(r..=8, r, 12))) {
        let c = classify_pairs(&h).unwrap();
        let covered = h.covered_pairs();
        prop_assert_eq!(c.pairs.len(), covered.len());
        for (e, (pair, m)) in c.pairs.iter().zip(&covered) {
            prop_assert_eq!(e.pair, *pair);
            let blue = *m <= c.threshold;
            prop_assert_eq!(e.colour == Colour::Blue, blue);
            prop_assert!(matches!(e.colour, Colour::Blue | Colour::Red));
        }
    }

    #[test]
    fn bad_set_iff_deficient(adj in proptest::collection::vec(proptest::collection::vec(0usize..6, 0..4), 1..7)) {
        let adj: Vec<Vec<usize>> = adj.into_iter().map(|mut v| { v.sort_unstable(); v.dedup(); v }).collect();
        let m = maximum_matching(6, &adj);
        match find_bad_set(6, &adj) {
            Some(b) => {
                prop_assert!(m.size() < adj.len());
                prop_assert!(b.neighbors.len() < b.x.len());
                let mut nb: Vec<usize> = b.x.iter().flat_map(|&i| adj[i].clone()).collect();
                nb.sort_unstable();
                nb.dedup();
                prop_assert_eq!(nb, b.neighbors);
            }
            None => prop_assert_eq!(m.size(), adj.len()),
        }
    }

    #[test]
    fn engine_invariants(
        h in (3usize..=4).prop_flat_map(|r| common::hypergraph(r..=9, r, 14)),
        f in proptest::sample::select(vec!["C4", "K2,3", "P4", "C5"]),
    ) {
        let f = Multigraph::named(f).unwrap();
        let rep = eliminate(&h, &f, true).unwrap();
        let threshold = binomial(h.r() as u64, 2) as usize - 2;
        prop_assert!(rep.iterations <= rep.g.edge_count());
        prop_assert!(rep.deleted.iter().all(|d| d.red_hyperedges <= threshold));
        match rep.status {
            EngineStatus::Completed => {
                prop_assert!(find_subgraph(&rep.g1, &f).unwrap().is_none());
                prop_assert!(find_subgraph(&rep.g2, &f).unwrap().is_none());
                prop_assert_eq!(rep.g1.edge_count() + rep.g2.edge_count(), rep.g.edge_count() + rep.x);
                for &(a, b) in rep.g.edges() {
                    prop_assert!(rep.g1.has_edge(a, b) || rep.g2.has_edge(a, b));
                }
            }
            EngineStatus::BergeFound => {
                prop_assert!(rep.witness.as_ref().unwrap().verify(&h, &f));
            }
            EngineStatus::InvariantViolation => prop_assert!(false, "violations {:?}", rep.violations),
        }
        prop_assert_eq!(rep.trace.len(), rep.iterations);
    }

    #[test]
    fn triangle_bound_in_c4_free_graphs(g in common::graph(4..=9)) {
        // keep a C4-free subgraph greedily
        let c4 = Multigraph::cycle(4).unwrap();
        let mut kept = Vec::new();
        for &e in g.edges() {
            kept.push(e);
            let trial = Multigraph::new(g.n(), kept.clone()).unwrap();
            if find_subgraph(&trial, &c4).unwrap().is_some() {
                kept.pop();
            }
        }
        let free = Multigraph::new(g.n(), kept).unwrap();
        // neighbourhoods of a C4-free graph are matchings: c = 1/2, i = 1
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let rep = clique_bound_check(&free, &half, 1, free.edge_count() as u64, 3).unwrap();
        prop_assert!(rep.holds);
    }

    #[test]
    fn audit_clean_on_linear_inputs(h in common::hypergraph(5..=10, 3, 12)) {
        // greedy linear subfamily; K2,t with t = n - 1 cannot fit
        let mut kept: Vec<Vec<u32>> = Vec::new();
        for e in h.edges() {
            let ok = kept.iter().all(|k| k.iter().filter(|v| e.contains(v)).count() <= 1);
            if ok {
                kept.push(e.clone());
            }
        }
        let lin = Hypergraph::new(h.n(), 3, kept).unwrap();
        let t = h.n() - 1;
        let rep = audit(&lin, t, 400).unwrap();
        prop_assert!(rep.passed(), "{:?}", rep.violations);
        for v in 0..lin.n() as u32 {
            let p = profile(&lin, v, t).unwrap();
            for u in &p.first {
                prop_assert_eq!(u.v_u.len(), 2 * u.e_u.len());
            }
        }
    }
}

#[test]
fn k4_free_check_on_patterns() {
    let h = Hypergraph::new(6, 3, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
    assert!(eliminate(&h, &Multigraph::complete(3), false).is_err());
    assert!(is_berge_free(&h, &[Multigraph::cycle(2).unwrap()]));
}
