//! Clique counting and triangle listing on simple graphs.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Multigraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCount {
    pub r: usize,
    pub count: u64,
}

/// Counts the `r`-vertex complete subgraphs of a simple graph.
///
/// Uses a pivot tree: every clique is either "held" (forced) or drawn from a
/// set of pivots along exactly one root-to-leaf path, so a leaf with `h` held
/// vertices and `p` pivots contributes `C(p, r - h)` cliques.
pub fn count_cliques(g: &Multigraph, r: usize) -> Result<CliqueCount> {
    if !g.is_simple() {
        return Err(Error::ParallelEdges);
    }
    if r == 0 {
        return Err(Error::Parameter("clique size must be at least 1".into()));
    }
    let adj = g.adjacency();
    Ok(CliqueCount {
        r,
        count: count_cliques_adj(&adj, r),
    })
}

/// Clique count over a raw adjacency matrix of bitsets.
pub(crate) fn count_cliques_adj(adj: &[FixedBitSet], r: usize) -> u64 {
    let n = adj.len();
    if r == 1 {
        return n as u64;
    }
    let mut total = 0u64;
    for v in 0..n {
        // Later neighbours only, so each clique is rooted at its smallest vertex.
        let mut cand = adj[v].clone();
        cand.set_range(..v + 1, false);
        pivot_count(adj, &mut cand, 1, 0, r, &mut total);
    }
    total
}

fn pivot_count(
    adj: &[FixedBitSet],
    cand: &mut FixedBitSet,
    held: usize,
    pivots: usize,
    r: usize,
    total: &mut u64,
) {
    if held > r {
        return;
    }
    if cand.is_clear() {
        *total += binomial(pivots as u64, (r - held) as u64);
        return;
    }
    // A leaf can never reach r vertices from here.
    if held + pivots + cand.count_ones(..) < r {
        return;
    }
    let pivot = cand
        .ones()
        .max_by_key(|&u| (adj[u].intersection(cand).count(), std::cmp::Reverse(u)))
        .expect("non-empty candidate set");
    let mut branch = cand.clone();
    branch.difference_with(&adj[pivot]);
    let order: Vec<usize> = branch.ones().collect();
    for v in order {
        let mut next = cand.clone();
        next.intersect_with(&adj[v]);
        if v == pivot {
            pivot_count(adj, &mut next, held, pivots + 1, r, total);
        } else {
            pivot_count(adj, &mut next, held + 1, pivots, r, total);
        }
        cand.set(v, false);
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Every triangle once, as an ascending triple, in lexicographic order.
pub fn list_triangles(g: &Multigraph) -> Result<Vec<[u32; 3]>> {
    if !g.is_simple() {
        return Err(Error::ParallelEdges);
    }
    let adj = g.adjacency();
    let mut out = Vec::new();
    for a in 0..g.n() {
        for b in adj[a].ones().filter(|&b| b > a) {
            for c in adj[a].intersection(&adj[b]).filter(|&c| c > b) {
                out.push([a as u32, b as u32, c as u32]);
            }
        }
    }
    Ok(out)
}

/// Size of a largest clique (exact branch and bound with greedy colouring).
pub fn max_clique_size(adj: &[FixedBitSet]) -> usize {
    let n = adj.len();
    let mut best = 0;
    let mut cand = FixedBitSet::with_capacity(n);
    cand.insert_range(..);
    expand(adj, 0, cand, &mut best);
    best
}

fn expand(adj: &[FixedBitSet], size: usize, mut cand: FixedBitSet, best: &mut usize) {
    if cand.is_clear() {
        *best = (*best).max(size);
        return;
    }
    while let Some(v) = cand.minimum() {
        if size + cand.count_ones(..) <= *best {
            return;
        }
        let mut next = cand.clone();
        next.intersect_with(&adj[v]);
        expand(adj, size + 1, next, best);
        cand.set(v, false);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(g: &Multigraph, r: usize) -> u64 {
        let n = g.n();
        let adj = g.adjacency();
        let mut count = 0;
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != r {
                continue;
            }
            let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let ok = vs
                .iter()
                .enumerate()
                .all(|(i, &a)| vs[i + 1..].iter().all(|&b| adj[a].contains(b)));
            if ok {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn k4_triangles() {
        let k4 = Multigraph::complete(4);
        assert_eq!(count_cliques(&k4, 3).unwrap().count, 4);
        assert_eq!(count_cliques(&k4, 4).unwrap().count, 1);
        assert_eq!(count_cliques(&k4, 5).unwrap().count, 0);
        assert_eq!(list_triangles(&k4).unwrap().len(), 4);
    }

    #[test]
    fn disjoint_triangles() {
        let g = Multigraph::new(6, vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(count_cliques(&g, 3).unwrap().count, 2);
    }

    #[test]
    fn triangle_listing_examples() {
        assert_eq!(list_triangles(&Multigraph::complete(3)).unwrap(), vec![[0, 1, 2]]);
        assert!(list_triangles(&Multigraph::cycle(4).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn parallel_edges_rejected() {
        let c2 = Multigraph::cycle(2).unwrap();
        assert!(count_cliques(&c2, 2).is_err());
        assert!(list_triangles(&c2).is_err());
    }

    #[test]
    fn low_orders() {
        let g = Multigraph::cycle(5).unwrap();
        assert_eq!(count_cliques(&g, 1).unwrap().count, 5);
        assert_eq!(count_cliques(&g, 2).unwrap().count, 5);
    }

    #[test]
    fn max_clique_examples() {
        assert_eq!(max_clique_size(&Multigraph::complete(5).adjacency()), 5);
        assert_eq!(max_clique_size(&Multigraph::cycle(5).unwrap().adjacency()), 2);
        assert_eq!(max_clique_size(&Multigraph::empty(3).adjacency()), 1);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn graph() -> impl Strategy<Value = Multigraph> {
            (1usize..=8).prop_flat_map(|n| {
                let pairs: Vec<(u32, u32)> = (0..n as u32)
                    .flat_map(|a| (a + 1..n as u32).map(move |b| (a, b)))
                    .collect();
                let m = pairs.len();
                proptest::collection::vec(any::<bool>(), m).prop_map(move |keep| {
                    let edges = pairs
                        .iter()
                        .zip(keep)
                        .filter(|(_, k)| *k)
                        .map(|(&e, _)| e)
                        .collect();
                    Multigraph::new(n, edges).unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn agrees_with_subset_oracle(g in graph(), r in 1usize..=6) {
                prop_assert_eq!(count_cliques(&g, r).unwrap().count, naive(&g, r));
            }

            #[test]
            fn edge_and_vertex_counts(g in graph()) {
                prop_assert_eq!(count_cliques(&g, 1).unwrap().count, g.n() as u64);
                prop_assert_eq!(count_cliques(&g, 2).unwrap().count, g.edge_count() as u64);
                prop_assert_eq!(list_triangles(&g).unwrap().len() as u64, count_cliques(&g, 3).unwrap().count);
            }
        }
    }
}
