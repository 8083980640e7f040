//! Exact Turán numbers at small sizes by branch and bound.
//!
//! Both searches walk candidate edges in canonical order with an include
//! branch before the exclude branch. The include branch only checks copies
//! through the new edge, which is enough because containment is monotone.
//! At the root the first candidate is forced in: any non-empty extremal
//! configuration can be relabelled to contain it.

use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::berge::{contains_berge_using, oracle_contains_berge, DynamicHost, Host};
use crate::cliques::count_cliques_adj;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Multigraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub max_nodes: u64,
    #[serde(with = "secs")]
    pub max_time: Duration,
}

mod secs {
    use serde::Serializer;
    use std::time::Duration;
    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_nodes: 100_000_000,
            max_time: Duration::from_secs(600),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Exact,
    LowerBoundOnly,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Hypergraph(Hypergraph),
    Graph(Multigraph),
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub value: u64,
    pub witness: Witness,
    pub status: SearchStatus,
    pub nodes_explored: u64,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SearchResult {
    pub fn is_exact(&self) -> bool {
        self.status == SearchStatus::Exact
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<u32>> {
    fn go(start: u32, n: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if (n - v) as usize + cur.len() < k {
                break;
            }
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n as u32, k, &mut Vec::new(), &mut out);
    out
}

struct Clock {
    budget: Budget,
    start: Instant,
    nodes: u64,
    exhausted: bool,
}

impl Clock {
    fn new(budget: Budget) -> Self {
        Self {
            budget,
            start: Instant::now(),
            nodes: 0,
            exhausted: false,
        }
    }

    /// Counts a node; false once the budget is spent.
    fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes
            || (self.nodes & 0x3ff == 0 && self.start.elapsed() > self.budget.max_time)
        {
            self.exhausted = true;
        }
        !self.exhausted
    }

    fn status(&self) -> SearchStatus {
        if self.exhausted {
            SearchStatus::LowerBoundOnly
        } else {
            SearchStatus::Exact
        }
    }
}

struct HyperSearch<'a> {
    candidates: Vec<Vec<u32>>,
    family: &'a [Multigraph],
    host: DynamicHost,
    best: usize,
    best_edges: Vec<Vec<u32>>,
    clock: Clock,
}

impl HyperSearch<'_> {
    fn admits_last(&self) -> bool {
        let idx = self.host.edge_count() - 1;
        self.family
            .iter()
            .all(|f| contains_berge_using(&self.host, f, idx).is_none())
    }

    fn dfs(&mut self, i: usize) {
        if !self.clock.tick() {
            return;
        }
        let current = self.host.edge_count();
        if current > self.best {
            self.best = current;
            self.best_edges = self.host.edges().to_vec();
        }
        if i == self.candidates.len() || current + (self.candidates.len() - i) <= self.best {
            return;
        }
        self.host.push_edge(self.candidates[i].clone());
        if self.admits_last() {
            self.dfs(i + 1);
        }
        self.host.pop_edge();
        self.dfs(i + 1);
    }
}

/// Largest number of r-sets on `n` labelled vertices with no Berge copy of
/// any family member.
pub fn exact_ex_r(n: usize, r: usize, family: &[Multigraph], budget: Budget) -> Result<SearchResult> {
    if r < 2 || r > n {
        return Err(Error::Parameter(format!("need 2 <= r <= n, got r = {}, n = {}", r, n)));
    }
    let start = Instant::now();
    let mut s = HyperSearch {
        candidates: k_subsets(n, r),
        family,
        host: DynamicHost::new(n),
        best: 0,
        best_edges: Vec::new(),
        clock: Clock::new(budget),
    };
    s.host.push_edge(s.candidates[0].clone());
    if s.admits_last() {
        s.dfs(1);
    }
    s.host.pop_edge();
    let witness = Hypergraph::new(n, r, s.best_edges)?;
    Ok(SearchResult {
        value: s.best as u64,
        witness: Witness::Hypergraph(witness),
        status: s.clock.status(),
        nodes_explored: s.clock.nodes,
        wall_time: start.elapsed(),
    })
}

struct GraphSearch<'a> {
    n: usize,
    r: usize,
    pairs: Vec<(u32, u32)>,
    pattern: &'a Multigraph,
    host: DynamicHost,
    /// Current edges plus every undecided pair.
    optimistic: Vec<FixedBitSet>,
    best: u64,
    best_edges: Vec<(u32, u32)>,
    clock: Clock,
}

impl GraphSearch<'_> {
    fn adjacency(&self) -> Vec<FixedBitSet> {
        let mut adj = vec![FixedBitSet::with_capacity(self.n); self.n];
        for e in self.host.edges() {
            adj[e[0] as usize].insert(e[1] as usize);
            adj[e[1] as usize].insert(e[0] as usize);
        }
        adj
    }

    fn set_optimistic(&mut self, (a, b): (u32, u32), on: bool) {
        self.optimistic[a as usize].set(b as usize, on);
        self.optimistic[b as usize].set(a as usize, on);
    }

    fn dfs(&mut self, i: usize) {
        if !self.clock.tick() {
            return;
        }
        let current = count_cliques_adj(&self.adjacency(), self.r);
        if current > self.best {
            self.best = current;
            self.best_edges = self.host.edges().iter().map(|e| (e[0], e[1])).collect();
        }
        if i == self.pairs.len() || count_cliques_adj(&self.optimistic, self.r) <= self.best {
            return;
        }
        let p = self.pairs[i];
        let idx = self.host.push_edge(vec![p.0, p.1]);
        if contains_berge_using(&self.host, self.pattern, idx).is_none() {
            self.dfs(i + 1);
        }
        self.host.pop_edge();
        self.set_optimistic(p, false);
        self.dfs(i + 1);
        self.set_optimistic(p, true);
    }
}

/// Largest number of r-cliques in an F-free graph on `n` labelled vertices.
pub fn exact_graph_ex(n: usize, r: usize, pattern: &Multigraph, budget: Budget) -> Result<SearchResult> {
    if r == 0 || n < 2 {
        return Err(Error::Parameter(format!("need r >= 1 and n >= 2, got r = {}, n = {}", r, n)));
    }
    let start = Instant::now();
    let pairs: Vec<(u32, u32)> = k_subsets(n, 2).into_iter().map(|p| (p[0], p[1])).collect();
    let mut full = vec![FixedBitSet::with_capacity(n); n];
    for &(a, b) in &pairs {
        full[a as usize].insert(b as usize);
        full[b as usize].insert(a as usize);
    }
    let empty_value = if r == 1 { n as u64 } else { 0 };
    let mut s = GraphSearch {
        n,
        r,
        pairs,
        pattern,
        host: DynamicHost::new(n),
        optimistic: full,
        best: empty_value,
        best_edges: Vec::new(),
        clock: Clock::new(budget),
    };
    if r > 1 {
        let idx = s.host.push_edge(vec![0, 1]);
        if contains_berge_using(&s.host, pattern, idx).is_none() {
            s.dfs(1);
        }
        s.host.pop_edge();
    }
    Ok(SearchResult {
        value: s.best,
        witness: Witness::Graph(Multigraph::new(n, s.best_edges)?),
        status: s.clock.status(),
        nodes_explored: s.clock.nodes,
        wall_time: start.elapsed(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SandwichReport {
    pub n: usize,
    pub r: usize,
    /// ex(n, K_r, F)
    pub cliques: SearchResult,
    /// ex_r(n, F)
    pub hyper: SearchResult,
    /// ex(n, F)
    pub graph: SearchResult,
    pub lower_holds: bool,
    pub upper_holds: bool,
    pub conclusive: bool,
}

impl SandwichReport {
    pub fn passed(&self) -> bool {
        self.conclusive && self.lower_holds && self.upper_holds
    }
}

/// `ex(n,K_r,F) <= ex_r(n,F) <= ex(n,K_r,F) + ex(n,F)` from three exact
/// searches. Multigraph patterns are rejected.
pub fn sandwich_check(n: usize, r: usize, pattern: &Multigraph, budget: Budget) -> Result<SandwichReport> {
    if !pattern.is_simple() {
        return Err(Error::ParallelEdges);
    }
    let cliques = exact_graph_ex(n, r, pattern, budget)?;
    let hyper = exact_ex_r(n, r, std::slice::from_ref(pattern), budget)?;
    let graph = exact_graph_ex(n, 2, pattern, budget)?;
    Ok(SandwichReport {
        n,
        r,
        lower_holds: cliques.value <= hyper.value,
        upper_holds: hyper.value <= cliques.value + graph.value,
        conclusive: cliques.is_exact() && hyper.is_exact() && graph.is_exact(),
        cliques,
        hyper,
        graph,
    })
}

/// Maximum number of pairwise edge-disjoint triangles in `K_n`.
pub fn packing_number(n: u64) -> u64 {
    if n < 3 {
        return 0;
    }
    let base = n * ((n - 1) / 2) / 3;
    if n % 6 == 5 {
        base - 1
    } else {
        base
    }
}

pub const BRUTE_FORCE_MAX_CANDIDATES: usize = 12;

/// Maximum over every subset of r-sets, each tested with the unpruned
/// oracle. Only for at most [`BRUTE_FORCE_MAX_CANDIDATES`] candidates.
pub fn brute_force_ex_r(n: usize, r: usize, family: &[Multigraph]) -> Result<u64> {
    let cands = k_subsets(n, r);
    if cands.len() > BRUTE_FORCE_MAX_CANDIDATES {
        return Err(Error::OracleLimit(format!("{} candidate edges", cands.len())));
    }
    let mut best = 0;
    for mask in 0u32..(1 << cands.len()) {
        let size = mask.count_ones() as u64;
        if size <= best {
            continue;
        }
        let edges = (0..cands.len()).filter(|&i| mask >> i & 1 == 1).map(|i| cands[i].clone()).collect();
        let h = Hypergraph::new(n, r, edges)?;
        let mut free = true;
        for f in family {
            if oracle_contains_berge(&h, f)? {
                free = false;
                break;
            }
        }
        if free {
            best = size;
        }
    }
    Ok(best)
}

/// Maximum r-clique count over every graph on `n` vertices, each tested
/// with the unpruned oracle.
pub fn brute_force_graph_ex(n: usize, r: usize, pattern: &Multigraph) -> Result<u64> {
    let pairs = k_subsets(n, 2);
    if pairs.len() > BRUTE_FORCE_MAX_CANDIDATES {
        return Err(Error::OracleLimit(format!("{} candidate pairs", pairs.len())));
    }
    let mut best = 0;
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(u32, u32)> = (0..pairs.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| (pairs[i][0], pairs[i][1]))
            .collect();
        let g = Multigraph::new(n, edges)?;
        let count = crate::cliques::count_cliques(&g, r)?.count;
        if count <= best {
            continue;
        }
        if !oracle_contains_berge(&g.as_hypergraph()?, pattern)? {
            best = count;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::berge::is_berge_free;

    fn c2() -> Multigraph {
        Multigraph::cycle(2).unwrap()
    }

    #[test]
    fn subsets() {
        assert_eq!(k_subsets(4, 2).len(), 6);
        assert_eq!(k_subsets(5, 3)[0], vec![0, 1, 2]);
        assert_eq!(k_subsets(5, 3)[9], vec![2, 3, 4]);
    }

    #[test]
    fn linear_maxima() {
        for (n, want) in [(4, 1), (5, 2), (6, 4), (7, 7)] {
            let res = exact_ex_r(n, 3, &[c2()], Budget::default()).unwrap();
            assert_eq!(res.value, want, "n = {}", n);
            assert!(res.is_exact());
            assert_eq!(packing_number(n as u64), want);
            let Witness::Hypergraph(h) = &res.witness else { panic!() };
            assert!(h.is_linear());
            assert_eq!(h.edge_count() as u64, want);
        }
    }

    #[test]
    fn luo_values() {
        let p4 = Multigraph::path(4).unwrap();
        assert_eq!(exact_graph_ex(6, 3, &p4, Budget::default()).unwrap().value, 2);
        let p3 = Multigraph::path(3).unwrap();
        assert_eq!(exact_graph_ex(6, 3, &p3, Budget::default()).unwrap().value, 0);
    }

    #[test]
    fn c4_free_graphs() {
        let k22 = Multigraph::complete_bipartite(2, 2);
        let res = exact_graph_ex(6, 2, &k22, Budget::default()).unwrap();
        assert_eq!(res.value, 7);
        let Witness::Graph(g) = &res.witness else { panic!() };
        assert!(crate::berge::find_subgraph(g, &k22).unwrap().is_none());
    }

    #[test]
    fn agrees_with_brute_force() {
        let fams = [
            vec![c2()],
            vec![Multigraph::complete_bipartite(2, 2)],
            vec![Multigraph::complete(3)],
            vec![Multigraph::path(4).unwrap()],
        ];
        for fam in &fams {
            for n in 3..=5 {
                let exact = exact_ex_r(n, 3, fam, Budget::default()).unwrap();
                assert_eq!(exact.value, brute_force_ex_r(n, 3, fam).unwrap());
                let Witness::Hypergraph(h) = &exact.witness else { panic!() };
                assert!(is_berge_free(h, fam));
            }
        }
        for f in [Multigraph::complete(3), Multigraph::path(3).unwrap(), Multigraph::cycle(4).unwrap()] {
            for r in 2..=3 {
                let n = 5;
                let exact = exact_graph_ex(n, r, &f, Budget::default()).unwrap();
                assert_eq!(exact.value, brute_force_graph_ex(n, r, &f).unwrap());
            }
        }
    }

    #[test]
    fn budget_exhaustion() {
        let budget = Budget {
            max_nodes: 10,
            max_time: Duration::from_secs(10),
        };
        let res = exact_ex_r(7, 3, &[c2()], budget).unwrap();
        assert_eq!(res.status, SearchStatus::LowerBoundOnly);
        assert!(res.value <= 7);
    }

    #[test]
    fn sandwich() {
        let rep = sandwich_check(5, 3, &Multigraph::complete_bipartite(2, 2), Budget::default()).unwrap();
        assert!(rep.passed());
        assert!(sandwich_check(4, 3, &c2(), Budget::default()).is_err());
    }

    #[test]
    fn packing_numbers() {
        let want = [0, 0, 0, 1, 1, 2, 4, 7, 8, 12, 13, 17];
        for (n, &w) in want.iter().enumerate() {
            assert_eq!(packing_number(n as u64), w, "n = {}", n);
        }
    }
}
