//! Berge-F containment.
//!
//! A hypergraph contains a Berge copy of a pattern graph `F` when the
//! vertices of `F` embed injectively and every pattern edge can be assigned
//! its own hyperedge containing the image of that edge. The search
//! enumerates core embeddings with pruning and settles the edge assignment
//! by bipartite matching.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{pair_key, Hypergraph, Multigraph};
use crate::matching::maximum_matching;

/// Read access to a host hypergraph as needed by the embedding search.
pub trait Host {
    fn vertex_count(&self) -> usize;
    fn edge_count(&self) -> usize;
    fn degree(&self, v: u32) -> usize;
    /// Edges containing both `u` and `v`, ascending.
    fn pair_edges(&self, u: u32, v: u32) -> &[usize];
    fn edge_vertices(&self, e: usize) -> &[u32];
}

impl Host for Hypergraph {
    fn vertex_count(&self) -> usize {
        self.n()
    }
    fn edge_count(&self) -> usize {
        Hypergraph::edge_count(self)
    }
    fn degree(&self, v: u32) -> usize {
        Hypergraph::degree(self, v)
    }
    fn pair_edges(&self, u: u32, v: u32) -> &[usize] {
        Hypergraph::pair_edges(self, u, v)
    }
    fn edge_vertices(&self, e: usize) -> &[u32] {
        self.edge(e)
    }
}

/// A host that supports pushing and popping edges, for incremental search.
#[derive(Clone, Debug)]
pub struct DynamicHost {
    n: usize,
    edges: Vec<Vec<u32>>,
    pairs: Vec<Vec<usize>>,
    degrees: Vec<usize>,
}

impl DynamicHost {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            pairs: vec![Vec::new(); n * n],
            degrees: vec![0; n],
        }
    }

    /// Appends an edge (vertices must be sorted and distinct) and returns its index.
    pub fn push_edge(&mut self, e: Vec<u32>) -> usize {
        let idx = self.edges.len();
        for (i, &a) in e.iter().enumerate() {
            self.degrees[a as usize] += 1;
            for &b in &e[i + 1..] {
                self.pairs[a as usize * self.n + b as usize].push(idx);
            }
        }
        self.edges.push(e);
        idx
    }

    pub fn pop_edge(&mut self) -> Option<Vec<u32>> {
        let e = self.edges.pop()?;
        for (i, &a) in e.iter().enumerate() {
            self.degrees[a as usize] -= 1;
            for &b in &e[i + 1..] {
                self.pairs[a as usize * self.n + b as usize].pop();
            }
        }
        Some(e)
    }

    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }
}

impl Host for DynamicHost {
    fn vertex_count(&self) -> usize {
        self.n
    }
    fn edge_count(&self) -> usize {
        self.edges.len()
    }
    fn degree(&self, v: u32) -> usize {
        self.degrees[v as usize]
    }
    fn pair_edges(&self, u: u32, v: u32) -> &[usize] {
        let (a, b) = pair_key(u, v);
        &self.pairs[a as usize * self.n + b as usize]
    }
    fn edge_vertices(&self, e: usize) -> &[u32] {
        &self.edges[e]
    }
}

/// Certificate of a Berge copy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BergeWitness {
    /// Image of every pattern vertex, indexed by pattern vertex.
    pub core_map: Vec<u32>,
    /// Host edge assigned to every pattern edge, indexed by pattern edge.
    pub edge_map: Vec<usize>,
}

impl BergeWitness {
    /// Re-checks the witness against its host and pattern.
    pub fn verify<H: Host>(&self, host: &H, pattern: &Multigraph) -> bool {
        if self.core_map.len() != pattern.n() || self.edge_map.len() != pattern.edge_count() {
            return false;
        }
        let mut seen = vec![false; host.vertex_count()];
        for &v in &self.core_map {
            if v as usize >= host.vertex_count() || seen[v as usize] {
                return false;
            }
            seen[v as usize] = true;
        }
        let mut images = self.edge_map.clone();
        images.sort_unstable();
        if images.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        pattern.edges().iter().zip(&self.edge_map).all(|(&(a, b), &h)| {
            if h >= host.edge_count() {
                return false;
            }
            let e = host.edge_vertices(h);
            e.contains(&self.core_map[a as usize]) && e.contains(&self.core_map[b as usize])
        })
    }
}

struct Embedder<'a, H: Host> {
    host: &'a H,
    pattern: &'a Multigraph,
    order: Vec<u32>,
    neighbors: Vec<Vec<u32>>,
    multiplicity: HashMap<(u32, u32), usize>,
    pattern_degree: Vec<usize>,
    image: Vec<Option<u32>>,
    used: Vec<bool>,
    /// Pattern edge pinned to a host edge, which no other pattern edge may use.
    anchor: Option<(usize, usize)>,
}

impl<'a, H: Host> Embedder<'a, H> {
    fn new(host: &'a H, pattern: &'a Multigraph) -> Self {
        let pn = pattern.n();
        let mut neighbors = vec![Vec::new(); pn];
        let mut multiplicity = HashMap::new();
        for &(a, b) in pattern.edges() {
            *multiplicity.entry((a, b)).or_insert(0) += 1;
            if !neighbors[a as usize].contains(&b) {
                neighbors[a as usize].push(b);
                neighbors[b as usize].push(a);
            }
        }
        let pattern_degree = pattern.degrees();
        // Descending pattern degree, ties by vertex id; isolated vertices last and
        // handled outside the search.
        let mut order: Vec<u32> = (0..pn as u32).filter(|&v| pattern_degree[v as usize] > 0).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(pattern_degree[v as usize]), v));
        Self {
            host,
            pattern,
            order,
            neighbors,
            multiplicity,
            pattern_degree,
            image: vec![None; pn],
            used: vec![false; host.vertex_count()],
            anchor: None,
        }
    }

    fn mult(&self, a: u32, b: u32) -> usize {
        self.multiplicity.get(&pair_key(a, b)).copied().unwrap_or(0)
    }

    fn candidates_for(&self, e: usize) -> Vec<usize> {
        let (a, b) = self.pattern.edges()[e];
        let (x, y) = (self.image[a as usize].unwrap(), self.image[b as usize].unwrap());
        match self.anchor {
            Some((pe, he)) if pe == e => vec![he],
            Some((_, he)) => self
                .host
                .pair_edges(x, y)
                .iter()
                .copied()
                .filter(|&h| h != he)
                .collect(),
            None => self.host.pair_edges(x, y).to_vec(),
        }
    }

    /// Maximum matching of the pattern edges whose endpoints are both placed.
    /// Returns the assignment when it saturates them.
    fn match_active(&self) -> Option<Vec<(usize, usize)>> {
        let mut active = Vec::new();
        let mut adjacency = Vec::new();
        let mut right_ids: HashMap<usize, usize> = HashMap::new();
        let mut right_back = Vec::new();
        for (e, &(a, b)) in self.pattern.edges().iter().enumerate() {
            if self.image[a as usize].is_none() || self.image[b as usize].is_none() {
                continue;
            }
            let cands = self.candidates_for(e);
            if cands.is_empty() {
                return None;
            }
            let local = cands
                .into_iter()
                .map(|h| {
                    *right_ids.entry(h).or_insert_with(|| {
                        right_back.push(h);
                        right_back.len() - 1
                    })
                })
                .collect();
            active.push(e);
            adjacency.push(local);
        }
        let m = maximum_matching(right_back.len(), &adjacency);
        if !m.is_left_saturating() {
            return None;
        }
        Some(
            active
                .into_iter()
                .zip(m.left)
                .map(|(e, j)| (e, right_back[j.unwrap()]))
                .collect(),
        )
    }

    fn place(&mut self, a: u32, x: u32) {
        self.image[a as usize] = Some(x);
        self.used[x as usize] = true;
    }

    fn unplace(&mut self, a: u32) {
        if let Some(x) = self.image[a as usize].take() {
            self.used[x as usize] = false;
        }
    }

    fn fits(&self, a: u32, x: u32) -> bool {
        if self.used[x as usize] || self.host.degree(x) < self.pattern_degree[a as usize] {
            return false;
        }
        self.neighbors[a as usize].iter().all(|&b| match self.image[b as usize] {
            Some(y) => self.host.pair_edges(x, y).len() >= self.mult(a, b),
            None => true,
        })
    }

    fn search(&mut self, depth: usize) -> Option<Vec<(usize, usize)>> {
        let Some(&a) = self.order.get(depth) else {
            return self.match_active();
        };
        if self.image[a as usize].is_some() {
            return self.search(depth + 1);
        }
        for x in 0..self.host.vertex_count() as u32 {
            if !self.fits(a, x) {
                continue;
            }
            self.place(a, x);
            if self.match_active().is_some() {
                if let Some(found) = self.search(depth + 1) {
                    return Some(found);
                }
            }
            self.unplace(a);
        }
        None
    }

    fn finish(&self, assignment: Vec<(usize, usize)>) -> BergeWitness {
        let mut edge_map = vec![0; self.pattern.edge_count()];
        for (e, h) in assignment {
            edge_map[e] = h;
        }
        let mut used = self.used.clone();
        let mut free = (0..self.host.vertex_count() as u32).filter(move |&v| {
            let fresh = !used[v as usize];
            used[v as usize] = true;
            fresh
        });
        let core_map = self
            .image
            .iter()
            .map(|img| img.unwrap_or_else(|| free.next().expect("enough host vertices")))
            .collect();
        BergeWitness { core_map, edge_map }
    }
}

fn trivially_absent<H: Host>(host: &H, pattern: &Multigraph) -> bool {
    pattern.edge_count() > host.edge_count() || pattern.n() > host.vertex_count()
}

/// Searches for a Berge copy of `pattern`; returns the first witness in the
/// fixed enumeration order.
pub fn contains_berge<H: Host>(host: &H, pattern: &Multigraph) -> Option<BergeWitness> {
    if trivially_absent(host, pattern) {
        return None;
    }
    let mut emb = Embedder::new(host, pattern);
    let found = emb.search(0)?;
    Some(emb.finish(found))
}

/// Searches only for Berge copies that use host edge `edge`.
///
/// Adding an edge to a Berge-free host can only create copies through that
/// edge, which makes this the incremental check for exact search.
pub fn contains_berge_using<H: Host>(host: &H, pattern: &Multigraph, edge: usize) -> Option<BergeWitness> {
    if trivially_absent(host, pattern) || edge >= host.edge_count() {
        return None;
    }
    let host_edge = host.edge_vertices(edge).to_vec();
    let mut emb = Embedder::new(host, pattern);
    let edges = pattern.edges();
    for (pe, &(a, b)) in edges.iter().enumerate() {
        if pe > 0 && edges[pe - 1] == (a, b) {
            // parallel copies of the same pair are interchangeable
            continue;
        }
        emb.anchor = Some((pe, edge));
        for &x in &host_edge {
            for &y in &host_edge {
                if x == y {
                    continue;
                }
                if !emb.fits(a, x) {
                    continue;
                }
                emb.place(a, x);
                if emb.fits(b, y) {
                    emb.place(b, y);
                    if emb.match_active().is_some() {
                        if let Some(found) = emb.search(0) {
                            return Some(emb.finish(found));
                        }
                    }
                    emb.unplace(b);
                }
                emb.unplace(a);
            }
        }
    }
    None
}

/// True when the host contains no Berge copy of any family member.
pub fn is_berge_free<H: Host>(host: &H, family: &[Multigraph]) -> bool {
    family.iter().all(|f| contains_berge(host, f).is_none())
}

/// Ordinary subgraph containment in a simple graph.
pub fn find_subgraph(graph: &Multigraph, pattern: &Multigraph) -> Result<Option<BergeWitness>> {
    let host = graph.as_hypergraph()?;
    Ok(contains_berge(&host, pattern))
}

pub const ORACLE_MAX_PATTERN_VERTICES: usize = 8;
pub const ORACLE_MAX_PATTERN_EDGES: usize = 6;
pub const ORACLE_MAX_HOST_EDGES: usize = 12;

/// Exhaustive check over every vertex injection and every injective
/// assignment of pattern edges to hyperedges, with no pruning.
pub fn oracle_contains_berge(host: &Hypergraph, pattern: &Multigraph) -> Result<bool> {
    if pattern.n() > ORACLE_MAX_PATTERN_VERTICES
        || pattern.edge_count() > ORACLE_MAX_PATTERN_EDGES
        || host.edge_count() > ORACLE_MAX_HOST_EDGES
    {
        return Err(Error::OracleLimit(format!(
            "pattern {} vertices / {} edges, host {} edges",
            pattern.n(),
            pattern.edge_count(),
            host.edge_count()
        )));
    }
    if pattern.n() > host.n() {
        return Ok(false);
    }
    let mut core = Vec::with_capacity(pattern.n());
    let mut used = vec![false; host.n()];
    Ok(each_injection(host, pattern, &mut core, &mut used))
}

fn each_injection(host: &Hypergraph, pattern: &Multigraph, core: &mut Vec<u32>, used: &mut [bool]) -> bool {
    if core.len() == pattern.n() {
        let mut chosen = Vec::with_capacity(pattern.edge_count());
        let mut taken = vec![false; host.edge_count()];
        return each_assignment(host, pattern, core, &mut chosen, &mut taken);
    }
    for v in 0..host.n() {
        if used[v] {
            continue;
        }
        used[v] = true;
        core.push(v as u32);
        let hit = each_injection(host, pattern, core, used);
        core.pop();
        used[v] = false;
        if hit {
            return true;
        }
    }
    false
}

fn each_assignment(
    host: &Hypergraph,
    pattern: &Multigraph,
    core: &[u32],
    chosen: &mut Vec<usize>,
    taken: &mut [bool],
) -> bool {
    if chosen.len() == pattern.edge_count() {
        return pattern.edges().iter().zip(chosen.iter()).all(|(&(a, b), &h)| {
            let e = host.edge_bits(h);
            e.contains(core[a as usize] as usize) && e.contains(core[b as usize] as usize)
        });
    }
    for h in 0..host.edge_count() {
        if taken[h] {
            continue;
        }
        taken[h] = true;
        chosen.push(h);
        let hit = each_assignment(host, pattern, core, chosen, taken);
        chosen.pop();
        taken[h] = false;
        if hit {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::fano_plane;

    fn hg(n: usize, r: usize, edges: &[&[u32]]) -> Hypergraph {
        Hypergraph::new(n, r, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn single_edge_pattern() {
        let h = hg(3, 3, &[&[0, 1, 2]]);
        let k2 = Multigraph::complete(2);
        let w = contains_berge(&h, &k2).unwrap();
        assert_eq!(w.core_map, vec![0, 1]);
        assert_eq!(w.edge_map, vec![0]);
        assert!(oracle_contains_berge(&h, &k2).unwrap());
    }

    #[test]
    fn two_parallel_edges() {
        let h = hg(4, 3, &[&[0, 1, 2], &[0, 1, 3]]);
        let c2 = Multigraph::cycle(2).unwrap();
        let w = contains_berge(&h, &c2).unwrap();
        assert_eq!(w.core_map, vec![0, 1]);
        assert!(w.verify(&h, &c2));
        assert!(oracle_contains_berge(&h, &c2).unwrap());
        assert!(!is_berge_free(&h, &[c2]));
    }

    #[test]
    fn berge_triangle_on_three_hyperedges() {
        let h = hg(6, 3, &[&[0, 1, 2], &[0, 3, 4], &[1, 3, 5]]);
        let k3 = Multigraph::complete(3);
        let w = contains_berge(&h, &k3).unwrap();
        let mut core = w.core_map.clone();
        core.sort();
        assert_eq!(core, vec![0, 1, 3]);
        assert!(w.verify(&h, &k3));
        assert!(oracle_contains_berge(&h, &k3).unwrap());
    }

    #[test]
    fn fano_is_linear_in_berge_terms() {
        let c2 = Multigraph::cycle(2).unwrap();
        assert!(is_berge_free(&fano_plane(), std::slice::from_ref(&c2)));
        assert!(is_berge_free(&Hypergraph::empty(5, 3), &[c2, Multigraph::complete(3)]));
    }

    #[test]
    fn too_many_pattern_edges() {
        let h = hg(3, 3, &[&[0, 1, 2]]);
        assert!(contains_berge(&h, &Multigraph::complete(3)).is_none());
    }

    #[test]
    fn isolated_pattern_vertices_need_room() {
        let h = hg(3, 3, &[&[0, 1, 2]]);
        let f = Multigraph::new(4, vec![(0, 1)]).unwrap();
        assert!(contains_berge(&h, &f).is_none());
        let h5 = hg(5, 3, &[&[0, 1, 2]]);
        let w = contains_berge(&h5, &f).unwrap();
        assert!(w.verify(&h5, &f));
        assert!(oracle_contains_berge(&h5, &f).unwrap());
    }

    #[test]
    fn anchored_search_uses_the_edge() {
        let h = hg(6, 3, &[&[0, 1, 2], &[0, 3, 4], &[1, 3, 5]]);
        let k3 = Multigraph::complete(3);
        for e in 0..3 {
            let w = contains_berge_using(&h, &k3, e).unwrap();
            assert!(w.verify(&h, &k3));
            assert!(w.edge_map.contains(&e));
        }
        let h2 = hg(7, 3, &[&[0, 1, 2], &[0, 3, 4], &[1, 3, 5], &[2, 5, 6]]);
        // triangle 1-2-5 through {0,1,2}, {2,5,6}, {1,3,5}
        let w = contains_berge_using(&h2, &k3, 3).unwrap();
        assert!(w.verify(&h2, &k3) && w.edge_map.contains(&3));
    }

    #[test]
    fn dynamic_host_matches_static() {
        let mut d = DynamicHost::new(6);
        d.push_edge(vec![0, 1, 2]);
        d.push_edge(vec![0, 3, 4]);
        assert!(contains_berge(&d, &Multigraph::complete(3)).is_none());
        d.push_edge(vec![1, 3, 5]);
        assert!(contains_berge(&d, &Multigraph::complete(3)).is_some());
        d.pop_edge();
        assert!(contains_berge(&d, &Multigraph::complete(3)).is_none());
        assert_eq!(d.pair_edges(0, 1), &[0]);
    }

    #[test]
    fn oracle_limits() {
        let h = hg(3, 3, &[&[0, 1, 2]]);
        assert!(oracle_contains_berge(&h, &Multigraph::complete(5)).is_err());
    }

    #[test]
    fn subgraph_containment() {
        let c4 = Multigraph::cycle(4).unwrap();
        let k4 = Multigraph::complete(4);
        assert!(find_subgraph(&k4, &c4).unwrap().is_some());
        assert!(find_subgraph(&Multigraph::cycle(5).unwrap(), &c4).unwrap().is_none());
    }
}
