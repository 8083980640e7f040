//! Lower-bound constructions: Füredi's K2,t-free graphs, triangle
//! replacement, bipartite blow-ups and two linear constructions built from
//! edge-disjoint triangle families.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_rational::Rational64;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::berge::{contains_berge, find_subgraph};
use crate::cliques::{list_triangles, max_clique_size};
use crate::error::{Error, Result};
use crate::field::GaloisField;
use crate::hypergraph::{Hypergraph, Multigraph};

#[derive(Clone, Debug)]
pub struct FurediParams {
    pub q: u32,
    pub t: u32,
    field: GaloisField,
    pub subgroup: Vec<u32>,
}

impl FurediParams {
    pub fn new(q: u32, t: u32) -> Result<Self> {
        let field = GaloisField::new(q)?;
        if field.characteristic() == 2 {
            return Err(Error::Parameter(format!("q = {} must be odd", q)));
        }
        if t < 2 || !(q - 1).is_multiple_of(t - 1) {
            return Err(Error::Parameter(format!("t - 1 = {} must divide q - 1 = {}", t.saturating_sub(1), q - 1)));
        }
        let subgroup = field.subgroup(t - 1)?;
        Ok(Self { q, t, field, subgroup })
    }

    pub fn vertex_count(&self) -> usize {
        ((self.q * self.q - 1) / (self.t - 1)) as usize
    }
}

/// Füredi's graph: vertices are the classes of nonzero pairs `(a, b)` over
/// GF(q) modulo the order-(t-1) subgroup, and `<a,b> ~ <x,y>` when
/// `ax + by` lies in the subgroup. Self-adjacent classes are dropped.
///
/// Classes are numbered by their lexicographically least member.
pub fn furedi_k2t(p: &FurediParams) -> Multigraph {
    let q = p.q;
    let f = &p.field;
    let mut in_subgroup = vec![false; q as usize];
    for &h in &p.subgroup {
        in_subgroup[h as usize] = true;
    }
    let mut class_of = vec![usize::MAX; (q * q) as usize];
    let mut reps: Vec<(u32, u32)> = Vec::with_capacity(p.vertex_count());
    for a in 0..q {
        for b in 0..q {
            if (a, b) == (0, 0) || class_of[(a * q + b) as usize] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push((a, b));
            for &h in &p.subgroup {
                class_of[(f.mul(h, a) * q + f.mul(h, b)) as usize] = id;
            }
        }
    }
    let mut edges = Vec::new();
    for (i, &(a, b)) in reps.iter().enumerate() {
        for (j, &(x, y)) in reps.iter().enumerate().skip(i + 1) {
            if in_subgroup[f.add(f.mul(a, x), f.mul(b, y)) as usize] {
                edges.push((i as u32, j as u32));
            }
        }
    }
    Multigraph::new(reps.len(), edges).expect("classes are in range")
}

#[derive(Clone, Debug, Serialize)]
pub struct FurediReport {
    pub q: u32,
    pub t: u32,
    pub vertices: usize,
    pub edges: usize,
    /// Relative shortfall against `(1/2) sqrt(t-1) n^{3/2}`; negative when above.
    pub epsilon: f64,
    /// Number of edges lying in exactly `k` triangles, keyed by `k`.
    pub triangle_distribution: BTreeMap<usize, usize>,
}

pub fn furedi_report(p: &FurediParams, g: &Multigraph) -> FurediReport {
    let n = g.n() as f64;
    let target = 0.5 * ((p.t - 1) as f64).sqrt() * n.powf(1.5);
    FurediReport {
        q: p.q,
        t: p.t,
        vertices: g.n(),
        edges: g.edge_count(),
        epsilon: 1.0 - g.edge_count() as f64 / target,
        triangle_distribution: triangle_distribution(g),
    }
}

/// Histogram of per-edge triangle counts.
pub fn triangle_distribution(g: &Multigraph) -> BTreeMap<usize, usize> {
    let adj = g.adjacency();
    let mut out = BTreeMap::new();
    for &(a, b) in g.edges() {
        let k = adj[a as usize].intersection(&adj[b as usize]).count();
        *out.entry(k).or_insert(0) += 1;
    }
    out
}

/// One 3-edge per triangle of `g`.
pub fn triangles_to_hyperedges(g: &Multigraph) -> Result<Hypergraph> {
    let tris = list_triangles(g)?;
    Hypergraph::new(g.n(), 3, tris.into_iter().map(|t| t.to_vec()).collect())
}

/// Proper 2-colouring by BFS, each component rooted at its least vertex on
/// side 0. `None` when the graph has an odd cycle.
pub fn bipartition(g: &Multigraph) -> Option<Vec<u8>> {
    let n = g.n();
    let mut nbrs = vec![Vec::new(); n];
    for &(a, b) in g.edges() {
        nbrs[a as usize].push(b as usize);
        nbrs[b as usize].push(a as usize);
    }
    let mut side = vec![u8::MAX; n];
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &nbrs[v] {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return None;
                }
            }
        }
    }
    Some(side)
}

/// Length of a shortest cycle, or `None` for a forest. Parallel edges count
/// as a cycle of length 2.
pub fn girth(g: &Multigraph) -> Option<usize> {
    if !g.is_simple() {
        return Some(2);
    }
    let n = g.n();
    let mut nbrs = vec![Vec::new(); n];
    for &(a, b) in g.edges() {
        nbrs[a as usize].push(b as usize);
        nbrs[b as usize].push(a as usize);
    }
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &nbrs[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    let len = dist[v] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

fn split_blowup(g: &Multigraph, r: usize, side: &[u8]) -> Result<Hypergraph> {
    let copies = |s: u8| if s == 0 { r / 2 } else { r - r / 2 };
    let mut first = Vec::with_capacity(g.n());
    let mut next = 0u32;
    for &s in side {
        first.push(next);
        next += copies(s) as u32;
    }
    let mut edges = Vec::with_capacity(g.edge_count());
    for &(a, b) in g.edges() {
        let (a, b) = if side[a as usize] == 0 { (a, b) } else { (b, a) };
        let mut e: Vec<u32> = (0..copies(0) as u32).map(|i| first[a as usize] + i).collect();
        e.extend((0..copies(1) as u32).map(|i| first[b as usize] + i));
        edges.push(e);
    }
    Hypergraph::new(next as usize, r, edges)
}

fn checked_bipartition(g: &Multigraph) -> Result<Vec<u8>> {
    if !g.is_simple() {
        return Err(Error::ParallelEdges);
    }
    bipartition(g).ok_or_else(|| Error::Precondition("graph is not bipartite".into()))
}

/// Replaces every vertex on side A by `floor(r/2)` clones and every vertex on
/// side B by `ceil(r/2)` clones, so each edge becomes one r-set. Clones are
/// numbered contiguously in vertex order.
pub fn blowup_bipartite(g: &Multigraph, r: usize, t: usize) -> Result<Hypergraph> {
    if r < 2 {
        return Err(Error::Uniformity(r));
    }
    let side = checked_bipartition(g)?;
    let a = side.iter().filter(|&&s| s == 0).count();
    if a * 2 != g.n() {
        return Err(Error::Precondition(format!(
            "classes have sizes {} and {}",
            a,
            g.n() - a
        )));
    }
    if t < 2 || t + 2 <= r.div_ceil(2) {
        return Err(Error::Parameter(format!("t = {} out of range for r = {}", t, r)));
    }
    if find_subgraph(g, &Multigraph::complete_bipartite(2, t))?.is_some() {
        return Err(Error::Precondition(format!("graph contains K2,{}", t)));
    }
    split_blowup(g, r, &side)
}

/// Blow-up of a bipartite graph of girth above `2k`, with the same clone
/// split as [`blowup_bipartite`] (for odd r the two sides differ by one).
pub fn cycle_blowup(g: &Multigraph, r: usize, k: usize) -> Result<Hypergraph> {
    if r < 2 {
        return Err(Error::Uniformity(r));
    }
    let side = checked_bipartition(g)?;
    if let Some(len) = girth(g) {
        if len <= 2 * k {
            return Err(Error::Precondition(format!("girth {} is at most 2k = {}", len, 2 * k)));
        }
    }
    split_blowup(g, r, &side)
}

/// Cycles `C_3 .. C_{2k}`.
pub fn cycle_family(k: usize) -> Vec<Multigraph> {
    (3..=2 * k).map(|l| Multigraph::cycle(l).expect("length at least 3")).collect()
}

/// `k` triangles sharing vertex 0.
pub fn friendship_graph(k: usize) -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..k as u32 {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        edges.extend([(0, a), (0, b), (a, b)]);
    }
    Multigraph::new(2 * k + 1, edges).expect("valid friendship graph")
}

fn serialize_ratio<S: Serializer>(r: &Rational64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn serialize_opt_ratio<S: Serializer>(r: &Option<Rational64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IndependentSetReport {
    pub triangles: usize,
    pub selected: usize,
    pub conflict_max_degree: usize,
    pub conflict_clique_number: usize,
    /// `2N / (4t - 6)`, using the a priori degree and clique bounds.
    #[serde(serialize_with = "serialize_ratio")]
    pub target: Rational64,
    /// `2N / (Δ + ω + 1)` with the measured conflict-graph parameters.
    #[serde(serialize_with = "serialize_ratio")]
    pub measured_target: Rational64,
    /// `N / (Δ + 1)`, met by any maximal greedy order.
    #[serde(serialize_with = "serialize_ratio")]
    pub greedy_guarantee: Rational64,
    pub below_target: bool,
    pub swaps: usize,
}

#[derive(Clone, Debug)]
pub struct LinearConstruction<R> {
    pub hypergraph: Hypergraph,
    pub report: R,
}

fn triangle_conflicts(tris: &[[u32; 3]]) -> Vec<Vec<usize>> {
    let mut by_edge: HashMap<(u32, u32), Vec<usize>> = HashMap::new();
    for (i, t) in tris.iter().enumerate() {
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            by_edge.entry((a, b)).or_default().push(i);
        }
    }
    let mut nbrs = vec![Vec::new(); tris.len()];
    for list in by_edge.values() {
        for &i in list {
            for &j in list {
                if i != j {
                    nbrs[i].push(j);
                }
            }
        }
    }
    for l in &mut nbrs {
        l.sort_unstable();
        l.dedup();
    }
    nbrs
}

/// Minimum-degree greedy: repeatedly take a vertex of least remaining degree
/// (ties by index) and delete its closed neighbourhood.
fn greedy_independent(nbrs: &[Vec<usize>]) -> Vec<bool> {
    let n = nbrs.len();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = nbrs.iter().map(Vec::len).collect();
    let mut chosen = vec![false; n];
    while let Some(v) = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (deg[v], v)) {
        chosen[v] = true;
        let mut removed = vec![v];
        removed.extend(nbrs[v].iter().copied().filter(|&w| alive[w]));
        for &w in &removed {
            alive[w] = false;
        }
        for &w in &removed {
            for &x in &nbrs[w] {
                if alive[x] {
                    deg[x] -= 1;
                }
            }
        }
    }
    chosen
}

/// (1,2)-swaps: drop one chosen vertex and add two non-adjacent vertices
/// whose only chosen neighbour it was. Also adds any free vertex.
fn two_improve(nbrs: &[Vec<usize>], chosen: &mut [bool]) -> usize {
    let n = nbrs.len();
    let mut swaps = 0;
    loop {
        let tight: Vec<usize> = (0..n)
            .map(|v| nbrs[v].iter().filter(|&&w| chosen[w]).count())
            .collect();
        if let Some(v) = (0..n).find(|&v| !chosen[v] && tight[v] == 0) {
            chosen[v] = true;
            continue;
        }
        let mut improved = false;
        'outer: for x in (0..n).filter(|&x| chosen[x]) {
            let cands: Vec<usize> = nbrs[x].iter().copied().filter(|&u| !chosen[u] && tight[u] == 1).collect();
            for (i, &u) in cands.iter().enumerate() {
                for &w in &cands[i + 1..] {
                    if nbrs[u].binary_search(&w).is_err() {
                        chosen[x] = false;
                        chosen[u] = true;
                        chosen[w] = true;
                        swaps += 1;
                        improved = true;
                        break 'outer;
                    }
                }
            }
        }
        if !improved {
            return swaps;
        }
    }
}

fn adjacency_bits(nbrs: &[Vec<usize>]) -> Vec<fixedbitset::FixedBitSet> {
    nbrs.iter()
        .map(|l| {
            let mut b = fixedbitset::FixedBitSet::with_capacity(nbrs.len());
            for &w in l {
                b.insert(w);
            }
            b
        })
        .collect()
}

/// Keeps a family of pairwise edge-disjoint triangles chosen as an
/// independent set of the triangle conflict graph.
pub fn linear_via_independent_set(g: &Multigraph, t: usize) -> Result<LinearConstruction<IndependentSetReport>> {
    if t < 2 {
        return Err(Error::Parameter("t must be at least 2".into()));
    }
    let tris = list_triangles(g)?;
    let nbrs = triangle_conflicts(&tris);
    let mut chosen = greedy_independent(&nbrs);
    let swaps = two_improve(&nbrs, &mut chosen);
    let edges: Vec<Vec<u32>> = tris
        .iter()
        .zip(&chosen)
        .filter(|(_, &c)| c)
        .map(|(t, _)| t.to_vec())
        .collect();
    let n_tri = tris.len() as i64;
    let delta = nbrs.iter().map(Vec::len).max().unwrap_or(0);
    let omega = if tris.is_empty() { 0 } else { max_clique_size(&adjacency_bits(&nbrs)) };
    let selected = edges.len();
    let target = if 4 * t > 6 {
        Rational64::new(2 * n_tri, 4 * t as i64 - 6)
    } else {
        Rational64::from_integer(0)
    };
    let report = IndependentSetReport {
        triangles: tris.len(),
        selected,
        conflict_max_degree: delta,
        conflict_clique_number: omega,
        target,
        measured_target: Rational64::new(2 * n_tri, (delta + omega + 1) as i64),
        greedy_guarantee: Rational64::new(n_tri, delta as i64 + 1),
        below_target: Rational64::from_integer(selected as i64) < target,
        swaps,
    };
    Ok(LinearConstruction {
        hypergraph: Hypergraph::new(g.n(), 3, edges)?,
        report,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct MatchingReport {
    pub triangles: usize,
    /// Edges of the graph lying in at least one triangle.
    pub covered_edges: usize,
    pub padding_vertices: usize,
    pub padding_edges: usize,
    /// True when every vertex of the padded hypergraph has degree t - 1.
    pub padded_regular: bool,
    pub matching_size: usize,
    pub kept: usize,
    /// Fraction of triangle-carrying edges covered by the kept triangles.
    pub coverage: f64,
    pub c0: f64,
    /// `1 - c0 ln^{3/2}(t-1) / sqrt(t-1)`; reported only.
    pub coverage_target: f64,
    pub swaps: usize,
}

struct Padded {
    /// Hyperedges of the dual, then padding; vertices `0..m` are original.
    edges: Vec<[usize; 3]>,
    original: usize,
    vertex_count: usize,
    fresh: usize,
}

/// Raises every original vertex of a linear 3-graph to degree `d` with
/// hyperedges `{v, x, y}` on fresh vertices, keeping the result linear.
#[allow(clippy::needless_range_loop)]
fn pad_to_regular(mut edges: Vec<[usize; 3]>, m: usize, d: usize) -> Padded {
    let original = edges.len();
    let mut deg = vec![0usize; m];
    for e in &edges {
        for &v in e {
            deg[v] += 1;
        }
    }
    let mut fresh_deg: Vec<usize> = Vec::new();
    let mut used_pairs: std::collections::HashSet<(usize, usize)> = std::collections::HashSet::new();
    for v in 0..m {
        while deg[v] < d {
            let k = fresh_deg.len();
            let mut pick = None;
            'search: for a in 0..k {
                if fresh_deg[a] >= d || used_pairs.contains(&(v, m + a)) {
                    continue;
                }
                for b in a + 1..k {
                    if fresh_deg[b] < d
                        && !used_pairs.contains(&(v, m + b))
                        && !used_pairs.contains(&(m + a, m + b))
                    {
                        pick = Some((a, b));
                        break 'search;
                    }
                }
            }
            let (a, b) = match pick {
                Some(p) => p,
                None => {
                    fresh_deg.push(0);
                    fresh_deg.push(0);
                    (k, k + 1)
                }
            };
            let (x, y) = (m + a, m + b);
            for p in [(v, x), (v, y), (x, y)] {
                used_pairs.insert(p);
            }
            fresh_deg[a] += 1;
            fresh_deg[b] += 1;
            deg[v] += 1;
            edges.push([v, x, y]);
        }
    }
    Padded {
        edges,
        original,
        vertex_count: m + fresh_deg.len(),
        fresh: fresh_deg.len(),
    }
}

/// Greedy matching that prefers original hyperedges, then low conflict
/// degree, then index; followed by (1,2)-swaps among original hyperedges.
fn padded_matching(p: &Padded) -> (Vec<bool>, usize) {
    let mut incident = vec![Vec::new(); p.vertex_count];
    for (i, e) in p.edges.iter().enumerate() {
        for &v in e {
            incident[v].push(i);
        }
    }
    let conflict = |i: usize| -> usize { p.edges[i].iter().map(|&v| incident[v].len() - 1).sum() };
    let mut order: Vec<usize> = (0..p.edges.len()).collect();
    order.sort_by_key(|&i| (i >= p.original, conflict(i), i));
    let mut owner: Vec<Option<usize>> = vec![None; p.vertex_count];
    let mut in_m = vec![false; p.edges.len()];
    for &i in &order {
        if p.edges[i].iter().all(|&v| owner[v].is_none()) {
            in_m[i] = true;
            for &v in &p.edges[i] {
                owner[v] = Some(i);
            }
        }
    }
    let mut swaps = 0;
    loop {
        let mut changed = false;
        'outer: for x in (0..p.original).filter(|&x| in_m[x]) {
            // unmatched original edges blocked only by x
            let mut cands: Vec<usize> = p.edges[x]
                .iter()
                .flat_map(|&v| incident[v].iter().copied())
                .filter(|&e| e < p.original && !in_m[e])
                .filter(|&e| p.edges[e].iter().all(|&v| owner[v].is_none() || owner[v] == Some(x)))
                .collect();
            cands.sort_unstable();
            cands.dedup();
            for (i, &e1) in cands.iter().enumerate() {
                for &e2 in &cands[i + 1..] {
                    if p.edges[e1].iter().any(|v| p.edges[e2].contains(v)) {
                        continue;
                    }
                    for &v in &p.edges[x] {
                        owner[v] = None;
                    }
                    in_m[x] = false;
                    for e in [e1, e2] {
                        in_m[e] = true;
                        for &v in &p.edges[e] {
                            owner[v] = Some(e);
                        }
                    }
                    swaps += 1;
                    changed = true;
                    break 'outer;
                }
            }
        }
        if !changed {
            break;
        }
    }
    (in_m, swaps)
}

/// Keeps the triangles indexed by a matching of the dual of the
/// triangle-incidence hypergraph, after padding it to a (t-1)-regular
/// hypergraph and discarding matched padding edges.
pub fn linear_via_matching(g: &Multigraph, t: usize, c0: f64) -> Result<LinearConstruction<MatchingReport>> {
    if t < 2 {
        return Err(Error::Parameter("t must be at least 2".into()));
    }
    let tris = list_triangles(g)?;
    let mut edge_id: HashMap<(u32, u32), usize> = HashMap::new();
    let mut dual = Vec::with_capacity(tris.len());
    for tri in &tris {
        let mut e = [0usize; 3];
        for (slot, pair) in [(tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])].into_iter().enumerate() {
            let next = edge_id.len();
            e[slot] = *edge_id.entry(pair).or_insert(next);
        }
        dual.push(e);
    }
    let m = edge_id.len();
    let mut tri_per_edge = vec![0usize; m];
    for e in &dual {
        for &v in e {
            tri_per_edge[v] += 1;
        }
    }
    if let Some((&(a, b), &id)) = edge_id.iter().find(|(_, &id)| tri_per_edge[id] > t - 1) {
        return Err(Error::Precondition(format!(
            "edge {}-{} lies in {} triangles, more than t - 1 = {}",
            a,
            b,
            tri_per_edge[id],
            t - 1
        )));
    }
    let padded = pad_to_regular(dual, m, t - 1);
    let mut deg = vec![0usize; padded.vertex_count];
    for e in &padded.edges {
        for &v in e {
            deg[v] += 1;
        }
    }
    let (in_m, swaps) = padded_matching(&padded);
    let matching_size = in_m.iter().filter(|&&b| b).count();
    let kept: Vec<Vec<u32>> = (0..padded.original)
        .filter(|&i| in_m[i])
        .map(|i| tris[i].to_vec())
        .collect();
    let tf = (t - 1) as f64;
    let coverage_target = if t > 2 { 1.0 - c0 * tf.ln().powf(1.5) / tf.sqrt() } else { 0.0 };
    let report = MatchingReport {
        triangles: tris.len(),
        covered_edges: m,
        padding_vertices: padded.fresh,
        padding_edges: padded.edges.len() - padded.original,
        padded_regular: deg.iter().all(|&d| d == t - 1),
        matching_size,
        kept: kept.len(),
        coverage: if m == 0 { 1.0 } else { 3.0 * kept.len() as f64 / m as f64 },
        c0,
        coverage_target,
        swaps,
    };
    Ok(LinearConstruction {
        hypergraph: Hypergraph::new(g.n(), 3, kept)?,
        report,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionCertificate {
    pub kind: String,
    pub parameters: BTreeMap<String, serde_json::Value>,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub family: Vec<String>,
    /// Set only once the detector has run on every family member.
    pub freeness_checked: bool,
    pub free: Option<bool>,
    #[serde(serialize_with = "serialize_opt_ratio")]
    pub target_bound: Option<Rational64>,
}

impl ConstructionCertificate {
    pub fn new(kind: &str, vertex_count: usize, edge_count: usize) -> Self {
        Self {
            kind: kind.to_string(),
            parameters: BTreeMap::new(),
            vertex_count,
            edge_count,
            family: Vec::new(),
            freeness_checked: false,
            free: None,
            target_bound: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    /// Runs the Berge detector for every family member in parallel.
    pub fn certify_hypergraph(&mut self, h: &Hypergraph, family: &[(String, Multigraph)]) {
        self.family = family.iter().map(|(n, _)| n.clone()).collect();
        let free = family.par_iter().all(|(_, f)| contains_berge(h, f).is_none());
        self.freeness_checked = true;
        self.free = Some(free);
    }

    /// Ordinary subgraph freeness of a simple graph.
    pub fn certify_graph(&mut self, g: &Multigraph, family: &[(String, Multigraph)]) -> Result<()> {
        let host = g.as_hypergraph()?;
        self.certify_hypergraph(&host, family);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::berge::is_berge_free;
    use crate::hypergraph::fano_incidence_graph;

    #[test]
    fn furedi_sizes() {
        // loops are dropped, so each count is below q(q^2-1)/2
        for (q, t, n, m) in [(5, 2, 24, 58), (7, 2, 48, 164), (5, 3, 12, 28), (7, 3, 24, 80)] {
            let p = FurediParams::new(q, t).unwrap();
            let g = furedi_k2t(&p);
            assert_eq!((g.n(), g.edge_count()), (n, m), "q={} t={}", q, t);
            assert!(g.is_simple());
        }
    }

    #[test]
    fn furedi_is_k2t_free() {
        for (q, t) in [(5, 2), (5, 3), (7, 3), (9, 2)] {
            let g = furedi_k2t(&FurediParams::new(q, t).unwrap());
            let k = Multigraph::complete_bipartite(2, t as usize);
            assert!(find_subgraph(&g, &k).unwrap().is_none(), "q={} t={}", q, t);
        }
    }

    #[test]
    fn furedi_rejects_bad_parameters() {
        assert!(FurediParams::new(7, 5).is_err());
        assert!(FurediParams::new(6, 2).is_err());
        assert!(FurediParams::new(8, 2).is_err());
        assert!(FurediParams::new(7, 1).is_err());
    }

    #[test]
    fn furedi_triangle_distribution() {
        let p = FurediParams::new(5, 3).unwrap();
        let r = furedi_report(&p, &furedi_k2t(&p));
        assert_eq!(r.triangle_distribution, BTreeMap::from([(0, 2), (1, 16), (2, 10)]));
    }

    #[test]
    fn triangle_replacement() {
        let h = triangles_to_hyperedges(&friendship_graph(2)).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1, 2], vec![0, 3, 4]]);
        assert!(is_berge_free(&h, &[Multigraph::complete_bipartite(2, 2)]));
        let c4 = triangles_to_hyperedges(&Multigraph::cycle(4).unwrap()).unwrap();
        assert_eq!(c4.edge_count(), 0);
    }

    #[test]
    fn blowups() {
        let k22 = Multigraph::complete_bipartite(2, 2);
        let h = blowup_bipartite(&fano_incidence_graph(), 3, 2).unwrap();
        assert_eq!((h.n(), h.edge_count()), (21, 21));
        assert!(is_berge_free(&h, std::slice::from_ref(&k22)));

        let single = Multigraph::new(2, vec![(0, 1)]).unwrap();
        let h = blowup_bipartite(&single, 4, 2).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1, 2, 3]]);

        let c6 = Multigraph::cycle(6).unwrap();
        let h = blowup_bipartite(&c6, 3, 2).unwrap();
        assert_eq!(h.edge_count(), 6);
        assert!(is_berge_free(&h, &[k22]));

        assert!(blowup_bipartite(&Multigraph::cycle(5).unwrap(), 3, 2).is_err());
        assert!(blowup_bipartite(&Multigraph::cycle(4).unwrap(), 3, 2).is_err());
        assert!(blowup_bipartite(&Multigraph::path(3).unwrap(), 3, 2).is_err());
    }

    #[test]
    fn cycle_blowups() {
        let h = cycle_blowup(&fano_incidence_graph(), 4, 2).unwrap();
        assert_eq!(h.edge_count(), 21);
        assert!(is_berge_free(&h, &cycle_family(2)));
        let c8 = Multigraph::cycle(8).unwrap();
        let h = cycle_blowup(&c8, 4, 3).unwrap();
        assert_eq!(h.edge_count(), 8);
        assert!(is_berge_free(&h, &cycle_family(3)));
        assert!(cycle_blowup(&c8, 4, 4).is_err());
        assert!(cycle_blowup(&Multigraph::new(2, vec![(0, 1)]).unwrap(), 3, 5).is_ok());
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&fano_incidence_graph()), Some(6));
        assert_eq!(girth(&Multigraph::complete(4)), Some(3));
        assert_eq!(girth(&Multigraph::path(5).unwrap()), None);
        assert_eq!(girth(&Multigraph::cycle(7).unwrap()), Some(7));
    }

    #[test]
    fn independent_set_examples() {
        let c = linear_via_independent_set(&friendship_graph(2), 2).unwrap();
        assert_eq!(c.hypergraph.edge_count(), 2);
        let c = linear_via_independent_set(&Multigraph::complete(4), 3).unwrap();
        assert_eq!(c.hypergraph.edge_count(), 1);
        assert_eq!(c.report.conflict_clique_number, 4);
        assert!(c.hypergraph.is_linear());
    }

    #[test]
    fn matching_examples() {
        let c = linear_via_matching(&friendship_graph(3), 2, 1.0).unwrap();
        assert_eq!(c.hypergraph.edge_count(), 3);
        assert_eq!(c.report.coverage, 1.0);
        let c = linear_via_matching(&Multigraph::complete(4), 3, 1.0).unwrap();
        assert_eq!(c.hypergraph.edge_count(), 1);
        assert!(c.report.padded_regular);
        assert!(linear_via_matching(&Multigraph::complete(4), 2, 1.0).is_err());
    }

    #[test]
    fn linear_constructions_on_furedi() {
        let p = FurediParams::new(5, 3).unwrap();
        let g = furedi_k2t(&p);
        let k23 = Multigraph::complete_bipartite(2, 3);
        let is = linear_via_independent_set(&g, 3).unwrap();
        assert!(is.hypergraph.is_linear());
        assert!(is_berge_free(&is.hypergraph, std::slice::from_ref(&k23)));
        assert!(!is.report.below_target);
        let mm = linear_via_matching(&g, 3, 1.0).unwrap();
        assert!(mm.hypergraph.is_linear());
        assert!(is_berge_free(&mm.hypergraph, &[k23]));
    }
}
