//! Uniform hypergraphs, pattern multigraphs and their file formats.
//!
//! Vertices are dense integers `0..n`. Hyperedges are kept as sorted vertex
//! lists in lexicographic order, alongside bitset copies for fast
//! intersection tests and a pair index for multiplicity queries.

use std::collections::HashMap;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

/// Canonical key for an unordered vertex pair.
#[inline]
pub fn pair_key(u: u32, v: u32) -> (u32, u32) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A simple r-uniform hypergraph on vertices `0..n`.
#[derive(Clone)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<u32>>,
    edge_bits: Vec<FixedBitSet>,
    incidence: Vec<Vec<usize>>,
    pairs: HashMap<(u32, u32), Vec<usize>>,
}

impl std::fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Hypergraph")
            .field("n", &self.n)
            .field("r", &self.r)
            .field("edges", &self.edges)
            .finish()
    }
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.r == other.r && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

impl Hypergraph {
    /// Builds a hypergraph, sorting every edge and the edge list.
    ///
    /// Rejects edges of the wrong size, repeated or out-of-range vertices and
    /// duplicate edges.
    pub fn new(n: usize, r: usize, edges: Vec<Vec<u32>>) -> Result<Self> {
        if r < 1 {
            return Err(Error::InvalidHypergraph("uniformity must be at least 1".into()));
        }
        let mut edges = edges;
        for e in edges.iter_mut() {
            if e.len() != r {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {:?} has {} vertices, expected {}",
                    e,
                    e.len(),
                    r
                )));
            }
            e.sort_unstable();
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidHypergraph(format!("edge {:?} repeats a vertex", e)));
            }
            if let Some(&v) = e.last() {
                if v as usize >= n {
                    return Err(Error::InvalidHypergraph(format!(
                        "vertex {} out of range for n = {}",
                        v, n
                    )));
                }
            }
        }
        edges.sort();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidHypergraph(format!("duplicate edge {:?}", w[0])));
        }
        Ok(Self::from_sorted(n, r, edges))
    }

    /// The hypergraph with no edges.
    pub fn empty(n: usize, r: usize) -> Self {
        Self::from_sorted(n, r, Vec::new())
    }

    fn from_sorted(n: usize, r: usize, edges: Vec<Vec<u32>>) -> Self {
        let mut edge_bits = Vec::with_capacity(edges.len());
        let mut incidence = vec![Vec::new(); n];
        let mut pairs: HashMap<(u32, u32), Vec<usize>> = HashMap::new();
        for (i, e) in edges.iter().enumerate() {
            let mut bits = FixedBitSet::with_capacity(n);
            for &v in e {
                bits.insert(v as usize);
                incidence[v as usize].push(i);
            }
            for a in 0..e.len() {
                for b in a + 1..e.len() {
                    pairs.entry((e[a], e[b])).or_default().push(i);
                }
            }
            edge_bits.push(bits);
        }
        Self {
            n,
            r,
            edges,
            edge_bits,
            incidence,
            pairs,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[u32] {
        &self.edges[i]
    }

    pub fn edge_bits(&self, i: usize) -> &FixedBitSet {
        &self.edge_bits[i]
    }

    /// Indices of the edges containing `v`, ascending.
    pub fn incident_edges(&self, v: u32) -> &[usize] {
        &self.incidence[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.incidence[v as usize].len()
    }

    /// Indices of the edges containing both `u` and `v`, ascending.
    pub fn pair_edges(&self, u: u32, v: u32) -> &[usize] {
        self.pairs.get(&pair_key(u, v)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn pair_multiplicity(&self, u: u32, v: u32) -> usize {
        if u == v {
            return 0;
        }
        self.pair_edges(u, v).len()
    }

    /// Covered pairs with their multiplicities, in canonical order.
    pub fn covered_pairs(&self) -> Vec<((u32, u32), usize)> {
        let mut out: Vec<_> = self.pairs.iter().map(|(&k, v)| (k, v.len())).collect();
        out.sort_unstable();
        out
    }

    pub fn max_pair_multiplicity(&self) -> usize {
        self.pairs.values().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_linear(&self) -> bool {
        self.max_pair_multiplicity() <= 1
    }

    pub fn index_of(&self, edge: &[u32]) -> Option<usize> {
        let mut e = edge.to_vec();
        e.sort_unstable();
        self.edges.binary_search(&e).ok()
    }

    /// Sub-hypergraph keeping the edges at `indices`.
    pub fn subhypergraph(&self, indices: &[usize]) -> Self {
        let edges = indices.iter().map(|&i| self.edges[i].clone()).collect();
        Self::new(self.n, self.r, edges).expect("subset of a valid hypergraph")
    }

    /// Views a 2-uniform hypergraph as a simple graph.
    pub fn to_graph(&self) -> Result<Multigraph> {
        if self.r != 2 {
            return Err(Error::Uniformity(self.r));
        }
        Multigraph::new(self.n, self.edges.iter().map(|e| (e[0], e[1])).collect())
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            schema_version: Some(SCHEMA_VERSION),
            kind: "hypergraph".into(),
            n: self.n,
            r: Some(self.r),
            edges: self.edges.clone(),
        }
    }

    /// Line-oriented text form: `HG n r m` followed by the edges.
    pub fn to_text(&self) -> String {
        let mut s = format!("HG {} {} {}\n", self.n, self.r, self.edges.len());
        for e in &self.edges {
            let line: Vec<String> = e.iter().map(u32::to_string).collect();
            let _ = writeln!(s, "{}", line.join(" "));
        }
        s
    }
}

impl Serialize for Hypergraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_document().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Hypergraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = GraphDocument::deserialize(d)?;
        match doc.into_structure().map_err(serde::de::Error::custom)? {
            Structure::Hypergraph(h) => Ok(h),
            Structure::Graph(g) => g.as_hypergraph().map_err(serde::de::Error::custom),
        }
    }
}

/// An undirected multigraph without loops. Parallel edges express patterns
/// such as the two-edge cycle `C2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(u32, u32)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(u32, u32)>) -> Result<Self> {
        let mut edges: Vec<(u32, u32)> = edges.into_iter().map(|(a, b)| pair_key(a, b)).collect();
        for &(a, b) in &edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {}", a)));
            }
            if b as usize >= n {
                return Err(Error::InvalidGraph(format!("vertex {} out of range for n = {}", b, n)));
            }
        }
        edges.sort_unstable();
        Ok(Self { n, edges })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, edges: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn is_simple(&self) -> bool {
        self.edges.windows(2).all(|w| w[0] != w[1])
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(a, b) in &self.edges {
            d[a as usize] += 1;
            d[b as usize] += 1;
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn multiplicity(&self, u: u32, v: u32) -> usize {
        let k = pair_key(u, v);
        self.edges.iter().filter(|&&e| e == k).count()
    }

    /// Neighbor sets with parallel edges collapsed.
    pub fn adjacency(&self) -> Vec<FixedBitSet> {
        let mut adj = vec![FixedBitSet::with_capacity(self.n); self.n];
        for &(a, b) in &self.edges {
            adj[a as usize].insert(b as usize);
            adj[b as usize].insert(a as usize);
        }
        adj
    }

    /// The same graph with parallel edges collapsed.
    pub fn simplified(&self) -> Self {
        let mut edges = self.edges.clone();
        edges.dedup();
        Self { n: self.n, edges }
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.edges.binary_search(&pair_key(u, v)).is_ok()
    }

    /// Drops isolated vertices, relabelling the rest in increasing order.
    pub fn without_isolated(&self) -> Self {
        let deg = self.degrees();
        let mut relabel = vec![u32::MAX; self.n];
        let mut next = 0u32;
        for v in 0..self.n {
            if deg[v] > 0 {
                relabel[v] = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| (relabel[a as usize], relabel[b as usize]))
            .collect();
        Self::new(next as usize, edges).expect("relabelled graph is valid")
    }

    /// The same graph as a 2-uniform hypergraph. Requires a simple graph.
    pub fn as_hypergraph(&self) -> Result<Hypergraph> {
        if !self.is_simple() {
            return Err(Error::ParallelEdges);
        }
        Ok(Hypergraph::from_sorted(
            self.n,
            2,
            self.edges.iter().map(|&(a, b)| vec![a, b]).collect(),
        ))
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            schema_version: Some(SCHEMA_VERSION),
            kind: "graph".into(),
            n: self.n,
            r: Some(2),
            edges: self.edges.iter().map(|&(a, b)| vec![a, b]).collect(),
        }
    }

    /// Line-oriented text form: `GR n m` followed by the edges.
    pub fn to_text(&self) -> String {
        let mut s = format!("GR {} {}\n", self.n, self.edges.len());
        for &(a, b) in &self.edges {
            let _ = writeln!(s, "{} {}", a, b);
        }
        s
    }

    // Standard patterns.

    pub fn complete(k: usize) -> Self {
        let mut edges = Vec::new();
        for a in 0..k as u32 {
            for b in a + 1..k as u32 {
                edges.push((a, b));
            }
        }
        Self { n: k, edges }
    }

    /// Cycle on `k` vertices; `k = 2` gives two parallel edges.
    pub fn cycle(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidGraph("cycles need at least 2 vertices".into()));
        }
        let edges = (0..k as u32).map(|i| (i, (i + 1) % k as u32)).collect();
        Self::new(k, edges)
    }

    /// Path on `k` vertices.
    pub fn path(k: usize) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidGraph("paths need at least 1 vertex".into()));
        }
        let edges = (1..k as u32).map(|i| (i - 1, i)).collect();
        Self::new(k, edges)
    }

    /// `K_{s,t}` with the `s` side on vertices `0..s`.
    pub fn complete_bipartite(s: usize, t: usize) -> Self {
        let mut edges = Vec::new();
        for a in 0..s as u32 {
            for b in 0..t as u32 {
                edges.push((a, s as u32 + b));
            }
        }
        Self::new(s + t, edges).expect("valid complete bipartite graph")
    }

    /// Parses pattern names such as `K3`, `K2,3`, `C4`, `C2`, `P4`.
    pub fn named(name: &str) -> Result<Self> {
        let bad = || Error::Parameter(format!("unknown pattern name {:?}", name));
        let name = name.trim();
        let mut chars = name.chars();
        let head = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let rest: String = chars.collect();
        let nums: Vec<usize> = rest
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        match (head, nums.as_slice()) {
            ('K', [k]) => Ok(Self::complete(*k)),
            ('K', [s, t]) => Ok(Self::complete_bipartite(*s, *t)),
            ('C', [k]) => Self::cycle(*k),
            ('P', [k]) => Self::path(*k),
            _ => Err(bad()),
        }
    }
}

impl Serialize for Multigraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_document().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Multigraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = GraphDocument::deserialize(d)?;
        match doc.into_structure().map_err(serde::de::Error::custom)? {
            Structure::Graph(g) => Ok(g),
            Structure::Hypergraph(h) => h.to_graph().map_err(serde::de::Error::custom),
        }
    }
}

/// JSON mirror of the text formats.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema_version: Option<u32>,
    pub kind: String,
    pub n: usize,
    #[serde(default)]
    pub r: Option<usize>,
    pub edges: Vec<Vec<u32>>,
}

impl GraphDocument {
    pub fn into_structure(self) -> Result<Structure> {
        match self.kind.as_str() {
            "hypergraph" => {
                let r = self
                    .r
                    .ok_or_else(|| Error::InvalidHypergraph("missing field r".into()))?;
                Ok(Structure::Hypergraph(Hypergraph::new(self.n, r, self.edges)?))
            }
            "graph" => {
                let mut pairs = Vec::with_capacity(self.edges.len());
                for e in self.edges {
                    match e.as_slice() {
                        [a, b] => pairs.push((*a, *b)),
                        _ => {
                            return Err(Error::InvalidGraph(format!("edge {:?} is not a pair", e)))
                        }
                    }
                }
                Ok(Structure::Graph(Multigraph::new(self.n, pairs)?))
            }
            other => Err(Error::InvalidGraph(format!("unknown kind {:?}", other))),
        }
    }
}

/// Either kind of structure read from a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Hypergraph(Hypergraph),
    Graph(Multigraph),
}

impl Structure {
    pub fn into_hypergraph(self) -> Result<Hypergraph> {
        match self {
            Structure::Hypergraph(h) => Ok(h),
            Structure::Graph(g) => g.as_hypergraph(),
        }
    }

    pub fn into_graph(self) -> Result<Multigraph> {
        match self {
            Structure::Graph(g) => Ok(g),
            Structure::Hypergraph(h) => h.to_graph(),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Structure::Hypergraph(h) => h.to_text(),
            Structure::Graph(g) => g.to_text(),
        }
    }

    pub fn to_json(&self) -> String {
        let doc = match self {
            Structure::Hypergraph(h) => h.to_document(),
            Structure::Graph(g) => g.to_document(),
        };
        serde_json::to_string_pretty(&doc).expect("document serializes")
    }
}

/// Parses either the text format or the JSON mirror.
pub fn parse_structure(input: &str) -> Result<Structure> {
    if input.trim_start().starts_with('{') {
        let doc: GraphDocument = serde_json::from_str(input)?;
        return doc.into_structure();
    }
    parse_text(input)
}

fn parse_text(input: &str) -> Result<Structure> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "empty input".into(),
    })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let num = |s: &str| -> Result<usize> {
        s.parse().map_err(|_| Error::Parse {
            line: hline,
            msg: format!("expected a number, found {:?}", s),
        })
    };
    let (kind, n, r, m) = match fields.as_slice() {
        ["HG", n, r, m] => ("hypergraph", num(n)?, num(r)?, num(m)?),
        ["GR", n, m] => ("graph", num(n)?, 2, num(m)?),
        _ => {
            return Err(Error::Parse {
                line: hline,
                msg: format!("bad header {:?}", header),
            })
        }
    };
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        let e: Vec<u32> = text
            .split_whitespace()
            .map(|t| {
                t.parse().map_err(|_| Error::Parse {
                    line,
                    msg: format!("bad vertex {:?}", t),
                })
            })
            .collect::<Result<_>>()?;
        if e.len() != r {
            return Err(Error::Parse {
                line,
                msg: format!("expected {} vertices, found {}", r, e.len()),
            });
        }
        edges.push(e);
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: hline,
            msg: format!("header announces {} edges, found {}", m, edges.len()),
        });
    }
    let doc = GraphDocument {
        schema_version: None,
        kind: kind.into(),
        n,
        r: Some(r),
        edges,
    };
    doc.into_structure()
}

/// The Fano plane: the Steiner triple system on 7 points.
pub fn fano_plane() -> Hypergraph {
    let lines = [
        [0, 1, 2],
        [0, 3, 4],
        [0, 5, 6],
        [1, 3, 5],
        [1, 4, 6],
        [2, 3, 6],
        [2, 4, 5],
    ];
    Hypergraph::new(7, 3, lines.iter().map(|l| l.to_vec()).collect()).expect("Fano plane")
}

/// Point-line incidence graph of the Fano plane: points `0..7`, lines `7..14`.
pub fn fano_incidence_graph() -> Multigraph {
    let fano = fano_plane();
    let mut edges = Vec::new();
    for (i, line) in fano.edges().iter().enumerate() {
        for &p in line {
            edges.push((p, 7 + i as u32));
        }
    }
    Multigraph::new(14, edges).expect("incidence graph")
}
