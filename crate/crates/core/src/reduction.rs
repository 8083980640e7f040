//! Splitting a hypergraph into a graph of picked pairs plus the hyperedges
//! whose pairs were all picked earlier.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::berge::{contains_berge, BergeWitness};
use crate::cliques::count_cliques;
use crate::error::{Error, Result};
use crate::hypergraph::{pair_key, Hypergraph, Multigraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairRule {
    /// Lexicographically smallest pair not yet picked.
    Lexicographic,
    /// Uniform among the pairs not yet picked, driven by the seed.
    Random(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pick {
    Pair(u32, u32),
    Blue,
}

#[derive(Clone, Debug, Serialize)]
pub struct Gp2Decomposition {
    pub blue_graph: Multigraph,
    pub blue_hyperedges: Vec<usize>,
    /// Indexed by hyperedge.
    pub pick: Vec<Pick>,
    pub order: Vec<usize>,
}

/// Seeded permutation of `0..m`.
pub fn shuffled_order(m: usize, seed: u64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..m).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    order
}

fn edge_pairs(e: &[u32]) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for (i, &a) in e.iter().enumerate() {
        for &b in &e[i + 1..] {
            out.push((a, b));
        }
    }
    out
}

/// Processes hyperedges in `order` (canonical order when `None`); each one
/// picks a pair that no earlier hyperedge picked, or becomes blue when every
/// pair it contains is already taken.
pub fn gp2_decompose(h: &Hypergraph, order: Option<&[usize]>, rule: PairRule) -> Result<Gp2Decomposition> {
    let m = h.edge_count();
    let order: Vec<usize> = match order {
        Some(o) => {
            let mut check = o.to_vec();
            check.sort_unstable();
            if check != (0..m).collect::<Vec<_>>() {
                return Err(Error::Parameter("order is not a permutation of the edges".into()));
            }
            o.to_vec()
        }
        None => (0..m).collect(),
    };
    let mut rng = match rule {
        PairRule::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        PairRule::Lexicographic => None,
    };
    let mut taken: std::collections::HashSet<(u32, u32)> = std::collections::HashSet::new();
    let mut pick = vec![Pick::Blue; m];
    let mut blue_hyperedges = Vec::new();
    for &i in &order {
        let free: Vec<(u32, u32)> = edge_pairs(h.edge(i)).into_iter().filter(|p| !taken.contains(p)).collect();
        if free.is_empty() {
            blue_hyperedges.push(i);
            continue;
        }
        let p = match rng.as_mut() {
            Some(rng) => free[rng.gen_range(0..free.len())],
            None => free[0],
        };
        taken.insert(p);
        pick[i] = Pick::Pair(p.0, p.1);
    }
    blue_hyperedges.sort_unstable();
    let blue_graph = Multigraph::new(h.n(), taken.into_iter().collect())?;
    Ok(Gp2Decomposition {
        blue_graph,
        blue_hyperedges,
        pick,
        order,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Gp2Report {
    pub hyperedges: usize,
    pub blue_pairs: usize,
    pub blue_hyperedges: usize,
    pub r_cliques: u64,
    pub h_berge_free: bool,
    pub blue_graph_free: bool,
    /// Berge-freeness of H carries over to the blue graph.
    pub check_freeness: bool,
    /// Blue hyperedges are at most the r-cliques of the blue graph.
    pub check_cliques: bool,
    /// Hyperedges = blue pairs + blue hyperedges.
    pub check_identity: bool,
    /// Copy of F in the blue graph lifted to a Berge copy in H.
    pub lifted_witness: Option<BergeWitness>,
}

impl Gp2Report {
    pub fn passed(&self) -> bool {
        self.check_freeness && self.check_cliques && self.check_identity
    }
}

fn validate(h: &Hypergraph, d: &Gp2Decomposition) -> Result<HashMap<(u32, u32), usize>> {
    if d.pick.len() != h.edge_count() || d.blue_graph.n() != h.n() {
        return Err(Error::Decomposition("size mismatch with the hypergraph".into()));
    }
    let mut owner = HashMap::new();
    for (i, p) in d.pick.iter().enumerate() {
        match *p {
            Pick::Pair(a, b) => {
                let e = h.edge(i);
                if a == b || !e.contains(&a) || !e.contains(&b) {
                    return Err(Error::Decomposition(format!("pair {}-{} is not inside hyperedge {}", a, b, i)));
                }
                if owner.insert(pair_key(a, b), i).is_some() {
                    return Err(Error::Decomposition(format!("pair {}-{} picked twice", a, b)));
                }
            }
            Pick::Blue => {
                if !d.blue_hyperedges.contains(&i) {
                    return Err(Error::Decomposition(format!("hyperedge {} unpicked but not blue", i)));
                }
            }
        }
    }
    if !d.blue_graph.is_simple() || d.blue_graph.edge_count() != owner.len() {
        return Err(Error::Decomposition("blue graph differs from the picked pairs".into()));
    }
    for &(a, b) in d.blue_graph.edges() {
        if !owner.contains_key(&(a, b)) {
            return Err(Error::Decomposition(format!("blue edge {}-{} was never picked", a, b)));
        }
    }
    for &i in &d.blue_hyperedges {
        if d.pick.get(i) != Some(&Pick::Blue) {
            return Err(Error::Decomposition(format!("hyperedge {} is blue but picked a pair", i)));
        }
        if edge_pairs(h.edge(i)).iter().any(|p| !owner.contains_key(p)) {
            return Err(Error::Decomposition(format!("blue hyperedge {} has an unpicked pair", i)));
        }
    }
    Ok(owner)
}

/// Checks the three properties of a decomposition against pattern `f`.
pub fn gp2_certify(h: &Hypergraph, f: &Multigraph, d: &Gp2Decomposition) -> Result<Gp2Report> {
    let owner = validate(h, d)?;
    let h_free = contains_berge(h, f).is_none();
    let host = d.blue_graph.as_hypergraph()?;
    let copy = contains_berge(&host, f);
    let lifted_witness = copy.map(|w| BergeWitness {
        core_map: w.core_map.clone(),
        edge_map: w
            .edge_map
            .iter()
            .map(|&e| {
                let v = host.edge(e);
                owner[&(v[0], v[1])]
            })
            .collect(),
    });
    if let Some(w) = &lifted_witness {
        if !w.verify(h, f) {
            return Err(Error::Internal("lifted witness does not verify".into()));
        }
    }
    let r_cliques = count_cliques(&d.blue_graph, h.r())?.count;
    let blue_pairs = d.blue_graph.edge_count();
    Ok(Gp2Report {
        hyperedges: h.edge_count(),
        blue_pairs,
        blue_hyperedges: d.blue_hyperedges.len(),
        r_cliques,
        h_berge_free: h_free,
        blue_graph_free: lifted_witness.is_none(),
        check_freeness: !h_free || lifted_witness.is_none(),
        check_cliques: d.blue_hyperedges.len() as u64 <= r_cliques,
        check_identity: h.edge_count() == blue_pairs + d.blue_hyperedges.len(),
        lifted_witness,
    })
}
