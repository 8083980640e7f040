//! Pair colouring and bad-set elimination for Berge-F-free hypergraphs.
//!
//! Pairs covered by few hyperedges are blue, heavily covered pairs are red.
//! The auxiliary graph G holds every red pair and a set S' of blue pairs with
//! at most one per hyperedge. Copies of F in G either lift to a Berge copy in
//! H or expose a Hall violator, from which one lightly covered red pair is
//! deleted. The survivors split into two F-free graphs G1 and G2.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::berge::{find_subgraph, BergeWitness};
use crate::cliques::{binomial, count_cliques};
use crate::error::{Error, Result};
pub use crate::matching::{find_bad_set, BadSet};
use crate::matching::maximum_matching;
use crate::hypergraph::{pair_key, Hypergraph, Multigraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Colour {
    Blue,
    Red,
    Purple,
    Green,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairEntry {
    pub pair: (u32, u32),
    pub multiplicity: usize,
    pub colour: Colour,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairColouring {
    pub r: usize,
    /// `C(r,2) - 2`: the largest multiplicity of a blue pair.
    pub threshold: usize,
    /// Every covered pair, in canonical order.
    pub pairs: Vec<PairEntry>,
    pub hyperedges: Vec<Colour>,
    #[serde(skip)]
    index: HashMap<(u32, u32), usize>,
}

impl PairColouring {
    pub fn colour(&self, u: u32, v: u32) -> Option<Colour> {
        self.index.get(&pair_key(u, v)).map(|&i| self.pairs[i].colour)
    }

    pub fn blue_pairs(&self) -> Vec<(u32, u32)> {
        self.with_colour(Colour::Blue)
    }

    pub fn red_pairs(&self) -> Vec<(u32, u32)> {
        self.with_colour(Colour::Red)
    }

    fn with_colour(&self, c: Colour) -> Vec<(u32, u32)> {
        self.pairs.iter().filter(|p| p.colour == c).map(|p| p.pair).collect()
    }
}

fn require_r(h: &Hypergraph) -> Result<usize> {
    if h.r() < 3 {
        return Err(Error::Uniformity(h.r()));
    }
    Ok(binomial(h.r() as u64, 2) as usize - 2)
}

/// Blue when the multiplicity is at most `C(r,2) - 2`, red above it; a
/// hyperedge is blue when it contains a blue pair.
pub fn classify_pairs(h: &Hypergraph) -> Result<PairColouring> {
    let threshold = require_r(h)?;
    let pairs: Vec<PairEntry> = h
        .covered_pairs()
        .into_iter()
        .map(|(pair, multiplicity)| PairEntry {
            pair,
            multiplicity,
            colour: if multiplicity <= threshold { Colour::Blue } else { Colour::Red },
        })
        .collect();
    let index: HashMap<(u32, u32), usize> = pairs.iter().enumerate().map(|(i, p)| (p.pair, i)).collect();
    let hyperedges = h
        .edges()
        .iter()
        .map(|e| {
            let blue = e.iter().enumerate().any(|(i, &a)| {
                e[i + 1..]
                    .iter()
                    .any(|&b| pairs[index[&(a, b)]].colour == Colour::Blue)
            });
            if blue {
                Colour::Blue
            } else {
                Colour::Red
            }
        })
        .collect();
    Ok(PairColouring {
        r: h.r(),
        threshold,
        pairs,
        hyperedges,
        index,
    })
}

fn serialize_big<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn serialize_display<T: std::fmt::Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, Serialize)]
pub struct Representatives {
    pub s_prime: Vec<(u32, u32)>,
    pub blue_pairs: usize,
    /// `|S'| / |S|`, or 1 when there are no blue pairs.
    #[serde(serialize_with = "serialize_big")]
    pub ratio: BigRational,
    /// True when `|S'| (C(r,2) - 2) < |S|`.
    pub below_claimed_ratio: bool,
}

/// Greedy S': take blue pairs in canonical order, skipping any pair whose
/// hyperedges already hold a chosen pair.
pub fn select_blue_representatives(h: &Hypergraph, colouring: &PairColouring) -> Representatives {
    let mut marked = vec![false; h.edge_count()];
    let mut s_prime = Vec::new();
    let blue = colouring.blue_pairs();
    for &(u, v) in &blue {
        let hs = h.pair_edges(u, v);
        if hs.iter().any(|&e| marked[e]) {
            continue;
        }
        for &e in hs {
            marked[e] = true;
        }
        s_prime.push((u, v));
    }
    let ratio = if blue.is_empty() {
        BigRational::one()
    } else {
        BigRational::new(BigInt::from(s_prime.len()), BigInt::from(blue.len()))
    };
    Representatives {
        below_claimed_ratio: s_prime.len() * colouring.threshold < blue.len(),
        blue_pairs: blue.len(),
        s_prime,
        ratio,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EngineStatus {
    /// Every copy of F was eliminated.
    Completed,
    /// A copy of F lifted to a Berge copy in H.
    BergeFound,
    /// A step the argument guarantees could not be carried out.
    InvariantViolation,
}

#[derive(Clone, Debug, Serialize)]
pub struct DeletedPair {
    pub pair: (u32, u32),
    /// Hyperedges containing the pair that were still red when it was deleted.
    pub red_hyperedges: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceStep {
    pub iteration: usize,
    pub copy_core: Vec<u32>,
    pub copy_edges: Vec<(u32, u32)>,
    pub copy_has_blue: bool,
    pub bad_set: Vec<(u32, u32)>,
    pub bad_neighbourhood: Vec<usize>,
    pub deleted: Option<DeletedPair>,
    pub recoloured: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EngineReport {
    pub status: EngineStatus,
    pub iterations: usize,
    pub iteration_cap: usize,
    pub blue_pairs: usize,
    pub red_pairs: usize,
    pub representatives: Representatives,
    pub g: Multigraph,
    pub g1: Multigraph,
    pub g2: Multigraph,
    pub deleted: Vec<DeletedPair>,
    pub blue_hyperedges: usize,
    pub green_hyperedges: usize,
    pub purple_hyperedges: usize,
    /// Number of purple pairs.
    pub x: usize,
    pub g1_free: bool,
    pub g2_free: bool,
    pub witness: Option<BergeWitness>,
    pub violations: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<TraceStep>,
}

struct Copy {
    core: Vec<u32>,
    edges: Vec<(u32, u32)>,
}

fn locate_copy(g_pairs: &BTreeSet<(u32, u32)>, n: usize, f: &Multigraph) -> Result<Option<Copy>> {
    let g = Multigraph::new(n, g_pairs.iter().copied().collect())?;
    Ok(find_subgraph(&g, f)?.map(|w| {
        let edges = f
            .edges()
            .iter()
            .map(|&(a, b)| pair_key(w.core_map[a as usize], w.core_map[b as usize]))
            .collect();
        Copy { core: w.core_map, edges }
    }))
}

/// Edges of the copy against the hyperedges containing them.
fn incidence(h: &Hypergraph, copy: &Copy) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut right: Vec<usize> = copy.edges.iter().flat_map(|&(a, b)| h.pair_edges(a, b).to_vec()).collect();
    right.sort_unstable();
    right.dedup();
    let adj = copy
        .edges
        .iter()
        .map(|&(a, b)| {
            h.pair_edges(a, b)
                .iter()
                .map(|e| right.binary_search(e).expect("collected above"))
                .collect()
        })
        .collect();
    (right, adj)
}

fn saturating_witness(h: &Hypergraph, copy: &Copy) -> Option<BergeWitness> {
    let (right, adj) = incidence(h, copy);
    let m = maximum_matching(right.len(), &adj);
    m.is_left_saturating().then(|| BergeWitness {
        core_map: copy.core.clone(),
        edge_map: m.left.iter().map(|j| right[j.expect("saturating")]).collect(),
    })
}

/// Runs the elimination on `h` against pattern `f`. With `trace` every
/// iteration is recorded in the report.
pub fn eliminate(h: &Hypergraph, f: &Multigraph, trace: bool) -> Result<EngineReport> {
    let threshold = require_r(h)?;
    let r = h.r();
    if count_cliques(&f.simplified(), r)?.count > 0 {
        return Err(Error::Precondition(format!("pattern contains K{}", r)));
    }
    let colouring = classify_pairs(h)?;
    let reps = select_blue_representatives(h, &colouring);
    let originally_red = |e: usize| colouring.hyperedges[e] == Colour::Red;

    let mut pair_colour: HashMap<(u32, u32), Colour> = HashMap::new();
    for p in colouring.red_pairs() {
        pair_colour.insert(p, Colour::Red);
    }
    for &p in &reps.s_prime {
        pair_colour.insert(p, Colour::Blue);
    }
    let mut g_pairs: BTreeSet<(u32, u32)> = pair_colour.keys().copied().collect();
    let g_initial = Multigraph::new(h.n(), g_pairs.iter().copied().collect())?;
    let mut edge_colour = colouring.hyperedges.clone();
    let cap = g_pairs.len();

    let mut status = EngineStatus::Completed;
    let mut witness = None;
    let mut violations = Vec::new();
    let mut deleted = Vec::new();
    let mut steps = Vec::new();
    let mut iterations = 0;

    while let Some(copy) = locate_copy(&g_pairs, h.n(), f)? {
        let copy_has_blue = copy.edges.iter().any(|p| pair_colour[p] == Colour::Blue);
        if let Some(w) = saturating_witness(h, &copy) {
            status = EngineStatus::BergeFound;
            witness = Some(w);
            break;
        }
        if !copy_has_blue {
            violations.push(format!("copy on {:?} has no blue edge yet no Berge lift", copy.core));
            status = EngineStatus::InvariantViolation;
            break;
        }
        let (right, adj) = incidence(h, &copy);
        let bad = find_bad_set(right.len(), &adj).expect("no saturating matching");
        let bad_pairs: Vec<(u32, u32)> = bad.x.iter().map(|&i| copy.edges[i]).collect();
        let choice = bad_pairs
            .iter()
            .copied()
            .filter(|p| pair_colour[p] == Colour::Red)
            .filter(|&(a, b)| h.pair_edges(a, b).iter().filter(|&&e| originally_red(e)).count() <= threshold)
            .map(|(a, b)| {
                let current = h
                    .pair_edges(a, b)
                    .iter()
                    .filter(|&&e| edge_colour[e] == Colour::Red)
                    .count();
                (current, (a, b))
            })
            .min();
        let Some((red_count, pair)) = choice else {
            violations.push(format!("bad set {:?} has no lightly covered red edge", bad_pairs));
            status = EngineStatus::InvariantViolation;
            break;
        };
        iterations += 1;
        if iterations > cap {
            return Err(Error::Internal(format!("elimination exceeded {} deletions", cap)));
        }
        g_pairs.remove(&pair);
        pair_colour.insert(pair, Colour::Green);
        let recoloured: Vec<usize> = h
            .pair_edges(pair.0, pair.1)
            .iter()
            .copied()
            .filter(|&e| edge_colour[e] == Colour::Red)
            .collect();
        for &e in &recoloured {
            edge_colour[e] = Colour::Green;
        }
        let record = DeletedPair {
            pair,
            red_hyperedges: red_count,
        };
        if trace {
            steps.push(TraceStep {
                iteration: iterations,
                copy_core: copy.core.clone(),
                copy_edges: copy.edges.clone(),
                copy_has_blue,
                bad_set: bad_pairs,
                bad_neighbourhood: bad.neighbors.iter().map(|&j| right[j]).collect(),
                deleted: Some(record.clone()),
                recoloured,
            });
        }
        deleted.push(record);
    }

    for c in pair_colour.values_mut() {
        if *c == Colour::Red {
            *c = Colour::Purple;
        }
    }
    for c in edge_colour.iter_mut() {
        if *c == Colour::Red {
            *c = Colour::Purple;
        }
    }
    let pick = |keep: &dyn Fn(Colour) -> bool| -> Vec<(u32, u32)> {
        let mut v: Vec<(u32, u32)> = pair_colour.iter().filter(|(_, &c)| keep(c)).map(|(&p, _)| p).collect();
        v.sort_unstable();
        v
    };
    let g1 = Multigraph::new(h.n(), pick(&|c| c == Colour::Blue || c == Colour::Purple))?;
    let g2 = Multigraph::new(h.n(), pick(&|c| c == Colour::Green || c == Colour::Purple))?;
    let x = pick(&|c| c == Colour::Purple).len();
    let g1_free = find_subgraph(&g1, f)?.is_none();
    let mut g2_free = true;
    if status == EngineStatus::Completed {
        if let Some(copy) = locate_copy(&g2.edges().iter().copied().collect(), h.n(), f)? {
            g2_free = false;
            match saturating_witness(h, &copy) {
                Some(w) => {
                    status = EngineStatus::BergeFound;
                    witness = Some(w);
                }
                None => {
                    violations.push(format!("G2 holds a copy on {:?} that does not lift", copy.core));
                    status = EngineStatus::InvariantViolation;
                }
            }
        }
        if !g1_free {
            violations.push("G1 still contains a copy of the pattern".into());
            status = EngineStatus::InvariantViolation;
        }
    } else {
        g2_free = find_subgraph(&g2, f)?.is_none();
    }
    for d in &deleted {
        if d.red_hyperedges > threshold {
            violations.push(format!("green pair {:?} had {} red hyperedges", d.pair, d.red_hyperedges));
        }
    }
    if let Some(w) = &witness {
        if !w.verify(h, f) {
            return Err(Error::Internal("engine witness does not verify".into()));
        }
    }
    let count = |c: Colour| edge_colour.iter().filter(|&&e| e == c).count();
    Ok(EngineReport {
        status,
        iterations,
        iteration_cap: cap,
        blue_pairs: colouring.blue_pairs().len(),
        red_pairs: colouring.red_pairs().len(),
        representatives: reps,
        g: g_initial,
        g1,
        g2,
        deleted,
        blue_hyperedges: count(Colour::Blue),
        green_hyperedges: count(Colour::Green),
        purple_hyperedges: count(Colour::Purple),
        x,
        g1_free,
        g2_free,
        witness,
        violations,
        trace: steps,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CliqueBoundReport {
    pub n: usize,
    pub x: usize,
    pub r: usize,
    pub cliques: u64,
    /// `2 c x n^{i-1} / r`
    #[serde(serialize_with = "serialize_big")]
    pub degree_bound: BigRational,
    /// `c x (r-1) (2 ex / n)^{i-1}`, absent when undefined.
    pub average_bound: Option<String>,
    #[serde(serialize_with = "serialize_display")]
    pub bound: BigInt,
    pub holds: bool,
}

fn rational_pow(base: &BigRational, exp: i64) -> Option<BigRational> {
    if exp < 0 && base.is_zero() {
        return None;
    }
    let b = if exp < 0 { base.recip() } else { base.clone() };
    let mut acc = BigRational::one();
    for _ in 0..exp.unsigned_abs() {
        acc *= &b;
    }
    Some(acc)
}

/// Compares the r-clique count of `g` with the smaller of the two clique
/// bounds, in exact arithmetic with the floor taken at the end.
pub fn clique_bound_check(g: &Multigraph, c: &BigRational, i: i64, ex_value: u64, r: usize) -> Result<CliqueBoundReport> {
    let cliques = count_cliques(g, r)?.count;
    let n = g.n();
    let x = g.edge_count();
    if n == 0 {
        return Err(Error::Parameter("graph has no vertices".into()));
    }
    let int = |v: u64| BigRational::from_integer(BigInt::from(v));
    let xr = int(x as u64);
    let degree_bound = int(2) * c * &xr * rational_pow(&int(n as u64), i - 1).expect("n > 0") / int(r as u64);
    let average = rational_pow(&(int(2 * ex_value) / int(n as u64)), i - 1)
        .map(|p| c * &xr * int(r as u64 - 1) * p);
    let min = match &average {
        Some(a) if a < &degree_bound => a.clone(),
        _ => degree_bound.clone(),
    };
    let bound = if min.is_negative() { -((-min).ceil().to_integer()) } else { min.numer().div_floor(min.denom()) };
    Ok(CliqueBoundReport {
        n,
        x,
        r,
        cliques,
        holds: BigInt::from(cliques) <= bound,
        degree_bound,
        average_bound: average.map(|a| a.to_string()),
        bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::fano_plane;

    fn hg(n: usize, r: usize, e: &[&[u32]]) -> Hypergraph {
        Hypergraph::new(n, r, e.iter().map(|x| x.to_vec()).collect()).unwrap()
    }

    #[test]
    fn classification_examples() {
        let c = classify_pairs(&hg(4, 3, &[&[0, 1, 2], &[0, 1, 3]])).unwrap();
        assert_eq!(c.colour(0, 1), Some(Colour::Red));
        for (a, b) in [(0, 2), (1, 2), (0, 3), (1, 3)] {
            assert_eq!(c.colour(a, b), Some(Colour::Blue));
        }
        assert_eq!(c.colour(2, 3), None);

        let fano = classify_pairs(&fano_plane()).unwrap();
        assert_eq!(fano.blue_pairs().len(), 21);
        assert!(fano.red_pairs().is_empty());

        let h = hg(10, 4, &[&[0, 1, 2, 3], &[0, 1, 4, 5], &[0, 1, 6, 7], &[0, 1, 8, 9]]);
        assert_eq!(classify_pairs(&h).unwrap().colour(0, 1), Some(Colour::Blue));
        assert!(classify_pairs(&Multigraph::complete(3).as_hypergraph().unwrap()).is_err());
    }

    #[test]
    fn representatives() {
        let one = hg(3, 3, &[&[0, 1, 2]]);
        let c = classify_pairs(&one).unwrap();
        assert_eq!(select_blue_representatives(&one, &c).s_prime.len(), 1);

        let fano = fano_plane();
        let rep = select_blue_representatives(&fano, &classify_pairs(&fano).unwrap());
        assert_eq!(rep.s_prime.len(), 7);
        assert!(rep.below_claimed_ratio);

        let disjoint = hg(6, 3, &[&[0, 1, 2], &[3, 4, 5]]);
        let rep = select_blue_representatives(&disjoint, &classify_pairs(&disjoint).unwrap());
        assert_eq!(rep.s_prime, vec![(0, 1), (3, 4)]);
    }

    #[test]
    fn fano_against_c4() {
        // four points in general position span a Berge quadrangle
        let k22 = Multigraph::complete_bipartite(2, 2);
        let fano = fano_plane();
        let rep = eliminate(&fano, &k22, true).unwrap();
        assert_eq!(rep.status, EngineStatus::BergeFound);
        assert!(rep.witness.unwrap().verify(&fano, &k22));
        assert!(rep.violations.is_empty());
    }

    #[test]
    fn fano_against_k23_completes() {
        let k23 = Multigraph::complete_bipartite(2, 3);
        let rep = eliminate(&fano_plane(), &k23, true).unwrap();
        assert_eq!(rep.status, EngineStatus::Completed);
        assert!(rep.g1_free && rep.g2_free);
        assert!(rep.witness.is_none());
        assert!(rep.violations.is_empty());
    }

    #[test]
    fn obvious_berge_triangle() {
        let h = hg(6, 3, &[&[0, 1, 3], &[1, 2, 4], &[0, 2, 5]]);
        let k3 = Multigraph::complete(3);
        // r = 3 rejects K3 itself, so use r = 4 by padding each edge
        assert!(eliminate(&h, &k3, false).is_err());
        let h4 = hg(9, 4, &[&[0, 1, 3, 6], &[1, 2, 4, 7], &[0, 2, 5, 8]]);
        let rep = eliminate(&h4, &k3, false).unwrap();
        assert_eq!(rep.status, EngineStatus::BergeFound);
        assert!(rep.witness.unwrap().verify(&h4, &k3));
    }

    #[test]
    fn no_copy_means_no_iterations() {
        let h = hg(6, 3, &[&[0, 1, 2], &[3, 4, 5]]);
        let rep = eliminate(&h, &Multigraph::complete_bipartite(2, 2), false).unwrap();
        assert_eq!(rep.iterations, 0);
        assert!(rep.deleted.is_empty());
        assert_eq!(rep.status, EngineStatus::Completed);
    }

    #[test]
    fn clique_bound_examples() {
        let one = BigRational::one();
        let rep = clique_bound_check(&Multigraph::complete(3), &one, 1, 3, 3).unwrap();
        assert_eq!(rep.cliques, 1);
        assert_eq!(rep.bound, BigInt::from(2));
        assert!(rep.holds);
        let rep = clique_bound_check(&Multigraph::cycle(5).unwrap(), &one, 1, 5, 3).unwrap();
        assert_eq!(rep.cliques, 0);
        assert!(rep.holds);
    }
}
