//! Neighbourhood profiles of linear hypergraphs and a per-vertex audit of
//! the degree-sum inequalities that hold when there is no Berge-K2,t.

use std::collections::BTreeSet;

use num_rational::Rational64;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::berge::{contains_berge, BergeWitness};
use crate::cliques::binomial;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Multigraph};

/// Above this many hyperedges the audit skips the freeness check and
/// reports itself as conditional.
pub const DEFAULT_FREENESS_LIMIT: usize = 400;

#[derive(Clone, Debug, Serialize)]
pub struct FirstNeighbour {
    pub u: u32,
    pub degree: usize,
    /// Hyperedges meeting the first neighbourhood exactly in `u`.
    pub e_u: Vec<usize>,
    /// Second-neighbourhood vertices covered by `e_u`.
    pub v_u: Vec<u32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IncidentEdge {
    pub edge: usize,
    /// Union of `v_u` over the other vertices of the edge.
    pub v_i: Vec<u32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NeighborhoodProfile {
    pub v: u32,
    pub t: usize,
    pub n1: Vec<u32>,
    pub n2: Vec<u32>,
    pub first: Vec<FirstNeighbour>,
    pub incident: Vec<IncidentEdge>,
}

impl NeighborhoodProfile {
    pub fn neighbour(&self, u: u32) -> Option<&FirstNeighbour> {
        self.first.iter().find(|f| f.u == u)
    }
}

pub fn profile(h: &Hypergraph, v: u32, t: usize) -> Result<NeighborhoodProfile> {
    if !h.is_linear() {
        return Err(Error::NotLinear);
    }
    if v as usize >= h.n() {
        return Err(Error::Parameter(format!("vertex {} out of range", v)));
    }
    Ok(profile_unchecked(h, v, t))
}

fn profile_unchecked(h: &Hypergraph, v: u32, t: usize) -> NeighborhoodProfile {
    let n = h.n();
    let mut in_n1 = vec![false; n];
    for &e in h.incident_edges(v) {
        for &x in h.edge(e) {
            if x != v {
                in_n1[x as usize] = true;
            }
        }
    }
    let n1: Vec<u32> = (0..n as u32).filter(|&x| in_n1[x as usize]).collect();
    let mut n2 = BTreeSet::new();
    for &u in &n1 {
        for &e in h.incident_edges(u) {
            for &x in h.edge(e) {
                if x != v && !in_n1[x as usize] {
                    n2.insert(x);
                }
            }
        }
    }
    let first: Vec<FirstNeighbour> = n1
        .iter()
        .map(|&u| {
            let e_u: Vec<usize> = h
                .incident_edges(u)
                .iter()
                .copied()
                .filter(|&e| h.edge(e).iter().all(|&x| x == u || !in_n1[x as usize]))
                .collect();
            let v_u: BTreeSet<u32> = e_u
                .iter()
                .flat_map(|&e| h.edge(e).iter().copied())
                .filter(|x| n2.contains(x))
                .collect();
            FirstNeighbour {
                u,
                degree: h.degree(u),
                e_u,
                v_u: v_u.into_iter().collect(),
            }
        })
        .collect();
    let lookup = |u: u32| &first[n1.binary_search(&u).expect("member of N1")];
    let incident = h
        .incident_edges(v)
        .iter()
        .map(|&e| {
            let v_i: BTreeSet<u32> = h
                .edge(e)
                .iter()
                .filter(|&&u| u != v)
                .flat_map(|&u| lookup(u).v_u.iter().copied())
                .collect();
            IncidentEdge {
                edge: e,
                v_i: v_i.into_iter().collect(),
            }
        })
        .collect();
    NeighborhoodProfile {
        v,
        t,
        n1,
        n2: n2.into_iter().collect(),
        first,
        incident,
    }
}

fn serialize_ratio<S: Serializer>(r: &Rational64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditConstants {
    /// `(2r^2 - 4r + 1) t / 2`
    #[serde(serialize_with = "serialize_ratio")]
    pub c1: Rational64,
    #[serde(serialize_with = "serialize_ratio")]
    pub c2: Rational64,
    /// Average degree minus `sqrt(n(t-1)) / (r-1)`, measured on this input.
    pub c3_empirical: f64,
}

impl AuditConstants {
    pub fn new(r: usize, t: usize) -> Self {
        let (r, t) = (r as i64, t as i64);
        let c1 = Rational64::new((2 * r * r - 4 * r + 1) * t, 2);
        Self {
            c1,
            c2: c1 * c1,
            c3_empirical: 0.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AuditLabel {
    /// The detector confirmed there is no Berge-K2,t.
    Certified,
    /// Freeness was not checked; the audit still ran.
    Conditional,
    /// The input contains a Berge-K2,t, so violations are expected.
    PreconditionFailed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub vertex: u32,
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub n: usize,
    pub r: usize,
    pub t: usize,
    pub edges: usize,
    pub label: AuditLabel,
    pub witness: Option<BergeWitness>,
    pub constants: AuditConstants,
    pub vertices_audited: usize,
    pub violations: Vec<Violation>,
    /// `(r-1)^2 d^2 <= (t-1) n + (r-1)(2r^2-4r+1) t d` for the average degree.
    pub global_inequality: bool,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.global_inequality
    }
}

fn audit_vertex(h: &Hypergraph, v: u32, t: usize) -> Vec<Violation> {
    let p = profile_unchecked(h, v, t);
    let r = h.r() as i64;
    let ti = t as i64;
    let n = h.n() as i64;
    let mut out = Vec::new();
    let mut flag = |check: &str, detail: String| {
        out.push(Violation {
            vertex: v,
            check: check.to_string(),
            detail,
        })
    };
    let in_n1 = |x: u32| p.n1.binary_search(&x).is_ok();
    for f in &p.first {
        let heavy = h
            .incident_edges(f.u)
            .iter()
            .filter(|&&e| h.edge(e).iter().filter(|&&x| in_n1(x)).count() >= 2)
            .count() as i64;
        if heavy > (r - 1) * (ti - 1) + 1 {
            flag("a", format!("u={} lies in {} edges meeting N1 twice", f.u, heavy));
        }
        let vu = f.v_u.len() as i64;
        if vu < (r - 1) * f.degree as i64 - (r - 1) * (r - 1) * ti {
            flag("b", format!("u={} has |V_u|={} and d(u)={}", f.u, vu, f.degree));
        }
        let expected = if r == 2 { f.e_u.len() as i64 - 1 } else { (r - 1) * f.e_u.len() as i64 };
        if vu != expected {
            flag("v_u_size", format!("u={} has |V_u|={} but |E_u|={}", f.u, vu, f.e_u.len()));
        }
    }
    let overlap_cap = (2 * r - 3) * ti - 1;
    let slack = binomial(r as u64 - 1, 2) as i64 * 2 * r * ti;
    let mut sum_vi = 0i64;
    for inc in &p.incident {
        let us: Vec<&FirstNeighbour> = h
            .edge(inc.edge)
            .iter()
            .filter(|&&u| u != v)
            .map(|&u| p.neighbour(u).expect("member of N1"))
            .collect();
        for (i, a) in us.iter().enumerate() {
            for b in &us[i + 1..] {
                let common = a.v_u.iter().filter(|x| b.v_u.binary_search(x).is_ok()).count() as i64;
                if common > overlap_cap {
                    flag("overlap", format!("V_{} and V_{} share {} vertices", a.u, b.u, common));
                }
            }
        }
        let total: i64 = us.iter().map(|f| f.v_u.len() as i64).sum();
        if (inc.v_i.len() as i64) < total - slack {
            flag("c", format!("edge {} has |V_i|={} against {}", inc.edge, inc.v_i.len(), total));
        }
        sum_vi += inc.v_i.len() as i64;
    }
    if sum_vi > (ti - 1) * n {
        flag("d", format!("sum of |V_i| is {}", sum_vi));
    }
    let lhs: i64 = p.first.iter().map(|f| (r - 1) * f.degree as i64).sum();
    let rhs = (ti - 1) * n + (r - 1) * (2 * r * r - 4 * r + 1) * ti * h.degree(v) as i64;
    if lhs > rhs {
        flag("e", format!("degree sum {} exceeds {}", lhs, rhs));
    }
    out
}

/// Audits every vertex. The Berge-K2,t check runs when the hypergraph has
/// at most `freeness_limit` hyperedges.
pub fn audit(h: &Hypergraph, t: usize, freeness_limit: usize) -> Result<AuditReport> {
    if !h.is_linear() {
        return Err(Error::NotLinear);
    }
    if t < 2 {
        return Err(Error::Parameter("t must be at least 2".into()));
    }
    let (label, witness) = if h.edge_count() <= freeness_limit {
        match contains_berge(h, &Multigraph::complete_bipartite(2, t)) {
            Some(w) => (AuditLabel::PreconditionFailed, Some(w)),
            None => (AuditLabel::Certified, None),
        }
    } else {
        (AuditLabel::Conditional, None)
    };
    let violations: Vec<Violation> = (0..h.n() as u32)
        .into_par_iter()
        .flat_map_iter(|v| audit_vertex(h, v, t))
        .collect();
    let (n, r, m) = (h.n() as i128, h.r() as i128, h.edge_count() as i128);
    let ti = t as i128;
    // multiplied through by n^2, with d = r m / n
    let global_inequality = n == 0
        || (r - 1) * (r - 1) * (r * m) * (r * m) <= (ti - 1) * n * n * n + (r - 1) * (2 * r * r - 4 * r + 1) * ti * r * m * n;
    let mut constants = AuditConstants::new(h.r(), t);
    if h.n() > 0 {
        let d = (h.r() * h.edge_count()) as f64 / h.n() as f64;
        constants.c3_empirical = d - ((h.n() * (t - 1)) as f64).sqrt() / (h.r() - 1) as f64;
    }
    Ok(AuditReport {
        n: h.n(),
        r: h.r(),
        t,
        edges: h.edge_count(),
        label,
        witness,
        constants,
        vertices_audited: h.n(),
        violations,
        global_inequality,
    })
}
