//! The acceptance suite behind `verify-all`.

use std::time::{Duration, Instant};

use anyhow::{anyhow, bail, Context};
use num_traits::ToPrimitive;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use bergex_core::berge::{contains_berge, oracle_contains_berge};
use bergex_core::bounds::{self, cross_check, Params, REFERENCE_TABLE};
use bergex_core::constructions::{self as cons, FurediParams};
use bergex_core::engine::{eliminate, EngineStatus};
use bergex_core::hypergraph::{fano_incidence_graph, SCHEMA_VERSION};
use bergex_core::search::{self, Budget, Witness};
use bergex_core::{audit, count_cliques, is_berge_free, Hypergraph, Multigraph};

use crate::manifest::{FileHash, RunManifest};

pub struct Criterion {
    pub id: u8,
    pub group: &'static str,
    pub title: &'static str,
    pub limit: Duration,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, group: "exact-linear", title: "exact linear maxima", limit: secs(60) },
    Criterion { id: 2, group: "luo", title: "clique counts in path-free graphs", limit: secs(10) },
    Criterion { id: 3, group: "sandwich", title: "gp2 sandwich", limit: secs(600) },
    Criterion { id: 4, group: "detector", title: "detector agrees with oracle", limit: secs(300) },
    Criterion { id: 5, group: "furedi", title: "Furedi certificates", limit: secs(300) },
    Criterion { id: 6, group: "blowup", title: "blow-up certificate", limit: secs(60) },
    Criterion { id: 7, group: "triangles", title: "triangle replacement", limit: secs(120) },
    Criterion { id: 8, group: "linear", title: "linear constructions", limit: secs(300) },
    Criterion { id: 9, group: "engine", title: "engine invariants", limit: secs(300) },
    Criterion { id: 10, group: "bounds", title: "bound table regression", limit: secs(1) },
    Criterion { id: 11, group: "replay", title: "replay determinism", limit: secs(600) },
];

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub group: String,
    pub title: String,
    pub passed: bool,
    pub detail: String,
    pub limit_secs: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "{} criterion {:>2} [{}] {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.group,
            self.title,
            self.detail
        )
    }
}

#[derive(Deserialize)]
struct SuiteFile {
    schema_version: u32,
    #[allow(dead_code)]
    name: Option<String>,
    criteria: Vec<serde_json::Value>,
}

fn lookup(key: &str) -> anyhow::Result<u8> {
    CRITERIA
        .iter()
        .find(|c| c.group == key || c.id.to_string() == key)
        .map(|c| c.id)
        .ok_or_else(|| anyhow!("unknown criterion or group {:?}", key))
}

/// Criterion ids for a suite name or suite file, restricted by `only`.
pub fn select(suite: &str, only: &[String]) -> anyhow::Result<(Vec<u8>, Vec<FileHash>)> {
    let (mut ids, hashes) = if suite == "core" {
        (CRITERIA.iter().map(|c| c.id).collect::<Vec<_>>(), Vec::new())
    } else {
        let bytes = std::fs::read(suite).with_context(|| format!("reading suite {}", suite))?;
        let file: SuiteFile = serde_json::from_slice(&bytes).with_context(|| format!("parsing suite {}", suite))?;
        if file.schema_version != SCHEMA_VERSION {
            bail!("suite schema version {} is not supported", file.schema_version);
        }
        let mut ids = Vec::new();
        for v in &file.criteria {
            let key = match v {
                serde_json::Value::String(s) => s.clone(),
                serde_json::Value::Number(n) => n.to_string(),
                other => bail!("bad criterion entry {}", other),
            };
            ids.push(lookup(&key)?);
        }
        (ids, vec![FileHash::of(suite, &bytes)])
    };
    if !only.is_empty() {
        let keep = only.iter().map(|k| lookup(k)).collect::<anyhow::Result<Vec<_>>>()?;
        ids.retain(|i| keep.contains(i));
    }
    ids.sort_unstable();
    ids.dedup();
    Ok((ids, hashes))
}

pub fn run_all(ids: &[u8], seed: u64) -> Vec<CriterionResult> {
    ids.iter().map(|&id| run_criterion(id, seed)).collect()
}

pub fn table(results: &[CriterionResult]) -> String {
    let mut s = String::new();
    for r in results {
        s.push_str(&r.line());
        s.push('\n');
    }
    let passed = results.iter().filter(|r| r.passed).count();
    s.push_str(&format!("{}/{} criteria passed\n", passed, results.len()));
    s
}

pub fn run_criterion(id: u8, seed: u64) -> CriterionResult {
    let c = CRITERIA.iter().find(|c| c.id == id).expect("known criterion");
    let start = Instant::now();
    let outcome = match id {
        1 => exact_linear(),
        2 => luo(),
        3 => sandwich(),
        4 => detector(seed),
        5 => furedi(),
        6 => blowup(),
        7 => triangles(),
        8 => linear(),
        9 => engine(seed),
        10 => bound_table(),
        11 => replay(),
        _ => unreachable!(),
    };
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match outcome {
        Ok((p, d)) => (p, d),
        Err(e) => (false, format!("error: {:#}", e)),
    };
    if elapsed > c.limit {
        passed = false;
        detail.push_str(&format!("; over time limit of {} s", c.limit.as_secs()));
    }
    CriterionResult {
        id,
        group: c.group.to_string(),
        title: c.title.to_string(),
        passed,
        detail,
        limit_secs: c.limit.as_secs(),
        elapsed,
    }
}

type Check = anyhow::Result<(bool, String)>;

fn witness_hypergraph(w: &Witness) -> Option<&Hypergraph> {
    match w {
        Witness::Hypergraph(h) => Some(h),
        Witness::Graph(_) => None,
    }
}

fn exact_linear() -> Check {
    let c2 = Multigraph::cycle(2)?;
    let expected = [(4, 1), (5, 2), (6, 4), (7, 7)];
    let mut ok = true;
    let mut values = Vec::new();
    for (n, want) in expected {
        let res = search::exact_ex_r(n, 3, std::slice::from_ref(&c2), Budget::default())?;
        let h = witness_hypergraph(&res.witness).ok_or_else(|| anyhow!("expected a hypergraph witness"))?;
        let linear = h.is_linear() && h.edge_count() as u64 == res.value;
        let packing = search::packing_number(n as u64) == res.value;
        let brute = if n <= 5 {
            search::brute_force_ex_r(n, 3, std::slice::from_ref(&c2))? == res.value
        } else {
            true
        };
        let full = n != 7 || h.covered_pairs().len() == 21;
        ok &= res.is_exact() && res.value == want && linear && packing && brute && full;
        values.push(res.value.to_string());
    }
    Ok((ok, format!("ex_3(n, C2) for n=4..7 = {}", values.join(", "))))
}

fn luo() -> Check {
    let mut ok = true;
    let mut parts = Vec::new();
    for (k, want) in [(4usize, 2u64), (3, 0)] {
        let p = Multigraph::path(k)?;
        let res = search::exact_graph_ex(6, 3, &p, Budget::default())?;
        let b = bounds::evaluate("luo", &Params::new().with("n", 6).with("k", k).with("r", 3))?;
        let exact = b.exact().ok_or_else(|| anyhow!("luo is exact"))?;
        let formula = exact.rational.to_integer().to_u64();
        ok &= res.is_exact() && res.value == want && exact.is_rational() && formula == Some(res.value);
        parts.push(format!("P{}: {} (formula {})", k, res.value, b.decimal()));
    }
    Ok((ok, parts.join("; ")))
}

fn sandwich() -> Check {
    let mut ok = true;
    let mut parts = Vec::new();
    for (n, name) in [(5, "C4"), (6, "C4"), (6, "K3")] {
        let f = Multigraph::named(name)?;
        let rep = search::sandwich_check(n, 3, &f, Budget::default())?;
        ok &= rep.passed();
        let shown = if name == "C4" { "K2,2" } else { name };
        parts.push(format!(
            "n={} {}: {} <= {} <= {} + {}",
            n, shown, rep.cliques.value, rep.hyper.value, rep.cliques.value, rep.graph.value
        ));
    }
    Ok((ok, parts.join("; ")))
}

fn pattern_pool() -> Vec<Multigraph> {
    let mut pool: Vec<Multigraph> = ["C2", "K3", "C4", "P3", "P4", "K1,3", "C5", "K2,3", "K4"]
        .iter()
        .map(|n| Multigraph::named(n).expect("pool pattern"))
        .collect();
    pool.push(Multigraph::new(4, vec![(0, 1), (2, 3)]).expect("matching"));
    pool.push(Multigraph::new(4, vec![(0, 1), (1, 2), (0, 2), (2, 3)]).expect("paw"));
    pool.push(Multigraph::new(3, vec![(0, 1), (0, 1), (1, 2)]).expect("double edge"));
    pool
}

pub fn random_hypergraph(rng: &mut ChaCha8Rng, n: usize, r: usize, max_edges: usize) -> Hypergraph {
    let all = search::k_subsets(n, r);
    let m = rng.gen_range(0..=max_edges.min(all.len()));
    let mut picked: Vec<usize> = sample(rng, all.len(), m).into_vec();
    picked.sort_unstable();
    let edges = picked.into_iter().map(|i| all[i].clone()).collect();
    Hypergraph::new(n, r, edges).expect("distinct r-sets")
}

fn detector(seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = pattern_pool();
    let (mut agree, mut positives, mut verified) = (0, 0, 0);
    const INSTANCES: usize = 500;
    for _ in 0..INSTANCES {
        let n = rng.gen_range(3..=8);
        let r = rng.gen_range(2..=n.min(4));
        let h = random_hypergraph(&mut rng, n, r, 12);
        let f = &pool[rng.gen_range(0..pool.len())];
        let det = contains_berge(&h, f);
        let ora = oracle_contains_berge(&h, f)?;
        if det.is_some() == ora {
            agree += 1;
        }
        if let Some(w) = det {
            positives += 1;
            if w.verify(&h, f) {
                verified += 1;
            }
        }
    }
    Ok((
        agree == INSTANCES && verified == positives,
        format!("{}/{} agree, {}/{} witnesses verified", agree, INSTANCES, verified, positives),
    ))
}

fn furedi() -> Check {
    let mut ok = true;
    let mut parts = Vec::new();
    for (q, want_n, want_m) in [(5u32, 24usize, 60usize), (7, 48, 168)] {
        let p = FurediParams::new(q, 2)?;
        let g = cons::furedi_k2t(&p);
        let host = g.as_hypergraph()?;
        let free = is_berge_free(&host, &[Multigraph::complete_bipartite(2, 2)]);
        let m = g.edge_count() as u128;
        let n = g.n() as u128;
        // m^2 >= n^3 / 4
        let leading = 4 * m * m >= n * n * n;
        ok &= g.n() == want_n && g.edge_count() == want_m && free && leading;
        parts.push(format!(
            "q={}: {} vertices, {} edges (want {}), K2,2-free {}, {}^2 = {} {} {}",
            q,
            g.n(),
            g.edge_count(),
            want_m,
            free,
            m,
            m * m,
            if leading { ">=" } else { "<" },
            n * n * n / 4
        ));
    }
    Ok((ok, parts.join("; ")))
}

fn blowup() -> Check {
    let g = fano_incidence_graph();
    let h = cons::blowup_bipartite(&g, 3, 2)?;
    let free = is_berge_free(&h, &[Multigraph::complete_bipartite(2, 2)]);
    let ok = h.edge_count() == 21 && h.n() == 21 && h.edge_count() == g.edge_count() && free;
    Ok((
        ok,
        format!(
            "{} hyperedges on {} vertices from {} graph edges, Berge-K2,2-free {}",
            h.edge_count(),
            h.n(),
            g.edge_count(),
            free
        ),
    ))
}

fn naive_triangles(g: &Multigraph) -> usize {
    let n = g.n() as u32;
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    count += 1;
                }
            }
        }
    }
    count
}

fn triangles() -> Check {
    let g = cons::furedi_k2t(&FurediParams::new(5, 3)?);
    let h = cons::triangles_to_hyperedges(&g)?;
    let free = is_berge_free(&h, &[Multigraph::complete_bipartite(2, 3)]);
    let pivot = count_cliques(&g, 3)?.count;
    let naive = naive_triangles(&g);
    let ok = free && h.edge_count() as u64 == pivot && h.edge_count() == naive;
    Ok((
        ok,
        format!(
            "{} hyperedges, clique count {}, naive count {}, Berge-K2,3-free {}",
            h.edge_count(),
            pivot,
            naive,
            free
        ),
    ))
}

fn linear() -> Check {
    let g = cons::furedi_k2t(&FurediParams::new(5, 3)?);
    let k23 = Multigraph::complete_bipartite(2, 3);
    let is = cons::linear_via_independent_set(&g, 3)?.hypergraph;
    let mm = cons::linear_via_matching(&g, 3, 1.0)?.hypergraph;
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, h) in [("independent set", &is), ("matching", &mm)] {
        let free = is_berge_free(h, std::slice::from_ref(&k23));
        let rep = audit::audit(h, 3, audit::DEFAULT_FREENESS_LIMIT)?;
        ok &= h.is_linear() && free && rep.passed() && rep.violations.is_empty();
        parts.push(format!(
            "{}: {} edges, linear {}, Berge-K2,3-free {}, audit {:?} with {} violations",
            name,
            h.edge_count(),
            h.is_linear(),
            free,
            rep.label,
            rep.violations.len()
        ));
    }
    Ok((ok, parts.join("; ")))
}

fn engine(seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
    let f = Multigraph::complete_bipartite(2, 2);
    let threshold = 3 - 2; // C(3,2) - 2
    let (mut completed, mut found, mut failures) = (0, 0, Vec::new());
    const INSTANCES: usize = 100;
    for i in 0..INSTANCES {
        let n = rng.gen_range(4..=10);
        let h = random_hypergraph(&mut rng, n, 3, 14);
        let rep = eliminate(&h, &f, false)?;
        let mut ok = rep.iterations <= rep.g.edge_count()
            && rep.deleted.iter().all(|d| d.red_hyperedges <= threshold);
        match rep.status {
            EngineStatus::Completed => {
                completed += 1;
                let g1 = bergex_core::berge::find_subgraph(&rep.g1, &f)?.is_none();
                let g2 = bergex_core::berge::find_subgraph(&rep.g2, &f)?.is_none();
                ok &= rep.g1_free && rep.g2_free && g1 && g2;
            }
            EngineStatus::BergeFound => {
                found += 1;
                ok &= rep.witness.as_ref().is_some_and(|w| w.verify(&h, &f));
            }
            EngineStatus::InvariantViolation => ok = false,
        }
        if !ok {
            failures.push(i);
        }
    }
    Ok((
        failures.is_empty(),
        format!(
            "{} runs: {} completed, {} berge_found, failing instances {:?}",
            INSTANCES, completed, found, failures
        ),
    ))
}

fn bound_table() -> Check {
    let mut mismatches = Vec::new();
    for (name, kv, want) in REFERENCE_TABLE {
        let p = Params::parse(kv.iter().map(|(k, v)| format!("{}={}", k, v)).collect::<Vec<_>>().iter().map(String::as_str))?;
        let got = bounds::evaluate(name, &p)?.decimal();
        if got != *want {
            mismatches.push(format!("{} gave {} not {}", name, got, want));
        }
    }
    let fk = bounds::evaluate("furedi_k2t_ex", &Params::new().with("n", 24).with("t", 2))?;
    let up = bounds::evaluate("timmons_upper", &Params::new().with("n", 7).with("r", 3).with("t", 2))?;
    let crosses = cross_check(&60.into(), &fk) && !cross_check(&58.into(), &fk) && cross_check(&0.into(), &up);
    let ok = mismatches.is_empty() && crosses && REFERENCE_TABLE.len() == 20;
    let detail = if mismatches.is_empty() {
        format!("{} entries reproduced, cross-check examples {}", REFERENCE_TABLE.len(), crosses)
    } else {
        mismatches.join("; ")
    };
    Ok((ok, detail))
}

/// Representative command lines for criteria 1 to 10.
pub fn replay_commands() -> Vec<Vec<&'static str>> {
    vec![
        vec!["exact", "--n", "6", "--r", "3", "--family", "builtin:C2"],
        vec!["exact-graph", "--n", "6", "--clique", "3", "--pattern", "builtin:P4"],
        vec!["exact-graph", "--n", "6", "--clique", "3", "--pattern", "builtin:P3"],
        vec!["sandwich", "--n", "5", "--r", "3", "--pattern", "builtin:C4"],
        vec!["detect", "--hypergraph", "builtin:fano", "--pattern", "builtin:C4"],
        vec!["detect", "--oracle", "--hypergraph", "builtin:fano", "--pattern", "builtin:K2x3"],
        vec!["construct", "furedi", "--q", "5", "--t", "2"],
        vec!["construct", "blowup", "--graph", "builtin:fano-incidence", "--r", "3", "--t", "2"],
        vec!["construct", "triangles", "--graph", "builtin:furedi-5-3", "--t", "3"],
        vec!["construct", "linear-is", "--graph", "builtin:furedi-5-3", "--t", "3"],
        vec!["construct", "linear-match", "--graph", "builtin:furedi-5-3", "--t", "3"],
        vec!["audit", "--hypergraph", "builtin:fano", "-t", "3"],
        vec!["engine", "--hypergraph", "builtin:fano", "--pattern", "builtin:K2x3", "--trace"],
        vec!["reduce", "--hypergraph", "builtin:fano", "--pattern", "builtin:C4", "--shuffle", "7"],
        vec!["bound", "cor_maincor", "--param", "t=7", "--param", "n=1e4"],
        vec!["bound", "thm_main_b", "--param", "r=3", "--param", "ex_value=10"],
    ]
}

fn replay() -> Check {
    let dir = std::env::temp_dir().join(format!("bergex-replay-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let mut failures = Vec::new();
    let cmds = replay_commands();
    for (i, cmd) in cmds.iter().enumerate() {
        let path = dir.join(format!("run{}.manifest.json", i));
        let mut args: Vec<String> = cmd.iter().map(|s| s.to_string()).collect();
        args.extend(["--json".to_string(), "--manifest".to_string(), path.display().to_string()]);
        let first = crate::execute(&args);
        let doc: serde_json::Value = serde_json::from_str(&first.stdout)
            .map_err(|e| anyhow!("{}: output is not JSON: {}", cmd.join(" "), e))?;
        let versioned = doc["schema_version"] == SCHEMA_VERSION;
        let check = RunManifest::read(&path)?.replay()?;
        if !(check.identical && versioned && first.exit != crate::EXIT_INPUT) {
            failures.push(cmd.join(" "));
        }
    }
    let _ = std::fs::remove_dir_all(&dir);
    Ok((
        failures.is_empty(),
        format!(
            "{}/{} manifests replayed byte-identically{}",
            cmds.len() - failures.len(),
            cmds.len(),
            if failures.is_empty() {
                String::new()
            } else {
                format!("; differing: {}", failures.join(" | "))
            }
        ),
    ))
}
