//! Command-line front end for `bergex-core`.
//!
//! Everything runs through [`execute`], which takes an argument vector and
//! returns the captured stdout together with the exit code. The binary is a
//! thin wrapper around it, and manifest replay calls it again in-process.

pub mod criteria;
pub mod inputs;
pub mod manifest;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use bergex_core::berge::{contains_berge, oracle_contains_berge};
use bergex_core::bounds::{self, cross_check_report, Params};
use bergex_core::constructions::{self as cons, ConstructionCertificate, FurediParams};
use bergex_core::engine::{eliminate, EngineStatus};
use bergex_core::hypergraph::SCHEMA_VERSION;
use bergex_core::reduction::{gp2_certify, gp2_decompose, shuffled_order, PairRule};
use bergex_core::search::{self, Budget, SearchStatus};
use bergex_core::{audit, Hypergraph, Multigraph, Structure};

use inputs::Input;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "bergex", version, about = "Turán problems for Berge hypergraphs")]
pub struct Cli {
    /// Emit JSON documents instead of text summaries.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized steps.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for parallel checks.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Search budget: NODES or NODES:SECONDS.
    #[arg(long, global = true)]
    pub budget: Option<String>,
    /// Write a run manifest to this path.
    #[arg(long, global = true)]
    pub manifest: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Test a hypergraph for a Berge copy of a pattern.
    Detect {
        #[arg(long)]
        hypergraph: String,
        #[arg(long)]
        pattern: String,
        /// Use the exhaustive oracle instead of the matching-based detector.
        #[arg(long)]
        oracle: bool,
    },
    /// Split a hypergraph into a blue graph and blue hyperedges.
    Reduce {
        #[arg(long)]
        hypergraph: String,
        #[arg(long)]
        pattern: String,
        /// Process hyperedges in a seeded random order.
        #[arg(long)]
        shuffle: Option<u64>,
    },
    /// Run the pair-colouring elimination.
    Engine {
        #[arg(long)]
        hypergraph: String,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        trace: bool,
    },
    /// Neighbourhood audit of a linear hypergraph.
    Audit {
        #[arg(long)]
        hypergraph: String,
        #[arg(short = 't', long = "t")]
        t: usize,
        /// Largest edge count for which Berge-K2,t freeness is checked.
        #[arg(long, default_value_t = audit::DEFAULT_FREENESS_LIMIT)]
        freeness_limit: usize,
    },
    /// Build one of the extremal constructions.
    Construct {
        #[command(subcommand)]
        kind: Construction,
    },
    /// Exact ex_r(n, family) by branch and bound.
    Exact {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Comma-separated pattern inputs.
        #[arg(long, value_delimiter = ',')]
        family: Vec<String>,
    },
    /// Exact ex(n, K_r, F) by branch and bound.
    ExactGraph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        clique: usize,
        #[arg(long)]
        pattern: String,
    },
    /// Check ex(n,K_r,F) <= ex_r(n,F) <= ex(n,K_r,F) + ex(n,F).
    Sandwich {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        pattern: String,
    },
    /// Evaluate a catalog bound.
    Bound {
        /// Catalog name; `list` prints the catalog.
        name: String,
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
        /// Compare an observed integer against the bound.
        #[arg(long)]
        observed: Option<String>,
    },
    /// Run an acceptance suite.
    VerifyAll {
        /// `core` or a suite file.
        #[arg(default_value = "core")]
        suite: String,
        /// Restrict to the named groups.
        #[arg(long)]
        only: Vec<String>,
    },
    /// Re-run a manifest and compare outputs byte for byte.
    Replay {
        #[arg(value_name = "MANIFEST")]
        path: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum Construction {
    /// C4-type K2,t-free graph over GF(q).
    Furedi {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        t: u32,
        #[command(flatten)]
        out: OutArg,
    },
    /// One hyperedge per triangle of a graph.
    Triangles {
        #[arg(long)]
        graph: String,
        /// Certify Berge-K2,t freeness.
        #[arg(long)]
        t: Option<usize>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Blow up a bipartite K2,t-free graph into an r-graph.
    Blowup {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Blow up a bipartite graph of girth above 2k.
    CycleBlowup {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Linear 3-graph from an independent set of triangles.
    LinearIs {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Linear 3-graph from a matching in the padded dual hypergraph.
    LinearMatch {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 1.0)]
        c0: f64,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Debug, Args)]
pub struct OutArg {
    /// Write the constructed structure here (`.json` selects JSON).
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

/// Result of one invocation.
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit: u8,
    pub inputs: Vec<manifest::FileHash>,
    pub outputs: Vec<manifest::FileHash>,
    pub wall_time: Duration,
}

struct Ctx {
    json: bool,
    seed: u64,
    budget: Budget,
    inputs: Vec<manifest::FileHash>,
    outputs: Vec<manifest::FileHash>,
}

impl Ctx {
    fn input(&mut self, spec: &str) -> anyhow::Result<Structure> {
        let input = Input::load(spec)?;
        self.inputs.push(input.hash.clone());
        Ok(input.structure)
    }

    fn hypergraph(&mut self, spec: &str) -> anyhow::Result<Hypergraph> {
        Ok(self.input(spec)?.into_hypergraph()?)
    }

    fn graph(&mut self, spec: &str) -> anyhow::Result<Multigraph> {
        Ok(self.input(spec)?.into_graph()?)
    }

    fn write_structure(&mut self, out: &OutArg, s: &Structure) -> anyhow::Result<()> {
        if let Some(path) = &out.output {
            let text = if path.extension().is_some_and(|e| e == "json") {
                s.to_json()
            } else {
                s.to_text()
            };
            std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
            self.outputs.push(manifest::FileHash::of(&path.display().to_string(), text.as_bytes()));
        }
        Ok(())
    }
}

/// A finished command: its document, text rendering and exit code.
struct Report {
    command: &'static str,
    result: Value,
    text: String,
    exit: u8,
}

pub fn document(command: &str, result: Value) -> Value {
    json!({ "schema_version": SCHEMA_VERSION, "tool": "bergex", "command": command, "result": result })
}

pub fn parse_budget(s: &str) -> anyhow::Result<Budget> {
    let mut b = Budget::default();
    let (nodes, secs) = match s.split_once(':') {
        Some((n, t)) => (n, Some(t)),
        None => (s, None),
    };
    b.max_nodes = nodes
        .trim()
        .parse::<f64>()
        .ok()
        .filter(|v| *v >= 0.0)
        .map(|v| v as u64)
        .ok_or_else(|| anyhow!("bad node budget {:?}", nodes))?;
    if let Some(t) = secs {
        let t: f64 = t.trim().parse().map_err(|_| anyhow!("bad time budget {:?}", t))?;
        b.max_time = Duration::from_secs_f64(t.max(0.0));
    }
    Ok(b)
}

/// Runs one command line (without the program name).
pub fn execute<S: AsRef<str>>(args: &[S]) -> Outcome {
    let start = Instant::now();
    let argv: Vec<String> = std::iter::once("bergex".to_string())
        .chain(args.iter().map(|a| a.as_ref().to_string()))
        .collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let exit = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let mut out = Outcome {
                exit,
                ..Outcome::default()
            };
            if e.use_stderr() {
                out.stderr = rendered;
            } else {
                out.stdout = rendered;
            }
            return out;
        }
    };
    if let Some(n) = cli.threads {
        // only the first configuration in a process takes effect
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let budget = match cli.budget.as_deref().map(parse_budget).transpose() {
        Ok(b) => b.unwrap_or_default(),
        Err(e) => {
            return Outcome {
                stderr: format!("error: {}\n", e),
                exit: EXIT_INPUT,
                ..Outcome::default()
            }
        }
    };
    let mut ctx = Ctx {
        json: cli.json,
        seed: cli.seed,
        budget,
        inputs: Vec::new(),
        outputs: Vec::new(),
    };
    let mut outcome = match run(&cli.command, &mut ctx) {
        Ok(report) => {
            let stdout = if ctx.json {
                let doc = document(report.command, report.result);
                serde_json::to_string_pretty(&doc).expect("document serializes") + "\n"
            } else {
                report.text
            };
            Outcome {
                stdout,
                exit: report.exit,
                ..Outcome::default()
            }
        }
        Err(e) => Outcome {
            stderr: format!("error: {:#}\n", e),
            exit: EXIT_INPUT,
            ..Outcome::default()
        },
    };
    outcome.inputs = ctx.inputs;
    outcome.outputs = ctx.outputs;
    outcome.wall_time = start.elapsed();
    if let Some(path) = &cli.manifest {
        let m = manifest::RunManifest::record(&argv[1..], &cli, &outcome);
        if let Err(e) = m.write(path) {
            outcome.stderr.push_str(&format!("error: {:#}\n", e));
            outcome.exit = EXIT_INPUT;
        }
    }
    outcome
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report serializes")
}

fn search_exit(statuses: &[SearchStatus]) -> u8 {
    if statuses.iter().all(|s| *s == SearchStatus::Exact) {
        EXIT_OK
    } else {
        EXIT_BUDGET
    }
}

fn run(cmd: &Command, ctx: &mut Ctx) -> anyhow::Result<Report> {
    match cmd {
        Command::Detect {
            hypergraph,
            pattern,
            oracle,
        } => {
            let h = ctx.hypergraph(hypergraph)?;
            let f = ctx.graph(pattern)?;
            if *oracle {
                let found = oracle_contains_berge(&h, &f)?;
                return Ok(Report {
                    command: "detect",
                    result: json!({ "method": "oracle", "contained": found }),
                    text: format!("{}\n", if found { "contained" } else { "free" }),
                    exit: if found { EXIT_OK } else { EXIT_NEGATIVE },
                });
            }
            let w = contains_berge(&h, &f);
            let text = match &w {
                Some(w) => format!(
                    "contained\ncore {:?}\nedges {:?}\n",
                    w.core_map,
                    w.edge_map.iter().map(|&e| h.edge(e).to_vec()).collect::<Vec<_>>()
                ),
                None => "free\n".to_string(),
            };
            Ok(Report {
                command: "detect",
                result: json!({ "method": "detector", "contained": w.is_some(), "witness": w }),
                text,
                exit: if w.is_some() { EXIT_OK } else { EXIT_NEGATIVE },
            })
        }
        Command::Reduce {
            hypergraph,
            pattern,
            shuffle,
        } => {
            let h = ctx.hypergraph(hypergraph)?;
            let f = ctx.graph(pattern)?;
            let order = shuffle.map(|s| shuffled_order(h.edge_count(), s));
            let d = gp2_decompose(&h, order.as_deref(), PairRule::Lexicographic)?;
            let report = gp2_certify(&h, &f, &d)?;
            let text = format!(
                "hyperedges {} = blue pairs {} + blue hyperedges {}\nr-cliques in blue graph {}\nchecks {}\n",
                report.hyperedges,
                report.blue_pairs,
                report.blue_hyperedges,
                report.r_cliques,
                if report.passed() { "passed" } else { "FAILED" }
            );
            Ok(Report {
                command: "reduce",
                exit: if report.passed() { EXIT_OK } else { EXIT_NEGATIVE },
                result: json!({ "decomposition": d, "report": report }),
                text,
            })
        }
        Command::Engine {
            hypergraph,
            pattern,
            trace,
        } => {
            let h = ctx.hypergraph(hypergraph)?;
            let f = ctx.graph(pattern)?;
            let report = eliminate(&h, &f, *trace)?;
            let text = format!(
                "status {:?}\niterations {} (cap {})\ngreen pairs {}\nG1 free {} G2 free {}\n",
                report.status,
                report.iterations,
                report.iteration_cap,
                report.deleted.len(),
                report.g1_free,
                report.g2_free
            );
            Ok(Report {
                command: "engine",
                exit: if report.status == EngineStatus::InvariantViolation {
                    EXIT_NEGATIVE
                } else {
                    EXIT_OK
                },
                result: to_value(&report),
                text,
            })
        }
        Command::Audit {
            hypergraph,
            t,
            freeness_limit,
        } => {
            let h = ctx.hypergraph(hypergraph)?;
            let report = audit::audit(&h, *t, *freeness_limit)?;
            let text = format!(
                "label {:?}\nvertices audited {}\nviolations {}\n",
                report.label,
                report.vertices_audited,
                report.violations.len()
            );
            Ok(Report {
                command: "audit",
                exit: if report.passed() { EXIT_OK } else { EXIT_NEGATIVE },
                result: to_value(&report),
                text,
            })
        }
        Command::Construct { kind } => construct(kind, ctx),
        Command::Exact { n, r, family } => {
            if family.is_empty() {
                bail!("--family needs at least one pattern");
            }
            let fs = family.iter().map(|s| ctx.graph(s)).collect::<anyhow::Result<Vec<_>>>()?;
            let res = search::exact_ex_r(*n, *r, &fs, ctx.budget)?;
            Ok(Report {
                command: "exact",
                exit: search_exit(&[res.status]),
                text: format!("ex_{}({}) = {} ({:?})\n", r, n, res.value, res.status),
                result: to_value(&res),
            })
        }
        Command::ExactGraph { n, clique, pattern } => {
            let f = ctx.graph(pattern)?;
            let res = search::exact_graph_ex(*n, *clique, &f, ctx.budget)?;
            Ok(Report {
                command: "exact-graph",
                exit: search_exit(&[res.status]),
                text: format!("ex({}, K{}, F) = {} ({:?})\n", n, clique, res.value, res.status),
                result: to_value(&res),
            })
        }
        Command::Sandwich { n, r, pattern } => {
            let f = ctx.graph(pattern)?;
            let rep = search::sandwich_check(*n, *r, &f, ctx.budget)?;
            let exit = if !rep.conclusive {
                EXIT_BUDGET
            } else if rep.passed() {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            };
            Ok(Report {
                command: "sandwich",
                exit,
                text: format!(
                    "{} <= {} <= {} + {}: {}\n",
                    rep.cliques.value,
                    rep.hyper.value,
                    rep.cliques.value,
                    rep.graph.value,
                    if rep.passed() { "holds" } else { "does not hold" }
                ),
                result: to_value(&rep),
            })
        }
        Command::Bound {
            name,
            params,
            observed,
        } => {
            if name == "list" {
                return Ok(Report {
                    command: "bound",
                    result: to_value(&bounds::CATALOG),
                    text: bounds::CATALOG.join("\n") + "\n",
                    exit: EXIT_OK,
                });
            }
            let p = Params::parse(params.iter().map(String::as_str))?;
            let b = bounds::evaluate(name, &p)?;
            let mut text = format!("{} = {} ({:?})\n", b.name, b.decimal(), b.side);
            for a in &b.assumptions {
                text.push_str(&format!("  {}\n", a));
            }
            let mut result = json!({ "bound": b });
            let mut exit = EXIT_OK;
            if let Some(obs) = observed {
                let o = bounds::parse_rational(obs)
                    .filter(|r| r.is_integer())
                    .ok_or_else(|| anyhow!("observed value {:?} is not an integer", obs))?
                    .to_integer();
                let c = cross_check_report(&o, &b);
                text.push_str(&format!(
                    "observed {}: {}{}\n",
                    c.observed,
                    if c.passed { "consistent" } else { "inconsistent" },
                    if c.advisory { " (advisory)" } else { "" }
                ));
                if !c.passed && !c.advisory {
                    exit = EXIT_NEGATIVE;
                }
                result["cross_check"] = to_value(&c);
            }
            Ok(Report {
                command: "bound",
                result,
                text,
                exit,
            })
        }
        Command::VerifyAll { suite, only } => {
            let (ids, hashes) = criteria::select(suite, only)?;
            ctx.inputs.extend(hashes);
            let results = criteria::run_all(&ids, ctx.seed);
            let all = results.iter().all(|r| r.passed);
            Ok(Report {
                command: "verify-all",
                text: criteria::table(&results),
                result: json!({ "suite": suite, "passed": all, "criteria": results }),
                exit: if all { EXIT_OK } else { EXIT_NEGATIVE },
            })
        }
        Command::Replay { path } => {
            let m = manifest::RunManifest::read(path)?;
            let check = m.replay()?;
            Ok(Report {
                command: "replay",
                text: format!(
                    "{}: {}\n",
                    m.arguments.join(" "),
                    if check.identical { "identical" } else { "DIFFERENT" }
                ),
                exit: if check.identical { EXIT_OK } else { EXIT_NEGATIVE },
                result: to_value(&check),
            })
        }
    }
}

fn k2t(t: usize) -> (String, Multigraph) {
    (format!("K2,{}", t), Multigraph::complete_bipartite(2, t))
}

fn certificate_report(
    ctx: &mut Ctx,
    out: &OutArg,
    cert: ConstructionCertificate,
    structure: Structure,
    extra: Value,
    checks: Vec<bounds::CrossCheck>,
) -> anyhow::Result<Report> {
    ctx.write_structure(out, &structure)?;
    let ok = cert.free != Some(false);
    let text = format!(
        "{}: {} vertices, {} edges\nfree of {}: {}\n",
        cert.kind,
        cert.vertex_count,
        cert.edge_count,
        cert.family.join(", "),
        match cert.free {
            Some(true) => "yes",
            Some(false) => "NO",
            None => "unchecked",
        }
    );
    let mut result = json!({ "certificate": cert, "cross_checks": checks });
    if let Value::Object(map) = extra {
        for (k, v) in map {
            result[k] = v;
        }
    }
    if ctx.json && out.output.is_none() {
        result["structure"] = match &structure {
            Structure::Hypergraph(h) => to_value(h),
            Structure::Graph(g) => to_value(g),
        };
    }
    Ok(Report {
        command: "construct",
        result,
        text,
        exit: if ok { EXIT_OK } else { EXIT_NEGATIVE },
    })
}

fn check(name: &str, kv: &[(&str, String)], observed: usize) -> anyhow::Result<bounds::CrossCheck> {
    let mut p = Params::new();
    for (k, v) in kv {
        p = p.with(k, v);
    }
    let b = bounds::evaluate(name, &p)?;
    let mut c = cross_check_report(&(observed as u64).into(), &b);
    c.bound = format!("{} = {}", name, c.bound);
    Ok(c)
}

fn construct(kind: &Construction, ctx: &mut Ctx) -> anyhow::Result<Report> {
    match kind {
        Construction::Furedi { q, t, out } => {
            let p = FurediParams::new(*q, *t)?;
            let g = cons::furedi_k2t(&p);
            let mut cert = ConstructionCertificate::new("furedi", g.n(), g.edge_count())
                .param("q", *q)
                .param("t", *t);
            cert.certify_graph(&g, &[k2t(*t as usize)])?;
            let report = cons::furedi_report(&p, &g);
            let checks = vec![check(
                "furedi_k2t_ex",
                &[("n", g.n().to_string()), ("t", t.to_string())],
                g.edge_count(),
            )?];
            certificate_report(ctx, out, cert, Structure::Graph(g), json!({ "report": report }), checks)
        }
        Construction::Triangles { graph, t, out } => {
            let g = ctx.graph(graph)?;
            let h = cons::triangles_to_hyperedges(&g)?;
            let mut cert = ConstructionCertificate::new("triangles", h.n(), h.edge_count());
            if let Some(t) = t {
                cert = cert.param("t", *t);
                cert.certify_hypergraph(&h, &[k2t(*t)]);
            }
            certificate_report(ctx, out, cert, Structure::Hypergraph(h), json!({}), Vec::new())
        }
        Construction::Blowup { graph, r, t, out } => {
            let g = ctx.graph(graph)?;
            let h = cons::blowup_bipartite(&g, *r, *t)?;
            let mut cert = ConstructionCertificate::new("blowup", h.n(), h.edge_count())
                .param("r", *r)
                .param("t", *t)
                .param("graph_edges", g.edge_count());
            cert.certify_hypergraph(&h, &[k2t(*t)]);
            let checks = vec![check(
                "cor_k2t_lower_r",
                &[("n", h.n().to_string()), ("r", r.to_string()), ("t", t.to_string())],
                h.edge_count(),
            )?];
            certificate_report(ctx, out, cert, Structure::Hypergraph(h), json!({}), checks)
        }
        Construction::CycleBlowup { graph, r, k, out } => {
            let g = ctx.graph(graph)?;
            let h = cons::cycle_blowup(&g, *r, *k)?;
            let mut cert = ConstructionCertificate::new("cycle-blowup", h.n(), h.edge_count())
                .param("r", *r)
                .param("k", *k);
            let family: Vec<(String, Multigraph)> = cons::cycle_family(*k)
                .into_iter()
                .map(|c| (format!("C{}", c.n()), c))
                .collect();
            cert.certify_hypergraph(&h, &family);
            certificate_report(ctx, out, cert, Structure::Hypergraph(h), json!({}), Vec::new())
        }
        Construction::LinearIs { graph, t, out } => {
            let g = ctx.graph(graph)?;
            let lc = cons::linear_via_independent_set(&g, *t)?;
            linear_report(ctx, out, "linear-is", lc.hypergraph, *t, to_value(&lc.report))
        }
        Construction::LinearMatch { graph, t, c0, out } => {
            let g = ctx.graph(graph)?;
            let lc = cons::linear_via_matching(&g, *t, *c0)?;
            linear_report(ctx, out, "linear-match", lc.hypergraph, *t, to_value(&lc.report))
        }
    }
}

fn linear_report(ctx: &mut Ctx, out: &OutArg, kind: &str, h: Hypergraph, t: usize, report: Value) -> anyhow::Result<Report> {
    let mut cert = ConstructionCertificate::new(kind, h.n(), h.edge_count())
        .param("t", t)
        .param("linear", h.is_linear());
    let c2 = Multigraph::cycle(2)?;
    cert.certify_hypergraph(&h, &[("C2".to_string(), c2), k2t(t)]);
    let checks = vec![check(
        "thm_linearlower",
        &[("n", h.n().to_string()), ("t", t.to_string())],
        h.edge_count(),
    )?];
    certificate_report(ctx, out, cert, Structure::Hypergraph(h), json!({ "report": report }), checks)
}

/// Key-value pairs of a parsed command line, for manifests.
pub fn describe(cli: &Cli) -> BTreeMap<String, String> {
    let mut m = BTreeMap::new();
    m.insert("json".into(), cli.json.to_string());
    m.insert("seed".into(), cli.seed.to_string());
    if let Some(t) = cli.threads {
        m.insert("threads".into(), t.to_string());
    }
    if let Some(b) = &cli.budget {
        m.insert("budget".into(), b.clone());
    }
    m.insert("command".into(), format!("{:?}", cli.command));
    m
}
