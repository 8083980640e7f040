//! Structure inputs: files in the text or JSON format, or `builtin:NAME`.
//!
//! Builtin names are `fano`, `fano-incidence`, `furedi-Q-T` and pattern
//! names such as `K3`, `C4`, `P4`, `K2,3`. Inside comma-separated lists
//! write `K2x3` for `K2,3`.

use anyhow::{anyhow, Context};

use bergex_core::constructions::{furedi_k2t, FurediParams};
use bergex_core::hypergraph::{fano_incidence_graph, fano_plane};
use bergex_core::{parse_structure, Multigraph, Structure};

use crate::manifest::FileHash;

pub struct Input {
    pub structure: Structure,
    pub hash: FileHash,
}

pub fn builtin(name: &str) -> anyhow::Result<Structure> {
    match name {
        "fano" => return Ok(Structure::Hypergraph(fano_plane())),
        "fano-incidence" => return Ok(Structure::Graph(fano_incidence_graph())),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix("furedi-") {
        let (q, t) = rest
            .split_once('-')
            .ok_or_else(|| anyhow!("expected furedi-Q-T, got {:?}", name))?;
        let p = FurediParams::new(q.parse()?, t.parse()?)?;
        return Ok(Structure::Graph(furedi_k2t(&p)));
    }
    let pattern = name.replace(['x', 'X'], ",");
    Multigraph::named(&pattern)
        .map(Structure::Graph)
        .map_err(|_| anyhow!("unknown builtin {:?}", name))
}

impl Input {
    pub fn load(spec: &str) -> anyhow::Result<Self> {
        if let Some(name) = spec.strip_prefix("builtin:") {
            let structure = builtin(name)?;
            let hash = FileHash::of(spec, structure.to_text().as_bytes());
            return Ok(Self { structure, hash });
        }
        let bytes = std::fs::read(spec).with_context(|| format!("reading {}", spec))?;
        let text = std::str::from_utf8(&bytes).with_context(|| format!("{} is not UTF-8", spec))?;
        let structure = parse_structure(text).with_context(|| format!("parsing {}", spec))?;
        Ok(Self {
            structure,
            hash: FileHash::of(spec, &bytes),
        })
    }
}
