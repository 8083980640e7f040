//! Run manifests and replay.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use bergex_core::hypergraph::SCHEMA_VERSION;

use crate::{describe, execute, Cli, Outcome, TOOL_VERSION};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileHash {
    pub name: String,
    pub sha256: String,
}

impl FileHash {
    pub fn of(name: &str, bytes: &[u8]) -> Self {
        Self {
            name: name.to_string(),
            sha256: hex::encode(Sha256::digest(bytes)),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunManifest {
    pub schema_version: u32,
    pub tool: String,
    pub tool_version: String,
    /// Argument vector without the program name and the manifest flag.
    pub arguments: Vec<String>,
    pub parameters: std::collections::BTreeMap<String, String>,
    pub seed: u64,
    pub working_directory: PathBuf,
    pub inputs: Vec<FileHash>,
    /// `stdout` first, then any files written.
    pub outputs: Vec<FileHash>,
    pub exit_code: u8,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReplayCheck {
    pub arguments: Vec<String>,
    pub recorded: Vec<FileHash>,
    pub replayed: Vec<FileHash>,
    pub recorded_exit: u8,
    pub replayed_exit: u8,
    pub identical: bool,
}

fn strip_manifest_flag(args: &[String]) -> Vec<String> {
    let mut out = Vec::with_capacity(args.len());
    let mut skip = false;
    for a in args {
        if skip {
            skip = false;
            continue;
        }
        if a == "--manifest" {
            skip = true;
            continue;
        }
        if a.starts_with("--manifest=") {
            continue;
        }
        out.push(a.clone());
    }
    out
}

fn output_hashes(o: &Outcome) -> Vec<FileHash> {
    std::iter::once(FileHash::of("stdout", o.stdout.as_bytes()))
        .chain(o.outputs.iter().cloned())
        .collect()
}

impl RunManifest {
    pub fn record(args: &[String], cli: &Cli, outcome: &Outcome) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            tool: "bergex".into(),
            tool_version: TOOL_VERSION.into(),
            arguments: strip_manifest_flag(args),
            parameters: describe(cli),
            seed: cli.seed,
            working_directory: std::env::current_dir().unwrap_or_default(),
            inputs: outcome.inputs.clone(),
            outputs: output_hashes(outcome),
            exit_code: outcome.exit,
        }
    }

    pub fn write(&self, path: &Path) -> anyhow::Result<()> {
        let text = serde_json::to_string_pretty(self)? + "\n";
        std::fs::write(path, text).with_context(|| format!("writing manifest {}", path.display()))
    }

    pub fn read(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading manifest {}", path.display()))?;
        let m: Self = serde_json::from_str(&text).with_context(|| format!("parsing manifest {}", path.display()))?;
        if m.schema_version != SCHEMA_VERSION {
            bail!("manifest schema version {} is not supported", m.schema_version);
        }
        Ok(m)
    }

    /// Re-runs the recorded command from its working directory.
    pub fn replay(&self) -> anyhow::Result<ReplayCheck> {
        if self.arguments.first().is_some_and(|a| a == "replay") {
            bail!("refusing to replay a replay");
        }
        let here = std::env::current_dir()?;
        if here != self.working_directory {
            std::env::set_current_dir(&self.working_directory)
                .with_context(|| format!("entering {}", self.working_directory.display()))?;
        }
        let outcome = execute(&self.arguments);
        if here != self.working_directory {
            std::env::set_current_dir(&here)?;
        }
        let replayed = output_hashes(&outcome);
        let identical = replayed == self.outputs && outcome.exit == self.exit_code && outcome.inputs == self.inputs;
        Ok(ReplayCheck {
            arguments: self.arguments.clone(),
            recorded: self.outputs.clone(),
            replayed,
            recorded_exit: self.exit_code,
            replayed_exit: outcome.exit,
            identical,
        })
    }
}
