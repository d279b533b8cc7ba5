//! Run manifests: a JSON sidecar written next to every primary output that
//! records the subcommand, its resolved flags, the master seed, input file
//! digests, and the tool version. Re-running with the same manifest inputs
//! reproduces the outputs byte for byte; only `created_utc` varies between
//! runs.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Serialize)]
pub struct RunManifest {
    pub tool: &'static str,
    pub version: &'static str,
    pub subcommand: &'static str,
    pub args: BTreeMap<String, String>,
    pub seed: u64,
    pub inputs: Vec<InputDigest>,
    pub outputs: Vec<String>,
    /// Unix epoch seconds at write time; excluded from determinism checks.
    pub created_utc: u64,
}

pub struct ManifestBuilder {
    subcommand: &'static str,
    seed: u64,
    args: BTreeMap<String, String>,
    inputs: Vec<InputDigest>,
    outputs: Vec<PathBuf>,
}

impl ManifestBuilder {
    pub fn new(subcommand: &'static str, seed: u64) -> Self {
        ManifestBuilder {
            subcommand,
            seed,
            args: BTreeMap::new(),
            inputs: Vec::new(),
            outputs: Vec::new(),
        }
    }

    pub fn arg(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.args.insert(key.to_owned(), value.to_string());
        self
    }

    pub fn arg_opt(&mut self, key: &str, value: &Option<impl ToString>) -> &mut Self {
        if let Some(v) = value {
            self.arg(key, v.to_string());
        }
        self
    }

    /// Registers an input file and records its SHA-256 digest.
    pub fn input(&mut self, path: &Path) -> Result<&mut Self> {
        let mut file =
            File::open(path).with_context(|| format!("cannot open input {}", path.display()))?;
        let mut hasher = Sha256::new();
        let mut buf = [0u8; 64 * 1024];
        loop {
            let read = file.read(&mut buf)?;
            if read == 0 {
                break;
            }
            hasher.update(&buf[..read]);
        }
        let digest = hasher.finalize();
        let sha256 = digest.iter().map(|b| format!("{b:02x}")).collect::<String>();
        self.inputs.push(InputDigest {
            path: path.display().to_string(),
            sha256,
        });
        Ok(self)
    }

    pub fn output(&mut self, path: &Path) -> &mut Self {
        self.outputs.push(path.to_owned());
        self
    }

    /// Writes `<primary_output>.manifest.json` next to the first registered
    /// output.
    pub fn write(&self) -> Result<()> {
        let primary = self
            .outputs
            .first()
            .expect("manifest requires at least one output");
        let manifest = RunManifest {
            tool: "charnet",
            version: env!("CARGO_PKG_VERSION"),
            subcommand: self.subcommand,
            args: self.args.clone(),
            seed: self.seed,
            inputs: self
                .inputs
                .iter()
                .map(|i| InputDigest {
                    path: i.path.clone(),
                    sha256: i.sha256.clone(),
                })
                .collect(),
            outputs: self
                .outputs
                .iter()
                .map(|p| p.display().to_string())
                .collect(),
            created_utc: std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        };
        let path = manifest_path(primary);
        let mut file = File::create(&path)
            .with_context(|| format!("cannot create manifest {}", path.display()))?;
        serde_json::to_writer_pretty(&mut file, &manifest)?;
        file.write_all(b"\n")?;
        Ok(())
    }
}

/// `x.json` → `x.json.manifest.json` (appending keeps sibling outputs with a
/// shared stem from colliding).
pub fn manifest_path(primary: &Path) -> PathBuf {
    let mut name = primary.as_os_str().to_owned();
    name.push(".manifest.json");
    PathBuf::from(name)
}
