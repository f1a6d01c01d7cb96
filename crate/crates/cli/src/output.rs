//! Output directory handling and the run manifest.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::CliError;

pub const MANIFEST_NAME: &str = "manifest.json";
pub const OUT_ENV: &str = "DG_LAB_OUT";

/// Resolves the output directory: relative paths are placed under
/// `$DG_LAB_OUT` when it is set.
pub fn resolve_out(requested: Option<&Path>, default_name: &str) -> PathBuf {
    let root = std::env::var_os(OUT_ENV).map(PathBuf::from);
    let leaf = requested.map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from(default_name));
    match root {
        Some(root) if leaf.is_relative() => root.join(leaf),
        _ => leaf,
    }
}

#[derive(Debug, Serialize)]
pub struct FileEntry {
    pub path: String,
    pub bytes: u64,
    pub sha256: String,
}

#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub subcommand: String,
    pub version: String,
    pub config: serde_json::Value,
    pub wall_clock_seconds: f64,
    pub status: String,
    pub error: Option<String>,
    pub files: Vec<FileEntry>,
}

/// Directory that records every file written through it.
pub struct OutputDir {
    root: PathBuf,
    written: Vec<PathBuf>,
    started: Instant,
}

impl OutputDir {
    pub fn create(root: PathBuf) -> Result<Self, CliError> {
        fs::create_dir_all(&root)
            .map_err(|e| CliError::Usage(format!("cannot create {}: {e}", root.display())))?;
        Ok(Self {
            root,
            written: Vec::new(),
            started: Instant::now(),
        })
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    /// Writes a file at `rel`, creating parent directories.
    pub fn write_with(
        &mut self,
        rel: &str,
        fill: impl FnOnce(&mut Vec<u8>) -> Result<(), CliError>,
    ) -> Result<(), CliError> {
        let mut buf = Vec::new();
        fill(&mut buf)?;
        let path = self.root.join(rel);
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent)?;
        }
        fs::write(&path, &buf)?;
        let rel = PathBuf::from(rel);
        if !self.written.contains(&rel) {
            self.written.push(rel);
        }
        Ok(())
    }

    pub fn write_json<T: Serialize>(&mut self, rel: &str, value: &T) -> Result<(), CliError> {
        self.write_with(rel, |buf| {
            serde_json::to_writer_pretty(&mut *buf, value)?;
            buf.push(b'\n');
            Ok(())
        })
    }

    /// Writes `manifest.json` covering every file written so far.
    pub fn finish(
        &self,
        subcommand: &str,
        config: serde_json::Value,
        outcome: &Result<(), CliError>,
    ) -> Result<(), CliError> {
        let mut files = Vec::with_capacity(self.written.len());
        for rel in &self.written {
            let data = fs::read(self.root.join(rel))?;
            files.push(FileEntry {
                path: rel.to_string_lossy().replace('\\', "/"),
                bytes: data.len() as u64,
                sha256: Sha256::digest(&data).iter().map(|b| format!("{b:02x}")).collect(),
            });
        }
        let manifest = RunManifest {
            subcommand: subcommand.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            wall_clock_seconds: self.started.elapsed().as_secs_f64(),
            status: match outcome {
                Ok(()) => "ok".into(),
                Err(CliError::Numerical(_)) => "numerical-failure".into(),
                Err(_) => "error".into(),
            },
            error: outcome.as_ref().err().map(ToString::to_string),
            files,
        };
        let mut out = fs::File::create(self.root.join(MANIFEST_NAME))?;
        serde_json::to_writer_pretty(&mut out, &manifest)?;
        out.write_all(b"\n")?;
        Ok(())
    }
}
