//! Flat `key = value` configuration files.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use crate::error::CliError;

/// Parsed configuration; lines are `key = value`, `#` starts a comment.
#[derive(Debug, Default, Clone)]
pub struct KeyValues {
    entries: BTreeMap<String, String>,
}

impl KeyValues {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut entries = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Usage(format!("config line {}: expected key = value", i + 1))
            })?;
            let key = key.trim().to_string();
            if key.is_empty() {
                return Err(CliError::Usage(format!("config line {}: empty key", i + 1)));
            }
            if entries.insert(key.clone(), value.trim().to_string()).is_some() {
                return Err(CliError::Usage(format!("config line {}: duplicate key {key}", i + 1)));
            }
        }
        Ok(Self { entries })
    }

    pub fn load(path: Option<&Path>) -> Result<Self, CliError> {
        match path {
            None => Ok(Self::default()),
            Some(p) => {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", p.display())))?;
                Self::parse(&text)
            }
        }
    }

    /// Fails on keys outside `allowed`.
    pub fn check_keys(&self, allowed: &[&str]) -> Result<(), CliError> {
        match self.entries.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(k) => Err(CliError::Usage(format!(
                "unknown config key {k:?} (allowed: {})",
                allowed.join(", ")
            ))),
            None => Ok(()),
        }
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>, CliError> {
        self.entries
            .get(key)
            .map(|v| {
                v.parse()
                    .map_err(|_| CliError::Usage(format!("config key {key}: cannot parse {v:?}")))
            })
            .transpose()
    }

    /// Flag value if given, else the config value, else `default`.
    pub fn merge<T: FromStr>(&self, flag: Option<T>, key: &str, default: T) -> Result<T, CliError> {
        Ok(match flag {
            Some(v) => v,
            None => self.get(key)?.unwrap_or(default),
        })
    }

    pub fn merge_opt<T: FromStr>(&self, flag: Option<T>, key: &str) -> Result<Option<T>, CliError> {
        Ok(match flag {
            Some(v) => Some(v),
            None => self.get(key)?,
        })
    }
}
