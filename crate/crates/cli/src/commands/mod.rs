pub mod eigen;
pub mod invariants;
pub mod linear;
pub mod oracle;
pub mod simulate;

use dg_lab::Field;
use serde_json::{Map, Value};

use crate::config::KeyValues;
use crate::error::CliError;
use crate::init::{max_mode, parse_terms};
use crate::output::OutputDir;

/// State shared by every subcommand: merged settings and the output directory.
pub struct Context {
    pub kv: KeyValues,
    pub out: OutputDir,
    pub echo: Map<String, Value>,
}

impl Context {
    /// Records a resolved setting in the manifest.
    pub fn echo<T: serde::Serialize>(&mut self, key: &str, value: &T) {
        let v = serde_json::to_value(value).unwrap_or(Value::Null);
        self.echo.insert(key.to_string(), v);
    }

    pub fn write_field(&mut self, rel: &str, field: &Field) -> Result<(), CliError> {
        self.out.write_with(rel, |buf| Ok(dg_lab::io::write_field(buf, field)?))
    }

    pub fn write_csv<Row: AsRef<[f64]>>(
        &mut self,
        rel: &str,
        header: &[&str],
        rows: impl IntoIterator<Item = Row>,
    ) -> Result<(), CliError> {
        self.out.write_with(rel, |buf| Ok(dg_lab::io::write_csv(buf, header, rows)?))
    }
}

/// Builds a field with modes up to `n` from the initial-data language.
pub fn field_from_expr(expr: &str, n: usize) -> Result<Field, CliError> {
    let terms = parse_terms(expr)?;
    let top = max_mode(&terms);
    if top > n {
        return Err(CliError::Usage(format!(
            "initial data {expr:?} uses mode {top}, above the maximum mode {n}"
        )));
    }
    Ok(Field::from_trig(n, &terms)?)
}

/// Fails unless `v` is finite and positive.
pub fn positive(name: &str, v: f64) -> Result<f64, CliError> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(CliError::Usage(format!("{name} must be positive, got {v}")))
    }
}
