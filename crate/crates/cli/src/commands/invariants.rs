use std::fs::File;
use std::io::BufReader;

use dg_lab::invariants::{fit_equilibrium, orbit_invariants, predict_amplitudes};
use dg_lab::spectral::{m_multiplier, quotient_y, sobolev, y0, NormValue};
use serde_json::{json, Value};

use super::Context;
use crate::args::InvariantsArgs;
use crate::error::CliError;

pub const KEYS: &[&str] = &["gamma"];

fn norm_json(v: Result<NormValue<f64>, dg_lab::Error>) -> Value {
    match v {
        Ok(NormValue::Finite(x)) => json!(x),
        Ok(NormValue::Divergent) => json!("divergent"),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

pub fn run(args: InvariantsArgs, ctx: &mut Context) -> Result<(), CliError> {
    let kv = ctx.kv.clone();
    kv.check_keys(KEYS)?;
    let gamma = kv.merge(args.gamma, "gamma", 1.75)?;
    ctx.echo("input", &args.input);
    ctx.echo("gamma", &gamma);

    let file = File::open(&args.input)
        .map_err(|e| CliError::Usage(format!("cannot open {}: {e}", args.input.display())))?;
    let omega = dg_lab::io::read_field(&mut BufReader::new(file))
        .map_err(|e| CliError::Usage(format!("{}: {e}", args.input.display())))?;

    let invariants = orbit_invariants(&omega);
    let report = json!({
        "max_mode": omega.max_mode(),
        "mean": omega.integral(),
        "invariants": match &invariants {
            Ok(inv) => json!(inv),
            Err(e) => json!({ "error": e.to_string() }),
        },
        "predicted_amplitudes": match predict_amplitudes(&omega) {
            Ok((plus, minus)) => json!({ "plus": plus, "minus": minus }),
            Err(e) => json!({ "error": e.to_string() }),
        },
        "equilibrium_fit": fit_equilibrium(&omega, 1.0),
        "norms": {
            "h_half": sobolev(&omega, 0.5),
            "h_one": sobolev(&omega, 1.0),
            "h_32": sobolev(&omega, 1.5),
            "h_two": sobolev(&omega, 2.0),
            "m_mult": m_multiplier(&omega),
            "y0": norm_json(y0(&omega, gamma)),
            "quotient_y": match quotient_y(&omega, gamma) {
                Ok(v) => json!(v),
                Err(e) => json!({ "error": e.to_string() }),
            },
        },
    });
    ctx.out.write_json("report.json", &report)?;
    invariants.map(|_| ()).map_err(CliError::from)
}
