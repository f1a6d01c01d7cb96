use dg_lab::dynamics::{clm_blowup_time, clm_exact, clm_exact_value, exact_pushforward, Pushforward};
use dg_lab::spectral::{hilbert, node};
use serde_json::json;

use super::{field_from_expr, Context};
use crate::args::OracleModel;
use crate::args::OracleArgs;
use crate::error::CliError;

pub const KEYS: &[&str] = &["model", "init", "t", "n", "points"];

pub fn run(args: OracleArgs, ctx: &mut Context) -> Result<(), CliError> {
    let kv = ctx.kv.clone();
    kv.check_keys(KEYS)?;
    let model = match args.model {
        Some(m) => m,
        None => match kv.get::<String>("model")? {
            Some(s) => <OracleModel as clap::ValueEnum>::from_str(&s, true)
                .map_err(|_| CliError::Usage(format!("config key model: cannot parse {s:?}")))?,
            None => OracleModel::Clm,
        },
    };
    let init = kv.merge(args.init, "init", "cos".to_string())?;
    let t = kv.merge(args.t, "t", 0.5)?;
    let n = kv.merge(args.n, "n", 64usize)?;
    let points = kv.merge(args.points, "points", 64usize)?;
    ctx.echo("model", &format!("{model:?}").to_lowercase());
    ctx.echo("init", &init);
    ctx.echo("t", &t);
    ctx.echo("n", &n);
    ctx.echo("points", &points);
    if !(t.is_finite() && t >= 0.0) {
        return Err(CliError::Usage(format!("t must be nonnegative, got {t}")));
    }
    if points == 0 {
        return Err(CliError::Usage("points must be positive".into()));
    }

    let omega0 = field_from_expr(&init, n)?;
    let thetas: Vec<f64> = (0..points).map(|j| node(points, j)).collect();
    let header = ["theta", "exact", "projected"];
    let report = match model {
        OracleModel::Clm => {
            let blowup = clm_blowup_time(&omega0)?;
            ctx.out.write_json("report.json", &json!({ "blowup_time": blowup }))?;
            let field = clm_exact(&omega0, t, n)?;
            let h0 = hilbert(&omega0);
            let rows = thetas
                .iter()
                .map(|&th| [th, clm_exact_value(&omega0, &h0, t, th), field.value_at(th)]);
            ctx.write_csv("table.csv", &header, rows)?;
            ctx.write_field("exact.dgf1", &field)?;
            json!({ "blowup_time": blowup })
        }
        OracleModel::Transport => {
            let resampled = exact_pushforward(&omega0, t, n)?;
            let push = Pushforward::new(&omega0, t);
            let rows = thetas
                .iter()
                .map(|&th| [th, push.value(th), resampled.field.value_at(th)]);
            ctx.write_csv("table.csv", &header, rows)?;
            ctx.write_field("exact.dgf1", &resampled.field)?;
            json!({ "tail_fraction": resampled.tail_fraction })
        }
    };
    ctx.out.write_json("report.json", &report)?;
    Ok(())
}
