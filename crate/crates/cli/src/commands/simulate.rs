use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;

use dg_lab::dynamics::{normalize_initial_data, simulate, ModelSpec, SimConfig, SpectralFilter, CSV_COLUMNS};
use dg_lab::invariants::{drift_report, fit_equilibrium, predict_amplitudes};
use dg_lab::spectral::Gauge;
use dg_lab::Field;
use serde_json::json;

use super::{field_from_expr, positive, Context};
use crate::args::{ModelKind, SimulateArgs};
use crate::error::CliError;

pub const KEYS: &[&str] = &[
    "model", "init", "from", "n", "dt", "t", "record_every", "snapshot_every", "gamma", "epsilon",
    "sup_ceiling", "dealias", "filter", "track_invariants", "gauge_point", "mean_c", "transport",
    "normalize",
];

fn read_dgf1(path: &PathBuf) -> Result<Field, CliError> {
    let file = File::open(path)
        .map_err(|e| CliError::Usage(format!("cannot open {}: {e}", path.display())))?;
    dg_lab::io::read_field(&mut BufReader::new(file))
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

pub fn run(args: SimulateArgs, ctx: &mut Context) -> Result<(), CliError> {
    let kv = ctx.kv.clone();
    kv.check_keys(KEYS)?;
    let kind = kv.merge(args.model, "model", ModelKind::Dg)?;
    let n = kv.merge(args.n, "n", 128usize)?;
    let dt = positive("dt", kv.merge(args.dt, "dt", 1e-3)?)?;
    let t_final = kv.merge(args.t, "t", 1.0)?;
    let record_every = kv.merge(args.record_every, "record_every", 100usize)?;
    let snapshot_every = kv.merge(args.snapshot_every, "snapshot_every", 10usize)?;
    let gamma = kv.merge(args.gamma, "gamma", 1.75)?;
    let epsilon = kv.merge(args.epsilon, "epsilon", 0.0)?;
    let sup_ceiling = kv.merge(args.sup_ceiling, "sup_ceiling", 1e8)?;
    let dealias = if args.no_dealias { false } else { kv.merge(None, "dealias", true)? };
    let filter = args.filter || kv.merge(None, "filter", false)?;
    let track = args.track_invariants || kv.merge(None, "track_invariants", false)?;
    let normalize = args.normalize || kv.merge(None, "normalize", false)?;
    let gauge_point = kv.merge_opt(args.gauge_point, "gauge_point")?;
    let mean_c = kv.merge(args.mean_c, "mean_c", 0.0)?;
    let from = kv.merge_opt(args.from, "from")?;
    let init = match (&from, kv.merge_opt(args.init, "init")?) {
        (Some(_), Some(_)) => {
            return Err(CliError::Usage("give either init or from, not both".into()))
        }
        (_, init) => init,
    };
    let transport = kv.merge_opt(args.transport, "transport")?;

    ctx.echo("model", &format!("{kind:?}").to_lowercase());
    ctx.echo("n", &n);
    ctx.echo("dt", &dt);
    ctx.echo("t", &t_final);
    ctx.echo("record_every", &record_every);
    ctx.echo("snapshot_every", &snapshot_every);
    ctx.echo("gamma", &gamma);
    ctx.echo("epsilon", &epsilon);
    ctx.echo("sup_ceiling", &sup_ceiling);
    ctx.echo("dealias", &dealias);
    ctx.echo("filter", &filter);
    ctx.echo("track_invariants", &track);
    ctx.echo("normalize", &normalize);
    ctx.echo("gauge_point", &gauge_point);
    ctx.echo("mean_c", &mean_c);
    ctx.echo("init", &init);
    ctx.echo("from", &from);
    ctx.echo("transport", &transport);

    let omega0 = match (&from, &init) {
        (Some(path), _) => read_dgf1(path)?,
        (None, Some(expr)) => field_from_expr(expr, n)?,
        (None, None) => field_from_expr("-sin", n)?,
    };
    let (omega0, normalization) = if normalize {
        let (f, rec) = normalize_initial_data(&omega0)?;
        (f, Some(rec))
    } else {
        (omega0, None)
    };

    let gauge = gauge_point.map_or(Gauge::MeanZero, Gauge::PointZero);
    let model = match kind {
        ModelKind::Clm => ModelSpec::Clm,
        ModelKind::Dg => ModelSpec::DeGregorio { gauge },
        ModelKind::DgMean => ModelSpec::DeGregorioMean { c: mean_c, gauge },
        ModelKind::Transport => {
            let expr = transport.as_deref().ok_or_else(|| {
                CliError::Usage("the transport model needs an advecting field (--transport)".into())
            })?;
            ModelSpec::Transport(field_from_expr(expr, n)?)
        }
    };
    let mut cfg = SimConfig::new(model, n, dt, t_final);
    cfg.dealias = dealias;
    cfg.record_every = record_every;
    cfg.snapshot_every = snapshot_every;
    cfg.gamma = gamma;
    cfg.epsilon = epsilon;
    cfg.sup_ceiling = sup_ceiling;
    cfg.track_invariants = track;
    cfg.filter = filter.then(SpectralFilter::standard);

    ctx.write_field("initial.dgf1", &omega0)?;
    let predicted = predict_amplitudes(&omega0).ok();
    let out = simulate(&cfg, &omega0)?;

    ctx.write_csv("timeseries.csv", &CSV_COLUMNS, out.records.iter().map(|r| r.row()))?;
    for (i, (_, snap)) in out.snapshots.iter().enumerate() {
        ctx.write_field(&format!("snapshots/snap_{i:05}.dgf1"), snap)?;
    }
    if !out.snapshots.is_empty() {
        let rows = out.snapshots.iter().enumerate().map(|(i, (t, _))| [i as f64, *t]);
        ctx.write_csv("snapshots.csv", &["index", "t"], rows)?;
    }
    ctx.write_field("final.dgf1", &out.last)?;

    let mut drift = None;
    if track {
        let width = out
            .records
            .iter()
            .filter_map(|r| r.invariants.as_ref().map(|inv| inv.count()))
            .max()
            .unwrap_or(0);
        let mut header = vec!["t".to_string(), "count".into(), "pv".into()];
        for j in 1..=width {
            header.push(format!("theta_{j}"));
            header.push(format!("deriv_{j}"));
        }
        let rows: Vec<Vec<f64>> = out
            .records
            .iter()
            .map(|r| {
                let mut row = vec![r.t, f64::NAN, f64::NAN];
                row.resize(3 + 2 * width, f64::NAN);
                if let Some(inv) = &r.invariants {
                    row[1] = inv.count() as f64;
                    row[2] = inv.pv;
                    for (j, z) in inv.zeros.iter().enumerate() {
                        row[3 + 2 * j] = z.theta;
                        row[4 + 2 * j] = z.deriv;
                    }
                }
                row
            })
            .collect();
        let header: Vec<&str> = header.iter().map(String::as_str).collect();
        ctx.write_csv("invariants.csv", &header, rows)?;
        let series: Option<Vec<_>> = out
            .records
            .iter()
            .map(|r| r.invariants.clone().map(|inv| (inv, r.mean)))
            .collect();
        drift = Some(match series {
            Some(s) => match drift_report(&s) {
                Ok(rep) => json!(rep),
                Err(e) => json!({ "error": e.to_string() }),
            },
            None => json!({ "error": "invariants unavailable at some records" }),
        });
    }

    let last = out.records.last().expect("simulation always records t = 0");
    let report = json!({
        "normalization": normalization,
        "records": out.records.len(),
        "final_time": last.t,
        "final": last,
        "predicted_amplitudes": predicted.map(|(plus, minus)| json!({ "plus": plus, "minus": minus })),
        "equilibrium_fit": fit_equilibrium(&out.last, 1.0),
        "drift": drift,
        "failure": out.failure.as_ref().map(ToString::to_string),
    });
    ctx.out.write_json("report.json", &report)?;

    match out.failure {
        Some(e) => Err(CliError::Numerical(e.to_string())),
        None => Ok(()),
    }
}
