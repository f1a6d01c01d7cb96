use dg_lab::linear_ops::{
    decay_rate_fit, evolve_linear_with, lift, restrict, LinearConfig,
};
use dg_lab::dynamics::SpectralFilter;
use dg_lab::spectral::quotient_y;
use serde_json::json;

use super::{field_from_expr, positive, Context};
use crate::args::LinearArgs;
use crate::error::CliError;

pub const KEYS: &[&str] = &[
    "init", "k", "dt", "t", "sample_every", "gamma", "fit_from", "absorber", "gauge_term", "modes",
];

fn parse_modes(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(|m| {
            m.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad mode list {s:?}")))
        })
        .collect()
}

pub fn run(args: LinearArgs, ctx: &mut Context) -> Result<(), CliError> {
    let kv = ctx.kv.clone();
    kv.check_keys(KEYS)?;
    let init = kv.merge(args.init, "init", "cos 2".to_string())?;
    let k = kv.merge(args.k, "k", 512usize)?;
    let dt = positive("dt", kv.merge(args.dt, "dt", 1e-3)?)?;
    let t_final = kv.merge(args.t, "t", 10.0)?;
    let sample_every = kv.merge(args.sample_every, "sample_every", 100usize)?;
    let gamma = kv.merge(args.gamma, "gamma", 1.75)?;
    let fit_from = kv.merge(args.fit_from, "fit_from", 5.0)?;
    let absorber = args.absorber || kv.merge(None, "absorber", false)?;
    let gauge_term = args.gauge_term || kv.merge(None, "gauge_term", false)?;
    let modes = match args.modes {
        Some(m) => m,
        None => match kv.get::<String>("modes")? {
            Some(s) => parse_modes(&s)?,
            None => vec![2, 3, 4, 8],
        },
    };
    for (key, v) in [
        ("init", json!(init)),
        ("k", json!(k)),
        ("dt", json!(dt)),
        ("t", json!(t_final)),
        ("sample_every", json!(sample_every)),
        ("gamma", json!(gamma)),
        ("fit_from", json!(fit_from)),
        ("absorber", json!(absorber)),
        ("gauge_term", json!(gauge_term)),
        ("modes", json!(modes)),
    ] {
        ctx.echo(key, &v);
    }
    if k < 2 {
        return Err(CliError::Usage("k must be at least 2".into()));
    }
    if let Some(m) = modes.iter().find(|&&m| m == 0 || m > k) {
        return Err(CliError::Usage(format!("mode {m} is outside 1..={k}")));
    }
    if sample_every == 0 {
        return Err(CliError::Usage("sample_every must be positive".into()));
    }

    let eta0 = restrict(&field_from_expr(&init, k)?, k);
    let mut cfg = LinearConfig::new(dt, t_final);
    cfg.sample_every = sample_every;
    cfg.gauge_term = gauge_term;
    cfg.absorber = absorber.then(SpectralFilter::standard);
    let traj = evolve_linear_with(&eta0, &cfg)?;

    let quotient: Vec<f64> = traj
        .states
        .iter()
        .map(|eta| quotient_y(&lift(eta), gamma))
        .collect::<Result<_, _>>()?;
    let mut header = vec!["t".to_string(), "energy".into(), "quotient_y".into()];
    header.extend(modes.iter().map(|m| format!("abs_eta_{m}")));
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    let rows = traj.times.iter().enumerate().map(|(i, &t)| {
        let mut row = vec![t, traj.energy[i], quotient[i]];
        row.extend(modes.iter().map(|&m| traj.states[i].get(m).norm()));
        row
    });
    ctx.write_csv("trajectory.csv", &header, rows)?;
    ctx.write_field("final.dgf1", &lift(traj.last()))?;

    let e0 = traj.energy[0];
    let energy_drift = traj
        .energy
        .iter()
        .map(|e| if e0 > 0.0 { (e - e0).abs() / e0 } else { (e - e0).abs() })
        .fold(0.0, f64::max);
    let (wt, wq): (Vec<f64>, Vec<f64>) = traj
        .times
        .iter()
        .zip(&quotient)
        .filter(|(&t, _)| t >= fit_from)
        .map(|(&t, &q)| (t, q))
        .unzip();
    let decay = match decay_rate_fit(&wt, &wq) {
        Ok(fit) => json!({
            "rate": fit.rate,
            "r_squared": fit.r_squared,
            "power_r_squared": fit.power_r_squared,
            "exponential": fit.is_exponential(0.98),
        }),
        Err(e) => json!({ "error": e.to_string() }),
    };
    let report = json!({
        "samples": traj.times.len(),
        "relative_energy_drift": energy_drift,
        "max_tail_fraction": traj.max_tail_fraction,
        "decay_fit": decay,
    });
    ctx.out.write_json("report.json", &report)?;
    Ok(())
}
