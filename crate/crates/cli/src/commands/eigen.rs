use dg_lab::heun::{eigen_recursion, energy_log_growth, fit_connection, ConnectionOptions, Side};
use num_complex::Complex;
use rayon::prelude::*;
use serde_json::json;

use super::Context;
use crate::args::{EigenArgs, SideArg};
use crate::error::CliError;

pub const KEYS: &[&str] = &["s_grid", "k", "side", "dump"];

pub const COLUMNS: [&str; 9] = [
    "s", "side", "re_a", "im_a", "abs_a", "residual", "tail_exponent", "log_growth_slope",
    "log_growth_r2",
];

/// Parses `start:step:stop` into the grid points, inclusive of `stop`.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    let bad = || CliError::Usage(format!("s-grid must be start:step:stop, got {spec:?}"));
    let parts: Vec<f64> = spec
        .split(':')
        .map(|p| p.trim().parse::<f64>().map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    let [start, step, stop] = parts[..] else {
        return Err(bad());
    };
    if !(step > 0.0) || !start.is_finite() || !stop.is_finite() || stop < start {
        return Err(bad());
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    if count > 100_000 {
        return Err(CliError::Usage(format!("s-grid has {count} points")));
    }
    let grid: Vec<f64> = (0..count).map(|i| start + step * i as f64).collect();
    if grid.contains(&0.0) {
        return Err(CliError::Usage("s = 0 is the kernel direction; exclude it from the grid".into()));
    }
    Ok(grid)
}

/// Doubling cutoffs `K, K/2, ...` down to 16, ascending.
fn cutoffs(k: usize) -> Vec<usize> {
    let mut c: Vec<usize> = std::iter::successors(Some(k), |&x| Some(x / 2))
        .take_while(|&x| x >= 16)
        .collect();
    c.reverse();
    c
}

pub fn run(args: EigenArgs, ctx: &mut Context) -> Result<(), CliError> {
    let kv = ctx.kv.clone();
    kv.check_keys(KEYS)?;
    let grid_spec = kv.merge(args.s_grid, "s_grid", "0.25:0.25:3".to_string())?;
    let k = kv.merge(args.k, "k", 4000usize)?;
    let side = match args.side {
        Some(s) => s,
        None => match kv.get::<String>("side")? {
            Some(s) => <SideArg as clap::ValueEnum>::from_str(&s, true)
                .map_err(|_| CliError::Usage(format!("config key side: cannot parse {s:?}")))?,
            None => SideArg::Plus,
        },
    };
    let dump = args.dump || kv.merge(None, "dump", false)?;
    ctx.echo("s_grid", &grid_spec);
    ctx.echo("k", &k);
    ctx.echo("side", &format!("{side:?}").to_lowercase());
    ctx.echo("dump", &dump);

    let grid = parse_grid(&grid_spec)?;
    if k < 32 {
        return Err(CliError::Usage("k must be at least 32".into()));
    }
    let sides: &[Side] = match side {
        SideArg::Plus => &[Side::Plus],
        SideArg::Minus => &[Side::Minus],
        SideArg::Both => &[Side::Plus, Side::Minus],
    };
    let opts = ConnectionOptions {
        tail_k: k,
        ..ConnectionOptions::default()
    };
    let cuts = cutoffs(k);

    let results: Vec<_> = grid
        .par_iter()
        .map(|&s| {
            let series = eigen_recursion(Complex::new(0.0, s), k)?;
            let growth = energy_log_growth(&series, &cuts);
            let fits = sides
                .iter()
                .map(|&side| fit_connection(s, side, &opts))
                .collect::<Result<Vec<_>, _>>()?;
            Ok::<_, dg_lab::Error>((series, growth, fits))
        })
        .collect();

    let mut rows = Vec::new();
    let mut fits_json = Vec::new();
    let mut first_error = None;
    for (i, (s, res)) in grid.iter().zip(results).enumerate() {
        match res {
            Ok((series, (slope, r2), fits)) => {
                if dump {
                    ctx.out.write_with(&format!("series/s_{i:04}.eig1"), |buf| {
                        Ok(dg_lab::io::write_series(buf, &series)?)
                    })?;
                }
                for fit in fits {
                    let a = fit.amplitude.unwrap_or(Complex::new(f64::NAN, f64::NAN));
                    rows.push([
                        fit.s,
                        fit.side.sign(),
                        a.re,
                        a.im,
                        a.norm(),
                        fit.residual,
                        fit.tail_exponent,
                        slope,
                        r2,
                    ]);
                    fits_json.push(json!({
                        "s": fit.s,
                        "side": fit.side,
                        "conclusive": fit.is_conclusive(),
                        "residual": fit.residual,
                        "tail_exponent": fit.tail_exponent,
                        "fit_k_max": fit.k_max,
                    }));
                }
            }
            Err(e) => {
                first_error.get_or_insert_with(|| format!("s = {s}: {e}"));
            }
        }
    }
    ctx.write_csv("connection.csv", &COLUMNS, &rows)?;
    let inconclusive = fits_json.iter().filter(|f| f["conclusive"] == false).count();
    ctx.out.write_json(
        "report.json",
        &json!({
            "points": grid.len(),
            "fits": fits_json,
            "inconclusive": inconclusive,
            "error": first_error,
        }),
    )?;
    match first_error {
        Some(e) => Err(CliError::Numerical(e)),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_includes_endpoint() {
        let g = parse_grid("0.25:0.25:3").unwrap();
        assert_eq!(g.len(), 12);
        assert!((g[11] - 3.0).abs() < 1e-15);
    }

    #[test]
    fn grid_rejects_bad_specs() {
        for bad in ["1:0:2", "1:2", "3:1:1", "a:b:c", "0:1:2"] {
            assert!(parse_grid(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn doubling_cutoffs() {
        assert_eq!(cutoffs(100), vec![25, 50, 100]);
    }
}
