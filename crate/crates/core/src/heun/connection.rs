use num_complex::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::heun::recursion::{eigen_recursion, EigenfunctionSeries};
use crate::scalar::{Coefficient, Real};

/// Which boundary point the radial approach targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn sign(self) -> f64 {
        match self {
            Side::Plus => 1.0,
            Side::Minus => -1.0,
        }
    }
}

/// Local fit of `Φ(z, is)` near `z = ±1`.
#[derive(Clone, Debug, Serialize)]
pub struct ConnectionFit {
    pub s: f64,
    pub side: Side,
    /// Coefficient of the singular power, withheld when the fit is poor.
    pub amplitude: Option<Complex<f64>>,
    pub residual: f64,
    pub tail_exponent: f64,
    pub k_max: usize,
}

impl ConnectionFit {
    pub fn is_conclusive(&self) -> bool {
        self.amplitude.is_some()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ConnectionOptions {
    pub min_level: u32,
    pub max_level: u32,
    pub residual_threshold: f64,
    /// Truncation used for the tail exponent.
    pub tail_k: usize,
}

impl Default for ConnectionOptions {
    fn default() -> Self {
        Self {
            min_level: 4,
            max_level: 14,
            residual_threshold: 1e-3,
            tail_k: 4000,
        }
    }
}

/// Least-squares solution of an overdetermined complex system, via
/// column-scaled modified Gram-Schmidt with one reorthogonalization pass.
pub(crate) fn complex_least_squares(
    columns: &[Vec<Complex<f64>>],
    rhs: &[Complex<f64>],
) -> Option<Vec<Complex<f64>>> {
    let n = columns.len();
    let mut scale = vec![0.0; n];
    let mut q: Vec<Vec<Complex<f64>>> = Vec::with_capacity(n);
    let mut r = vec![vec![Complex::new(0.0, 0.0); n]; n];
    for (j, col) in columns.iter().enumerate() {
        scale[j] = col.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if scale[j] == 0.0 {
            return None;
        }
        let mut v: Vec<_> = col.iter().map(|c| c / scale[j]).collect();
        for _ in 0..2 {
            for (i, qi) in q.iter().enumerate() {
                let dot: Complex<f64> = qi.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                r[i][j] += dot;
                v.iter_mut().zip(qi).for_each(|(x, a)| *x -= dot * a);
            }
        }
        let norm = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-13 {
            return None;
        }
        r[j][j] = Complex::new(norm, 0.0);
        v.iter_mut().for_each(|x| *x /= norm);
        q.push(v);
    }
    let qb: Vec<Complex<f64>> = q
        .iter()
        .map(|qi| qi.iter().zip(rhs).map(|(a, b)| a.conj() * b).sum())
        .collect();
    let mut x = vec![Complex::new(0.0, 0.0); n];
    for i in (0..n).rev() {
        let acc: Complex<f64> = (i + 1..n).map(|j| r[i][j] * x[j]).sum();
        x[i] = (qb[i] - acc) / r[i][i];
    }
    Some(x.into_iter().zip(scale).map(|(c, s)| c / s).collect())
}

/// Slope of `log|η_k|` against `log k` over `[K/2, K]`, using the
/// root-mean-square of neighbouring pairs to cancel alternating parts.
pub fn tail_exponent<R: Real + Coefficient>(series: &EigenfunctionSeries<R>) -> f64 {
    let k_max = series.k_max();
    let pts: Vec<(f64, f64)> = (k_max / 2..k_max)
        .map(|k| {
            let a = series.get(k).norm_sqr().as_f64();
            let b = series.get(k + 1).norm_sqr().as_f64();
            let mag = ((a + b) / 2.0).sqrt();
            ((k as f64 + 0.5).ln(), mag.ln())
        })
        .collect();
    linear_fit(&pts).0
}

/// Ordinary least-squares slope, intercept and coefficient of determination.
pub(crate) fn linear_fit(pts: &[(f64, f64)]) -> (f64, f64, f64) {
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let syy: f64 = pts.iter().map(|p| (p.1 - my).powi(2)).sum();
    let slope = sxy / sxx;
    let r2 = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };
    (slope, my - slope * mx, r2)
}

/// Fits `Φ(±(1 - δ))` by an analytic part `c₀ + c₁δ + c₂δ²` plus the
/// singular pair `A δ^{1∓is} + A' δ^{2∓is}` over `δ = 2^{-m}`.
pub fn fit_connection(s: f64, side: Side, opts: &ConnectionOptions) -> Result<ConnectionFit> {
    if s == 0.0 || !s.is_finite() {
        return Err(Error::Parameter("connection fit needs a nonzero real s".into()));
    }
    if opts.min_level >= opts.max_level || opts.max_level - opts.min_level < 5 {
        return Err(Error::Parameter("radial approach needs at least six levels".into()));
    }
    let lambda = Complex::new(0.0, s);
    let delta_min = 0.5f64.powi(opts.max_level as i32);
    let k_max = (8.0 / delta_min).ceil() as usize;
    let series = eigen_recursion(lambda, k_max)?;

    let sign = side.sign();
    let exponent = Complex::new(1.0, 0.0) - lambda * sign;
    let deltas: Vec<f64> = (opts.min_level..=opts.max_level)
        .map(|m| 0.5f64.powi(m as i32))
        .collect();
    let values: Vec<Complex<f64>> = deltas
        .iter()
        .map(|&d| series.evaluate(Complex::new(sign * (1.0 - d), 0.0)))
        .collect();
    let power = |d: f64, e: Complex<f64>| (e * d.ln()).exp();
    let columns: Vec<Vec<Complex<f64>>> = vec![
        deltas.iter().map(|_| Complex::new(1.0, 0.0)).collect(),
        deltas.iter().map(|&d| Complex::new(d, 0.0)).collect(),
        deltas.iter().map(|&d| Complex::new(d * d, 0.0)).collect(),
        deltas.iter().map(|&d| power(d, exponent)).collect(),
        deltas.iter().map(|&d| power(d, exponent + 1.0)).collect(),
    ];
    let coeffs = complex_least_squares(&columns, &values)
        .ok_or_else(|| Error::Parameter("singular connection fit".into()))?;

    let mut misfit = 0.0;
    let mut size = 0.0;
    for (row, v) in values.iter().enumerate() {
        let model: Complex<f64> = columns.iter().zip(&coeffs).map(|(c, x)| c[row] * x).sum();
        misfit += (v - model).norm_sqr();
        size += (v - coeffs[0]).norm_sqr();
    }
    let residual = (misfit / size).sqrt();
    let tail_series = eigen_recursion(lambda, opts.tail_k.min(k_max))?;
    Ok(ConnectionFit {
        s,
        side,
        amplitude: (residual < opts.residual_threshold).then_some(coeffs[3]),
        residual,
        tail_exponent: tail_exponent(&tail_series),
        k_max,
    })
}

/// Fits `E(K) = Σ_{k≤K} k³|η_k|²` against `log K` over doubling cutoffs;
/// returns slope and coefficient of determination.
pub fn energy_log_growth(series: &EigenfunctionSeries<f64>, cutoffs: &[usize]) -> (f64, f64) {
    let sums = series.sobolev_partial_sums(cutoffs);
    let pts: Vec<(f64, f64)> = cutoffs
        .iter()
        .zip(&sums)
        .map(|(&k, &e)| ((k as f64).ln(), e))
        .collect();
    let (slope, _, r2) = linear_fit(&pts);
    (slope, r2)
}
