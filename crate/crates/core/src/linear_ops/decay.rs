use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DecayFit<R> {
    /// Fitted `β` in `norm ≈ C e^{-βt}`.
    pub rate: R,
    /// Coefficient of determination of the log-linear fit.
    pub r_squared: R,
    /// Coefficient of determination of a power-law fit on the same window.
    pub power_r_squared: R,
}

impl<R: Real> DecayFit<R> {
    /// Whether the window looks exponential: a good log-linear fit that a
    /// power law does not beat.
    pub fn is_exponential(&self, min_r_squared: R) -> bool {
        self.r_squared >= min_r_squared && self.r_squared >= self.power_r_squared
    }
}

fn linear_fit<R: Real>(x: &[R], y: &[R]) -> (R, R) {
    let n = R::of(x.len());
    let mx = x.iter().copied().sum::<R>() / n;
    let my = y.iter().copied().sum::<R>() / n;
    let (mut sxy, mut sxx, mut syy) = (R::zero(), R::zero(), R::zero());
    for (&a, &b) in x.iter().zip(y) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
    }
    let slope = sxy / sxx;
    let r2 = if syy == R::zero() {
        R::one()
    } else {
        sxy * sxy / (sxx * syy)
    };
    (slope, r2)
}

/// Least-squares slope of `log norm` against `t` over the second half of the
/// time window.
pub fn decay_rate_fit<R: Real>(times: &[R], norms: &[R]) -> Result<DecayFit<R>> {
    if times.len() != norms.len() {
        return Err(Error::Parameter("times and norms differ in length".into()));
    }
    if times.len() < 10 {
        return Err(Error::Parameter("decay fit needs at least 10 samples".into()));
    }
    if norms.iter().any(|&v| !(v > R::zero())) {
        return Err(Error::Domain("decay fit needs positive norms".into()));
    }
    let (t0, t1) = (times[0], times[times.len() - 1]);
    let mid = (t0 + t1) / R::lit(2.0);
    let (t, v): (Vec<R>, Vec<R>) = times
        .iter()
        .zip(norms)
        .filter(|(&t, _)| t >= mid)
        .map(|(&t, &v)| (t, v.ln()))
        .unzip();
    if t.len() < 2 {
        return Err(Error::Parameter("window too short".into()));
    }
    let (slope, r_squared) = linear_fit(&t, &v);
    let power_r_squared = if t.iter().all(|&x| x > R::zero()) {
        let lt: Vec<R> = t.iter().map(|x| x.ln()).collect();
        linear_fit(&lt, &v).1
    } else {
        R::zero()
    };
    Ok(DecayFit {
        rate: -slope,
        r_squared,
        power_r_squared,
    })
}
