use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::orbit::OrbitInvariants;
use crate::invariants::zeros::wrap_angle;
use crate::scalar::Real;

/// Maximum drift of each invariant relative to the first record.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DriftReport<R> {
    /// Relative drift of the derivative at each initial zero.
    pub derivative: Vec<R>,
    pub max_derivative: R,
    pub pv: R,
    pub mean: R,
    /// Set when the zero count changes or a zero cannot be followed.
    pub topology_change: bool,
}

/// Largest jump of a zero between consecutive records that still counts as
/// the same zero.
pub const MAX_ZERO_JUMP: f64 = std::f64::consts::FRAC_PI_4;

pub fn drift_report<R: Real>(series: &[(OrbitInvariants<R>, R)]) -> Result<DriftReport<R>> {
    if series.len() < 2 {
        return Err(Error::Parameter("drift report needs at least two records".into()));
    }
    let (first, mean0) = &series[0];
    let mut tracked: Vec<R> = first.zeros.iter().map(|z| z.theta).collect();
    let mut derivative = vec![R::zero(); tracked.len()];
    let (mut pv, mut mean) = (R::zero(), R::zero());
    let mut topology_change = false;
    for (inv, m) in &series[1..] {
        pv = pv.max((inv.pv - first.pv).abs());
        mean = mean.max((*m - *mean0).abs());
        if inv.count() != first.count() {
            topology_change = true;
            continue;
        }
        for (i, loc) in tracked.iter_mut().enumerate() {
            let nearest = inv.zeros.iter().min_by(|a, b| {
                let da = wrap_angle(a.theta - *loc).abs();
                let db = wrap_angle(b.theta - *loc).abs();
                da.partial_cmp(&db).unwrap()
            });
            match nearest {
                Some(z) if wrap_angle(z.theta - *loc).abs() <= R::lit(MAX_ZERO_JUMP) => {
                    *loc = z.theta;
                    let a0 = first.zeros[i].deriv;
                    derivative[i] = derivative[i].max(((z.deriv - a0) / a0).abs());
                }
                _ => topology_change = true,
            }
        }
    }
    let max_derivative = derivative.iter().copied().fold(R::zero(), R::max);
    Ok(DriftReport {
        derivative,
        max_derivative,
        pv,
        mean,
        topology_change,
    })
}
