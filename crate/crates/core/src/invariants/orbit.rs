use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::zeros::{find_zeros, ZeroPoint};
use crate::scalar::Real;
use crate::spectral::{node, smooth_size, RealCircleField, SpectralGrid};

/// Invariants of a field under pushforward by circle diffeomorphisms.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrbitInvariants<R> {
    pub zeros: Vec<ZeroPoint<R>>,
    /// Principal value of `∫ dθ/ω`.
    pub pv: R,
}

impl<R: Real> OrbitInvariants<R> {
    pub fn count(&self) -> usize {
        self.zeros.len()
    }

    /// Derivatives at the zeros, ordered by location.
    pub fn derivative_cycle(&self) -> Vec<R> {
        self.zeros.iter().map(|z| z.deriv).collect()
    }
}

pub fn orbit_invariants<R: Real>(omega: &RealCircleField<R>) -> Result<OrbitInvariants<R>> {
    let zeros = find_zeros(omega)?;
    let pv = principal_value(omega, &zeros, R::lit(1e-10))?;
    Ok(OrbitInvariants { zeros, pv })
}

/// Largest grid used before the principal value is declared unresolved.
const MAX_PV_NODES: usize = 1 << 22;

/// `p.v. ∫ dθ/ω` by subtracting `cot((θ-θ_j)/2)/(2a_j)` at each simple zero.
///
/// The remainder is smooth and periodic, so it is summed with the
/// trapezoid rule on a grid shifted away from the zeros, doubling the grid
/// until two successive sums agree to `tol`.
pub fn principal_value<R: Real>(
    omega: &RealCircleField<R>,
    zeros: &[ZeroPoint<R>],
    tol: R,
) -> Result<R> {
    let half = R::lit(0.5);
    let mut m = smooth_size(4 * omega.max_mode().max(8) + 1);
    let mut prev: Option<R> = None;
    while m <= MAX_PV_NODES {
        let h = R::TAU() / R::of(m);
        let offset = grid_offset(zeros, m);
        let mut values = vec![R::zero(); m];
        SpectralGrid::new(m).synthesize(&omega.shifted(offset), &mut values)?;
        let mut total = R::zero();
        for (j, v) in values.iter().enumerate() {
            let t = node::<R>(m, j) + offset;
            let mut g = R::one() / *v;
            for z in zeros {
                g -= half / (z.deriv * ((t - z.theta) * half).tan());
            }
            total += g;
        }
        total *= h;
        if !total.is_finite() {
            return Err(Error::Domain("principal value integrand is not finite".into()));
        }
        if let Some(p) = prev {
            if (total - p).abs() <= tol * total.abs().max(R::one()) {
                return Ok(total);
            }
        }
        prev = Some(total);
        m = smooth_size(2 * m);
    }
    Err(Error::Domain(
        "principal value quadrature did not converge".into(),
    ))
}

/// Shift of the `m`-node grid that keeps every zero as far from a node as
/// the candidates allow.
fn grid_offset<R: Real>(zeros: &[ZeroPoint<R>], m: usize) -> R {
    const CANDIDATES: usize = 16;
    let h = R::TAU() / R::of(m);
    let clearance = |offset: R| {
        zeros
            .iter()
            .map(|z| {
                let x = (z.theta + R::PI() - offset) / h;
                let frac = x - x.floor();
                frac.min(R::one() - frac)
            })
            .fold(R::one(), R::min)
    };
    (0..CANDIDATES)
        .map(|k| h * (R::of(k) + R::lit(0.5)) / R::of(CANDIDATES))
        .max_by(|a, b| clearance(*a).partial_cmp(&clearance(*b)).unwrap())
        .unwrap_or(R::zero())
}
