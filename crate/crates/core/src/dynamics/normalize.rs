use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::find_zeros;
use crate::scalar::Real;
use crate::spectral::RealCircleField;

/// Maps a normalized solution back: `ω(θ, t) = A·ω̃(θ - shift, A·t)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Normalization<R> {
    pub amplitude: R,
    pub shift: R,
    /// Normalized time per unit of original time.
    pub time_scale: R,
}

impl<R: Real> Normalization<R> {
    pub fn restore(&self, normalized: &RealCircleField<R>) -> RealCircleField<R> {
        normalized.shifted(-self.shift).scaled(self.amplitude)
    }
}

/// Rotates and rescales data with two simple zeros so that the decreasing
/// zero sits at 0 with slope -1.
pub fn normalize_initial_data<R: Real>(
    omega0: &RealCircleField<R>,
) -> Result<(RealCircleField<R>, Normalization<R>)> {
    let zeros = find_zeros(omega0)?;
    if zeros.len() != 2 {
        return Err(Error::ZeroCount(zeros.len()));
    }
    let x2 = zeros
        .iter()
        .find(|z| z.deriv < R::zero())
        .ok_or(Error::ZeroCount(zeros.len()))?;
    let amplitude = -x2.deriv;
    let record = Normalization {
        amplitude,
        shift: x2.theta,
        time_scale: amplitude,
    };
    Ok((omega0.shifted(x2.theta).scaled(R::one() / amplitude), record))
}
