use num_complex::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::zeros::{find_zeros, wrap_angle};
use crate::scalar::Real;
use crate::spectral::{sobolev, RealCircleField};

/// Closest field of the form `A sin(θ - θ₀)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EquilibriumFit<R> {
    pub amplitude: R,
    pub phase: R,
    /// Sobolev distance from the field to the fitted equilibrium.
    pub residual: R,
}

impl<R: Real> EquilibriumFit<R> {
    pub fn field(&self, max_mode: usize) -> RealCircleField<R> {
        equilibrium(max_mode, self.amplitude, self.phase)
    }
}

/// `A sin(θ - θ₀)`.
pub fn equilibrium<R: Real>(max_mode: usize, amplitude: R, phase: R) -> RealCircleField<R> {
    let mut f = RealCircleField::zeros(max_mode.max(1));
    // A e^{-iθ₀} / (2i)
    let c = Complex::from_polar(amplitude, -phase) / Complex::new(R::zero(), R::lit(2.0));
    f.set(1, c);
    f
}

pub fn fit_equilibrium<R: Real>(omega: &RealCircleField<R>, s: R) -> EquilibriumFit<R> {
    let c = omega.coeff(1) * Complex::new(R::zero(), R::lit(2.0));
    let amplitude = c.norm();
    let phase = if amplitude == R::zero() {
        R::zero()
    } else {
        wrap_angle(-c.arg())
    };
    let mut rest = omega.clone();
    if omega.max_mode() >= 1 {
        rest.set(1, Complex::default());
    }
    EquilibriumFit {
        amplitude,
        phase,
        residual: sobolev(&rest, s),
    }
}

/// Predicted limiting amplitudes `(A⁺, A⁻) = (-ω'(x₂), ω'(x₁))` for a field
/// with two simple zeros, `x₁` increasing and `x₂` decreasing.
pub fn predict_amplitudes<R: Real>(omega: &RealCircleField<R>) -> Result<(R, R)> {
    let zeros = find_zeros(omega)?;
    if zeros.len() != 2 {
        return Err(Error::ZeroCount(zeros.len()));
    }
    let up = zeros.iter().find(|z| z.deriv > R::zero());
    let down = zeros.iter().find(|z| z.deriv < R::zero());
    match (up, down) {
        (Some(x1), Some(x2)) => Ok((-x2.deriv, x1.deriv)),
        _ => Err(Error::ZeroCount(zeros.len())),
    }
}
