use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linear_ops::tridiagonal::ModeVector;
use crate::scalar::Real;
use crate::spectral::{biot_savart, Gauge, RealCircleField};

/// `cos θ · f`, exact in coefficients (one extra mode).
pub fn times_cos<R: Real>(f: &RealCircleField<R>) -> RealCircleField<R> {
    let n = f.max_mode() + 1;
    let mut out = RealCircleField::zeros(n);
    for k in 0..=n as isize {
        out.set(k, (f.coeff(k - 1) + f.coeff(k + 1)) / R::lit(2.0));
    }
    out
}

/// `sin θ · f`, exact in coefficients (one extra mode).
pub fn times_sin<R: Real>(f: &RealCircleField<R>) -> RealCircleField<R> {
    let n = f.max_mode() + 1;
    let mut out = RealCircleField::zeros(n);
    let two_i = Complex::new(R::zero(), R::lit(2.0));
    for k in 0..=n as isize {
        out.set(k, (f.coeff(k - 1) - f.coeff(k + 1)) / two_i);
    }
    out
}

/// Linearized operator on a real field, also defined on constants:
/// `cos θ (η + v) - sin θ (η + v)_θ` with `v` the mean-zero velocity of `η`.
pub fn apply_l_extended<R: Real>(eta: &RealCircleField<R>) -> RealCircleField<R> {
    let w = eta + &biot_savart(eta, Gauge::MeanZero);
    &times_cos(&w) - &times_sin(&w.derivative())
}

/// Linearized operator on a zero-mean real field.
pub fn apply_l_physical<R: Real>(eta: &RealCircleField<R>) -> Result<RealCircleField<R>> {
    let mean = eta.mean_coeff();
    if mean.abs() > R::lit(1e-12) * eta.coeff_scale().max(R::one()) {
        return Err(Error::NonzeroMean {
            mean: mean.as_f64(),
        });
    }
    Ok(apply_l_extended(eta))
}

/// `Kη = cos θ · v`.
pub fn apply_k<R: Real>(eta: &RealCircleField<R>) -> RealCircleField<R> {
    times_cos(&biot_savart(eta, Gauge::MeanZero))
}

/// `Mf = -sin θ f_θ`.
pub fn apply_m_physical<R: Real>(f: &RealCircleField<R>) -> RealCircleField<R> {
    -&times_sin(&f.derivative())
}

/// Real field `2 Re Σ η_k e^{ikθ}` with zero mean.
pub fn lift<R: Real>(eta: &ModeVector<R>) -> RealCircleField<R> {
    RealCircleField::from_positive(R::zero(), eta.entries())
}

/// Positive-mode part of a real field.
pub fn restrict<R: Real>(f: &RealCircleField<R>, k_max: usize) -> ModeVector<R> {
    ModeVector::from_entries((1..=k_max).map(|k| f.coeff(k as isize)).collect())
}
