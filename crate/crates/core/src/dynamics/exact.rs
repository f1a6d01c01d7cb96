use num_complex::Complex;

use crate::error::{Error, Result};
use crate::invariants::zeros::{refine_root, sign_change_brackets};
use crate::scalar::Real;
use crate::spectral::{
    from_samples, hilbert, smooth_size, FieldEvaluator, GridSamples, RealCircleField,
};

fn check_zero_mean<R: Real>(omega: &RealCircleField<R>) -> Result<()> {
    let mean = omega.mean_coeff();
    if mean.abs() > R::lit(1e-12) * omega.coeff_scale().max(R::one()) {
        return Err(Error::NonzeroMean {
            mean: mean.as_f64(),
        });
    }
    Ok(())
}

/// First time at which the holomorphic CLM solution from `omega0` leaves
/// every bounded set; `+∞` if it exists for all time.
///
/// With `f = ω + iHω` the model reduces to `ḟ = -(i/2) f²`, which blows up
/// where `f₀` meets the positive imaginary axis, at `t = 2/Im f₀`.
pub fn clm_blowup_time<R: Real>(omega0: &RealCircleField<R>) -> Result<R> {
    check_zero_mean(omega0)?;
    if omega0.coeff_scale() == R::zero() {
        return Ok(R::infinity());
    }
    let h = hilbert(omega0);
    let m = (4 * omega0.max_mode()).max(16);
    let mut best = R::infinity();
    for (a, b) in sign_change_brackets(|t| omega0.value_at(t), m) {
        let theta = refine_root(|t| omega0.evaluate(t), a, b);
        let im = h.value_at(theta);
        if im > R::zero() {
            best = best.min(R::lit(2.0) / im);
        }
    }
    Ok(best)
}

/// Exact CLM solution at one angle.
pub fn clm_exact_value<R: Real>(omega0: &RealCircleField<R>, h0: &RealCircleField<R>, t: R, theta: R) -> R {
    let f0 = Complex::new(omega0.value_at(theta), h0.value_at(theta));
    let denom = Complex::new(R::one(), R::zero()) + Complex::new(R::zero(), t / R::lit(2.0)) * f0;
    (f0 / denom).re
}

/// Exact CLM solution at time `t`, projected onto modes `|k| ≤ max_mode`.
pub fn clm_exact<R: Real>(omega0: &RealCircleField<R>, t: R, max_mode: usize) -> Result<RealCircleField<R>> {
    let blowup = clm_blowup_time(omega0)?;
    if t >= blowup {
        return Err(Error::BeyondBlowUp {
            t: t.as_f64(),
            blowup: blowup.as_f64(),
        });
    }
    if t == R::zero() {
        return Ok(omega0.resized(max_mode));
    }
    let h0 = hilbert(omega0);
    let m = smooth_size(4 * max_mode.max(omega0.max_mode()) + 1);
    let samples = GridSamples::from_fn(m, |theta| clm_exact_value(omega0, &h0, t, theta));
    from_samples(&samples, max_mode)
}

/// Pointwise pushforward of a field along the Möbius flow of `sin θ ∂_θ`.
pub struct Pushforward<'a, R> {
    eval: FieldEvaluator<'a, R>,
    tau: R,
}

impl<'a, R: Real> Pushforward<'a, R> {
    pub fn new(field: &'a RealCircleField<R>, t: R) -> Self {
        Self {
            eval: FieldEvaluator::new(field),
            tau: (t / R::lit(2.0)).tanh(),
        }
    }

    pub fn value(&self, theta: R) -> R {
        let tau = self.tau;
        let one = Complex::new(R::one(), R::zero());
        let z = Complex::from_polar(R::one(), theta);
        // preimage under z ↦ (z - τ)/(1 - τz)
        let w = (z + tau) / (one + z * tau);
        let jac = (R::one() - tau * tau) / (one - w * tau).norm_sqr();
        jac * self.eval.value(w.arg())
    }
}

/// A field computed by resampling, with the fraction of its energy that
/// falls beyond the kept band.
#[derive(Clone, Debug)]
pub struct Resampled<R> {
    pub field: RealCircleField<R>,
    pub tail_fraction: R,
}

/// Tail fraction above which a resampled field is reported as unresolved.
pub const TAIL_TOLERANCE: f64 = 1e-24;

pub fn exact_pushforward<R: Real>(xi0: &RealCircleField<R>, t: R, max_mode: usize) -> Result<Resampled<R>> {
    if t == R::zero() {
        return Ok(Resampled {
            field: xi0.resized(max_mode),
            tail_fraction: R::zero(),
        });
    }
    let push = Pushforward::new(xi0, t);
    let wide = 2 * max_mode;
    let samples = GridSamples::from_fn(smooth_size(2 * wide + 1), |theta| push.value(theta));
    let full = from_samples(&samples, wide)?;
    let total = full.l2_norm_sq();
    let field = full.resized(max_mode);
    let tail_fraction = if total > R::zero() {
        (total - field.l2_norm_sq()).max(R::zero()) / total
    } else {
        R::zero()
    };
    if tail_fraction > R::lit(TAIL_TOLERANCE) {
        log::warn!(
            "pushforward at t = {t} is under-resolved with {max_mode} modes (tail fraction {tail_fraction:e})"
        );
    }
    Ok(Resampled {
        field,
        tail_fraction,
    })
}
