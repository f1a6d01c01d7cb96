use num_complex::Complex;

use crate::scalar::Real;
use crate::spectral::field::RealCircleField;

/// How the free additive constant of the velocity is fixed.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Gauge<R> {
    /// Velocity with zero mean.
    MeanZero,
    /// Velocity vanishing at the marked angle.
    PointZero(R),
}

impl<R: Real> Default for Gauge<R> {
    fn default() -> Self {
        Gauge::MeanZero
    }
}

/// Hilbert transform: multiplier `-i·sign(k)`.
pub fn hilbert<R: Real>(f: &RealCircleField<R>) -> RealCircleField<R> {
    f.map_modes(|k, c| {
        if k == 0 {
            Complex::default()
        } else {
            Complex::new(c.im, -c.re)
        }
    })
}

/// The multiplier `|k|`, equal to `H∂θ`.
pub fn abs_derivative<R: Real>(f: &RealCircleField<R>) -> RealCircleField<R> {
    f.map_modes(|k, c| c * R::of(k.unsigned_abs()))
}

/// Velocity `u` with `u_θ = Hω`, the constant fixed by `gauge`.
pub fn biot_savart<R: Real>(omega: &RealCircleField<R>, gauge: Gauge<R>) -> RealCircleField<R> {
    let mut u = omega.map_modes(|k, c| {
        if k == 0 {
            Complex::default()
        } else {
            -c / R::of(k.unsigned_abs())
        }
    });
    if let Gauge::PointZero(theta) = gauge {
        let at = u.value_at(theta);
        u.set(0, Complex::new(-at, R::zero()));
    }
    u
}

/// Removes value and slope at 0: `f - f(0) - f'(0) sin θ`.
pub fn project_p0<R: Real>(f: &RealCircleField<R>) -> RealCircleField<R> {
    let n = f.max_mode().max(1);
    let mut g = f.resized(n);
    let (value, slope) = f.evaluate(R::zero());
    let c0 = g.coeff(0);
    g.set(0, c0 - Complex::new(value, R::zero()));
    let c1 = g.coeff(1);
    // slope·sin θ has first coefficient -i·slope/2
    g.set(1, c1 - Complex::new(R::zero(), -slope / R::lit(2.0)));
    g
}
