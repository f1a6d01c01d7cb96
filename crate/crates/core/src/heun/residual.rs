use num_complex::Complex;

use crate::error::{Error, Result};
use crate::heun::recursion::EigenfunctionSeries;
use crate::scalar::{Coefficient, Real};

/// Taylor coefficients `F_j = -η_{j+1}/(j+1)` of the Heun-form unknown.
pub fn heun_coefficients<R: Real + Coefficient>(series: &EigenfunctionSeries<R>) -> Vec<Complex<R>> {
    (0..series.k_max())
        .map(|j| -series.get(j + 1) / R::of(j + 1))
        .collect()
}

/// Value, first and second derivative of a power series.
fn series_with_derivatives<R: Real>(c: &[Complex<R>], z: Complex<R>) -> [Complex<R>; 3] {
    let zero = Complex::new(R::zero(), R::zero());
    let (mut f, mut d1, mut d2) = (zero, zero, zero);
    for &a in c.iter().rev() {
        d2 = d2 * z + d1 * R::lit(2.0);
        d1 = d1 * z + f;
        f = f * z + a;
    }
    [f, d1, d2]
}

/// Residual of `z(z²-1)F'' + (z² + 2λz - 3)F' + 2λF` at one point.
pub fn heun_operator<R: Real>(c: &[Complex<R>], lambda: Complex<R>, z: Complex<R>) -> Complex<R> {
    let [f, d1, d2] = series_with_derivatives(c, z);
    let one = Complex::new(R::one(), R::zero());
    z * (z * z - one) * d2 + (z * z + lambda * z * R::lit(2.0) - one * R::lit(3.0)) * d1
        + lambda * f * R::lit(2.0)
}

/// Largest residual over the sample points, all of which must lie in the
/// open unit disc.
pub fn heun_residual<R: Real + Coefficient>(series: &EigenfunctionSeries<R>, samples: &[Complex<R>]) -> Result<R> {
    if let Some(z) = samples.iter().find(|z| z.norm() >= R::one()) {
        return Err(Error::Domain(format!("sample {z} is outside the unit disc")));
    }
    let c = heun_coefficients(series);
    Ok(samples
        .iter()
        .map(|&z| heun_operator(&c, series.lambda, z).norm())
        .fold(R::zero(), R::max))
}

/// `n` equispaced points on the circle `|z| = r`.
pub fn circle_samples<R: Real>(r: R, n: usize) -> Vec<Complex<R>> {
    (0..n)
        .map(|j| Complex::from_polar(r, R::TAU() * R::of(j) / R::of(n)))
        .collect()
}
