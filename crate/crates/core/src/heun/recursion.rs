use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linear_ops::{ModeVector, TridiagonalCoeffs};
use crate::scalar::{Coefficient, Real};

/// Truncated coefficients of a formal solution of `Lη = λη`, normalized by
/// `η₂ = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenfunctionSeries<T> {
    pub lambda: Complex<T>,
    pub coeffs: ModeVector<T>,
}

impl<T: Coefficient> EigenfunctionSeries<T> {
    pub fn k_max(&self) -> usize {
        self.coeffs.k_max()
    }

    pub fn get(&self, k: usize) -> Complex<T> {
        self.coeffs.get(k)
    }
}

/// Runs `η_{k+1} = (λη_k - B_{k-1}η_{k-1}) / A_{k+1}` from `η₂ = 1`,
/// `η₁ = A₂/λ`, up to `η_K`.
pub fn eigen_recursion<T: Coefficient>(lambda: Complex<T>, k_max: usize) -> Result<EigenfunctionSeries<T>> {
    if lambda.is_zero() {
        return Err(Error::ZeroSpectralParameter);
    }
    if k_max < 2 {
        return Err(Error::Parameter("truncation must keep at least two modes".into()));
    }
    let c = TridiagonalCoeffs::<T>::linearized(k_max);
    let one = Complex::new(T::one(), T::zero());
    let mut eta = ModeVector::zeros(k_max);
    eta.set(2, one);
    eta.set(1, Complex::new(c.a(2), T::zero()) / lambda.clone());
    for k in 2..k_max {
        let next = (lambda.clone() * eta.get(k) - eta.get(k - 1) * c.b(k - 1)) / c.a(k + 1);
        eta.set(k + 1, next);
    }
    Ok(EigenfunctionSeries {
        lambda,
        coeffs: eta,
    })
}

impl<R: Real + Coefficient> EigenfunctionSeries<R> {
    /// `Φ(z) = Σ η_k z^k`.
    pub fn evaluate(&self, z: Complex<R>) -> Complex<R> {
        let mut acc = Complex::new(R::zero(), R::zero());
        for k in (1..=self.k_max()).rev() {
            acc = acc * z + self.get(k);
        }
        acc * z
    }

    /// `Σ_{k≤K} k³|η_k|²` for each requested `K`.
    pub fn sobolev_partial_sums(&self, cutoffs: &[usize]) -> Vec<R> {
        let mut out = Vec::with_capacity(cutoffs.len());
        let mut acc = R::zero();
        let mut k = 0;
        for &cut in cutoffs {
            while k < cut.min(self.k_max()) {
                k += 1;
                acc += R::of(k).powi(3) * self.get(k).norm_sqr();
            }
            out.push(acc);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type Q = Ratio<i64>;

    #[test]
    fn hand_values_at_i() {
        let i = Complex::new(Q::from_integer(0), Q::from_integer(1));
        let s = eigen_recursion(i, 6).unwrap();
        assert_eq!(s.get(1), Complex::new(Q::from_integer(0), Q::new(-3, 4)));
        assert_eq!(s.get(2), Complex::new(Q::from_integer(1), Q::from_integer(0)));
        assert_eq!(s.get(3), Complex::new(Q::from_integer(0), Q::new(3, 4)));
        assert_eq!(s.get(4), Complex::new(Q::new(-4, 15), Q::from_integer(0)));
    }

    #[test]
    fn float_matches_exact() {
        let s = eigen_recursion(Complex::new(0.0, 1.0), 6).unwrap();
        assert!((s.get(1) - Complex::new(0.0, -0.75)).norm() < 1e-16);
        assert!((s.get(4) - Complex::new(-4.0 / 15.0, 0.0)).norm() < 1e-16);
    }

    #[test]
    fn zero_lambda_is_refused() {
        assert!(matches!(
            eigen_recursion(Complex::new(0.0, 0.0), 10),
            Err(Error::ZeroSpectralParameter)
        ));
    }
}
