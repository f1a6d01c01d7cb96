use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Singular points of `z(z²-1)F'' + (z² + 2λz - 3)F' + 2λF = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingularPoint {
    MinusOne,
    Zero,
    One,
    Infinity,
}

impl SingularPoint {
    /// Identifies a finite point; anything else is not singular.
    pub fn from_point<R: Real>(z: Complex<R>) -> Result<Self> {
        let tol = R::lit(1e-14);
        for (p, v) in [(Self::MinusOne, -1.0), (Self::Zero, 0.0), (Self::One, 1.0)] {
            if (z - Complex::new(R::lit(v), R::zero())).norm() <= tol {
                return Ok(p);
            }
        }
        Err(Error::Domain(format!("{z} is an ordinary point")))
    }

    fn location(self) -> Option<f64> {
        match self {
            Self::MinusOne => Some(-1.0),
            Self::Zero => Some(0.0),
            Self::One => Some(1.0),
            Self::Infinity => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IndicialData<R> {
    pub point: SingularPoint,
    pub exponents: [Complex<R>; 2],
    /// Equal exponents: the second local solution carries a logarithm.
    pub double_root: bool,
}

/// Roots of the indicial equation at a singular point.
pub fn indicial_exponents<R: Real>(point: SingularPoint, lambda: Complex<R>) -> IndicialData<R> {
    let zero = Complex::new(R::zero(), R::zero());
    let exponents = match point.location() {
        Some(z0) => {
            // r(r - 1) + αr = 0 with α the residue of the F' coefficient
            let z0 = R::lit(z0);
            let num = Complex::new(z0 * z0 - R::lit(3.0), R::zero()) + lambda * (R::lit(2.0) * z0);
            let alpha = num / (R::lit(3.0) * z0 * z0 - R::one());
            [zero, Complex::new(R::one(), R::zero()) - alpha]
        }
        // F ~ z^{-r}: r(r + 1) - p r + q = 0 with p = 1, q = 0
        None => [zero, zero],
    };
    IndicialData {
        point,
        exponents,
        double_root: exponents[0] == exponents[1],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponents_at_each_point() {
        let i = Complex::new(0.0, 1.0);
        let d = indicial_exponents(SingularPoint::One, i);
        assert_eq!(d.exponents[1], Complex::new(2.0, -1.0));
        let d = indicial_exponents(SingularPoint::MinusOne, i);
        assert_eq!(d.exponents[1], Complex::new(2.0, 1.0));
        let d = indicial_exponents(SingularPoint::Zero, Complex::new(0.3, -2.0));
        assert_eq!(d.exponents, [Complex::new(0.0, 0.0), Complex::new(-2.0, 0.0)]);
        let d = indicial_exponents(SingularPoint::Infinity, i);
        assert!(d.double_root);
    }

    #[test]
    fn ordinary_points_are_refused() {
        assert!(SingularPoint::from_point(Complex::new(0.5, 0.0)).is_err());
        assert_eq!(
            SingularPoint::from_point(Complex::new(-1.0, 0.0)).unwrap(),
            SingularPoint::MinusOne
        );
    }
}
