use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// A band-limited real function on the circle, stored as its Fourier
/// coefficients `c_k = (1/2π)∫ f(θ) e^{-ikθ} dθ` for `-N ≤ k ≤ N`.
#[derive(Clone, Debug, PartialEq)]
pub struct RealCircleField<R> {
    max_mode: usize,
    coeffs: Vec<Complex<R>>,
}

/// One trigonometric term `amp·cos(mθ)` or `amp·sin(mθ)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Trig<R> {
    Cos(usize, R),
    Sin(usize, R),
}

impl<R: Real> RealCircleField<R> {
    pub fn zeros(max_mode: usize) -> Self {
        Self {
            max_mode,
            coeffs: vec![Complex::new(R::zero(), R::zero()); 2 * max_mode + 1],
        }
    }

    /// Builds a field from the full coefficient list `k = -N..=N`.
    ///
    /// The list must be Hermitian up to rounding; it is symmetrized exactly.
    pub fn from_coeffs(coeffs: Vec<Complex<R>>) -> Result<Self> {
        if coeffs.len().is_multiple_of(2) {
            return Err(Error::Format(format!(
                "coefficient list has even length {}",
                coeffs.len()
            )));
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::Format("non-finite coefficient".into()));
        }
        let n = coeffs.len() / 2;
        let scale = coeffs.iter().map(|c| c.norm()).fold(R::zero(), R::max);
        let tol = R::lit(1e-10) * scale.max(R::min_positive_value());
        for k in 0..=n {
            if (coeffs[n + k] - coeffs[n - k].conj()).norm() > tol {
                return Err(Error::Format(format!("coefficients not Hermitian at k = {k}")));
            }
        }
        let mut field = Self { max_mode: n, coeffs };
        field.symmetrize();
        Ok(field)
    }

    /// Builds a field from the mean coefficient and the coefficients `k = 1..=N`.
    pub fn from_positive(mean: R, positive: &[Complex<R>]) -> Self {
        let mut field = Self::zeros(positive.len());
        field.set(0, Complex::new(mean, R::zero()));
        for (i, &c) in positive.iter().enumerate() {
            field.set(i as isize + 1, c);
        }
        field
    }

    pub fn constant(max_mode: usize, value: R) -> Self {
        let mut field = Self::zeros(max_mode);
        field.set(0, Complex::new(value, R::zero()));
        field
    }

    pub fn from_trig(max_mode: usize, terms: &[Trig<R>]) -> Result<Self> {
        let mut field = Self::zeros(max_mode);
        for &term in terms {
            let (m, c) = match term {
                Trig::Cos(m, a) => (m, Complex::new(a / R::lit(2.0), R::zero())),
                Trig::Sin(m, a) => (m, Complex::new(R::zero(), -a / R::lit(2.0))),
            };
            if m > max_mode {
                return Err(Error::Parameter(format!(
                    "mode {m} exceeds the maximum mode {max_mode}"
                )));
            }
            if m == 0 {
                let re = match term {
                    Trig::Cos(_, a) => a,
                    Trig::Sin(..) => R::zero(),
                };
                field.coeffs[max_mode].re += re;
            } else {
                let cur = field.coeff(m as isize);
                field.set(m as isize, cur + c);
            }
        }
        Ok(field)
    }

    pub fn max_mode(&self) -> usize {
        self.max_mode
    }

    /// Coefficients for `k = -N..=N`.
    pub fn coeffs(&self) -> &[Complex<R>] {
        &self.coeffs
    }

    /// The `k`-th coefficient, zero outside the stored band.
    #[inline]
    pub fn coeff(&self, k: isize) -> Complex<R> {
        let n = self.max_mode as isize;
        if k.abs() > n {
            Complex::new(R::zero(), R::zero())
        } else {
            self.coeffs[(k + n) as usize]
        }
    }

    /// Sets `c_k` and `c_{-k}` consistently.
    pub fn set(&mut self, k: isize, value: Complex<R>) {
        let n = self.max_mode as isize;
        assert!(k.abs() <= n, "mode {k} outside band {n}");
        if k == 0 {
            self.coeffs[n as usize] = Complex::new(value.re, R::zero());
        } else {
            self.coeffs[(n + k) as usize] = value;
            self.coeffs[(n - k) as usize] = value.conj();
        }
    }

    /// The mean coefficient `c_0`.
    pub fn mean_coeff(&self) -> R {
        self.coeffs[self.max_mode].re
    }

    /// `∫ f dθ` over the circle.
    pub fn integral(&self) -> R {
        R::TAU() * self.mean_coeff()
    }

    /// Coefficients `k = 1..=N`.
    pub fn positive(&self) -> &[Complex<R>] {
        &self.coeffs[self.max_mode + 1..]
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }

    /// Truncates or zero-pads to a new maximum mode.
    pub fn resized(&self, max_mode: usize) -> Self {
        let mut out = Self::zeros(max_mode);
        let m = max_mode.min(self.max_mode) as isize;
        for k in -m..=m {
            out.coeffs[(k + max_mode as isize) as usize] = self.coeff(k);
        }
        out
    }

    /// Applies `c_k ↦ g(k, c_k)` for `k ≥ 0` and mirrors to negative modes.
    pub fn map_modes(&self, mut g: impl FnMut(isize, Complex<R>) -> Complex<R>) -> Self {
        let mut out = Self::zeros(self.max_mode);
        for k in 0..=self.max_mode as isize {
            out.set(k, g(k, self.coeff(k)));
        }
        out
    }

    pub fn derivative(&self) -> Self {
        self.map_modes(|k, c| c * Complex::new(R::zero(), R::of_i(k as i64)))
    }

    /// `θ ↦ f(θ + shift)`.
    pub fn shifted(&self, shift: R) -> Self {
        self.map_modes(|k, c| c * Complex::from_polar(R::one(), R::of_i(k as i64) * shift))
    }

    pub fn scaled(&self, s: R) -> Self {
        Self {
            max_mode: self.max_mode,
            coeffs: self.coeffs.iter().map(|&c| c * s).collect(),
        }
    }

    /// `∫ |f|² dθ` from the coefficients.
    pub fn l2_norm_sq(&self) -> R {
        R::TAU() * self.coeffs.iter().map(|c| c.norm_sqr()).sum::<R>()
    }

    /// Largest coefficient magnitude, used as a scale for tolerances.
    pub fn coeff_scale(&self) -> R {
        self.coeffs.iter().map(|c| c.norm()).fold(R::zero(), R::max)
    }

    /// Value and derivative at `theta` by direct series summation.
    pub fn evaluate(&self, theta: R) -> (R, R) {
        let mut value = R::zero();
        let mut slope = R::zero();
        let rot = Complex::from_polar(R::one(), theta);
        let mut e = rot;
        for (i, &c) in self.positive().iter().enumerate() {
            let k = i + 1;
            if k % 32 == 0 {
                e = Complex::from_polar(R::one(), R::of(k) * theta);
            }
            let t = c * e;
            value += t.re;
            slope -= R::of(k) * t.im;
            e = e * rot;
        }
        let two = R::lit(2.0);
        (self.mean_coeff() + two * value, two * slope)
    }

    pub fn value_at(&self, theta: R) -> R {
        self.evaluate(theta).0
    }

    /// Taylor coefficients `f^{(n)}(0)/n!` for `n < order`.
    pub fn taylor_at_zero(&self, order: usize) -> Vec<R> {
        let mut out = vec![R::zero(); order];
        if order == 0 {
            return out;
        }
        out[0] = self.mean_coeff();
        for (i, &c) in self.positive().iter().enumerate() {
            let k = R::of(i + 1);
            // term = c (ik)^n / n!
            let mut term = c;
            out[0] += R::lit(2.0) * term.re;
            for (n, slot) in out.iter_mut().enumerate().skip(1) {
                term = term * Complex::new(R::zero(), k) / R::of(n);
                *slot += R::lit(2.0) * term.re;
            }
        }
        out
    }

    fn symmetrize(&mut self) {
        let n = self.max_mode;
        self.coeffs[n].im = R::zero();
        for k in 1..=n {
            let avg = (self.coeffs[n + k] + self.coeffs[n - k].conj()) / R::lit(2.0);
            self.coeffs[n + k] = avg;
            self.coeffs[n - k] = avg.conj();
        }
    }

    fn zip_with(&self, other: &Self, op: impl Fn(Complex<R>, Complex<R>) -> Complex<R>) -> Self {
        let n = self.max_mode.max(other.max_mode);
        let mut out = Self::zeros(n);
        for k in -(n as isize)..=n as isize {
            out.coeffs[(k + n as isize) as usize] = op(self.coeff(k), other.coeff(k));
        }
        out
    }
}

impl<R: Real> Add for &RealCircleField<R> {
    type Output = RealCircleField<R>;
    fn add(self, rhs: Self) -> RealCircleField<R> {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<R: Real> Sub for &RealCircleField<R> {
    type Output = RealCircleField<R>;
    fn sub(self, rhs: Self) -> RealCircleField<R> {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl<R: Real> Mul<R> for &RealCircleField<R> {
    type Output = RealCircleField<R>;
    fn mul(self, s: R) -> RealCircleField<R> {
        self.scaled(s)
    }
}

impl<R: Real> Neg for &RealCircleField<R> {
    type Output = RealCircleField<R>;
    fn neg(self) -> RealCircleField<R> {
        self.scaled(-R::one())
    }
}

impl<R: Real> Add for RealCircleField<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<R: Real> Sub for RealCircleField<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}
