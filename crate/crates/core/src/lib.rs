//! Pseudo-spectral tools for one-dimensional vorticity models on the circle.

pub mod dynamics;
pub mod error;
pub mod heun;
pub mod invariants;
pub mod io;
pub mod linear_ops;
pub mod scalar;
pub mod spectral;

pub use error::{Error, Result};
pub use scalar::{Coefficient, Real};

/// Double-precision field.
pub type Field = spectral::RealCircleField<f64>;
/// Single-precision field.
pub type Field32 = spectral::RealCircleField<f32>;
/// Double-precision mode vector `(η_1, …, η_K)`.
pub type Modes = linear_ops::ModeVector<f64>;
/// Exact-rational mode vector.
pub type ExactModes = linear_ops::ModeVector<num_rational::Ratio<i64>>;
/// Double-precision operator coefficients.
pub type Coeffs = linear_ops::TridiagonalCoeffs<f64>;
/// Exact-rational operator coefficients.
pub type ExactCoeffs = linear_ops::TridiagonalCoeffs<num_rational::Ratio<i64>>;
pub type Series = heun::EigenfunctionSeries<f64>;
pub type Config = dynamics::SimConfig<f64>;
