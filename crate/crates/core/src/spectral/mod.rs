//! Fourier representation of real fields on the circle.

pub mod field;
pub mod grid;
pub mod norms;
pub mod ops;
pub mod quadrature;

pub use field::{RealCircleField, Trig};
pub use grid::{from_samples, node, smooth_size, to_samples, GridSamples, SpectralGrid};
pub use norms::{
    m_multiplier, norm, quotient_y, sobolev, y0, FieldEvaluator, NormKind, NormValue,
    WeightedQuadrature,
};
pub use ops::{abs_derivative, biot_savart, hilbert, project_p0, Gauge};
pub use quadrature::GaussLegendre;
