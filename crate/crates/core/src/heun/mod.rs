//! Generalized eigenfunctions of the linearized operator and their local
//! structure near the singular points of the associated Heun equation.

mod connection;
mod indicial;
mod recursion;
mod residual;

pub use connection::{
    energy_log_growth, fit_connection, tail_exponent, ConnectionFit, ConnectionOptions, Side,
};
pub use indicial::{indicial_exponents, IndicialData, SingularPoint};
pub use recursion::{eigen_recursion, EigenfunctionSeries};
pub use residual::{circle_samples, heun_coefficients, heun_operator, heun_residual};
