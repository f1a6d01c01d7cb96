//! Zeros, orbit invariants and equilibrium diagnostics.

pub mod drift;
pub mod equilibrium;
pub mod orbit;
pub mod zeros;

pub use drift::{drift_report, DriftReport};
pub use equilibrium::{equilibrium, fit_equilibrium, predict_amplitudes, EquilibriumFit};
pub use orbit::{orbit_invariants, principal_value, OrbitInvariants};
pub use zeros::{find_zeros, find_zeros_with, wrap_angle, ZeroPoint, DEGENERACY_TOL};
