//! The linearized operator about the first-mode equilibrium and its model
//! relatives.

pub mod decay;
pub mod evolve;
pub mod physical;
pub mod strip;
pub mod tridiagonal;

pub use decay::{decay_rate_fit, DecayFit};
pub use evolve::{
    evolve_linear, evolve_linear_with, exact_evolve_l0, velocity_at_zero, LinearConfig,
    LinearTrajectory, TRUNCATION_TOLERANCE,
};
pub use physical::{
    apply_k, apply_l_extended, apply_l_physical, apply_m_physical, lift, restrict, times_cos,
    times_sin,
};
pub use strip::{exact_m_flow, gaussian_bump, strip_identity, StripIdentity, StripSynthesis};
pub use tridiagonal::{
    apply_tridiagonal, conserved_energy, ConservedForm, HamiltonianJ, ModeVector, OperatorTag,
    TridiagonalCoeffs,
};
