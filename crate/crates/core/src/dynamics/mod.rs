//! Nonlinear models, time integration and exact solutions.

pub mod exact;
pub mod model;
pub mod normalize;
pub mod simulate;

pub use exact::{
    clm_blowup_time, clm_exact, clm_exact_value, exact_pushforward, Pushforward, Resampled,
    TAIL_TOLERANCE,
};
pub use model::{product_grid_size, rhs, step_rk4, Model, ModelSpec, SpectralFilter};
pub use normalize::{normalize_initial_data, Normalization};
pub use simulate::{simulate, SimConfig, SimOutput, TimeSeriesRecord, CSV_COLUMNS};
