use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("a grid of {nodes} nodes aliases modes up to {max_mode} (needs at least {})", 2 * .max_mode + 1)]
    Aliasing { nodes: usize, max_mode: usize },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("field has nonzero mean ({mean:e}); the model requires zero mean")]
    NonzeroMean { mean: f64 },

    #[error("solution blew up at step {step} (t = {t}, sup = {sup:e})")]
    BlowUp { step: usize, t: f64, sup: f64 },

    #[error("requested time {t} is not below the blow-up time {blowup}")]
    BeyondBlowUp { t: f64, blowup: f64 },

    #[error("degenerate zero at theta = {theta} (|derivative| = {deriv:e})")]
    DegenerateZero { theta: f64, deriv: f64 },

    #[error("expected exactly two nondegenerate zeros, found {0}")]
    ZeroCount(usize),

    #[error("field vanishes identically")]
    IdenticallyZero,

    #[error("spectral parameter lambda = 0 is the kernel direction")]
    ZeroSpectralParameter,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("malformed input: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
