use crate::dynamics::{exact_pushforward, Resampled, SpectralFilter};
use crate::error::{Error, Result};
use crate::linear_ops::tridiagonal::{conserved_energy, ModeVector, TridiagonalCoeffs};
use crate::scalar::{Coefficient, Real};
use crate::spectral::RealCircleField;

/// Settings for integrating `η̇ = Lη` in the holomorphic sector.
#[derive(Clone, Debug)]
pub struct LinearConfig<R> {
    pub dt: R,
    pub t_final: R,
    /// Adds the rank-one term `-cos θ · v(0, t)` that keeps `η(0, t) = 0`.
    pub gauge_term: bool,
    /// Keep every this many steps.
    pub sample_every: usize,
    /// Optional damping of the highest modes after each step.
    pub absorber: Option<SpectralFilter<R>>,
}

impl<R: Real> LinearConfig<R> {
    pub fn new(dt: R, t_final: R) -> Self {
        let per_unit = (R::one() / dt).round().to_usize().unwrap_or(1).max(1);
        Self {
            dt,
            t_final,
            gauge_term: false,
            sample_every: (per_unit / 10).max(1),
            absorber: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct LinearTrajectory<R> {
    pub times: Vec<R>,
    pub states: Vec<ModeVector<R>>,
    /// Conserved energy of each kept state.
    pub energy: Vec<R>,
    /// Largest fraction of the energy seen above `0.9·K`.
    pub max_tail_fraction: R,
}

impl<R: Real> LinearTrajectory<R> {
    pub fn last(&self) -> &ModeVector<R> {
        self.states.last().expect("trajectory is never empty")
    }
}

/// Tail fraction above which a truncation warning is logged.
pub const TRUNCATION_TOLERANCE: f64 = 1e-10;

fn tail_fraction<R: Real>(eta: &ModeVector<R>) -> R {
    let total = conserved_energy(eta);
    if total == R::zero() {
        return R::zero();
    }
    let start = (eta.k_max() * 9) / 10;
    let tail: R = (start.max(2)..=eta.k_max())
        .map(|k| {
            let kk = R::of(k);
            (kk - R::one()) * (kk - R::one()) * (kk + R::one()) * eta.get(k).norm_sqr()
        })
        .sum();
    tail / total
}

/// Velocity of the lifted field at `θ = 0`.
pub fn velocity_at_zero<R: Real>(eta: &ModeVector<R>) -> R {
    let s: R = (1..=eta.k_max()).map(|k| eta.get(k).re / R::of(k)).sum();
    -R::lit(2.0) * s
}

struct LinearSystem<R> {
    a: Vec<R>,
    b: Vec<R>,
    gauge_term: bool,
}

impl<R: Real + Coefficient> LinearSystem<R> {
    fn new(k_max: usize, gauge_term: bool) -> Self {
        let c = TridiagonalCoeffs::<R>::linearized(k_max);
        Self {
            a: (0..=k_max + 1).map(|k| c.a(k)).collect(),
            b: (0..=k_max + 1).map(|k| c.b(k)).collect(),
            gauge_term,
        }
    }

    fn rhs(&self, eta: &ModeVector<R>) -> ModeVector<R> {
        let n = eta.k_max();
        let mut out = ModeVector::zeros(n);
        for k in 1..=n {
            let mut v = eta.get(k + 1) * self.a[k + 1];
            if k >= 2 {
                v = v + eta.get(k - 1) * self.b[k - 1];
            }
            out.set(k, v);
        }
        if self.gauge_term && n >= 1 {
            let v0 = velocity_at_zero(eta);
            let c = out.get(1);
            out.set(1, c - num_complex::Complex::new(v0 / R::lit(2.0), R::zero()));
        }
        out
    }

    fn step(&self, eta: &ModeVector<R>, dt: R) -> ModeVector<R> {
        let half = dt / R::lit(2.0);
        let k1 = self.rhs(eta);
        let k2 = self.rhs(&(eta + &k1.scaled(half)));
        let k3 = self.rhs(&(eta + &k2.scaled(half)));
        let k4 = self.rhs(&(eta + &k3.scaled(dt)));
        let sum = &(&k1 + &k4) + &(&k2 + &k3).scaled(R::lit(2.0));
        eta + &sum.scaled(dt / R::lit(6.0))
    }
}

/// Integrates with the default sampling and hard truncation at `K`.
pub fn evolve_linear<R: Real + Coefficient>(
    eta0: &ModeVector<R>,
    t: R,
    dt: R,
    gauge_term: bool,
) -> Result<LinearTrajectory<R>> {
    let mut cfg = LinearConfig::new(dt, t);
    cfg.gauge_term = gauge_term;
    evolve_linear_with(eta0, &cfg)
}

pub fn evolve_linear_with<R: Real + Coefficient>(
    eta0: &ModeVector<R>,
    cfg: &LinearConfig<R>,
) -> Result<LinearTrajectory<R>> {
    if !(cfg.dt > R::zero()) || cfg.sample_every == 0 {
        return Err(Error::Parameter("dt and sample_every must be positive".into()));
    }
    let k_max = eta0.k_max();
    let system = LinearSystem::new(k_max, cfg.gauge_term);
    let steps = (cfg.t_final / cfg.dt).round().to_usize().unwrap_or(0);
    let mut eta = eta0.clone();
    let mut out = LinearTrajectory {
        times: vec![R::zero()],
        states: vec![eta.clone()],
        energy: vec![conserved_energy(&eta)],
        max_tail_fraction: tail_fraction(&eta),
    };
    let mut warned = false;
    for step in 1..=steps {
        eta = system.step(&eta, cfg.dt);
        if let Some(filter) = &cfg.absorber {
            eta = ModeVector::from_entries(
                (1..=k_max)
                    .map(|k| eta.get(k) * filter.factor(k, k_max))
                    .collect(),
            );
        }
        if !eta.is_finite() {
            return Err(Error::BlowUp {
                step,
                t: (cfg.dt * R::of(step)).as_f64(),
                sup: f64::INFINITY,
            });
        }
        if step % cfg.sample_every == 0 || step == steps {
            let tail = tail_fraction(&eta);
            out.max_tail_fraction = out.max_tail_fraction.max(tail);
            if !warned && cfg.absorber.is_none() && tail > R::lit(TRUNCATION_TOLERANCE) {
                log::warn!(
                    "linear evolution reached the truncation at t = {} (tail fraction {:e})",
                    cfg.dt * R::of(step),
                    tail
                );
                warned = true;
            }
            out.times.push(cfg.dt * R::of(step));
            out.energy.push(conserved_energy(&eta));
            out.states.push(eta.clone());
        }
    }
    Ok(out)
}

/// Exact flow of `ξ_t + sin θ ξ_θ - cos θ ξ = 0`, the holomorphic model part
/// of the linearized operator.
pub fn exact_evolve_l0<R: Real>(xi0: &RealCircleField<R>, t: R, max_mode: usize) -> Result<Resampled<R>> {
    exact_pushforward(xi0, t, max_mode)
}
