use serde::Serialize;

use crate::dynamics::model::{Model, ModelSpec, SpectralFilter};
use crate::error::{Error, Result};
use crate::invariants::{orbit_invariants, OrbitInvariants};
use crate::scalar::Real;
use crate::spectral::{biot_savart, hilbert, quotient_y, m_multiplier, sobolev, Gauge, RealCircleField};

#[derive(Clone, Debug)]
pub struct SimConfig<R> {
    pub model: ModelSpec<R>,
    pub max_mode: usize,
    pub dt: R,
    pub t_final: R,
    pub dealias: bool,
    pub record_every: usize,
    /// Exponent of the weighted norm recorded in each row.
    pub gamma: R,
    /// Perturbation size of the initial data; carried for reporting only.
    pub epsilon: R,
    /// Sup norm at which the run is declared blown up.
    pub sup_ceiling: R,
    /// Keep a snapshot every this many records (0 keeps none).
    pub snapshot_every: usize,
    /// Compute orbit invariants at each record.
    pub track_invariants: bool,
    /// Optional damping of the highest modes after each step.
    pub filter: Option<SpectralFilter<R>>,
}

impl<R: Real> SimConfig<R> {
    pub fn new(model: ModelSpec<R>, max_mode: usize, dt: R, t_final: R) -> Self {
        Self {
            model,
            max_mode,
            dt,
            t_final,
            dealias: true,
            record_every: 100,
            gamma: R::lit(1.75),
            epsilon: R::zero(),
            sup_ceiling: R::lit(1e8),
            snapshot_every: 0,
            track_invariants: false,
            filter: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.dt > R::zero()) {
            return Err(Error::Parameter("dt must be positive".into()));
        }
        if !(self.t_final >= R::zero()) {
            return Err(Error::Parameter("t_final must be nonnegative".into()));
        }
        if self.max_mode < 4 {
            return Err(Error::Parameter("max mode must be at least 4".into()));
        }
        if self.record_every == 0 {
            return Err(Error::Parameter("record_every must be positive".into()));
        }
        Ok(())
    }

    /// Largest step allowed by the advective guard for a given velocity bound.
    pub fn stable_dt(&self, velocity_sup: R) -> R {
        R::lit(0.5) / (velocity_sup.max(R::one()) * R::of(self.max_mode))
    }
}

/// Diagnostics at one recorded time.
#[derive(Clone, Debug, Serialize)]
pub struct TimeSeriesRecord<R> {
    pub t: R,
    pub h_half: R,
    pub h_one: R,
    pub h_32: R,
    pub h_two: R,
    /// Weighted norm modulo `span{1, cos θ, sin θ}`.
    pub y0: R,
    pub m_mult: R,
    pub sup: R,
    /// `∫₀ᵗ ‖ω‖_∞`.
    pub bkm: R,
    /// `∫ ω dθ`.
    pub mean: R,
    /// Slope of the gauged velocity at its marked point.
    pub b_gauge: R,
    #[serde(skip)]
    pub invariants: Option<OrbitInvariants<R>>,
}

pub const CSV_COLUMNS: [&str; 11] = [
    "t", "h_half", "h_one", "h_32", "h_two", "y0", "m_mult", "sup", "bkm", "mean", "b_gauge",
];

impl<R: Real> TimeSeriesRecord<R> {
    pub fn row(&self) -> [R; 11] {
        [
            self.t, self.h_half, self.h_one, self.h_32, self.h_two, self.y0, self.m_mult,
            self.sup, self.bkm, self.mean, self.b_gauge,
        ]
    }
}

#[derive(Debug)]
pub struct SimOutput<R> {
    pub records: Vec<TimeSeriesRecord<R>>,
    pub snapshots: Vec<(R, RealCircleField<R>)>,
    pub last: RealCircleField<R>,
    /// Set when the run stopped early; records up to that point are kept.
    pub failure: Option<Error>,
}

fn velocity_sup<R: Real>(model: &mut Model<R>, omega: &RealCircleField<R>) -> Result<R> {
    let u = match model.spec().clone() {
        ModelSpec::Clm => hilbert(omega),
        ModelSpec::DeGregorio { gauge } | ModelSpec::DeGregorioMean { gauge, .. } => {
            biot_savart(omega, gauge)
        }
        ModelSpec::Transport(b) => b,
    };
    model.grid_sup(&u.resized(model.max_mode()))
}

fn record<R: Real>(
    cfg: &SimConfig<R>,
    t: R,
    omega: &RealCircleField<R>,
    sup: R,
    bkm: R,
) -> TimeSeriesRecord<R> {
    let marked = match cfg.model.gauge() {
        Some(Gauge::PointZero(theta)) => theta,
        _ => R::zero(),
    };
    let y0 = quotient_y(omega, cfg.gamma).unwrap_or_else(|_| R::nan());
    let invariants = if cfg.track_invariants {
        orbit_invariants(omega).ok()
    } else {
        None
    };
    TimeSeriesRecord {
        t,
        h_half: sobolev(omega, R::lit(0.5)),
        h_one: sobolev(omega, R::one()),
        h_32: sobolev(omega, R::lit(1.5)),
        h_two: sobolev(omega, R::lit(2.0)),
        y0,
        m_mult: m_multiplier(omega),
        sup,
        bkm,
        mean: omega.integral(),
        b_gauge: hilbert(omega).value_at(marked),
        invariants,
    }
}

/// Integrates from `omega0` to `t_final` with fixed RK4 steps.
pub fn simulate<R: Real>(cfg: &SimConfig<R>, omega0: &RealCircleField<R>) -> Result<SimOutput<R>> {
    cfg.validate()?;
    if omega0.max_mode() > cfg.max_mode
        && omega0.positive()[cfg.max_mode..].iter().any(|c| c.norm() > R::zero())
    {
        return Err(Error::Parameter(format!(
            "initial data has modes above {}",
            cfg.max_mode
        )));
    }
    let mut model = Model::new(cfg.model.clone(), cfg.max_mode, cfg.dealias);
    let mut omega = omega0.resized(cfg.max_mode);
    model.rhs(&omega)?;

    let usup = velocity_sup(&mut model, &omega)?;
    let guard = cfg.stable_dt(usup);
    if cfg.dt > guard {
        log::warn!(
            "dt = {} exceeds the advective guard {} for N = {}",
            cfg.dt,
            guard,
            cfg.max_mode
        );
    }

    let steps = (cfg.t_final / cfg.dt).round().to_usize().unwrap_or(0);
    let mut sup = model.grid_sup(&omega)?;
    let mut bkm = R::zero();
    let mut records = vec![record(cfg, R::zero(), &omega, sup, bkm)];
    let mut snapshots = Vec::new();
    if cfg.snapshot_every > 0 {
        snapshots.push((R::zero(), omega.clone()));
    }
    let mut failure = None;
    for step in 1..=steps {
        let t = cfg.dt * R::of(step);
        let next = match model.step_rk4(&omega, cfg.dt) {
            Ok(next) => match &cfg.filter {
                Some(filter) => filter.apply(&next),
                None => next,
            },
            Err(e) => {
                failure = Some(e);
                break;
            }
        };
        let next_sup = if next.is_finite() {
            model.grid_sup(&next)?
        } else {
            R::infinity()
        };
        if !next_sup.is_finite() || next_sup > cfg.sup_ceiling {
            failure = Some(Error::BlowUp {
                step,
                t: t.as_f64(),
                sup: next_sup.as_f64(),
            });
            break;
        }
        bkm += cfg.dt * (sup + next_sup) / R::lit(2.0);
        sup = next_sup;
        omega = next;
        if step % cfg.record_every == 0 || step == steps {
            records.push(record(cfg, t, &omega, sup, bkm));
            if cfg.snapshot_every > 0 && (records.len() - 1) % cfg.snapshot_every == 0 {
                snapshots.push((t, omega.clone()));
            }
        }
    }
    Ok(SimOutput {
        records,
        snapshots,
        last: omega,
        failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::Trig;

    #[test]
    fn equilibrium_run_is_stationary() {
        let f = RealCircleField::<f64>::from_trig(8, &[Trig::Sin(1, -1.0)]).unwrap();
        let mut cfg = SimConfig::new(ModelSpec::dg(), 8, 0.01, 0.5);
        cfg.record_every = 10;
        let out = simulate(&cfg, &f).unwrap();
        assert!(out.failure.is_none());
        assert_eq!(out.records.len(), 6);
        assert!((&out.last - &f).coeff_scale() < 1e-14);
        let last = out.records.last().unwrap();
        assert!((last.t - 0.5).abs() < 1e-12);
        assert!(last.bkm <= 0.5 + 1e-12 && last.bkm > 0.49);
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let f = RealCircleField::<f64>::from_trig(8, &[Trig::Sin(1, -1.0)]).unwrap();
        let cfg = SimConfig::new(ModelSpec::dg(), 8, 0.0, 1.0);
        assert!(simulate(&cfg, &f).is_err());
        let cfg = SimConfig::new(ModelSpec::dg(), 2, 0.1, 1.0);
        assert!(simulate(&cfg, &f).is_err());
    }

    #[test]
    fn blow_up_keeps_partial_series() {
        let f = RealCircleField::from_trig(16, &[Trig::Cos(1, 1.0)]).unwrap();
        let mut cfg = SimConfig::new(ModelSpec::Clm, 16, 0.01, 3.0);
        cfg.sup_ceiling = 10.0;
        cfg.record_every = 1;
        let out = simulate(&cfg, &f).unwrap();
        assert!(matches!(out.failure, Some(Error::BlowUp { .. })));
        assert!(out.records.len() > 10);
        let bkm: Vec<f64> = out.records.iter().map(|r| r.bkm).collect();
        assert!(bkm.windows(2).all(|w| w[1] >= w[0]));
    }
}
