use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::spectral::field::{RealCircleField, Trig};
use crate::spectral::ops::project_p0;
use crate::spectral::quadrature::GaussLegendre;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum NormKind<R> {
    /// Homogeneous Sobolev norm of order `s`.
    Sobolev(R),
    /// Weighted L² norm with weight `|sin(θ/2)|^{-2γ}`.
    Y0(R),
    /// Multiplier `√((k²-1)(|k|+1))`.
    MMultiplier,
    /// Weighted norm modulo `span{1, cos θ, sin θ}`.
    QuotientY(R),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum NormValue<R> {
    Finite(R),
    Divergent,
}

impl<R: Real> NormValue<R> {
    pub fn finite(self) -> Option<R> {
        match self {
            NormValue::Finite(v) => Some(v),
            NormValue::Divergent => None,
        }
    }

    pub fn is_divergent(self) -> bool {
        matches!(self, NormValue::Divergent)
    }

    /// The value, with divergence mapped to `+∞`.
    pub fn or_infinity(self) -> R {
        self.finite().unwrap_or_else(R::infinity)
    }
}

pub fn norm<R: Real>(f: &RealCircleField<R>, kind: NormKind<R>) -> Result<NormValue<R>> {
    Ok(match kind {
        NormKind::Sobolev(s) => NormValue::Finite(sobolev(f, s)),
        NormKind::MMultiplier => NormValue::Finite(m_multiplier(f)),
        NormKind::Y0(gamma) => y0(f, gamma)?,
        NormKind::QuotientY(gamma) => NormValue::Finite(quotient_y(f, gamma)?),
    })
}

pub fn sobolev<R: Real>(f: &RealCircleField<R>, s: R) -> R {
    let two = R::lit(2.0);
    (two * f
        .positive()
        .iter()
        .enumerate()
        .map(|(i, c)| R::of(i + 1).powf(two * s) * c.norm_sqr())
        .sum::<R>())
    .sqrt()
}

pub fn m_multiplier<R: Real>(f: &RealCircleField<R>) -> R {
    let two = R::lit(2.0);
    let sum: R = f
        .positive()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let k = R::of(i + 1);
            (k * k - R::one()) * (k + R::one()) * c.norm_sqr()
        })
        .sum();
    // k = 0 carries weight (0 - 1)(0 + 1) = -1
    let total = two * sum - f.mean_coeff() * f.mean_coeff();
    total.max(R::zero()).sqrt()
}

fn check_gamma<R: Real>(gamma: R) -> Result<()> {
    if gamma > R::lit(1.5) && gamma < R::lit(2.0) {
        Ok(())
    } else {
        Err(Error::Parameter(format!(
            "weight exponent {gamma} must lie in (3/2, 2)"
        )))
    }
}

pub fn y0<R: Real>(f: &RealCircleField<R>, gamma: R) -> Result<NormValue<R>> {
    check_gamma(gamma)?;
    let eval = FieldEvaluator::new(f);
    let quad = WeightedQuadrature::new(gamma, f.max_mode());
    let [sq] = quad.integrate(|t| {
        let v = eval.value(t);
        [v * v]
    });
    Ok(match sq {
        NormValue::Finite(v) => NormValue::Finite(v.max(R::zero()).sqrt()),
        NormValue::Divergent => NormValue::Divergent,
    })
}

/// Weighted norm of `f` modulo `span{1, cos θ, sin θ}`.
pub fn quotient_y<R: Real>(f: &RealCircleField<R>, gamma: R) -> Result<R> {
    check_gamma(gamma)?;
    let g = project_p0(f);
    let h = RealCircleField::from_trig(1, &[Trig::Cos(0, R::one()), Trig::Cos(1, -R::one())])?;
    let (eg, eh) = (FieldEvaluator::new(&g), FieldEvaluator::new(&h));
    let quad = WeightedQuadrature::new(gamma, g.max_mode());
    let [gg, gh, hh] = quad.integrate(|t| {
        let (a, b) = (eg.value(t), eh.value(t));
        [a * a, a * b, b * b]
    });
    let not_integrable = || Error::Domain("projected field is not weighted-integrable".into());
    let (NormValue::Finite(gg), NormValue::Finite(gh), NormValue::Finite(hh)) = (gg, gh, hh) else {
        return Err(not_integrable());
    };
    let reduced = gg - gh * gh / hh;
    if reduced > R::lit(1e-6) * gg {
        return Ok(reduced.sqrt());
    }
    // heavy cancellation: integrate the orthogonalized remainder directly
    let alpha = gh / hh;
    let [rr] = quad.integrate(|t| {
        let r = eg.value(t) - alpha * eh.value(t);
        [r * r]
    });
    rr.finite().map(|v| v.max(R::zero()).sqrt()).ok_or_else(not_integrable)
}

/// Accurate point evaluation of a field, switching to a Taylor expansion
/// near `θ = 0` where the weighted norms need relative accuracy.
///
/// Value and slope at 0 below rounding level are set to exactly zero.
pub struct FieldEvaluator<'a, R> {
    field: &'a RealCircleField<R>,
    taylor: Vec<R>,
    radius: R,
}

const TAYLOR_ORDER: usize = 28;

impl<'a, R: Real> FieldEvaluator<'a, R> {
    pub fn new(field: &'a RealCircleField<R>) -> Self {
        let mut taylor = field.taylor_at_zero(TAYLOR_ORDER);
        let (mut s0, mut s1) = (field.mean_coeff().abs(), R::zero());
        for (i, c) in field.positive().iter().enumerate() {
            s0 += R::lit(2.0) * c.norm();
            s1 += R::lit(2.0) * R::of(i + 1) * c.norm();
        }
        let tol = R::lit(64.0) * R::epsilon();
        if taylor[0].abs() <= tol * s0 {
            taylor[0] = R::zero();
        }
        if taylor[1].abs() <= tol * s1 {
            taylor[1] = R::zero();
        }
        let n = field.max_mode().max(1);
        Self {
            field,
            taylor,
            radius: R::lit(0.5) / R::of(n),
        }
    }

    pub fn value(&self, theta: R) -> R {
        if theta.abs() <= self.radius {
            self.taylor
                .iter()
                .rev()
                .fold(R::zero(), |acc, &c| acc * theta + c)
        } else {
            self.field.value_at(theta)
        }
    }
}

/// Composite Gauss–Legendre quadrature against `|sin(θ/2)|^{-2γ}` on the
/// circle, with dyadic panels accumulating at `θ = 0` (which is never
/// sampled) and a divergence detector on the panel contributions.
pub struct WeightedQuadrature<R> {
    gamma: R,
    bandwidth: usize,
    rule: GaussLegendre<R>,
}

const MAX_LEVELS: usize = 200;
const STALL_LEVELS: usize = 8;

impl<R: Real> WeightedQuadrature<R> {
    /// `bandwidth` is the highest frequency the integrand oscillates at.
    pub fn new(gamma: R, bandwidth: usize) -> Self {
        Self {
            gamma,
            bandwidth: bandwidth.max(4),
            rule: GaussLegendre::new(16),
        }
    }

    /// Integrates each component of `f` against the weight.
    pub fn integrate<const K: usize>(&self, f: impl Fn(R) -> [R; K]) -> [NormValue<R>; K] {
        let b = R::of(self.bandwidth);
        let mut total = [R::zero(); K];
        let mut scale = [R::zero(); K];
        let mut prev = [R::zero(); K];
        let mut stalled = [0usize; K];
        let mut done = [false; K];
        let mut divergent = [false; K];
        let mut hi = R::PI();
        for level in 0..MAX_LEVELS {
            let lo = hi / R::lit(2.0);
            let pieces = (lo * b * R::lit(0.75)).ceil().to_usize().unwrap_or(1).max(1);
            let width = (hi - lo) / R::of(pieces);
            let mut contrib = [R::zero(); K];
            for p in 0..pieces {
                let a = lo + width * R::of(p);
                for (t, w) in self.rule.on(a, a + width) {
                    let weight = (t / R::lit(2.0)).sin().powf(-R::lit(2.0) * self.gamma);
                    let (fp, fm) = (f(t), f(-t));
                    for i in 0..K {
                        contrib[i] += w * weight * (fp[i] + fm[i]);
                    }
                }
            }
            let asymptotic = lo * b < R::lit(0.25);
            for i in 0..K {
                if done[i] {
                    continue;
                }
                total[i] += contrib[i];
                scale[i] += contrib[i].abs();
                if !asymptotic || level == 0 {
                    prev[i] = contrib[i];
                    continue;
                }
                if contrib[i].abs() >= prev[i].abs() && contrib[i] != R::zero() {
                    stalled[i] += 1;
                } else {
                    stalled[i] = 0;
                }
                if stalled[i] >= STALL_LEVELS || !contrib[i].is_finite() {
                    done[i] = true;
                    divergent[i] = true;
                } else if contrib[i].abs() <= R::lit(1e-17) * scale[i] {
                    done[i] = true;
                }
                prev[i] = contrib[i];
            }
            if done.iter().all(|&d| d) {
                break;
            }
            hi = lo;
        }
        std::array::from_fn(|i| {
            if divergent[i] || !done[i] {
                NormValue::Divergent
            } else {
                NormValue::Finite(total[i])
            }
        })
    }
}
