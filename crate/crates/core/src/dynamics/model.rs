use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::spectral::{biot_savart, hilbert, smooth_size, Gauge, RealCircleField, SpectralGrid};

#[derive(Clone, Debug, PartialEq)]
pub enum ModelSpec<R> {
    /// `ω_t = ωHω`.
    Clm,
    /// `ω_t = u_θω - uω_θ` with `u_θ = Hω`.
    DeGregorio { gauge: Gauge<R> },
    /// De Gregorio with the additional term `c·Hω`.
    DeGregorioMean { c: R, gauge: Gauge<R> },
    /// `ω_t = b_θω - bω_θ` for a fixed field `b`.
    Transport(RealCircleField<R>),
}

impl<R: Real> ModelSpec<R> {
    pub fn dg() -> Self {
        ModelSpec::DeGregorio {
            gauge: Gauge::MeanZero,
        }
    }

    pub fn requires_zero_mean(&self) -> bool {
        matches!(
            self,
            ModelSpec::DeGregorio { .. } | ModelSpec::DeGregorioMean { .. }
        )
    }

    pub fn gauge(&self) -> Option<Gauge<R>> {
        match self {
            ModelSpec::DeGregorio { gauge } | ModelSpec::DeGregorioMean { gauge, .. } => {
                Some(*gauge)
            }
            _ => None,
        }
    }
}

/// Exponential damping `exp(-strength·(|k|/N)^order)` applied to the
/// coefficients after every step.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralFilter<R> {
    pub strength: R,
    pub order: i32,
}

impl<R: Real> SpectralFilter<R> {
    /// The widely used 36th-order filter.
    pub fn standard() -> Self {
        Self {
            strength: R::lit(36.0),
            order: 36,
        }
    }

    pub fn factor(&self, k: usize, max_mode: usize) -> R {
        let x = R::of(k) / R::of(max_mode);
        (-self.strength * x.powi(self.order)).exp()
    }

    pub fn apply(&self, f: &RealCircleField<R>) -> RealCircleField<R> {
        let n = f.max_mode();
        f.map_modes(|k, c| c * self.factor(k.unsigned_abs(), n))
    }
}

/// Grid size for products of two fields of maximum mode `n`.
///
/// With dealiasing the grid holds every product mode exactly after
/// truncation back to `n`.
pub fn product_grid_size(n: usize, dealias: bool) -> usize {
    if dealias {
        smooth_size(3 * n + 1)
    } else {
        2 * n + 2
    }
}

/// A model bound to a resolution, owning its transform workspace.
pub struct Model<R: Real> {
    spec: ModelSpec<R>,
    max_mode: usize,
    grid: SpectralGrid<R>,
    a: Vec<R>,
    b: Vec<R>,
    c: Vec<R>,
    d: Vec<R>,
}

impl<R: Real> Model<R> {
    pub fn new(spec: ModelSpec<R>, max_mode: usize, dealias: bool) -> Self {
        let m = product_grid_size(max_mode, dealias);
        Self {
            spec,
            max_mode,
            grid: SpectralGrid::new(m),
            a: vec![R::zero(); m],
            b: vec![R::zero(); m],
            c: vec![R::zero(); m],
            d: vec![R::zero(); m],
        }
    }

    pub fn spec(&self) -> &ModelSpec<R> {
        &self.spec
    }

    pub fn max_mode(&self) -> usize {
        self.max_mode
    }

    fn check_mean(&self, omega: &RealCircleField<R>) -> Result<()> {
        if self.spec.requires_zero_mean() {
            let mean = omega.mean_coeff();
            if mean.abs() > R::lit(1e-8) * omega.coeff_scale().max(R::one()) {
                return Err(Error::NonzeroMean {
                    mean: mean.as_f64(),
                });
            }
        }
        Ok(())
    }

    /// `x·y - z·w`, truncated to the model's band.
    fn bracket(
        &mut self,
        x: &RealCircleField<R>,
        y: &RealCircleField<R>,
        z: Option<(&RealCircleField<R>, &RealCircleField<R>)>,
    ) -> Result<RealCircleField<R>> {
        self.grid.synthesize_pair(x, y, &mut self.a, &mut self.b)?;
        match z {
            Some((z, w)) => {
                self.grid.synthesize_pair(z, w, &mut self.c, &mut self.d)?;
                for i in 0..self.a.len() {
                    self.a[i] = self.a[i] * self.b[i] - self.c[i] * self.d[i];
                }
            }
            None => {
                for i in 0..self.a.len() {
                    self.a[i] *= self.b[i];
                }
            }
        }
        self.grid.analyze(&self.a, self.max_mode)
    }

    pub fn rhs(&mut self, omega: &RealCircleField<R>) -> Result<RealCircleField<R>> {
        self.check_mean(omega)?;
        let omega = if omega.max_mode() == self.max_mode {
            omega.clone()
        } else {
            omega.resized(self.max_mode)
        };
        match self.spec.clone() {
            ModelSpec::Clm => {
                let h = hilbert(&omega);
                self.bracket(&omega, &h, None)
            }
            ModelSpec::DeGregorio { gauge } => self.dg(&omega, gauge),
            ModelSpec::DeGregorioMean { c, gauge } => {
                let r = self.dg(&omega, gauge)?;
                Ok(&r + &hilbert(&omega).scaled(c))
            }
            ModelSpec::Transport(b) => {
                let b = b.resized(self.max_mode);
                self.bracket(&b.derivative(), &omega, Some((&b, &omega.derivative())))
            }
        }
    }

    fn dg(&mut self, omega: &RealCircleField<R>, gauge: Gauge<R>) -> Result<RealCircleField<R>> {
        let u = biot_savart(omega, gauge);
        self.bracket(&hilbert(omega), omega, Some((&u, &omega.derivative())))
    }

    /// Maximum of `|f|` over the product grid.
    pub fn grid_sup(&mut self, f: &RealCircleField<R>) -> Result<R> {
        self.grid.synthesize(f, &mut self.a)?;
        Ok(self.a.iter().fold(R::zero(), |m, v| m.max(v.abs())))
    }

    /// One classical Runge–Kutta step.
    pub fn step_rk4(&mut self, omega: &RealCircleField<R>, dt: R) -> Result<RealCircleField<R>> {
        if dt < R::zero() {
            return Err(Error::Parameter("time step must be nonnegative".into()));
        }
        let half = dt / R::lit(2.0);
        let omega = omega.resized(self.max_mode);
        let k1 = self.rhs(&omega)?;
        let k2 = self.rhs(&(&omega + &k1.scaled(half)))?;
        let k3 = self.rhs(&(&omega + &k2.scaled(half)))?;
        let k4 = self.rhs(&(&omega + &k3.scaled(dt)))?;
        let sixth = dt / R::lit(6.0);
        let mut incr = &k1 + &k4;
        incr = &incr + &(&k2 + &k3).scaled(R::lit(2.0));
        Ok(&omega + &incr.scaled(sixth))
    }
}

/// Right-hand side with dealiasing on.
pub fn rhs<R: Real>(spec: &ModelSpec<R>, omega: &RealCircleField<R>) -> Result<RealCircleField<R>> {
    Model::new(spec.clone(), omega.max_mode(), true).rhs(omega)
}

/// One RK4 step with dealiasing on; non-finite output is a blow-up.
pub fn step_rk4<R: Real>(
    spec: &ModelSpec<R>,
    omega: &RealCircleField<R>,
    dt: R,
) -> Result<RealCircleField<R>> {
    let out = Model::new(spec.clone(), omega.max_mode(), true).step_rk4(omega, dt)?;
    if !out.is_finite() {
        return Err(Error::BlowUp {
            step: 1,
            t: dt.as_f64(),
            sup: f64::INFINITY,
        });
    }
    Ok(out)
}
