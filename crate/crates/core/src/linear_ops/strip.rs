use num_complex::Complex;

use crate::error::Result;
use crate::scalar::Real;
use crate::spectral::{from_samples, smooth_size, GaussLegendre, GridSamples, RealCircleField};

/// Smooth bump supported in `[lo, hi]` with a Gaussian profile.
pub fn gaussian_bump<R: Real>(s: R, lo: R, hi: R) -> R {
    let mid = (lo + hi) / R::lit(2.0);
    let x = (s - mid) / ((hi - lo) / R::lit(2.0));
    if x.abs() >= R::one() {
        return R::zero();
    }
    (-R::lit(4.0) * x * x).exp() * (R::one() - R::one() / (R::one() - x * x)).exp()
}

/// A holomorphic function `f(z) = ∫ φ(s) ((1-z)/(1+z))^{is} ds` on the disc,
/// with `φ` supported in a bounded interval.
pub struct StripSynthesis<'a, R> {
    nodes: Vec<(R, R)>,
    phi: &'a dyn Fn(R) -> R,
}

impl<'a, R: Real> StripSynthesis<'a, R> {
    pub fn new(phi: &'a dyn Fn(R) -> R, lo: R, hi: R) -> Self {
        let rule = GaussLegendre::new(16);
        let panels = 8;
        let h = (hi - lo) / R::of(panels);
        let nodes = (0..panels)
            .flat_map(|p| {
                let a = lo + h * R::of(p);
                rule.on(a, a + h).collect::<Vec<_>>()
            })
            .collect();
        Self { nodes, phi }
    }

    /// `f` at a point of the disc.
    pub fn value(&self, z: Complex<R>) -> Complex<R> {
        let one = Complex::new(R::one(), R::zero());
        self.in_strip(((one - z) / (one + z)).ln(), false)
    }

    /// `f` or `df/dw` at strip coordinate `w = log((1-z)/(1+z))`.
    pub fn in_strip(&self, w: Complex<R>, derivative: bool) -> Complex<R> {
        let i = Complex::new(R::zero(), R::one());
        self.nodes.iter().fold(Complex::new(R::zero(), R::zero()), |acc, &(s, wt)| {
            let mut term = (i * w * s).exp() * (wt * (self.phi)(s));
            if derivative {
                term = term * i * s;
            }
            acc + term
        })
    }

    /// `2π ∫ |φ(s)|² s sinh(πs) ds`.
    pub fn spectral_side(&self) -> R {
        R::TAU()
            * self
                .nodes
                .iter()
                .map(|&(s, w)| {
                    let p = (self.phi)(s);
                    w * p * p * s * (R::PI() * s).sinh()
                })
                .sum::<R>()
    }

    /// Dirichlet integral `∫ |f'|² dA`, computed over the strip
    /// `|Im w| < π/2` that the disc maps onto conformally.
    pub fn dirichlet(&self, half_length: R, step: R) -> R {
        let rule = GaussLegendre::new(16);
        let q = R::PI() / R::lit(4.0);
        let vertical: Vec<(R, R)> = (0..4)
            .flat_map(|p| {
                let a = -R::PI() / R::lit(2.0) + q * R::of(p);
                rule.on(a, a + q).collect::<Vec<_>>()
            })
            .collect();
        let count = (half_length / step).ceil().to_usize().unwrap_or(0);
        let mut total = R::zero();
        for j in 0..=2 * count {
            let w1 = -half_length + step * R::of(j);
            let row: R = vertical
                .iter()
                .map(|&(w2, wt)| wt * self.in_strip(Complex::new(w1, w2), true).norm_sqr())
                .sum();
            total += row * step;
        }
        total
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StripIdentity<R> {
    pub dirichlet: R,
    pub spectral: R,
    pub relative_error: R,
}

/// Compares the Dirichlet energy of the synthesized function with its
/// spectral expression for the bump on `[1, 2]`.
pub fn strip_identity<R: Real>() -> StripIdentity<R> {
    let phi = |s: R| gaussian_bump(s, R::one(), R::lit(2.0));
    let synth = StripSynthesis::new(&phi, R::one(), R::lit(2.0));
    let dirichlet = synth.dirichlet(R::lit(400.0), R::lit(0.2));
    let spectral = synth.spectral_side();
    StripIdentity {
        dirichlet,
        spectral,
        relative_error: ((dirichlet - spectral) / spectral).abs(),
    }
}

/// Exact flow of `f_t = -sin θ f_θ`: `f(θ, t) = f₀(φ_t⁻¹(θ))`.
pub fn exact_m_flow<R: Real>(f0: &RealCircleField<R>, t: R, max_mode: usize) -> Result<RealCircleField<R>> {
    let tau = (t / R::lit(2.0)).tanh();
    let one = Complex::new(R::one(), R::zero());
    let samples = GridSamples::from_fn(smooth_size(4 * max_mode + 1), |theta| {
        let z = Complex::from_polar(R::one(), theta);
        f0.value_at(((z + tau) / (one + z * tau)).arg())
    });
    from_samples(&samples, max_mode)
}
