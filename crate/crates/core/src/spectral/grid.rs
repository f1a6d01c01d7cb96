use std::sync::Arc;

use num_complex::Complex;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::spectral::field::RealCircleField;

/// Samples on the equispaced nodes `θ_j = -π + 2πj/M`.
#[derive(Clone, Debug, PartialEq)]
pub struct GridSamples<R> {
    pub values: Vec<R>,
}

impl<R: Real> GridSamples<R> {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn node(&self, j: usize) -> R {
        node(self.values.len(), j)
    }

    /// Samples a closure on `m` nodes.
    pub fn from_fn(m: usize, f: impl Fn(R) -> R) -> Self {
        Self {
            values: (0..m).map(|j| f(node(m, j))).collect(),
        }
    }
}

#[inline]
pub fn node<R: Real>(m: usize, j: usize) -> R {
    -R::PI() + R::TAU() * R::of(j) / R::of(m)
}

/// Smallest `M ≥ min` whose prime factors are 2, 3 and 5.
pub fn smooth_size(min: usize) -> usize {
    let mut m = min.max(1);
    loop {
        let mut r = m;
        for p in [2, 3, 5] {
            while r.is_multiple_of(p) {
                r /= p;
            }
        }
        if r == 1 {
            return m;
        }
        m += 1;
    }
}

/// FFT plans and scratch space for one grid size.
pub struct SpectralGrid<R: Real> {
    m: usize,
    forward: Arc<dyn Fft<R>>,
    inverse: Arc<dyn Fft<R>>,
    buffer: Vec<Complex<R>>,
    scratch: Vec<Complex<R>>,
}

impl<R: Real> SpectralGrid<R> {
    pub fn new(m: usize) -> Self {
        let mut planner = FftPlanner::new();
        let forward = planner.plan_fft_forward(m);
        let inverse = planner.plan_fft_inverse(m);
        let len = forward
            .get_inplace_scratch_len()
            .max(inverse.get_inplace_scratch_len());
        Self {
            m,
            forward,
            inverse,
            buffer: vec![Complex::default(); m],
            scratch: vec![Complex::default(); len],
        }
    }

    pub fn size(&self) -> usize {
        self.m
    }

    fn check(&self, max_mode: usize) -> Result<()> {
        if self.m < 2 * max_mode + 1 {
            return Err(Error::Aliasing {
                nodes: self.m,
                max_mode,
            });
        }
        Ok(())
    }

    fn load(&mut self, a: &RealCircleField<R>, b: Option<&RealCircleField<R>>) {
        let m = self.m;
        self.buffer.iter_mut().for_each(|c| *c = Complex::default());
        let i = Complex::new(R::zero(), R::one());
        let n = a.max_mode().max(b.map_or(0, |b| b.max_mode())) as isize;
        for k in -n..=n {
            let mut c = a.coeff(k);
            if let Some(b) = b {
                c = c + i * b.coeff(k);
            }
            if k % 2 != 0 {
                c = -c;
            }
            self.buffer[k.rem_euclid(m as isize) as usize] = c;
        }
    }

    /// Writes the samples of `field` into `out`.
    pub fn synthesize(&mut self, field: &RealCircleField<R>, out: &mut [R]) -> Result<()> {
        self.check(field.max_mode())?;
        self.load(field, None);
        self.inverse
            .process_with_scratch(&mut self.buffer, &mut self.scratch);
        for (o, c) in out.iter_mut().zip(&self.buffer) {
            *o = c.re;
        }
        Ok(())
    }

    /// Samples two fields with a single complex transform.
    pub fn synthesize_pair(
        &mut self,
        a: &RealCircleField<R>,
        b: &RealCircleField<R>,
        out_a: &mut [R],
        out_b: &mut [R],
    ) -> Result<()> {
        self.check(a.max_mode().max(b.max_mode()))?;
        self.load(a, Some(b));
        self.inverse
            .process_with_scratch(&mut self.buffer, &mut self.scratch);
        for ((x, y), c) in out_a.iter_mut().zip(out_b.iter_mut()).zip(&self.buffer) {
            *x = c.re;
            *y = c.im;
        }
        Ok(())
    }

    /// Coefficients `|k| ≤ max_mode` of grid samples.
    pub fn analyze(&mut self, samples: &[R], max_mode: usize) -> Result<RealCircleField<R>> {
        self.check(max_mode)?;
        for (c, &v) in self.buffer.iter_mut().zip(samples) {
            *c = Complex::new(v, R::zero());
        }
        self.forward
            .process_with_scratch(&mut self.buffer, &mut self.scratch);
        let scale = R::one() / R::of(self.m);
        let mut positive = Vec::with_capacity(max_mode);
        for k in 1..=max_mode {
            let mut c = self.buffer[k] * scale;
            if k % 2 == 1 {
                c = -c;
            }
            positive.push(c);
        }
        Ok(RealCircleField::from_positive(
            self.buffer[0].re * scale,
            &positive,
        ))
    }
}

/// Field to samples on `m` nodes.
pub fn to_samples<R: Real>(field: &RealCircleField<R>, m: usize) -> Result<GridSamples<R>> {
    let mut grid = SpectralGrid::new(m);
    let mut values = vec![R::zero(); m];
    grid.synthesize(field, &mut values)?;
    Ok(GridSamples { values })
}

/// Samples to a field of maximum mode `max_mode`.
pub fn from_samples<R: Real>(samples: &GridSamples<R>, max_mode: usize) -> Result<RealCircleField<R>> {
    SpectralGrid::new(samples.len()).analyze(&samples.values, max_mode)
}
