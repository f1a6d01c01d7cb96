use std::ops::{Add, Sub};

use num_complex::Complex;
use num_traits::{Num, Zero};

use crate::scalar::{Coefficient, Real};

/// Holomorphic-sector coefficients `η_k`, `k = 1..=K`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModeVector<T> {
    entries: Vec<Complex<T>>,
}

impl<T: Clone + Num> ModeVector<T> {
    pub fn zeros(k_max: usize) -> Self {
        Self {
            entries: vec![Complex::zero(); k_max],
        }
    }

    /// The unit vector `e_k`.
    pub fn unit(k_max: usize, k: usize) -> Self {
        let mut v = Self::zeros(k_max);
        v.set(k, Complex::new(T::one(), T::zero()));
        v
    }

    /// Entries listed from `k = 1`.
    pub fn from_entries(entries: Vec<Complex<T>>) -> Self {
        Self { entries }
    }

    pub fn k_max(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    /// `η_k`, zero outside `1..=K`.
    #[inline]
    pub fn get(&self, k: usize) -> Complex<T> {
        if k == 0 || k > self.entries.len() {
            Complex::zero()
        } else {
            self.entries[k - 1].clone()
        }
    }

    pub fn set(&mut self, k: usize, value: Complex<T>) {
        self.entries[k - 1] = value;
    }

    pub fn scaled(&self, s: T) -> Self {
        Self {
            entries: self.entries.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    pub fn conj(&self) -> Self
    where
        T: std::ops::Neg<Output = T>,
    {
        Self {
            entries: self.entries.iter().map(|c| c.conj()).collect(),
        }
    }
}

impl<T: Clone + Num> Add for &ModeVector<T> {
    type Output = ModeVector<T>;
    fn add(self, rhs: Self) -> ModeVector<T> {
        let n = self.k_max().max(rhs.k_max());
        ModeVector::from_entries((1..=n).map(|k| self.get(k) + rhs.get(k)).collect())
    }
}

impl<T: Clone + Num> Sub for &ModeVector<T> {
    type Output = ModeVector<T>;
    fn sub(self, rhs: Self) -> ModeVector<T> {
        let n = self.k_max().max(rhs.k_max());
        ModeVector::from_entries((1..=n).map(|k| self.get(k) - rhs.get(k)).collect())
    }
}

impl<R: Real> ModeVector<R> {
    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorTag {
    /// Linearization about `-sin θ`.
    Linearized,
    /// The model operator `-sin θ ∂_θ`.
    Model,
}

/// Coefficients of a three-term operator
/// `(Tη)_k = B_{k-1}η_{k-1} + A_{k+1}η_{k+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct TridiagonalCoeffs<T> {
    tag: OperatorTag,
    a: Vec<T>,
    b: Vec<T>,
}

impl<T: Coefficient> TridiagonalCoeffs<T> {
    /// `A_k = ½(k+1)(1-1/k)`, `B_k = ½(1-k)(1-1/k)`, extended by `A_0 = B_0 = ½`.
    pub fn linearized(k_max: usize) -> Self {
        let mut a = vec![T::ratio(1, 2)];
        let mut b = vec![T::ratio(1, 2)];
        for k in 1..=(k_max as i64 + 1) {
            // ½(1 - 1/k) = (k - 1)/(2k)
            let f = T::ratio(k - 1, 2 * k);
            a.push(T::int(k + 1) * f.clone());
            b.push(T::int(1 - k) * f);
        }
        Self {
            tag: OperatorTag::Linearized,
            a,
            b,
        }
    }

    /// `A_k = k/2`, `B_k = -k/2`.
    pub fn model(k_max: usize) -> Self {
        let range = 0..=(k_max as i64 + 1);
        Self {
            tag: OperatorTag::Model,
            a: range.clone().map(|k| T::ratio(k, 2)).collect(),
            b: range.map(|k| T::ratio(-k, 2)).collect(),
        }
    }

    pub fn tag(&self) -> OperatorTag {
        self.tag
    }

    pub fn k_max(&self) -> usize {
        self.a.len() - 2
    }

    pub fn a(&self, k: usize) -> T {
        self.a[k].clone()
    }

    pub fn b(&self, k: usize) -> T {
        self.b[k].clone()
    }
}

/// `(Tη)_k = B_{k-1}η_{k-1} + A_{k+1}η_{k+1}`, with `η_{K+1} = 0`.
pub fn apply_tridiagonal<T: Coefficient>(
    coeffs: &TridiagonalCoeffs<T>,
    eta: &ModeVector<T>,
) -> ModeVector<T> {
    let n = eta.k_max();
    assert!(coeffs.k_max() >= n, "coefficient table shorter than the vector");
    let mut out = ModeVector::zeros(n);
    for k in 1..=n {
        let mut v = eta.get(k + 1) * coeffs.a(k + 1);
        if k >= 2 {
            v = v + eta.get(k - 1) * coeffs.b(k - 1);
        }
        out.set(k, v);
    }
    out
}

/// Weights `c_k = (k-1)²(k+1)` of the conserved Hermitian form.
#[derive(Clone, Debug, PartialEq)]
pub struct ConservedForm<T> {
    weights: Vec<T>,
}

impl<T: Coefficient> ConservedForm<T> {
    pub fn new(k_max: usize) -> Self {
        Self {
            weights: (0..=k_max as i64 + 1)
                .map(|k| T::int((k - 1) * (k - 1) * (k + 1)))
                .collect(),
        }
    }

    pub fn weight(&self, k: usize) -> T {
        self.weights[k].clone()
    }

    /// `Σ_{k≥2} c_k η_k conj(ξ_k)`.
    pub fn pair(&self, eta: &ModeVector<T>, xi: &ModeVector<T>) -> Complex<T>
    where
        T: std::ops::Neg<Output = T>,
    {
        (2..=eta.k_max().min(xi.k_max())).fold(Complex::zero(), |acc, k| {
            acc + eta.get(k) * xi.get(k).conj() * self.weight(k)
        })
    }
}

/// Couplings `a_k = 1/(k(k+1))` of the Hamiltonian form of the linearized operator.
#[derive(Clone, Debug, PartialEq)]
pub struct HamiltonianJ<T> {
    couplings: Vec<T>,
}

impl<T: Coefficient> HamiltonianJ<T> {
    pub fn new(k_max: usize) -> Self {
        let mut couplings = vec![T::zero()];
        couplings.extend((1..=k_max as i64 + 1).map(|k| T::ratio(1, k * (k + 1))));
        Self { couplings }
    }

    pub fn coupling(&self, k: usize) -> T {
        self.couplings[k].clone()
    }

    /// `(Dℋ)_k = ½c_kη_k`.
    pub fn gradient(form: &ConservedForm<T>, eta: &ModeVector<T>) -> ModeVector<T> {
        ModeVector::from_entries(
            (1..=eta.k_max())
                .map(|k| eta.get(k) * (form.weight(k) * T::ratio(1, 2)))
                .collect(),
        )
    }

    /// `(JDℋ)_k = -a_{k-1}(Dℋ)_{k-1} + a_k(Dℋ)_{k+1}` for `k ≥ 2`; entry 1 is left 0.
    pub fn apply(&self, grad: &ModeVector<T>) -> ModeVector<T> {
        let n = grad.k_max();
        let mut out = ModeVector::zeros(n);
        for k in 2..=n {
            let v = grad.get(k + 1) * self.coupling(k) - grad.get(k - 1) * self.coupling(k - 1);
            out.set(k, v);
        }
        out
    }
}

/// `Σ_{k≥2} c_k |η_k|²`.
pub fn conserved_energy<R: Real>(eta: &ModeVector<R>) -> R {
    (2..=eta.k_max())
        .map(|k| {
            let kk = R::of(k);
            (kk - R::one()) * (kk - R::one()) * (kk + R::one()) * eta.get(k).norm_sqr()
        })
        .sum()
}
