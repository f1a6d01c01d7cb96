use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::spectral::RealCircleField;

/// Default lower bound on `|ω'|` at an admissible zero.
pub const DEGENERACY_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ZeroPoint<R> {
    /// Location in `(-π, π]`.
    pub theta: R,
    /// Derivative at the zero.
    pub deriv: R,
}

/// Wraps an angle into `(-π, π]`.
pub fn wrap_angle<R: Real>(theta: R) -> R {
    let tau = R::TAU();
    let mut t = theta - tau * ((theta + R::PI()) / tau).floor();
    if t <= -R::PI() {
        t += tau;
    }
    t
}

/// Roots of `g` in `[a, b]` given a sign change, by bisection then Newton.
pub(crate) fn refine_root<R: Real>(g: impl Fn(R) -> (R, R), mut a: R, mut b: R) -> R {
    let (mut ga, _) = g(a);
    for _ in 0..30 {
        let m = (a + b) / R::lit(2.0);
        let (gm, _) = g(m);
        if gm == R::zero() {
            return m;
        }
        if (gm > R::zero()) == (ga > R::zero()) {
            a = m;
            ga = gm;
        } else {
            b = m;
        }
    }
    let mut x = (a + b) / R::lit(2.0);
    // a root on an endpoint may round to just outside the bracket
    let slack = b - a;
    for _ in 0..50 {
        let (v, d) = g(x);
        if v == R::zero() || d == R::zero() {
            break;
        }
        let next = x - v / d;
        if next < a - slack || next > b + slack {
            break;
        }
        let done = (next - x).abs() <= R::lit(4.0) * R::epsilon() * x.abs().max(R::one());
        x = next;
        if done {
            break;
        }
    }
    x
}

/// Brackets sign changes of `g` on `m` equispaced nodes (periodic).
pub(crate) fn sign_change_brackets<R: Real>(g: impl Fn(R) -> R, m: usize) -> Vec<(R, R)> {
    let step = R::TAU() / R::of(m);
    let nodes: Vec<R> = (0..=m).map(|j| -R::PI() + step * R::of(j)).collect();
    let vals: Vec<R> = nodes[..m].iter().map(|&t| g(t)).collect();
    let mut out = Vec::new();
    for j in 0..m {
        let (va, vb) = (vals[j], vals[(j + 1) % m]);
        if (va > R::zero() && vb <= R::zero()) || (va < R::zero() && vb >= R::zero()) {
            out.push((nodes[j], nodes[j + 1]));
        }
    }
    out
}

/// Nondegenerate zeros of `ω`, sorted by location.
pub fn find_zeros<R: Real>(omega: &RealCircleField<R>) -> Result<Vec<ZeroPoint<R>>> {
    find_zeros_with(omega, R::lit(DEGENERACY_TOL))
}

pub fn find_zeros_with<R: Real>(omega: &RealCircleField<R>, tol: R) -> Result<Vec<ZeroPoint<R>>> {
    let scale = omega.coeff_scale();
    if scale == R::zero() {
        return Err(Error::IdenticallyZero);
    }
    let m = (4 * omega.max_mode()).max(16);
    let eval = |t: R| omega.evaluate(t);
    let mut zeros = Vec::new();
    for (a, b) in sign_change_brackets(|t| eval(t).0, m) {
        let theta = refine_root(eval, a, b);
        let deriv = eval(theta).1;
        if deriv.abs() < tol {
            return Err(Error::DegenerateZero {
                theta: theta.as_f64(),
                deriv: deriv.abs().as_f64(),
            });
        }
        zeros.push(ZeroPoint {
            theta: wrap_angle(theta),
            deriv,
        });
    }
    // zeros that touch without changing sign sit at critical points
    let d = omega.derivative();
    let slope = |t: R| {
        let (v, s) = d.evaluate(t);
        (v, s)
    };
    let touch_tol = R::lit(1e-12) * scale;
    for (a, b) in sign_change_brackets(|t| slope(t).0, m) {
        let theta = refine_root(slope, a, b);
        let (value, deriv) = eval(theta);
        if value.abs() <= touch_tol {
            return Err(Error::DegenerateZero {
                theta: theta.as_f64(),
                deriv: deriv.abs().as_f64(),
            });
        }
    }
    zeros.sort_by(|p, q| p.theta.partial_cmp(&q.theta).unwrap());
    Ok(zeros)
}
