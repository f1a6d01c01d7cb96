use crate::scalar::Real;

/// Gauss–Legendre rule on `[-1, 1]`.
#[derive(Clone, Debug)]
pub struct GaussLegendre<R> {
    pub nodes: Vec<R>,
    pub weights: Vec<R>,
}

impl<R: Real> GaussLegendre<R> {
    pub fn new(n: usize) -> Self {
        let mut nodes = vec![R::zero(); n];
        let mut weights = vec![R::zero(); n];
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            dp = if d != 0.0 { d } else { dp };
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = R::lit(-x);
            nodes[n - 1 - i] = R::lit(x);
            weights[i] = R::lit(w);
            weights[n - 1 - i] = R::lit(w);
        }
        Self { nodes, weights }
    }

    /// Integrates `f` over `[a, b]`.
    pub fn integrate(&self, a: R, b: R, mut f: impl FnMut(R) -> R) -> R {
        let half = (b - a) / R::lit(2.0);
        let mid = (a + b) / R::lit(2.0);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(mid + half * x))
            .sum::<R>()
            * half
    }

    /// Maps the rule onto `[a, b]`, returning node/weight pairs.
    pub fn on(&self, a: R, b: R) -> impl Iterator<Item = (R, R)> + '_ {
        let half = (b - a) / R::lit(2.0);
        let mid = (a + b) / R::lit(2.0);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(move |(&x, &w)| (mid + half * x, w * half))
    }
}

fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
        p0 = p1;
        p1 = p2;
    }
    (p1, n as f64 * (x * p1 - p0) / (x * x - 1.0))
}
