use alloc::vec::Vec;
use core::f64::consts::PI;

/// Gauss-Legendre rule on `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// The `g`-point rule; exact for polynomials of degree `2g - 1`.
    pub fn new(g: usize) -> Self {
        assert!(g >= 1, "a quadrature rule needs at least one point");
        let mut nodes = alloc::vec![0.0; g];
        let mut weights = alloc::vec![0.0; g];
        let n = g as f64;
        for i in 0..g.div_ceil(2) {
            // Newton iteration from the Chebyshev-like initial guess
            let mut x = libm::cos(PI * (i as f64 + 0.75) / (n + 0.5));
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(g, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if libm::fabs(dx) < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(g, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            // map [-1, 1] to [0, 1]
            nodes[i] = (1.0 - x) / 2.0;
            nodes[g - 1 - i] = (1.0 + x) / 2.0;
            weights[i] = w / 2.0;
            weights[g - 1 - i] = w / 2.0;
        }
        GaussLegendre { nodes, weights }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `integral_a^b f`.
    pub fn integrate(&self, a: f64, b: f64, mut f: impl FnMut(f64) -> f64) -> f64 {
        let h = b - a;
        if h == 0.0 {
            return 0.0;
        }
        let mut s = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            s += w * f(a + h * x);
        }
        s * h
    }
}

/// `P_n(x)` and `P_n'(x)` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Tensor-product quadrature of `f` over a box given by per-axis bounds.
pub fn box_integral(
    bounds: &[(f64, f64)],
    rule: &GaussLegendre,
    f: &mut dyn FnMut(&[f64]) -> f64,
) -> f64 {
    let mut y = alloc::vec![0.0; bounds.len()];
    nested(bounds, rule, 0, &mut y, f)
}

fn nested(
    bounds: &[(f64, f64)],
    rule: &GaussLegendre,
    depth: usize,
    y: &mut [f64],
    f: &mut dyn FnMut(&[f64]) -> f64,
) -> f64 {
    if depth == bounds.len() {
        return f(y);
    }
    let (a, b) = bounds[depth];
    let h = b - a;
    if h == 0.0 {
        return 0.0;
    }
    let mut s = 0.0;
    for (x, w) in rule.nodes.iter().zip(&rule.weights) {
        y[depth] = a + h * x;
        s += w * nested(bounds, rule, depth + 1, y, f);
    }
    s * h
}

/// Iterated Gauss-Legendre points and weights on the ordered chamber
/// `0 <= x_1 <= ... <= x_k <= 1`, with `x_i` ranging over `[x_{i-1}, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureGrid {
    k: usize,
    order: usize,
    points: Vec<Vec<f64>>,
    weights: Vec<f64>,
}

impl QuadratureGrid {
    pub fn simplex(k: usize, order: usize) -> Self {
        let rule = GaussLegendre::new(order);
        let mut points = Vec::new();
        let mut weights = Vec::new();
        let mut x = alloc::vec![0.0; k];
        fill(&rule, 0, 0.0, 1.0, &mut x, &mut points, &mut weights);
        QuadratureGrid { k, order, points, weights }
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn integrate(&self, mut f: impl FnMut(&[f64]) -> f64) -> f64 {
        self.points.iter().zip(&self.weights).map(|(p, w)| w * f(p)).sum()
    }
}

fn fill(
    rule: &GaussLegendre,
    depth: usize,
    lo: f64,
    weight: f64,
    x: &mut [f64],
    points: &mut Vec<Vec<f64>>,
    weights: &mut Vec<f64>,
) {
    if depth == x.len() {
        points.push(x.to_vec());
        weights.push(weight);
        return;
    }
    let h = 1.0 - lo;
    for (t, w) in rule.nodes.iter().zip(&rule.weights) {
        x[depth] = lo + h * t;
        fill(rule, depth + 1, x[depth], weight * w * h, x, points, weights);
    }
}
