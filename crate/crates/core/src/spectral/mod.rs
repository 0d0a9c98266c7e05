//! Floating-point checks of the explicit eigensystems of the strip transfer
//! operators, and of the series identities that come out of them.
//!
//! Everything here is `f64`. Operators are applied by nested Gauss-Legendre
//! quadrature; eigenfunctions are the cosine and sine determinants.

mod quadrature;
mod series;

use alloc::vec::Vec;
use core::f64::consts::PI;

use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use crate::{Error, Result};

pub use quadrature::{box_integral, GaussLegendre, QuadratureGrid};
pub use series::{
    i_integral_check, i_integral_closed, principal_det, principal_product,
    principal_product_check, spectral_series_check, x_series, x_series_check, SeriesCheck,
    SeriesKind,
};

/// Largest `k = m / 2` accepted by the numerical operators.
pub const MAX_K: usize = 3;

/// The transfer operator of the `m`-strip: `S_{2k}` for even `m`, the
/// composition `AB` for odd `m`. Both act on functions of `k` ordered
/// variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TransferOperator {
    m: u32,
}

impl TransferOperator {
    pub fn new(m: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::Domain(alloc::format!("strip thickness m = {m} must be at least 2")));
        }
        let k = (m / 2) as usize;
        if k > MAX_K {
            return Err(Error::CostGuard { k });
        }
        Ok(TransferOperator { m })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn k(&self) -> usize {
        (self.m / 2) as usize
    }

    pub fn is_odd(&self) -> bool {
        self.m % 2 == 1
    }

    /// `(Tf)(x)` at one point of the chamber.
    pub fn apply(&self, f: &dyn Fn(&[f64]) -> f64, x: &[f64], rule: &GaussLegendre) -> f64 {
        let k = self.k();
        assert_eq!(x.len(), k, "point has the wrong dimension");
        if self.is_odd() {
            // y_1 in [0, x_1], y_i in [x_{i-1}, x_i], y_{k+1} in [x_k, 1]
            let mut outer = Vec::with_capacity(k + 1);
            outer.push((0.0, x[0]));
            for i in 1..k {
                outer.push((x[i - 1], x[i]));
            }
            outer.push((x[k - 1], 1.0));
            let mut inner = alloc::vec![(0.0, 0.0); k];
            box_integral(&outer, rule, &mut |y: &[f64]| {
                for i in 0..k {
                    inner[i] = (y[i], y[i + 1]);
                }
                box_integral(&inner, rule, &mut |z: &[f64]| f(z))
            })
        } else {
            // y_1 in [0, 1 - x_k], y_i in [1 - x_{k-i+2}, 1 - x_{k-i+1}]
            let mut bounds = Vec::with_capacity(k);
            bounds.push((0.0, 1.0 - x[k - 1]));
            for i in 1..k {
                bounds.push((1.0 - x[k - i], 1.0 - x[k - i - 1]));
            }
            box_integral(&bounds, rule, &mut |y: &[f64]| f(y))
        }
    }
}

/// `T f` as a callable, evaluated by quadrature on demand.
pub fn apply_transfer_numeric<'a>(
    m: u32,
    f: &'a dyn Fn(&[f64]) -> f64,
    rule: &'a GaussLegendre,
) -> Result<impl Fn(&[f64]) -> f64 + 'a> {
    let op = TransferOperator::new(m)?;
    Ok(move |x: &[f64]| op.apply(f, x, rule))
}

/// One eigenfunction of a strip operator, labelled by strictly decreasing
/// positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EigenMode {
    indices: Vec<u32>,
    odd: bool,
}

impl EigenMode {
    pub fn new(indices: Vec<u32>, odd: bool) -> Result<Self> {
        if indices.is_empty() || indices.contains(&0) {
            return Err(Error::Domain("mode indices must be positive".into()));
        }
        if indices.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Domain(alloc::format!(
                "mode indices {indices:?} must be strictly decreasing"
            )));
        }
        Ok(EigenMode { indices, odd })
    }

    /// Mode of the operator of the `m`-strip.
    pub fn for_strip(m: u32, indices: Vec<u32>) -> Result<Self> {
        let mode = Self::new(indices, m % 2 == 1)?;
        if mode.k() != (m / 2) as usize {
            return Err(Error::Domain(alloc::format!(
                "the {m}-strip needs {} indices",
                m / 2
            )));
        }
        Ok(mode)
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn k(&self) -> usize {
        self.indices.len()
    }

    pub fn is_odd(&self) -> bool {
        self.odd
    }

    pub fn normalization(&self) -> f64 {
        libm::pow(2.0, self.k() as f64 / 2.0)
    }

    pub fn eigenvalue(&self) -> f64 {
        let k = self.k() as i32;
        if self.odd {
            let prod: f64 = self.indices.iter().map(|&j| (j as f64) * (j as f64)).product();
            1.0 / (powi(PI, 2 * k) * prod)
        } else {
            let prod: f64 = self.indices.iter().map(|&j| 2.0 * j as f64 - 1.0).product();
            let e = (k * (k - 1) / 2) as u32 + self.indices.iter().map(|&j| j + 1).sum::<u32>();
            let sign = if e.is_multiple_of(2) { 1.0 } else { -1.0 };
            sign * powi(2.0, k) / (powi(PI, k) * prod)
        }
    }

    /// `2^{k/2} det(cos(pi (2 j_p - 1) x_q / 2))` or `2^{k/2} det(sin(pi j_p x_q))`.
    pub fn eval(&self, x: &[f64]) -> f64 {
        let k = self.k();
        let mut a = alloc::vec![0.0; k * k];
        for (p, &j) in self.indices.iter().enumerate() {
            for q in 0..k {
                a[p * k + q] = if self.odd {
                    libm::sin(PI * j as f64 * x[q])
                } else {
                    libm::cos(PI * (2.0 * j as f64 - 1.0) * x[q] / 2.0)
                };
            }
        }
        self.normalization() * det_f64(&mut a, k)
    }
}

pub(crate) fn powi(x: f64, n: i32) -> f64 {
    let mut acc = 1.0;
    for _ in 0..n.unsigned_abs() {
        acc *= x;
    }
    if n < 0 {
        1.0 / acc
    } else {
        acc
    }
}

/// Determinant by Gaussian elimination with partial pivoting; `a` is
/// row-major and is overwritten.
pub(crate) fn det_f64(a: &mut [f64], n: usize) -> f64 {
    let mut det = 1.0;
    for c in 0..n {
        let mut piv = c;
        for r in c + 1..n {
            if libm::fabs(a[r * n + c]) > libm::fabs(a[piv * n + c]) {
                piv = r;
            }
        }
        if a[piv * n + c] == 0.0 {
            return 0.0;
        }
        if piv != c {
            for j in 0..n {
                a.swap(c * n + j, piv * n + j);
            }
            det = -det;
        }
        let d = a[c * n + c];
        det *= d;
        for r in c + 1..n {
            let factor = a[r * n + c] / d;
            for j in c..n {
                a[r * n + j] -= factor * a[c * n + j];
            }
        }
    }
    det
}

/// The `count` modes of largest `|eigenvalue|`, ties broken by indices.
pub fn leading_modes(m: u32, count: usize) -> Result<Vec<EigenMode>> {
    let k = (m / 2) as usize;
    if k == 0 {
        return Err(Error::Domain("strip thickness must be at least 2".into()));
    }
    let odd = m % 2 == 1;
    let bound = (count + k + 2) as u32;
    let mut all = Vec::new();
    let mut idx: Vec<u32> = (1..=k as u32).rev().collect();
    loop {
        all.push(EigenMode::new(idx.clone(), odd)?);
        // next strictly decreasing tuple with entries <= bound
        let mut pos = k;
        loop {
            if pos == 0 {
                all.sort_by(|a, b| {
                    libm::fabs(b.eigenvalue())
                        .partial_cmp(&libm::fabs(a.eigenvalue()))
                        .expect("finite eigenvalues")
                        .then_with(|| a.indices.cmp(&b.indices))
                });
                all.truncate(count);
                return Ok(all);
            }
            pos -= 1;
            let cap = if pos == 0 { bound } else { idx[pos - 1] - 1 };
            if idx[pos] < cap {
                idx[pos] += 1;
                for i in pos + 1..k {
                    idx[i] = (k - i) as u32;
                }
                break;
            }
        }
    }
}

/// Uniform points of the chamber `0 <= x_1 <= ... <= x_k <= 1`.
pub fn sample_points(k: usize, count: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = SmallRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut p: Vec<f64> = (0..k).map(|_| rng.gen::<f64>()).collect();
            p.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
            p
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModeResidual {
    pub mode: EigenMode,
    pub eigenvalue: f64,
    /// `max |T phi - lambda phi|` over the sample points.
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenReport {
    pub m: u32,
    pub order: usize,
    pub modes: Vec<ModeResidual>,
    pub gram: Vec<Vec<f64>>,
    /// Largest entrywise deviation of the Gram matrix from the identity.
    pub gram_deviation: f64,
    pub tol: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    /// Gauss-Legendre points per dimension.
    pub order: usize,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { order: 32, samples: 8, seed: 1, tol: 1e-8 }
    }
}

/// Residuals and orthonormality of the leading `max_modes` modes.
pub fn verify_eigensystem(m: u32, max_modes: usize, order: usize, tol: f64) -> Result<EigenReport> {
    let modes = leading_modes(m, max_modes)?;
    verify_modes(m, &modes, &VerifyOptions { order, tol, ..VerifyOptions::default() })
}

pub fn verify_modes(m: u32, modes: &[EigenMode], opts: &VerifyOptions) -> Result<EigenReport> {
    let op = TransferOperator::new(m)?;
    let k = op.k();
    for mode in modes {
        if mode.k() != k || mode.is_odd() != op.is_odd() {
            return Err(Error::Domain(alloc::format!(
                "mode {:?} does not belong to the {m}-strip",
                mode.indices()
            )));
        }
    }
    let rule = GaussLegendre::new(opts.order);
    let points = sample_points(k, opts.samples, opts.seed);
    let mut results = Vec::with_capacity(modes.len());
    for mode in modes {
        let lambda = mode.eigenvalue();
        let f = |x: &[f64]| mode.eval(x);
        let residual = points
            .iter()
            .map(|x| libm::fabs(op.apply(&f, x, &rule) - lambda * mode.eval(x)))
            .fold(0.0, f64::max);
        results.push(ModeResidual { mode: mode.clone(), eigenvalue: lambda, residual });
    }
    let grid = QuadratureGrid::simplex(k, opts.order);
    let values: Vec<Vec<f64>> =
        modes.iter().map(|mode| grid.points().iter().map(|x| mode.eval(x)).collect()).collect();
    let mut gram = alloc::vec![alloc::vec![0.0; modes.len()]; modes.len()];
    let mut dev: f64 = 0.0;
    for a in 0..modes.len() {
        for b in 0..modes.len() {
            let s: f64 = grid
                .weights()
                .iter()
                .zip(values[a].iter().zip(&values[b]))
                .map(|(w, (u, v))| w * u * v)
                .sum();
            gram[a][b] = s;
            let target = if a == b { 1.0 } else { 0.0 };
            dev = dev.max(libm::fabs(s - target));
        }
    }
    let passed = dev <= opts.tol && results.iter().all(|r| r.residual <= opts.tol);
    Ok(EigenReport {
        m,
        order: opts.order,
        modes: results,
        gram,
        gram_deviation: dev,
        tol: opts.tol,
        passed,
    })
}
