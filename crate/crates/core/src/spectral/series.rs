use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;
use core::str::FromStr;

use num_traits::ToPrimitive;
use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use super::{det_f64, powi, GaussLegendre};
use crate::arith::{factorial, int_rat, pow2, BigRat};
use crate::formulas::x_coeff;
use crate::numbers::{bernoulli_numbers, euler_tangent_numbers, zigzag_numbers};
use crate::{Error, Result};

/// Series identities that follow from the spectral expansions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SeriesKind {
    /// `A_n` as a sum over odd reciprocal powers.
    UpdownEq9,
    /// `sum k^{-2n}` against Bernoulli numbers.
    Strip3Zeta,
    /// `sum (-1)^{k-1} (2k-1)^{-(2n+1)}` against Euler numbers.
    Strip4Euler,
}

impl SeriesKind {
    pub const ALL: [SeriesKind; 3] =
        [SeriesKind::UpdownEq9, SeriesKind::Strip3Zeta, SeriesKind::Strip4Euler];

    pub fn name(self) -> &'static str {
        match self {
            SeriesKind::UpdownEq9 => "updown_eq9",
            SeriesKind::Strip3Zeta => "strip3_zeta",
            SeriesKind::Strip4Euler => "strip4_euler",
        }
    }
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SeriesKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownName(s.into()))
    }
}

/// A truncated series next to the exact rational it should reproduce.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesCheck {
    pub approx: f64,
    pub exact: BigRat,
    pub relerr: f64,
}

fn to_f64(r: &BigRat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn check(approx: f64, exact: BigRat) -> SeriesCheck {
    let e = to_f64(&exact);
    let relerr = libm::fabs(approx - e) / libm::fabs(e);
    SeriesCheck { approx, exact, relerr }
}

/// Partial sums `S_K` of `sum_{k=1}^K term(k)`, added smallest first. For an
/// alternating series the mean of `S_K` and `S_{K+1}` is returned.
fn partial_sum(terms: usize, alternating: bool, term: impl Fn(usize) -> f64) -> f64 {
    let mut s = 0.0;
    for k in (1..=terms).rev() {
        s += term(k);
    }
    if alternating {
        s + term(terms + 1) / 2.0
    } else {
        s
    }
}

/// Evaluates the truncated series of `kind` with `terms` terms at index `n`.
///
/// For the zeta and Euler identities both sides are divided by the power of
/// pi, so `exact` is the rational coefficient.
pub fn spectral_series_check(kind: SeriesKind, n: u32, terms: usize) -> Result<SeriesCheck> {
    if terms == 0 {
        return Err(Error::Domain("at least one term is needed".into()));
    }
    match kind {
        SeriesKind::UpdownEq9 => {
            if n == 0 {
                return Err(Error::Domain("the series starts at n = 1".into()));
            }
            let alternating = n.is_multiple_of(2);
            let e = n as i32 + 1;
            let sum = partial_sum(terms, alternating, |k| {
                let sign = if alternating && k % 2 == 0 { -1.0 } else { 1.0 };
                sign / powi(2.0 * k as f64 - 1.0, e)
            });
            let scale = to_f64(&int_rat(pow2(n + 2) * factorial(n as u64))) / powi(PI, e);
            let exact = int_rat(zigzag_numbers(n as usize)[n as usize].clone());
            Ok(check(scale * sum, exact))
        }
        SeriesKind::Strip3Zeta => {
            if n == 0 {
                return Err(Error::Domain("the series starts at n = 1".into()));
            }
            let e = 2 * n as i32;
            let sum = partial_sum(terms, false, |k| powi(k as f64, -e));
            let b = &bernoulli_numbers(2 * n as usize)[2 * n as usize];
            let mut exact = b * int_rat(pow2(2 * n - 1)) / int_rat(factorial(2 * n as u64));
            if n.is_multiple_of(2) {
                exact = -exact;
            }
            Ok(check(sum / powi(PI, e), exact))
        }
        SeriesKind::Strip4Euler => {
            let e = 2 * n as i32 + 1;
            let sum = partial_sum(terms, true, |k| {
                let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
                sign / powi(2.0 * k as f64 - 1.0, e)
            });
            let en = euler_tangent_numbers(n as usize).euler(n as usize).clone();
            let mut exact = int_rat(en) / int_rat(pow2(2 * n + 2) * factorial(2 * n as u64));
            if n % 2 == 1 {
                exact = -exact;
            }
            Ok(check(sum / powi(PI, e), exact))
        }
    }
}

fn theta(j: u32) -> f64 {
    PI * (2.0 * j as f64 - 1.0) / 2.0
}

/// `I(a, j) = integral_0^1 x^a / a! cos(theta_j x) dx` with
/// `theta_j = pi (2j - 1) / 2`, in closed form.
pub fn i_integral_closed(a: u32, j: u32) -> f64 {
    assert!(j >= 1, "j starts at 1");
    let t = theta(j);
    let mut s = 0.0;
    for p in (0..=a / 2).rev() {
        let sign = if p % 2 == 0 { 1.0 } else { -1.0 };
        let f = to_f64(&int_rat(factorial((a - 2 * p) as u64)));
        s += sign / (f * powi(t, 2 * p as i32 + 1));
    }
    if j.is_multiple_of(2) {
        s = -s;
    }
    if a % 2 == 1 {
        let sign = if a.div_ceil(2).is_multiple_of(2) { 1.0 } else { -1.0 };
        s += sign / powi(t, a as i32 + 1);
    }
    s
}

/// The closed form next to a 64-point quadrature of the same integral.
pub fn i_integral_check(a: u32, j: u32) -> (f64, f64) {
    let rule = GaussLegendre::new(64);
    let t = theta(j);
    let f = to_f64(&int_rat(factorial(a as u64)));
    let quad = rule.integrate(0.0, 1.0, |x| powi(x, a as i32) / f * libm::cos(t * x));
    (i_integral_closed(a, j), quad)
}

/// `X_N(p, q)` from the truncated eigen-expansion
/// `2 sum_j ((-1)^{j+1} / theta_j)^N I(p, j) I(q, j)`.
pub fn x_series(n: u32, p: u32, q: u32, terms: usize) -> f64 {
    let mut s = 0.0;
    for j in (1..=terms as u32).rev() {
        let mut c = powi(1.0 / theta(j), n as i32);
        if j % 2 == 0 && n % 2 == 1 {
            c = -c;
        }
        s += c * i_integral_closed(p, j) * i_integral_closed(q, j);
    }
    2.0 * s
}

/// Relative error of [`x_series`] against the exact coefficient.
pub fn x_series_check(n: u32, p: u32, q: u32, terms: usize) -> Result<f64> {
    let exact = to_f64(&x_coeff(n as i64, p, q)?);
    Ok(libm::fabs(x_series(n, p, q, terms) - exact) / libm::fabs(exact))
}

/// `det(cos(pi (2 j_p - 1) x_q / 2))` with `j_p = k + 1 - p`.
pub fn principal_det(x: &[f64]) -> f64 {
    let k = x.len();
    let mut a = alloc::vec![0.0; k * k];
    for p in 0..k {
        let j = (k - p) as f64;
        for q in 0..k {
            a[p * k + q] = libm::cos(PI * (2.0 * j - 1.0) * x[q] / 2.0);
        }
    }
    det_f64(&mut a, k)
}

/// The same determinant as a product, with `c_q = cos(pi x_q / 2)`:
/// `2^{k(k-1)} prod c_q prod_{p<q} (c_p^2 - c_q^2)`.
pub fn principal_product(x: &[f64]) -> f64 {
    let k = x.len();
    let c: Vec<f64> = x.iter().map(|&t| libm::cos(PI * t / 2.0)).collect();
    let mut v = powi(2.0, (k * (k.saturating_sub(1))) as i32);
    for p in 0..k {
        v *= c[p];
        for q in p + 1..k {
            v *= c[p] * c[p] - c[q] * c[q];
        }
    }
    v
}

/// Largest `|det - product|` over random points of the unit cube.
pub fn principal_product_check(k: usize, samples: usize, seed: u64) -> f64 {
    let mut rng = SmallRng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let x: Vec<f64> = (0..k).map(|_| rng.gen::<f64>()).collect();
            libm::fabs(principal_det(&x) - principal_product(&x))
        })
        .fold(0.0, f64::max)
}
