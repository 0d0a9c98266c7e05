//! Closed forms for strip tableaux: the `X_N` / `Y_N` coefficients, the
//! general determinant formula, the specialized 3-, 4- and 5-strip formulas,
//! and the descent-class counts `alpha_n`, `beta_n`.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::Zero;

use crate::arith::{det_cofactor, factorial, int_rat, nonnegative_integer, pow2, BigInt, BigRat};
use crate::numbers::{euler_tangent_numbers, ScaledTable};
use crate::shapes::{strip_shape, StripSpec};
use crate::{Error, Result};

/// `X` for even strips, `Y` for odd ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coefficient {
    X,
    Y,
}

impl Coefficient {
    pub fn for_strip(m: u32) -> Self {
        if m.is_multiple_of(2) {
            Coefficient::X
        } else {
            Coefficient::Y
        }
    }
}

/// Evaluates `X_N(p, q)` and `Y_N(p, q)` against one shared table of the
/// scaled zig-zag numbers.
#[derive(Debug, Clone)]
pub struct XYTable {
    table: ScaledTable,
}

impl XYTable {
    /// Covers every `(N, p, q)` with `N + p + q + 1 <= n_max`.
    pub fn new(n_max: usize) -> Self {
        XYTable { table: ScaledTable::new(n_max) }
    }

    fn ensure(&mut self, top: usize) {
        if top >= self.table.len() {
            self.table = ScaledTable::new(top.max(2 * self.table.len()));
        }
    }

    pub fn eval(&mut self, which: Coefficient, n: i64, p: u32, q: u32) -> Result<BigRat> {
        if n < -1 {
            return Err(Error::Domain(alloc::format!("N = {n} is below -1")));
        }
        self.ensure((n + p as i64 + q as i64 + 1) as usize);
        let t = &self.table;
        let base = (n + 1) as usize;
        Ok(match which {
            Coefficient::X => xy(base, p, q, 1, |i| t.abar(i), |i| t.abar(i)),
            Coefficient::Y => xy(base, p, q, 0, |i| t.ahat(i), |i| t.atilde(i)),
        })
    }
}

fn neg_one(e: usize) -> bool {
    e % 2 == 1
}

/// The shared skeleton of `X` and `Y`: a double sum in `outer`, one single
/// sum per argument of parity `gate` in `inner`, and a corner term when both
/// arguments have parity `gate`. For `X` the gate is odd and the single sums
/// use the same sequence as the double sum. `base` is `N + 1`.
fn xy<'a>(
    base: usize,
    p: u32,
    q: u32,
    gate: u32,
    outer: impl Fn(usize) -> &'a BigRat,
    inner: impl Fn(usize) -> &'a BigRat,
) -> BigRat {
    let (p, q) = (p as usize, q as usize);
    let fact = |x: usize| int_rat(factorial(x as u64));
    let signed = |neg: bool, v: BigRat| if neg { -v } else { v };
    let mut s = BigRat::zero();
    for i in 0..=p / 2 {
        for j in 0..=q / 2 {
            let v = outer(base + 2 * i + 2 * j) / (fact(p - 2 * i) * fact(q - 2 * j));
            s += signed(neg_one(i + j), v);
        }
    }
    let single = |a: usize, b: usize| {
        let mut t = BigRat::zero();
        for j in 0..=b / 2 {
            t += signed(neg_one(j), inner(base + a + 2 * j) / fact(b - 2 * j));
        }
        t
    };
    // sign exponents: (a+1)/2 for odd a, a/2 for even a; both are (a + gate)/2
    let g = gate as usize;
    if p % 2 == g {
        s += signed(neg_one((p + g) / 2), single(p, q));
    }
    if q % 2 == g {
        s += signed(neg_one((q + g) / 2), single(q, p));
    }
    if p % 2 == g && q % 2 == g {
        // X: (-1)^{(p+q)/2 + 1}; Y: (-1)^{(p+q)/2}
        s += signed(neg_one((p + q) / 2 + g), outer(base + p + q).clone());
    }
    s
}

/// `X_N(p, q)`, defined for `N >= -1`.
pub fn x_coeff(n: i64, p: u32, q: u32) -> Result<BigRat> {
    XYTable::new(0).eval(Coefficient::X, n, p, q)
}

/// `Y_N(p, q)`, defined for `N >= -1`.
pub fn y_coeff(n: i64, p: u32, q: u32) -> Result<BigRat> {
    XYTable::new(0).eval(Coefficient::Y, n, p, q)
}

/// The `k x k` matrix `X_N(L_i, M_j)` (or `Y_N`) of a strip.
pub fn strip_matrix(spec: &StripSpec) -> Result<Vec<Vec<BigRat>>> {
    let which = Coefficient::for_strip(spec.m());
    let n = spec.big_n();
    let ls = spec.l_values();
    let ms = spec.m_values();
    let top = n + ls.iter().chain(&ms).copied().max().unwrap_or(0) as i64 * 2 + 1;
    let mut table = XYTable::new(top.max(0) as usize);
    ls.iter()
        .map(|&l| ms.iter().map(|&m| table.eval(which, n, l, m)).collect())
        .collect()
}

fn to_count(value: BigRat, what: impl fmt::Display) -> Result<BigInt> {
    nonnegative_integer(&value)
        .ok_or_else(|| Error::Integrality(alloc::format!("{what} evaluated to {value}")))
}

/// Tableaux of a strip by the determinant formula
/// `(-1)^{k(k-1)/2} |D|! det(X_N(L_i, M_j))`, with `Y_N` for odd `m`.
pub fn count_strip(spec: &StripSpec) -> Result<BigInt> {
    let cells = strip_shape(spec)?.n_cells();
    let k = spec.k();
    let det = det_cofactor(&strip_matrix(spec)?);
    let mut value = det * int_rat(factorial(cells as u64));
    if (k * (k.saturating_sub(1)) / 2) % 2 == 1 {
        value = -value;
    }
    to_count(value, spec)
}

/// The three 3-strip families: head and tail `(0)/(0)`, `(1)/(0)`, `(1)/(1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Strip3 {
    A,
    B,
    C,
}

/// The two 4-strip families: head and tail `(0,0)` or `(1,0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Strip4 {
    F,
    G,
}

impl Strip3 {
    pub fn spec(self, n: u32) -> Result<StripSpec> {
        let (h, t) = match self {
            Strip3::A => (0, 0),
            Strip3::B => (1, 0),
            Strip3::C => (1, 1),
        };
        StripSpec::from_parts(3, n, &[h], &[t])
    }
}

impl Strip4 {
    pub fn spec(self, n: u32) -> Result<StripSpec> {
        let h = match self {
            Strip4::F => [0, 0],
            Strip4::G => [1, 0],
        };
        StripSpec::from_parts(4, n, &h, &h)
    }
}

impl FromStr for Strip3 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" | "A" => Ok(Strip3::A),
            "b" | "B" => Ok(Strip3::B),
            "c" | "C" => Ok(Strip3::C),
            _ => Err(Error::UnknownName(alloc::format!("3-strip variant `{s}`"))),
        }
    }
}

impl FromStr for Strip4 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "f" | "F" => Ok(Strip4::F),
            "g" | "G" => Ok(Strip4::G),
            _ => Err(Error::UnknownName(alloc::format!("4-strip variant `{s}`"))),
        }
    }
}

fn need(n: u32, min: u32) -> Result<()> {
    if n < min {
        return Err(Error::Domain(alloc::format!("n = {n} must be at least {min}")));
    }
    Ok(())
}

fn fr(n: u64) -> BigRat {
    int_rat(factorial(n))
}

/// Closed forms for the 3-strip families in terms of tangent numbers.
pub fn count_3strip(variant: Strip3, n: u32) -> Result<BigInt> {
    need(n, 1)?;
    let n64 = n as u64;
    let t = int_rat(euler_tangent_numbers(n as usize).tangent(n as usize).clone());
    let base = &t / fr(2 * n64 - 1);
    let value = match variant {
        Strip3::A => fr(3 * n64 - 2) * base / int_rat(pow2(2 * n - 2)),
        Strip3::B => fr(3 * n64 - 1) * base / int_rat(pow2(2 * n - 1)),
        Strip3::C => {
            fr(3 * n64) * base * int_rat(pow2(2 * n - 1) - 1u32)
                / int_rat(pow2(2 * n - 1) * (pow2(2 * n) - 1u32))
        }
    };
    to_count(value, alloc::format!("3-strip {variant:?} at n = {n}"))
}

/// Closed forms for the 4-strip families in terms of Euler and tangent
/// numbers.
pub fn count_4strip(variant: Strip4, n: u32) -> Result<BigInt> {
    need(n, 1)?;
    let n64 = n as u64;
    let et = euler_tangent_numbers(n as usize + 1);
    let e = |i: usize| int_rat(et.euler(i).clone());
    let nn = n as usize;
    let value = match variant {
        Strip4::F => {
            let t = int_rat(et.tangent(nn).clone());
            let first = &t * &t / (fr(2 * n64 - 1) * fr(2 * n64 - 1));
            let second = -(e(nn - 1) * e(nn)) / (fr(2 * n64 - 2) * fr(2 * n64));
            fr(4 * n64 - 2) * (first - second)
        }
        Strip4::G => {
            let first = e(nn) * e(nn) / (fr(2 * n64) * fr(2 * n64));
            let second = e(nn - 1) * e(nn + 1) / (fr(2 * n64 - 2) * fr(2 * n64 + 2));
            fr(4 * n64) * (first - second)
        }
    };
    to_count(value, alloc::format!("4-strip {variant:?} at n = {n}"))
}

/// The 5-strip with empty head and tail, for `n >= 2`.
pub fn count_5strip(n: u32) -> Result<BigInt> {
    need(n, 2)?;
    let n64 = n as u64;
    let t = int_rat(euler_tangent_numbers(n as usize - 1).tangent(n as usize - 1).clone());
    let f = fr(2 * n64 - 3);
    let den = &f * &f * int_rat(pow2(4 * n - 6)) * int_rat(pow2(2 * n - 2) - 1u32);
    let value = fr(5 * n64 - 6) * &t * &t / den;
    to_count(value, alloc::format!("5-strip at n = {n}"))
}

/// Size and descent set of the permutations counted by `alpha_n`:
/// descents `{1..p}`, every other position from `p + 1` to `p + 2n - 1`,
/// and then `q` more in a row.
pub fn alpha_class(n: u32, p: u32, q: u32) -> (u32, Vec<u32>) {
    let mut d: Vec<u32> = (1..=p).collect();
    d.extend((p + 1..p + 2 * n).step_by(2));
    d.extend(p + 2 * n..p + 2 * n + q);
    (2 * n + p + q, d)
}

/// Size and descent set of the permutations counted by `beta_n`: as for
/// `alpha_n` but one position longer and ending in `q + 1` ascents.
pub fn beta_class(n: u32, p: u32, q: u32) -> (u32, Vec<u32>) {
    let mut d: Vec<u32> = (1..=p).collect();
    d.extend((p + 1..p + 2 * n).step_by(2));
    (2 * n + 1 + p + q, d)
}

/// `alpha_n = (2n+p+q)! X_{2n-1}(p,q)` and `beta_n = (2n+1+p+q)! X_{2n}(p,q)`.
pub fn alpha_beta(n: u32, p: u32, q: u32) -> Result<(BigInt, BigInt)> {
    need(n, 1)?;
    let mut t = XYTable::new((2 * n + p + q + 1) as usize);
    let n64 = n as i64;
    let a = t.eval(Coefficient::X, 2 * n64 - 1, p, q)? * fr((2 * n + p + q) as u64);
    let b = t.eval(Coefficient::X, 2 * n64, p, q)? * fr((2 * n + 1 + p + q) as u64);
    Ok((
        to_count(a, alloc::format!("alpha at n={n}, p={p}, q={q}"))?,
        to_count(b, alloc::format!("beta at n={n}, p={p}, q={q}"))?,
    ))
}
