use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_traits::{One, Zero};

use super::{bernoulli_numbers, zigzag_numbers};
use crate::arith::{factorial, int_rat, pow2, BigInt, BigRat};
use crate::{Error, Result};

/// A power series truncated after `x^order`, with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatSeries {
    coeffs: Vec<BigRat>,
}

impl RatSeries {
    /// Coefficients `c_0 ..= c_order`.
    pub fn from_coeffs(coeffs: Vec<BigRat>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least its constant term");
        RatSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        RatSeries { coeffs: alloc::vec![BigRat::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRat::one();
        s
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = BigRat::one();
        }
        s
    }

    /// Series with `c_j = values[j] / j!`.
    pub fn from_egf(values: impl IntoIterator<Item = BigRat>, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (j, v) in values.into_iter().take(order + 1).enumerate() {
            s.coeffs[j] = v / int_rat(factorial(j as u64));
        }
        s
    }

    pub fn exp(order: usize) -> Self {
        Self::from_egf(core::iter::repeat(BigRat::one()), order)
    }

    pub fn sin(order: usize) -> Self {
        let vals = (0..=order).map(|j| match j % 4 {
            1 => BigRat::one(),
            3 => -BigRat::one(),
            _ => BigRat::zero(),
        });
        Self::from_egf(vals, order)
    }

    pub fn cos(order: usize) -> Self {
        let vals = (0..=order).map(|j| match j % 4 {
            0 => BigRat::one(),
            2 => -BigRat::one(),
            _ => BigRat::zero(),
        });
        Self::from_egf(vals, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &BigRat {
        &self.coeffs[j]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order());
        RatSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        RatSeries { coeffs: self.coeffs.iter().map(|v| v * c).collect() }
    }

    /// `f(c x)`.
    pub fn dilate(&self, c: &BigRat) -> Self {
        let mut p = BigRat::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for v in &self.coeffs {
            coeffs.push(v * &p);
            p *= c;
        }
        RatSeries { coeffs }
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotInvertible("series has zero constant term".into()));
        }
        let n = self.order();
        let inv0 = c0.recip();
        let mut out = alloc::vec![BigRat::zero(); n + 1];
        out[0] = inv0.clone();
        for j in 1..=n {
            let mut acc = BigRat::zero();
            for i in 1..=j {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &out[j - i];
                }
            }
            out[j] = -acc * &inv0;
        }
        Ok(RatSeries { coeffs: out })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    /// `num / den` where both vanish at 0: both are divided by `x` first, so
    /// the result has order one less than the inputs.
    pub fn quotient_removable(num: &Self, den: &Self) -> Result<Self> {
        if !num.coeffs[0].is_zero() || !den.coeffs[0].is_zero() {
            return Err(Error::NotInvertible(
                "removable quotient expects both constant terms to vanish".into(),
            ));
        }
        if num.order() == 0 || den.order() == 0 {
            return Err(Error::NotInvertible("order too small to shift".into()));
        }
        let shift = |s: &Self| RatSeries { coeffs: s.coeffs[1..].to_vec() };
        shift(num).div(&shift(den))
    }

    /// `x / (e^x - 1)`, the Bernoulli generating function.
    pub fn x_over_expm1(order: usize) -> Self {
        let expm1 = &Self::exp(order + 1) - &Self::one(order + 1);
        Self::quotient_removable(&Self::x(order + 1), &expm1).expect("e^x - 1 = x + ...")
    }

    /// `x cot x`, assembled from Bernoulli numbers.
    pub fn x_cot_x(order: usize) -> Self {
        let b = bernoulli_numbers(order);
        let mut s = Self::zero(order);
        for n in 0..=order / 2 {
            // (-1)^n 4^n B_{2n} / (2n)!
            let mut c = &b[2 * n] * int_rat(pow2(2 * n as u32)) / int_rat(factorial(2 * n as u64));
            if n % 2 == 1 {
                c = -c;
            }
            s.coeffs[2 * n] = c;
        }
        s
    }
}

impl fmt::Display for RatSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{j}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

impl Add for &RatSeries {
    type Output = RatSeries;
    fn add(self, rhs: Self) -> RatSeries {
        let n = self.order().min(rhs.order());
        RatSeries {
            coeffs: (0..=n).map(|j| &self.coeffs[j] + &rhs.coeffs[j]).collect(),
        }
    }
}

impl Sub for &RatSeries {
    type Output = RatSeries;
    fn sub(self, rhs: Self) -> RatSeries {
        let n = self.order().min(rhs.order());
        RatSeries {
            coeffs: (0..=n).map(|j| &self.coeffs[j] - &rhs.coeffs[j]).collect(),
        }
    }
}

impl Neg for &RatSeries {
    type Output = RatSeries;
    fn neg(self) -> RatSeries {
        RatSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &RatSeries {
    type Output = RatSeries;
    fn mul(self, rhs: Self) -> RatSeries {
        let n = self.order().min(rhs.order());
        let mut out = alloc::vec![BigRat::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        RatSeries { coeffs: out }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SeriesName {
    TanPlusSec,
    Tan,
    Sec,
    BernoulliEgf,
    /// `x (cot(x/2) - cot x)`, the generating function of the closed 3-strips.
    Strip3Gf,
}

impl SeriesName {
    pub const ALL: [SeriesName; 5] = [
        SeriesName::TanPlusSec,
        SeriesName::Tan,
        SeriesName::Sec,
        SeriesName::BernoulliEgf,
        SeriesName::Strip3Gf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeriesName::TanPlusSec => "tan_plus_sec",
            SeriesName::Tan => "tan",
            SeriesName::Sec => "sec",
            SeriesName::BernoulliEgf => "bernoulli_egf",
            SeriesName::Strip3Gf => "strip3_gf",
        }
    }
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SeriesName::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownName(s.into()))
    }
}

/// Taylor coefficients up to `x^order`. No transcendental evaluation is
/// involved: trigonometric series come from the zig-zag and Bernoulli tables.
pub fn series_coefficients(name: SeriesName, order: usize) -> RatSeries {
    match name {
        SeriesName::TanPlusSec => {
            RatSeries::from_egf(zigzag_numbers(order).into_iter().map(int_rat), order)
        }
        SeriesName::Tan | SeriesName::Sec => {
            let keep = if name == SeriesName::Tan { 1 } else { 0 };
            let vals = zigzag_numbers(order)
                .into_iter()
                .enumerate()
                .map(|(j, a)| if j % 2 == keep { int_rat(a) } else { BigRat::zero() });
            RatSeries::from_egf(vals, order)
        }
        SeriesName::BernoulliEgf => RatSeries::from_egf(bernoulli_numbers(order), order),
        SeriesName::Strip3Gf => {
            let xcot = RatSeries::x_cot_x(order);
            // x cot(x/2) = 2 * (y cot y)|_{y = x/2}
            let half = BigRat::new(BigInt::one(), BigInt::from(2));
            let xcot_half = xcot.dilate(&half).scale(&int_rat(BigInt::from(2)));
            &xcot_half - &xcot
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use alloc::vec;

    #[test]
    fn tan_plus_sec_low_order() {
        let s = series_coefficients(SeriesName::TanPlusSec, 4);
        assert_eq!(
            s.coeffs(),
            &[rat(1, 1), rat(1, 1), rat(1, 2), rat(1, 3), rat(5, 24)][..]
        );
    }

    #[test]
    fn sec_is_reciprocal_of_cos() {
        let sec = RatSeries::cos(16).inverse().unwrap();
        assert_eq!(sec, series_coefficients(SeriesName::Sec, 16));
        // A_4 = E_4 = 5
        assert_eq!(sec.coeff(4) * int_rat(factorial(4)), rat(5, 1));
    }

    #[test]
    fn tan_is_sin_over_cos() {
        let tan = RatSeries::sin(15).div(&RatSeries::cos(15)).unwrap();
        assert_eq!(tan, series_coefficients(SeriesName::Tan, 15));
    }

    #[test]
    fn bernoulli_egf_inverts_expm1_over_x() {
        assert_eq!(
            RatSeries::x_over_expm1(12),
            series_coefficients(SeriesName::BernoulliEgf, 12)
        );
    }

    #[test]
    fn x_cot_x_matches_cos_over_sinc() {
        let via_division =
            RatSeries::quotient_removable(&(&RatSeries::x(15) * &RatSeries::cos(15)), &RatSeries::sin(15))
                .unwrap();
        assert_eq!(via_division, RatSeries::x_cot_x(14));
    }

    #[test]
    fn strip3_gf_low_order() {
        let s = series_coefficients(SeriesName::Strip3Gf, 4);
        assert_eq!(s.coeff(0), &rat(1, 1));
        assert_eq!(s.coeff(1), &rat(0, 1));
        // f(D_1) = 1 over 3!
        assert_eq!(s.coeff(2), &rat(1, 6));
        // f(D_2) = 14 over 6!
        assert_eq!(s.coeff(4), &rat(14, 720));
    }

    #[test]
    fn division_by_non_unit_is_rejected() {
        assert!(RatSeries::one(3).div(&RatSeries::x(3)).is_err());
        assert!(RatSeries::quotient_removable(&RatSeries::one(3), &RatSeries::x(3)).is_err());
    }

    #[test]
    fn mul_truncates() {
        let a = RatSeries::from_coeffs(vec![rat(1, 1), rat(1, 1)]);
        let sq = &a * &a;
        assert_eq!(sq.coeffs(), &[rat(1, 1), rat(2, 1)][..]);
        assert_eq!(sq.order(), 1);
    }

    #[test]
    fn names_parse() {
        assert_eq!("strip3_gf".parse::<SeriesName>().unwrap(), SeriesName::Strip3Gf);
        assert!(matches!("cot".parse::<SeriesName>(), Err(Error::UnknownName(_))));
    }
}
