//! Zig-zag, Euler, tangent and Bernoulli numbers, and the scaled zig-zag
//! sequences used by the strip formulas.
//!
//! Everything here is exact. Zig-zag numbers come from the Seidel
//! boustrophedon triangle (integer additions only); Bernoulli numbers from the
//! convolution recurrence of `x/(e^x - 1)`.

mod series;

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::arith::{binomial, factorial, int_rat, pow2, BigInt, BigRat};
use crate::{Error, Result};

pub use series::{series_coefficients, RatSeries, SeriesName};

/// `A_0 ..= A_{n_max}`: the number of up-down permutations of each size.
pub fn zigzag_numbers(n_max: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(BigInt::one());
    // Seidel-Entringer triangle, one row per n; the last entry of row n is A_n.
    let mut row: Vec<BigInt> = alloc::vec![BigInt::one()];
    for _ in 1..=n_max {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::zero());
        for v in row.iter().rev() {
            let s = next.last().unwrap() + v;
            next.push(s);
        }
        out.push(next.last().unwrap().clone());
        row = next;
    }
    out
}

/// `B_0 ..= B_{n_max}` with the `B_1 = -1/2` convention.
pub fn bernoulli_numbers(n_max: usize) -> Vec<BigRat> {
    let mut b: Vec<BigRat> = Vec::with_capacity(n_max + 1);
    b.push(BigRat::one());
    for n in 1..=n_max {
        // sum_{j=0}^{n} C(n+1, j) B_j = 0
        let mut acc = BigRat::zero();
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            acc += bj * int_rat(binomial(n as u64 + 1, j as u64));
        }
        b.push(-acc / int_rat(BigInt::from(n + 1)));
    }
    b
}

/// Euler numbers `E_{2n}` and tangent numbers `T_n`, both read off the zig-zag
/// triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerTangent {
    euler: Vec<BigInt>,
    tangent: Vec<BigInt>,
}

impl EulerTangent {
    /// `E_{2n}`, for `n <= n_max`.
    pub fn euler(&self, n: usize) -> &BigInt {
        &self.euler[n]
    }

    /// `T_n`, for `1 <= n <= n_max`.
    pub fn tangent(&self, n: usize) -> &BigInt {
        assert!(n >= 1, "tangent numbers start at T_1");
        &self.tangent[n - 1]
    }

    pub fn n_max(&self) -> usize {
        self.tangent.len()
    }
}

pub fn euler_tangent_numbers(n_max: usize) -> EulerTangent {
    let a = zigzag_numbers(2 * n_max);
    let euler = (0..=n_max)
        .map(|n| if n % 2 == 0 { a[2 * n].clone() } else { -a[2 * n].clone() })
        .collect();
    let tangent = (1..=n_max).map(|n| a[2 * n - 1].clone()).collect();
    EulerTangent { euler, tangent }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SeqKind {
    Zigzag,
    Euler,
    Tangent,
    Bernoulli,
    /// `A_n / n!`
    Abar,
    /// `Abar_n / (2^{n+1} - 1)`
    Atilde,
    /// `(2^n - 1) Abar_n / (2^n (2^{n+1} - 1))`
    Ahat,
}

impl SeqKind {
    pub const ALL: [SeqKind; 7] = [
        SeqKind::Zigzag,
        SeqKind::Euler,
        SeqKind::Tangent,
        SeqKind::Bernoulli,
        SeqKind::Abar,
        SeqKind::Atilde,
        SeqKind::Ahat,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeqKind::Zigzag => "zigzag",
            SeqKind::Euler => "euler",
            SeqKind::Tangent => "tangent",
            SeqKind::Bernoulli => "bernoulli",
            SeqKind::Abar => "abar",
            SeqKind::Atilde => "atilde",
            SeqKind::Ahat => "ahat",
        }
    }

    /// Index of the first stored value.
    pub fn first_index(self) -> usize {
        match self {
            SeqKind::Tangent => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for SeqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeqKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SeqKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownName(s.into()))
    }
}

/// Grow-only memo of one sequence. Extending never rewrites stored entries.
///
/// For `Euler` the value at index `n` is `E_n` (zero at odd `n`); for
/// `Tangent` index 0 is `T_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqTable {
    kind: SeqKind,
    values: Vec<BigRat>,
}

impl SeqTable {
    pub fn new(kind: SeqKind) -> Self {
        SeqTable { kind, values: Vec::new() }
    }

    pub fn kind(&self) -> SeqKind {
        self.kind
    }

    pub fn values(&self) -> &[BigRat] {
        &self.values
    }

    /// Makes sure the table holds every index up to `n` (inclusive).
    pub fn extend_to(&mut self, n: usize) {
        let first = self.kind.first_index();
        if n < first || self.values.len() > n - first {
            return;
        }
        let fresh = compute(self.kind, n);
        self.values.extend(fresh.into_iter().skip(self.values.len()));
    }

    pub fn get(&mut self, n: usize) -> Result<&BigRat> {
        let first = self.kind.first_index();
        if n < first {
            return Err(Error::Domain(alloc::format!(
                "{} numbers start at index {first}",
                self.kind
            )));
        }
        self.extend_to(n);
        Ok(&self.values[n - first])
    }
}

/// The whole sequence from its first index up to `n_max`.
pub fn sequence(kind: SeqKind, n_max: usize) -> Vec<BigRat> {
    compute(kind, n_max)
}

fn compute(kind: SeqKind, n_max: usize) -> Vec<BigRat> {
    match kind {
        SeqKind::Zigzag => zigzag_numbers(n_max).into_iter().map(int_rat).collect(),
        SeqKind::Bernoulli => bernoulli_numbers(n_max),
        SeqKind::Euler => zigzag_numbers(n_max)
            .into_iter()
            .enumerate()
            .map(|(n, a)| match n % 4 {
                0 => int_rat(a),
                2 => -int_rat(a),
                _ => BigRat::zero(),
            })
            .collect(),
        SeqKind::Tangent => {
            if n_max == 0 {
                return Vec::new();
            }
            let a = zigzag_numbers(2 * n_max - 1);
            (1..=n_max).map(|n| int_rat(a[2 * n - 1].clone())).collect()
        }
        SeqKind::Abar | SeqKind::Atilde | SeqKind::Ahat => {
            let scaled = ScaledTable::new(n_max);
            (0..=n_max)
                .map(|n| scaled.get(kind, n).clone())
                .collect()
        }
    }
}

/// `Abar`, `Atilde`, `Ahat` side by side, built from one zig-zag pass.
#[derive(Debug, Clone)]
pub struct ScaledTable {
    abar: Vec<BigRat>,
    atilde: Vec<BigRat>,
    ahat: Vec<BigRat>,
}

impl ScaledTable {
    pub fn new(n_max: usize) -> Self {
        let a = zigzag_numbers(n_max);
        let mut abar = Vec::with_capacity(n_max + 1);
        let mut atilde = Vec::with_capacity(n_max + 1);
        let mut ahat = Vec::with_capacity(n_max + 1);
        for (n, an) in a.into_iter().enumerate() {
            let bar = BigRat::new(an, factorial(n as u64));
            let mersenne = pow2(n as u32 + 1) - 1u32;
            let tilde = &bar / int_rat(mersenne.clone());
            let hat = &bar * int_rat(pow2(n as u32) - 1u32)
                / int_rat(pow2(n as u32) * mersenne);
            abar.push(bar);
            atilde.push(tilde);
            ahat.push(hat);
        }
        ScaledTable { abar, atilde, ahat }
    }

    pub fn len(&self) -> usize {
        self.abar.len()
    }

    pub fn is_empty(&self) -> bool {
        self.abar.is_empty()
    }

    pub fn abar(&self, n: usize) -> &BigRat {
        &self.abar[n]
    }

    pub fn atilde(&self, n: usize) -> &BigRat {
        &self.atilde[n]
    }

    pub fn ahat(&self, n: usize) -> &BigRat {
        &self.ahat[n]
    }

    fn get(&self, kind: SeqKind, n: usize) -> &BigRat {
        match kind {
            SeqKind::Abar => self.abar(n),
            SeqKind::Atilde => self.atilde(n),
            SeqKind::Ahat => self.ahat(n),
            _ => unreachable!("not a scaled sequence"),
        }
    }
}

/// One of `Abar_n`, `Atilde_n`, `Ahat_n`.
pub fn scaled_a(kind: SeqKind, n: i64) -> Result<BigRat> {
    if !matches!(kind, SeqKind::Abar | SeqKind::Atilde | SeqKind::Ahat) {
        return Err(Error::Domain(alloc::format!("{kind} is not a scaled zig-zag sequence")));
    }
    if n < 0 {
        return Err(Error::Domain(alloc::format!("negative index {n}")));
    }
    Ok(ScaledTable::new(n as usize).get(kind, n as usize).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use alloc::vec;

    /// Counts permutations with s(1) < s(2) > s(3) < ... by brute force.
    fn brute_updown(n: usize) -> u64 {
        let mut perm: Vec<usize> = (0..n).collect();
        let mut count = 0;
        loop {
            let ok = perm
                .windows(2)
                .enumerate()
                .all(|(i, w)| if i % 2 == 0 { w[0] < w[1] } else { w[0] > w[1] });
            if ok {
                count += 1;
            }
            if !crate::arith::next_permutation(&mut perm) {
                break;
            }
        }
        count
    }

    #[test]
    fn zigzag_small() {
        assert_eq!(zigzag_numbers(0), vec![BigInt::one()]);
        assert_eq!(zigzag_numbers(1), vec![BigInt::one(), BigInt::one()]);
        let expected: Vec<BigInt> = [1, 1, 1, 2, 5, 16, 61, 272, 1385]
            .into_iter()
            .map(BigInt::from)
            .collect();
        assert_eq!(zigzag_numbers(8), expected);
    }

    #[test]
    fn zigzag_matches_brute_force() {
        let a = zigzag_numbers(8);
        for n in 0..=8 {
            assert_eq!(a[n], BigInt::from(brute_updown(n)), "n = {n}");
        }
    }

    #[test]
    fn bernoulli_small() {
        let b = bernoulli_numbers(6);
        assert_eq!(b[0], rat(1, 1));
        assert_eq!(b[1], rat(-1, 2));
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[3], rat(0, 1));
        assert_eq!(b[4], rat(-1, 30));
        assert_eq!(b[5], rat(0, 1));
        assert_eq!(b[6], rat(1, 42));
    }

    #[test]
    fn euler_and_tangent() {
        let et = euler_tangent_numbers(3);
        assert_eq!(et.euler(0), &BigInt::from(1));
        assert_eq!(et.euler(1), &BigInt::from(-1));
        assert_eq!(et.euler(2), &BigInt::from(5));
        assert_eq!(et.euler(3), &BigInt::from(-61));
        assert_eq!(et.tangent(1), &BigInt::from(1));
        assert_eq!(et.tangent(2), &BigInt::from(2));
        assert_eq!(et.tangent(3), &BigInt::from(16));
    }

    #[test]
    fn tangent_from_bernoulli_small_cases() {
        // T_n = (-1)^{n-1} 4^n (4^n - 1) B_{2n} / (2n)
        let b = bernoulli_numbers(4);
        let t1 = rat(4 * 3, 2) * &b[2];
        let t2 = -rat(16 * 15, 4) * &b[4];
        assert_eq!(t1, rat(1, 1));
        assert_eq!(t2, rat(2, 1));
    }

    #[test]
    fn scaled_values() {
        assert_eq!(scaled_a(SeqKind::Abar, 0).unwrap(), rat(1, 1));
        assert_eq!(scaled_a(SeqKind::Abar, 3).unwrap(), rat(1, 3));
        let sum = scaled_a(SeqKind::Atilde, 1).unwrap() + scaled_a(SeqKind::Ahat, 1).unwrap();
        assert_eq!(sum, rat(1, 2));
        assert!(matches!(scaled_a(SeqKind::Abar, -1), Err(Error::Domain(_))));
        assert!(matches!(scaled_a(SeqKind::Zigzag, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn tilde_plus_hat_is_bar_over_power_of_two() {
        let t = ScaledTable::new(30);
        for n in 0..=30 {
            let lhs = t.atilde(n) + t.ahat(n);
            assert_eq!(lhs, t.abar(n) / int_rat(pow2(n as u32)), "n = {n}");
        }
    }

    #[test]
    fn seq_table_grows_without_rewriting() {
        let mut t = SeqTable::new(SeqKind::Tangent);
        assert!(t.get(0).is_err());
        assert_eq!(t.get(2).unwrap(), &rat(2, 1));
        let before = t.values().to_vec();
        t.extend_to(6);
        assert_eq!(&t.values()[..before.len()], &before[..]);
        assert_eq!(t.values().len(), 6);
        assert_eq!(t.get(4).unwrap(), &rat(272, 1));

        let mut e = SeqTable::new(SeqKind::Euler);
        assert_eq!(e.get(4).unwrap(), &rat(5, 1));
        assert_eq!(e.get(3).unwrap(), &rat(0, 1));
        assert_eq!(e.get(6).unwrap(), &rat(-61, 1));
    }

    #[test]
    fn kind_names_round_trip() {
        for k in SeqKind::ALL {
            assert_eq!(k.name().parse::<SeqKind>().unwrap(), k);
        }
        assert!("nope".parse::<SeqKind>().is_err());
    }
}
