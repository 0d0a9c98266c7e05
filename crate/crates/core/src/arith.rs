//! Exact integer/rational helpers shared by the counting and formula modules.

use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use num_bigint::BigInt;
pub type BigRat = num_rational::BigRational;

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// n! / m! for m <= n.
pub fn falling(n: u64, m: u64) -> BigInt {
    debug_assert!(m <= n);
    let mut acc = BigInt::one();
    for i in (m + 1)..=n {
        acc *= i;
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int_rat(n: BigInt) -> BigRat {
    BigRat::from_integer(n)
}

/// 2^e as a big integer.
pub fn pow2(e: u32) -> BigInt {
    BigInt::one() << e
}

/// (-1)^e.
pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Returns the integer value of `r` if it is a nonnegative integer.
pub fn nonnegative_integer(r: &BigRat) -> Option<BigInt> {
    if r.is_integer() && !r.is_negative() {
        Some(r.to_integer())
    } else {
        None
    }
}

/// Determinant by cofactor expansion along the first row. Intended for the
/// k x k matrices of the strip formulas, where k rarely exceeds 4.
pub fn det_cofactor(m: &[Vec<BigRat>]) -> BigRat {
    let n = m.len();
    match n {
        0 => BigRat::one(),
        1 => m[0][0].clone(),
        2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        _ => {
            let mut total = BigRat::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BigRat>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * det_cofactor(&minor);
                if j % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            total
        }
    }
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
pub fn det_bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // exact by Sylvester's identity
                a[i][j] = v.div_floor(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Determinant of a rational matrix by Gaussian elimination.
pub fn det_gauss(mut a: Vec<Vec<BigRat>>) -> BigRat {
    let n = a.len();
    let mut det = BigRat::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return BigRat::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det *= &pivot;
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = &a[i][k] / &pivot;
            for j in k..n {
                let t = &factor * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    det
}

/// All permutations of 0..n with their signs, in lexicographic order.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let inv = perm
            .iter()
            .enumerate()
            .map(|(i, &a)| perm[i + 1..].iter().filter(|&&b| b < a).count())
            .sum::<usize>();
        out.push((perm.clone(), if inv % 2 == 0 { 1 } else { -1 }));
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

/// Advances `v` to the next lexicographic permutation; false when wrapped.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
