use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{Bound, MultiPoly};
use crate::arith::{det_gauss, factorial, int_rat, BigRat};
use crate::{Error, Result};

const DUMMY: &str = "_t";

/// `(Tf)(x) = integral of f over [0, 1 - x]` for a polynomial in at most one
/// variable. The result is in the same variable (`x` for a constant).
pub fn elkies_apply(f: &MultiPoly) -> Result<MultiPoly> {
    let f = f.prune();
    if f.vars().len() > 1 {
        return Err(Error::Domain(alloc::format!(
            "Elkies operator needs a univariate polynomial, got variables {:?}",
            f.vars()
        )));
    }
    let name = f.vars().first().cloned().unwrap_or_else(|| "x".into());
    let g = if f.vars().is_empty() { f.with_vars(&[DUMMY]) } else { f.renamed(alloc::vec![DUMMY.into()]) };
    let antideriv = g.integrate(DUMMY, &Bound::Zero, &Bound::var(name.clone()))?;
    let reflected = MultiPoly::one().sub(&MultiPoly::var(name.clone()));
    let out = antideriv.substitute(&name, &reflected)?;
    Ok(out.with_vars(&[name.as_str()]))
}

/// `<T^N (x^p / p!), x^q / q!>` on `[0, 1]`.
pub fn elkies_inner(n: u32, p: u32, q: u32) -> Result<BigRat> {
    let mono = |e: u32| {
        MultiPoly::monomial(
            alloc::vec!["x".into()],
            alloc::vec![e],
            BigRat::one() / int_rat(factorial(e as u64)),
        )
    };
    let mut f = mono(p);
    for _ in 0..n {
        f = elkies_apply(&f)?;
    }
    let prod = f.mul(&mono(q)).aligned(&["x".into()])?;
    let v = prod.integrate("x", &Bound::Zero, &Bound::One)?;
    Ok(v.constant_value().expect("integrated out"))
}

/// Both sides of Andreief's identity for a discrete measure. `f[i][t]` and
/// `g[j][t]` are the function values at support point `t`, weighted by
/// `weights[t]`. Returns `k! det(sum_t w_t f_i(t) g_j(t))` and the k-fold sum
/// of `det(f_i(t_l)) det(g_j(t_l))` against the product measure.
pub fn andreief_discrete(
    f: &[Vec<BigRat>],
    g: &[Vec<BigRat>],
    weights: &[BigRat],
) -> Result<(BigRat, BigRat)> {
    let k = f.len();
    let s = weights.len();
    if g.len() != k || f.iter().chain(g).any(|row| row.len() != s) {
        return Err(Error::Domain("function tables must be k x |support|".into()));
    }
    let gram: Vec<Vec<BigRat>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| (0..s).map(|t| &weights[t] * &f[i][t] * &g[j][t]).sum())
                .collect()
        })
        .collect();
    let lhs = det_gauss(gram) * int_rat(factorial(k as u64));

    let mut rhs = BigRat::zero();
    let mut idx = alloc::vec![0usize; k];
    loop {
        let w: BigRat = idx.iter().map(|&t| weights[t].clone()).product();
        if !w.is_zero() {
            let pick = |h: &[Vec<BigRat>]| -> Vec<Vec<BigRat>> {
                h.iter().map(|row| idx.iter().map(|&t| row[t].clone()).collect()).collect()
            };
            rhs += w * det_gauss(pick(f)) * det_gauss(pick(g));
        }
        let mut pos = 0;
        loop {
            if pos == k {
                return Ok((lhs, rhs));
            }
            idx[pos] += 1;
            if idx[pos] < s {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::formulas::x_coeff;
    use alloc::vec;

    fn x() -> MultiPoly {
        MultiPoly::var("x")
    }

    #[test]
    fn apply_examples() {
        let one_minus = MultiPoly::one().sub(&x());
        assert_eq!(elkies_apply(&MultiPoly::one()).unwrap(), one_minus.aligned(&["x".into()]).unwrap());
        let expected = one_minus.mul(&one_minus).scale(&rat(1, 2));
        assert_eq!(elkies_apply(&x()).unwrap(), expected);
        let two = MultiPoly::var("x").mul(&MultiPoly::var("y"));
        assert!(elkies_apply(&two).is_err());
    }

    #[test]
    fn inner_products() {
        assert_eq!(elkies_inner(1, 0, 0).unwrap(), rat(1, 2));
        assert_eq!(elkies_inner(1, 1, 0).unwrap(), rat(1, 6));
        assert_eq!(elkies_inner(0, 0, 0).unwrap(), rat(1, 1));
        for n in 0..=5 {
            for p in 0..=3 {
                for q in 0..=3 {
                    assert_eq!(elkies_inner(n, p, q).unwrap(), x_coeff(n as i64, p, q).unwrap());
                }
            }
        }
    }

    #[test]
    fn andreief_small() {
        let support: Vec<BigRat> = (1..=5).map(|t| rat(t, 1)).collect();
        let f = vec![
            support.iter().cloned().collect(),
            support.iter().map(|t| t * t).collect(),
        ];
        let g = vec![
            support.iter().map(|_| rat(1, 1)).collect(),
            support.iter().map(|t| rat(1, 1) / t).collect(),
        ];
        let w: Vec<BigRat> = (1..=5).map(|t| rat(t, 7)).collect();
        let (lhs, rhs) = andreief_discrete(&f, &g, &w).unwrap();
        assert_eq!(lhs, rhs);
        assert!(!lhs.is_zero());
    }
}
