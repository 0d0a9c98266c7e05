use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{Bound, MultiPoly};
use crate::arith::{det_gauss, factorial, int_rat, signed_permutations, BigRat};
use crate::shapes::Partition;
use crate::{Error, Result};

fn names(prefix: &str, k: usize) -> Vec<String> {
    (1..=k).map(|i| alloc::format!("{prefix}{i}")).collect()
}

fn shifted(lambda: &Partition) -> Vec<u32> {
    let k = lambda.len();
    lambda.parts().iter().enumerate().map(|(j, &l)| l + (k - 1 - j) as u32).collect()
}

/// Section volume `det(x_i^{L_j}) / prod L_j!` with `L_j = lambda_j + k - j`,
/// over variables `x1..xk` where `k` is the number of stored parts.
pub fn schur_section_volume(lambda: &Partition) -> MultiPoly {
    section_volume_in(lambda, &names("x", lambda.len()))
}

fn section_volume_in(lambda: &Partition, vars: &[String]) -> MultiPoly {
    let k = lambda.len();
    let ls = shifted(lambda);
    let mut den = BigRat::one();
    for &l in &ls {
        den *= int_rat(factorial(l as u64));
    }
    let unit = BigRat::one() / den;
    let mut out = MultiPoly::zero(vars.to_vec());
    for (perm, sign) in signed_permutations(k) {
        let exps: Vec<u32> = perm.iter().map(|&j| ls[j]).collect();
        let c = if sign > 0 { unit.clone() } else { -unit.clone() };
        out = out.add(&MultiPoly::monomial(vars.to_vec(), exps, c));
    }
    out
}

/// Checks the integral recursion for the section volumes.
///
/// With `lambda_k > 0`, integrating `psi_{lambda - 1}(y)` over the interleaved
/// domain `0 < y_1 < x_1 < y_2 < x_2 < ... < y_k < x_k` and over the box
/// `0 < y_i < x_i` must both give `psi_lambda(x)`; the two agree because the
/// integrand is antisymmetric. With `lambda_k = 0` the first variable is
/// pinned and `psi_lambda = (-1)^{k-1}` times the integral of
/// `psi_{lambda'}(y_2..y_k)` over `x_1 < y_i < x_i`.
pub fn schur_recursion_check(lambda: &Partition, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::Domain("the recursion needs k >= 1".into()));
    }
    let lambda = lambda.padded(k)?;
    if lambda.size() + k as u64 > 12 {
        return Err(Error::Domain(alloc::format!(
            "|lambda| + k = {} is above the supported 12",
            lambda.size() + k as u64
        )));
    }
    let xs = names("x", k);
    let ys = names("y", k);
    let target = section_volume_in(&lambda, &xs);
    let last = lambda.get(k - 1);
    if last > 0 {
        let lower =
            Partition::new(lambda.parts().iter().map(|&p| p - 1).collect()).expect("still a partition");
        let psi = section_volume_in(&lower, &ys);
        let mut ordered = psi.clone();
        let mut boxed = psi;
        for i in 0..k {
            let lo = if i == 0 { Bound::Zero } else { Bound::Var(xs[i - 1].clone()) };
            ordered = ordered.integrate(&ys[i], &lo, &Bound::Var(xs[i].clone()))?;
            boxed = boxed.integrate(&ys[i], &Bound::Zero, &Bound::Var(xs[i].clone()))?;
        }
        let ordered = ordered.aligned(&xs)?;
        let boxed = boxed.aligned(&xs)?;
        Ok(ordered == target && boxed == target)
    } else {
        let head = Partition::new(lambda.parts()[..k - 1].to_vec()).expect("prefix of a partition");
        let mut g = section_volume_in(&head, &ys[1..]);
        for i in 1..k {
            g = g.integrate(&ys[i], &Bound::Var(xs[0].clone()), &Bound::Var(xs[i].clone()))?;
        }
        if k == 1 {
            g = g.with_vars(&xs);
        }
        let mut g = g.aligned(&xs)?;
        if k.is_multiple_of(2) {
            g = g.neg();
        }
        Ok(g == target)
    }
}

fn power_matrix(exps: &[u32], point: &[BigRat]) -> Vec<Vec<BigRat>> {
    point
        .iter()
        .map(|x| exps.iter().map(|&e| num_traits::pow(x.clone(), e as usize)).collect())
        .collect()
}

/// `prod_{i<j} (x_i - x_j)`.
pub fn vandermonde(point: &[BigRat]) -> BigRat {
    let mut v = BigRat::one();
    for i in 0..point.len() {
        for j in i + 1..point.len() {
            v *= &point[i] - &point[j];
        }
    }
    v
}

/// `s_lambda(x)` as the quotient of alternants `det(x_i^{L_j}) / det(x_i^{k-j})`.
pub fn schur_bialternant(lambda: &Partition, point: &[BigRat]) -> Result<BigRat> {
    let k = point.len();
    let lambda = lambda.padded(k)?;
    let den = vandermonde(point);
    if den.is_zero() {
        return Err(Error::NotInvertible("repeated evaluation point".into()));
    }
    Ok(det_gauss(power_matrix(&shifted(&lambda), point)) / den)
}

/// `s_lambda(x)` as a sum over semistandard tableaux, peeling off the
/// horizontal strip holding the largest letter.
pub fn schur_branching(lambda: &Partition, point: &[BigRat]) -> Result<BigRat> {
    let lambda = lambda.canonical();
    if lambda.len() > point.len() {
        return Ok(BigRat::zero());
    }
    let parts = lambda.parts().to_vec();
    Ok(branch(&parts, point))
}

fn branch(lambda: &[u32], point: &[BigRat]) -> BigRat {
    if lambda.iter().all(|&p| p == 0) {
        return BigRat::one();
    }
    let Some((x, rest)) = point.split_last() else {
        return BigRat::zero();
    };
    // mu interlaces lambda: lambda_{i+1} <= mu_i <= lambda_i
    let mut total = BigRat::zero();
    let mut mu: Vec<u32> = lambda.iter().enumerate().map(|(i, _)| lambda.get(i + 1).copied().unwrap_or(0)).collect();
    loop {
        if mu.iter().filter(|&&m| m > 0).count() <= rest.len() {
            let strip: u32 = lambda.iter().zip(&mu).map(|(l, m)| l - m).sum();
            total += num_traits::pow(x.clone(), strip as usize) * branch(&mu, rest);
        }
        // odometer over the interlacing ranges
        let mut i = 0;
        loop {
            if i == mu.len() {
                return total;
            }
            if mu[i] < lambda[i] {
                mu[i] += 1;
                break;
            }
            mu[i] = lambda.get(i + 1).copied().unwrap_or(0);
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use alloc::vec;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_section_volumes() {
        let f = schur_section_volume(&p(&[3]));
        assert_eq!(f.eval(&[rat(2, 1)]), rat(8, 6));
        let f = schur_section_volume(&p(&[0, 0]));
        assert_eq!(f.eval(&[rat(3, 1), rat(1, 1)]), rat(2, 1));
        let f = schur_section_volume(&p(&[1, 0]));
        // (x1^2 - x2^2) / 2
        assert_eq!(f.eval(&[rat(3, 1), rat(1, 1)]), rat(4, 1));
    }

    #[test]
    fn antisymmetric() {
        let f = schur_section_volume(&p(&[2, 1, 0]));
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            assert_eq!(f.swap_vars(a, b), f.neg());
        }
    }

    #[test]
    fn recursion_examples() {
        assert!(schur_recursion_check(&p(&[1]), 1).unwrap());
        assert!(schur_recursion_check(&p(&[1, 1]), 2).unwrap());
        assert!(schur_recursion_check(&p(&[2, 1, 0]), 3).unwrap());
        assert!(schur_recursion_check(&p(&[0, 0]), 2).unwrap());
        assert!(schur_recursion_check(&p(&[9, 9]), 2).is_err());
    }

    #[test]
    fn two_schur_evaluations_agree() {
        let pt = vec![rat(1, 2), rat(-3, 1), rat(2, 7)];
        for l in [&[][..], &[1], &[2, 1], &[3, 1, 1], &[2, 2], &[4]] {
            let a = schur_bialternant(&p(l), &pt).unwrap();
            let b = schur_branching(&p(l), &pt).unwrap();
            assert_eq!(a, b, "{l:?}");
        }
        // s_{(1,1)}(x, y) = xy
        assert_eq!(schur_branching(&p(&[1, 1]), &[rat(2, 1), rat(5, 1)]).unwrap(), rat(10, 1));
        assert_eq!(schur_branching(&p(&[1, 1, 1]), &[rat(2, 1), rat(5, 1)]).unwrap(), rat(0, 1));
        assert!(schur_bialternant(&p(&[1]), &[rat(1, 1), rat(1, 1)]).is_err());
    }
}
