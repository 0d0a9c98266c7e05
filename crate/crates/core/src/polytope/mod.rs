//! Exact order-polytope volumes by sweeping diagonal cuts, the Schur
//! section-volume identity, and Elkies's operator on polynomials.
//!
//! The order polytope of a diagram has one coordinate per cell, increasing
//! along rows and down columns. Its volume is `f(D) / |D|!`.

mod elkies;
mod poly;
mod schur;

use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::BigRat;
use crate::shapes::SkewShape;
use crate::{Budget, Error, Result};

pub use elkies::{andreief_discrete, elkies_apply, elkies_inner};
pub use poly::{Bound, MultiPoly};
pub use schur::{
    schur_bialternant, schur_branching, schur_recursion_check, schur_section_volume,
    vandermonde,
};

/// The cells of one diagonal `v = col - row`, ordered by row. Cuts of empty
/// diagonals inside the shape's range are kept so that the sweep is uniform.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalCut {
    pub v: i64,
    pub cells: Vec<(u32, u32)>,
}

impl DiagonalCut {
    /// Name of the coordinate of the `i`-th cell.
    pub fn var(&self, i: usize) -> String {
        alloc::format!("x{}_{}", self.v, i)
    }

    pub fn vars(&self) -> Vec<String> {
        (0..self.cells.len()).map(|i| self.var(i)).collect()
    }

    fn position(&self, cell: (u32, u32)) -> Option<usize> {
        self.cells.binary_search(&cell).ok()
    }
}

/// All cuts from the lowest to the highest diagonal, after checking that
/// consecutive cells of every cut are interleaved by cells of both
/// neighbouring cuts.
pub fn diagonal_cuts(shape: &SkewShape) -> Result<Vec<DiagonalCut>> {
    let diags = shape.diagonals();
    let (Some(&lo), Some(&hi)) = (diags.keys().next(), diags.keys().next_back()) else {
        return Ok(Vec::new());
    };
    let mut cuts = Vec::new();
    for v in lo..=hi {
        let cells = diags.get(&v).cloned().unwrap_or_default();
        for w in cells.windows(2) {
            let ((r, c), (r2, c2)) = (w[0], w[1]);
            let ok = r2 == r + 1
                && c2 == c + 1
                && shape.contains(r, c + 1)
                && shape.contains(r + 1, c);
            if !ok {
                return Err(Error::Sandwich { diagonal: v });
            }
        }
        cuts.push(DiagonalCut { v, cells });
    }
    Ok(cuts)
}

/// Volume of the order polytope of `shape`.
pub fn order_polytope_volume(shape: &SkewShape) -> Result<BigRat> {
    order_polytope_volume_with(shape, &Budget::default())
}

/// The sweep keeps the section volume as a polynomial in the coordinates of
/// the current cut. Stepping to the next cut, each old coordinate ranges
/// from the cell above it to the cell right of it, both on the new cut.
pub fn order_polytope_volume_with(shape: &SkewShape, budget: &Budget) -> Result<BigRat> {
    let cuts = diagonal_cuts(shape)?;
    let mut f = MultiPoly::one();
    let empty = DiagonalCut { v: 0, cells: Vec::new() };
    let mut prev: Option<&DiagonalCut> = None;
    for next in cuts.iter().chain(core::iter::once(&empty)) {
        f = f.with_vars(&next.vars());
        if let Some(old) = prev {
            for (i, &(r, c)) in old.cells.iter().enumerate() {
                let lower = match next.position((r.wrapping_sub(1), c)) {
                    Some(j) if r > 1 => Bound::Var(next.var(j)),
                    _ => Bound::Zero,
                };
                let upper = match next.position((r, c + 1)) {
                    Some(j) => Bound::Var(next.var(j)),
                    None => Bound::One,
                };
                f = f.integrate(&old.var(i), &lower, &upper)?;
                f.check_terms(budget.max_terms)?;
            }
        }
        prev = Some(next);
    }
    Ok(f.constant_value().expect("every coordinate has been integrated"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{factorial, int_rat, rat};
    use crate::counting::count_syt_dp;
    use crate::numbers::zigzag_numbers;
    use crate::shapes::{make_skew, strip_shape, updown_shape, Partition, StripSpec};

    fn volume_times_factorial(s: &SkewShape) -> BigRat {
        order_polytope_volume(s).unwrap() * int_rat(factorial(s.n_cells() as u64))
    }

    #[test]
    fn single_cell() {
        let s = make_skew(&Partition::new(alloc::vec![1]).unwrap(), &Partition::default()).unwrap();
        assert_eq!(order_polytope_volume(&s).unwrap(), rat(1, 1));
        assert_eq!(order_polytope_volume(&SkewShape::empty()).unwrap(), rat(1, 1));
    }

    #[test]
    fn updown_volumes() {
        let a = zigzag_numbers(8);
        for n in 1..=8u32 {
            let v = order_polytope_volume(&updown_shape(n)).unwrap();
            assert_eq!(v, BigRat::new(a[n as usize].clone(), factorial(n as u64)));
        }
    }

    #[test]
    fn three_strip_band() {
        let s = strip_shape(&StripSpec::from_parts(3, 2, &[1], &[1]).unwrap()).unwrap();
        assert_eq!(order_polytope_volume(&s).unwrap(), rat(7, 360));
    }

    #[test]
    fn matches_dp_on_assorted_shapes() {
        let shapes = [
            (alloc::vec![3, 3, 2], alloc::vec![1]),
            (alloc::vec![4, 4, 4], alloc::vec![2, 1]),
            (alloc::vec![3, 1], alloc::vec![2]),
            (alloc::vec![5, 5, 5, 3, 2], alloc::vec![2, 2, 1, 1]),
        ];
        for (l, m) in shapes {
            let s = make_skew(&Partition::new(l).unwrap(), &Partition::new(m).unwrap()).unwrap();
            assert_eq!(volume_times_factorial(&s), int_rat(count_syt_dp(&s).unwrap()), "{s}");
        }
    }

    #[test]
    fn term_budget() {
        let s = strip_shape(&StripSpec::from_parts(4, 4, &[1, 0], &[1, 0]).unwrap()).unwrap();
        let tight = Budget { max_terms: 2, ..Budget::default() };
        assert!(matches!(
            order_polytope_volume_with(&s, &tight),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
