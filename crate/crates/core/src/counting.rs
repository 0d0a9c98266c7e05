//! Ground-truth tableau counts: down-set dynamic programming, plain
//! backtracking, the Aitken determinant, explicit enumeration, and
//! descent classes of permutations.

use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{det_bareiss, factorial, falling, next_permutation, BigInt, BigRat};
use crate::shapes::{ribbon_from_descents, SkewShape, Tableau};
use crate::{Budget, Error, Result};

/// A filled down-set of the cell order together with the number of ways to
/// reach it. `frontier[i]` counts filled cells from the top of the `i`-th
/// occupied column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DownsetState {
    pub frontier: Vec<u16>,
    pub count: BigInt,
}

/// Column layout shared by the DP and the backtracker.
struct Columns {
    top: Vec<u32>,
    height: Vec<u16>,
    /// Index of the occupied column immediately to the left, if adjacent.
    left: Vec<Option<usize>>,
}

impl Columns {
    fn new(shape: &SkewShape) -> Self {
        let spans = shape.columns();
        let mut left = Vec::with_capacity(spans.len());
        for (i, s) in spans.iter().enumerate() {
            left.push(if i > 0 && spans[i - 1].col + 1 == s.col { Some(i - 1) } else { None });
        }
        Columns {
            top: spans.iter().map(|s| s.top).collect(),
            height: spans.iter().map(|s| s.height() as u16).collect(),
            left,
        }
    }

    fn len(&self) -> usize {
        self.top.len()
    }

    /// Whether the next cell of column `i` may be filled, reading filled
    /// counts through `at`.
    fn addable(&self, at: impl Fn(usize) -> u16, i: usize) -> bool {
        let f = at(i);
        if f >= self.height[i] {
            return false;
        }
        let row = self.top[i] + f as u32;
        match self.left[i] {
            Some(l) => {
                let (lt, lh) = (self.top[l], self.height[l] as u32);
                // the left neighbour is in the shape iff its column covers `row`
                let in_shape = lt <= row && row < lt + lh;
                !in_shape || lt + at(l) as u32 > row
            }
            None => true,
        }
    }

    /// Bit offsets for packing a frontier into one `u128`, if it fits.
    fn packing(&self) -> Option<Vec<u32>> {
        let mut shifts = Vec::with_capacity(self.len());
        let mut used = 0u32;
        for &h in &self.height {
            shifts.push(used);
            used += 16 - h.leading_zeros();
            if used > 128 {
                return None;
            }
        }
        Some(shifts)
    }

    /// Product of `height + 1`, saturating; an upper bound on the lattice size.
    fn lattice_bound(&self) -> usize {
        self.height
            .iter()
            .fold(1usize, |acc, &h| acc.saturating_mul(h as usize + 1))
    }
}

/// One layer step: every successor of every state, merged by key.
fn step<K: Ord + Clone>(
    cols: &Columns,
    layer: &[(K, BigInt)],
    at: impl Fn(&K, usize) -> u16,
    bump: impl Fn(&K, usize) -> K,
) -> Vec<(K, BigInt)> {
    let mut next: Vec<(K, &BigInt)> = Vec::new();
    for (key, count) in layer {
        for i in 0..cols.len() {
            if cols.addable(|j| at(key, j), i) {
                next.push((bump(key, i), count));
            }
        }
    }
    next.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let mut merged: Vec<(K, BigInt)> = Vec::with_capacity(next.len());
    for (key, count) in next {
        match merged.last_mut() {
            Some((k, c)) if *k == key => *c += count,
            _ => merged.push((key, count.clone())),
        }
    }
    merged
}

fn sweep<K: Ord + Clone>(
    cols: &Columns,
    size: usize,
    budget: &Budget,
    start: K,
    at: impl Fn(&K, usize) -> u16 + Copy,
    bump: impl Fn(&K, usize) -> K + Copy,
) -> Result<Vec<(K, BigInt)>> {
    let mut layer = alloc::vec![(start, BigInt::one())];
    for _ in 0..size {
        layer = step(cols, &layer, at, bump);
        if layer.len() > budget.max_states {
            return Err(Error::BudgetExceeded {
                what: "down-set states",
                estimate: cols.lattice_bound().max(layer.len()),
                limit: budget.max_states,
            });
        }
    }
    Ok(layer)
}

/// Walks the down-set lattice layer by layer, returning the layer of the
/// given size, ordered by frontier.
pub fn downset_layer(shape: &SkewShape, size: usize, budget: &Budget) -> Result<Vec<DownsetState>> {
    let cols = Columns::new(shape);
    if size > shape.n_cells() {
        return Ok(Vec::new());
    }
    let n = cols.len();
    let mut states = match cols.packing() {
        Some(shifts) => {
            let masks: Vec<u128> = cols
                .height
                .iter()
                .map(|&h| (1u128 << (16 - h.leading_zeros())) - 1)
                .collect();
            let at = |k: &u128, i: usize| ((k >> shifts[i]) & masks[i]) as u16;
            let layer = sweep(&cols, size, budget, 0u128, at, |k, i| k + (1u128 << shifts[i]))?;
            layer
                .into_iter()
                .map(|(k, count)| DownsetState { frontier: (0..n).map(|i| at(&k, i)).collect(), count })
                .collect::<Vec<_>>()
        }
        None => {
            let bump = |k: &Vec<u16>, i: usize| {
                let mut f = k.clone();
                f[i] += 1;
                f
            };
            sweep(&cols, size, budget, alloc::vec![0u16; n], |k, i| k[i], bump)?
                .into_iter()
                .map(|(frontier, count)| DownsetState { frontier, count })
                .collect()
        }
    };
    states.sort_unstable_by(|a, b| a.frontier.cmp(&b.frontier));
    Ok(states)
}

/// Number of standard tableaux by dynamic programming over down-sets.
pub fn count_syt_dp(shape: &SkewShape) -> Result<BigInt> {
    count_syt_dp_with(shape, &Budget::default())
}

pub fn count_syt_dp_with(shape: &SkewShape, budget: &Budget) -> Result<BigInt> {
    let top = downset_layer(shape, shape.n_cells(), budget)?;
    Ok(top.into_iter().map(|s| s.count).sum())
}

/// Number of standard tableaux by placing `1, 2, ...` one at a time.
pub fn count_syt_backtrack(shape: &SkewShape) -> Result<BigInt> {
    count_syt_backtrack_with(shape, &Budget::default())
}

pub fn count_syt_backtrack_with(shape: &SkewShape, budget: &Budget) -> Result<BigInt> {
    let n = shape.n_cells();
    if n > budget.max_backtrack_cells {
        return Err(Error::BudgetExceeded {
            what: "backtracking cells",
            estimate: n,
            limit: budget.max_backtrack_cells,
        });
    }
    let cols = Columns::new(shape);
    let mut frontier = alloc::vec![0u16; cols.len()];
    Ok(BigInt::from(backtrack(&cols, &mut frontier, n)))
}

fn backtrack(cols: &Columns, frontier: &mut [u16], remaining: usize) -> u64 {
    if remaining == 0 {
        return 1;
    }
    let mut total = 0;
    for i in 0..cols.len() {
        if cols.addable(|j| frontier[j], i) {
            frontier[i] += 1;
            total += backtrack(cols, frontier, remaining - 1);
            frontier[i] -= 1;
        }
    }
    total
}

/// `|D|! det(1/(lambda_i - i - mu_j + j)!)` as an exact rational.
pub fn aitken_value(shape: &SkewShape) -> BigRat {
    let (num, den) = aitken_parts(shape);
    BigRat::new(num, den)
}

/// The Aitken determinant count. Rows are scaled by their largest factorial
/// so that the determinant is taken over the integers.
pub fn count_syt_aitken(shape: &SkewShape) -> BigInt {
    let (num, den) = aitken_parts(shape);
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero(), "Aitken determinant is not integral for {shape}");
    q
}

fn aitken_parts(shape: &SkewShape) -> (BigInt, BigInt) {
    let lambda = shape.lambda();
    let mu = shape.mu();
    let r = lambda.len();
    if r == 0 {
        return (BigInt::one(), BigInt::one());
    }
    let x = |i: usize, j: usize| lambda[i] as i64 - i as i64 - mu[j] as i64 + j as i64;
    let mut rows = Vec::with_capacity(r);
    let mut den = BigInt::one();
    for i in 0..r {
        // -mu_j + j increases with j, so the last column holds the row maximum
        let top = x(i, r - 1);
        if top < 0 {
            return (BigInt::zero(), BigInt::one());
        }
        den *= factorial(top as u64);
        rows.push(
            (0..r)
                .map(|j| {
                    let v = x(i, j);
                    if v < 0 {
                        BigInt::zero()
                    } else {
                        falling(top as u64, v as u64)
                    }
                })
                .collect(),
        );
    }
    let num = factorial(shape.n_cells() as u64) * det_bareiss(rows);
    (num, den)
}

/// All standard tableaux of `shape`, sorted by their row-major entries.
pub fn enumerate_syt(shape: &SkewShape, limit: usize) -> Result<Vec<Tableau>> {
    let count = count_syt_dp(shape)?;
    if count > BigInt::from(limit) {
        return Err(Error::LimitExceeded { limit });
    }
    let cells = shape.cells();
    let cols = Columns::new(shape);
    let spans = shape.columns();
    // cell index of (column i, depth d)
    let index: Vec<Vec<usize>> = spans
        .iter()
        .map(|s| {
            (s.top..=s.bottom)
                .map(|r| cells.binary_search(&(r, s.col)).expect("column cell in shape"))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut frontier = alloc::vec![0u16; cols.len()];
    let mut entries = alloc::vec![0u32; cells.len()];
    fill(&cols, &index, &mut frontier, &mut entries, 1, &mut |e| {
        out.push(Tableau::new_unchecked(shape.clone(), e.to_vec()))
    });
    out.sort_by(|a, b| a.entries().cmp(b.entries()));
    Ok(out)
}

fn fill(
    cols: &Columns,
    index: &[Vec<usize>],
    frontier: &mut [u16],
    entries: &mut [u32],
    next: u32,
    emit: &mut dyn FnMut(&[u32]),
) {
    if next as usize > entries.len() {
        emit(entries);
        return;
    }
    for i in 0..cols.len() {
        if cols.addable(|j| frontier[j], i) {
            entries[index[i][frontier[i] as usize]] = next;
            frontier[i] += 1;
            fill(cols, index, frontier, entries, next + 1, emit);
            frontier[i] -= 1;
        }
    }
}

/// Largest `n` whose descent classes are tabulated by brute force.
pub const DESCENT_BRUTE_MAX: u32 = 10;

/// Descent-set histogram of `S_n`: entry `mask` counts permutations whose
/// descent set, as a bitmask with bit `i - 1` for descent `i`, equals `mask`.
pub fn descent_table(n: u32) -> Result<Vec<u64>> {
    if n > DESCENT_BRUTE_MAX {
        return Err(Error::Domain(alloc::format!(
            "descent tables are tabulated up to n = {DESCENT_BRUTE_MAX}"
        )));
    }
    let mut table = alloc::vec![0u64; 1usize << n.saturating_sub(1)];
    let mut perm: Vec<u32> = (1..=n).collect();
    loop {
        let mask = perm
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .fold(0usize, |m, (i, _)| m | 1 << i);
        table[mask] += 1;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(table)
}

fn descent_mask(n: u32, descents: &[u32]) -> Result<usize> {
    let mut mask = 0usize;
    for &d in descents {
        if d == 0 || d >= n {
            return Err(Error::Domain(alloc::format!("descent {d} outside 1..{n}")));
        }
        mask |= 1 << (d - 1);
    }
    Ok(mask)
}

/// Number of permutations of `1..=n` with descent set exactly `descents`.
/// Brute force up to [`DESCENT_BRUTE_MAX`], then tableaux of the ribbon.
pub fn count_descent_class(n: u32, descents: &[u32]) -> Result<BigInt> {
    if n <= DESCENT_BRUTE_MAX {
        let mask = descent_mask(n.max(1), descents)?;
        if n == 0 {
            return Ok(BigInt::one());
        }
        return Ok(BigInt::from(descent_table(n)?[mask]));
    }
    count_syt_dp(&ribbon_from_descents(descents, n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{make_skew, strip_shape, updown_shape, Partition, StripSpec};
    use crate::numbers::zigzag_numbers;
    use alloc::vec;

    fn skew(l: &[u32], m: &[u32]) -> SkewShape {
        make_skew(&Partition::new(l.to_vec()).unwrap(), &Partition::new(m.to_vec()).unwrap())
            .unwrap()
    }

    fn all_three(s: &SkewShape) -> BigInt {
        let dp = count_syt_dp(s).unwrap();
        assert_eq!(dp, count_syt_aitken(s), "aitken on {s}");
        if s.n_cells() <= 12 {
            assert_eq!(dp, count_syt_backtrack(s).unwrap(), "backtrack on {s}");
        }
        dp
    }

    #[test]
    fn small_counts() {
        assert_eq!(all_three(&skew(&[5], &[])), BigInt::from(1));
        assert_eq!(all_three(&skew(&[2, 2, 2], &[])), BigInt::from(5));
        assert_eq!(all_three(&skew(&[2, 1], &[])), BigInt::from(2));
        assert_eq!(all_three(&skew(&[1, 1, 1, 1], &[])), BigInt::from(1));
        let band = strip_shape(&StripSpec::from_parts(3, 2, &[1], &[1]).unwrap()).unwrap();
        assert_eq!(all_three(&band), BigInt::from(14));
    }

    #[test]
    fn figure_one_shape_agrees() {
        let s = skew(&[5, 5, 5, 3, 2], &[2, 2, 1, 1, 0]);
        assert_eq!(count_syt_dp(&s).unwrap(), count_syt_aitken(&s));
    }

    #[test]
    fn single_rows_by_aitken() {
        for n in 0..=20 {
            assert_eq!(count_syt_aitken(&skew(&[n], &[])), BigInt::one());
        }
    }

    #[test]
    fn disconnected_shape() {
        // a cell and a domino with nothing in between
        let s = skew(&[3, 1, 1], &[2]);
        assert_eq!(s.n_cells(), 3);
        assert_eq!(all_three(&s), BigInt::from(3));
    }

    #[test]
    fn updown_counts_are_zigzag() {
        let a = zigzag_numbers(10);
        for n in 1..=10u32 {
            assert_eq!(count_syt_dp(&updown_shape(n)).unwrap(), a[n as usize]);
        }
    }

    #[test]
    fn enumeration_is_sorted_and_complete() {
        let col = skew(&[1, 1, 1], &[]);
        assert_eq!(enumerate_syt(&col, 10).unwrap().len(), 1);
        let t = enumerate_syt(&skew(&[2, 1], &[]), 10).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].entries(), &[1, 2, 3]);
        assert_eq!(t[1].entries(), &[1, 3, 2]);
        let s = skew(&[3, 3, 2], &[1]);
        let all = enumerate_syt(&s, 1000).unwrap();
        assert_eq!(BigInt::from(all.len()), count_syt_dp(&s).unwrap());
        for w in all.windows(2) {
            assert!(w[0].entries() < w[1].entries());
        }
        for t in &all {
            Tableau::new(s.clone(), t.entries().to_vec()).unwrap();
        }
        assert!(matches!(enumerate_syt(&s, 3), Err(Error::LimitExceeded { limit: 3 })));
    }

    #[test]
    fn descent_classes() {
        assert_eq!(count_descent_class(3, &[1]).unwrap(), BigInt::from(2));
        assert_eq!(count_descent_class(4, &[]).unwrap(), BigInt::one());
        assert_eq!(count_descent_class(1, &[]).unwrap(), BigInt::one());
        assert!(count_descent_class(4, &[4]).is_err());
        let t = descent_table(5).unwrap();
        assert_eq!(t.iter().sum::<u64>(), 120);
        for n in 1..=8u32 {
            for mask in 0..1usize << (n - 1) {
                let d: Vec<u32> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                let s = ribbon_from_descents(&d, n).unwrap();
                assert_eq!(
                    count_descent_class(n, &d).unwrap(),
                    count_syt_dp(&s).unwrap(),
                    "n={n} {d:?}"
                );
            }
        }
    }

    #[test]
    fn large_descent_class_routes_through_ribbon() {
        // up-down permutations of 12
        let d: Vec<u32> = (1..12).filter(|i| i % 2 == 0).collect();
        assert_eq!(count_descent_class(12, &d).unwrap(), zigzag_numbers(12)[12]);
    }

    #[test]
    fn budgets() {
        let big = skew(&[4, 4, 4, 4], &[]);
        assert!(matches!(count_syt_backtrack(&big), Err(Error::BudgetExceeded { .. })));
        let tight = Budget { max_states: 3, ..Budget::default() };
        assert!(matches!(count_syt_dp_with(&big, &tight), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn layers_partition_the_lattice() {
        let s = skew(&[2, 2], &[]);
        let sizes: Vec<usize> = (0..=4)
            .map(|k| downset_layer(&s, k, &Budget::default()).unwrap().len())
            .collect();
        assert_eq!(sizes, vec![1, 1, 2, 1, 1]);
        let a = aitken_value(&s);
        assert!(a.is_integer());
    }
}
