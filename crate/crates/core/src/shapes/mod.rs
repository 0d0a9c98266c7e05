//! Skew Young diagrams and the shape families built from them.
//!
//! Coordinates are English-notation `(row, col)`, both 1-based, rows growing
//! downward. A [`SkewShape`] is always stored in canonical form, so two shapes
//! with the same cell set (up to translation) compare equal.

mod strip;
mod text;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

pub use strip::{strip_shape, StripSpec};
pub use text::{parse_shape, ShapeText};

/// A weakly decreasing sequence of nonnegative parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Partition(alloc::format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of stored parts, zeros included.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Trailing zeros removed.
    pub fn canonical(&self) -> Partition {
        let mut v = self.0.clone();
        while v.last() == Some(&0) {
            v.pop();
        }
        Partition(v)
    }

    /// Exactly `k` parts, padding with zeros; fails if a nonzero part would be
    /// dropped.
    pub fn padded(&self, k: usize) -> Result<Partition> {
        if self.0.iter().skip(k).any(|&p| p > 0) {
            return Err(Error::Partition(alloc::format!(
                "{:?} has more than {k} nonzero parts",
                self.0
            )));
        }
        let mut v: Vec<u32> = self.0.iter().copied().take(k).collect();
        v.resize(k, 0);
        Ok(Partition(v))
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

pub(crate) fn write_list(f: &mut fmt::Formatter<'_>, v: &[u32]) -> fmt::Result {
    for (i, p) in v.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

/// A skew diagram `lambda / mu` in canonical form: no empty first or last
/// row, and column 1 occupied.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewShape {
    lambda: Vec<u32>,
    mu: Vec<u32>,
}

/// Column `col` occupies rows `top..=bottom`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColumnSpan {
    pub col: u32,
    pub top: u32,
    pub bottom: u32,
}

impl ColumnSpan {
    pub fn height(&self) -> u32 {
        self.bottom + 1 - self.top
    }

    pub fn contains(&self, row: u32) -> bool {
        self.top <= row && row <= self.bottom
    }
}

impl SkewShape {
    /// The shape with no cells.
    pub fn empty() -> Self {
        SkewShape { lambda: Vec::new(), mu: Vec::new() }
    }

    /// Builds the canonical shape from an arbitrary cell set, translating so
    /// that the top row and the leftmost column are 1. Fails unless the cells
    /// form a skew diagram.
    pub fn from_cells<I>(cells: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        let mut rows: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
        for (r, c) in cells {
            rows.entry(r).or_default().push(c);
        }
        if rows.is_empty() {
            return Ok(Self::empty());
        }
        let r0 = *rows.keys().next().unwrap();
        let r1 = *rows.keys().next_back().unwrap();
        let c0 = rows.values().flatten().copied().min().unwrap();
        let height = (r1 - r0 + 1) as usize;
        let mut spans: Vec<Option<(u32, u32)>> = alloc::vec![None; height];
        for (r, mut cols) in rows {
            cols.sort_unstable();
            cols.dedup();
            let lo = cols[0];
            let hi = *cols.last().unwrap();
            if (hi - lo + 1) as usize != cols.len() {
                return Err(Error::Shape(alloc::format!("row {r} is not an interval")));
            }
            spans[(r - r0) as usize] = Some(((lo - c0) as u32, (hi - c0 + 1) as u32));
        }
        let mut lambda = alloc::vec![0u32; height];
        let mut mu = alloc::vec![0u32; height];
        for i in (0..height).rev() {
            match spans[i] {
                Some((m, l)) => {
                    mu[i] = m;
                    lambda[i] = l;
                }
                None => {
                    // interior empty row; the last row is never empty
                    lambda[i] = lambda[i + 1];
                    mu[i] = lambda[i + 1];
                }
            }
        }
        let ok = lambda.windows(2).all(|w| w[0] >= w[1]) && mu.windows(2).all(|w| w[0] >= w[1]);
        if !ok {
            return Err(Error::Shape("cell set is not a skew diagram".into()));
        }
        Ok(SkewShape { lambda, mu })
    }

    pub fn lambda(&self) -> &[u32] {
        &self.lambda
    }

    /// Inner partition, padded to the length of `lambda`.
    pub fn mu(&self) -> &[u32] {
        &self.mu
    }

    pub fn rows(&self) -> usize {
        self.lambda.len()
    }

    pub fn n_cells(&self) -> usize {
        self.lambda
            .iter()
            .zip(&self.mu)
            .map(|(&l, &m)| (l - m) as usize)
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.n_cells() == 0
    }

    pub fn contains(&self, row: u32, col: u32) -> bool {
        row >= 1
            && (row as usize) <= self.lambda.len()
            && self.mu[row as usize - 1] < col
            && col <= self.lambda[row as usize - 1]
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.n_cells());
        for (i, (&l, &m)) in self.lambda.iter().zip(&self.mu).enumerate() {
            for c in m + 1..=l {
                out.push((i as u32 + 1, c));
            }
        }
        out
    }

    pub fn n_cols(&self) -> u32 {
        self.lambda.first().copied().unwrap_or(0)
    }

    /// Occupied columns, left to right. Empty columns are skipped.
    pub fn columns(&self) -> Vec<ColumnSpan> {
        let mut out = Vec::new();
        for c in 1..=self.n_cols() {
            let mut rows = (1..=self.rows() as u32).filter(|&r| self.contains(r, c));
            if let Some(top) = rows.next() {
                let bottom = rows.next_back().unwrap_or(top);
                out.push(ColumnSpan { col: c, top, bottom });
            }
        }
        out
    }

    /// Cells grouped by diagonal `col - row`, each group ordered by row.
    pub fn diagonals(&self) -> BTreeMap<i64, Vec<(u32, u32)>> {
        let mut out: BTreeMap<i64, Vec<(u32, u32)>> = BTreeMap::new();
        for (r, c) in self.cells() {
            out.entry(c as i64 - r as i64).or_default().push((r, c));
        }
        out
    }

    /// Transpose composed with a half turn; an anti-automorphism of the cell
    /// order, so it preserves the number of tableaux.
    pub fn transpose_rotate(&self) -> SkewShape {
        let rows = self.rows() as i64;
        let cols = self.n_cols() as i64;
        SkewShape::from_cells(
            self.cells()
                .into_iter()
                .map(|(r, c)| (cols + 1 - c as i64, rows + 1 - r as i64)),
        )
        .expect("the image of a skew shape is a skew shape")
    }

    /// Connected with at most one cell per diagonal.
    pub fn is_ribbon(&self) -> bool {
        let diags = self.diagonals();
        if diags.is_empty() {
            return false;
        }
        let lo = *diags.keys().next().unwrap();
        let hi = *diags.keys().next_back().unwrap();
        diags.values().all(|d| d.len() == 1) && (hi - lo + 1) as usize == diags.len()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("lambda=")?;
        write_list(f, &self.lambda)?;
        f.write_str(";mu=")?;
        let mut mu = self.mu.clone();
        while mu.last() == Some(&0) {
            mu.pop();
        }
        write_list(f, &mu)
    }
}

/// `lambda / mu`, canonicalized. Fails with a containment error when `mu`
/// does not fit inside `lambda`.
pub fn make_skew(lambda: &Partition, mu: &Partition) -> Result<SkewShape> {
    let len = lambda.len().max(mu.len());
    for i in 0..len {
        if mu.get(i) > lambda.get(i) {
            return Err(Error::Containment { row: i + 1, mu: mu.get(i), lambda: lambda.get(i) });
        }
    }
    let cells = (0..len).flat_map(|i| {
        (mu.get(i) + 1..=lambda.get(i)).map(move |c| (i as i64 + 1, c as i64))
    });
    SkewShape::from_cells(cells)
}

/// The ribbon whose tableaux correspond to permutations of `1..=size` with
/// descent set exactly `descents`. Read bottom-left to top-right, the cells
/// follow the permutation; a descent is a step up, an ascent a step right.
pub fn ribbon_from_descents(descents: &[u32], size: u32) -> Result<SkewShape> {
    if size == 0 {
        if !descents.is_empty() {
            return Err(Error::Domain("descents given for an empty permutation".into()));
        }
        return Ok(SkewShape::empty());
    }
    if let Some(&d) = descents.iter().find(|&&d| d == 0 || d >= size) {
        return Err(Error::Domain(alloc::format!("descent {d} outside 1..{size}")));
    }
    let mut cells = Vec::with_capacity(size as usize);
    let (mut r, mut c) = (0i64, 0i64);
    cells.push((r, c));
    for i in 1..size {
        if descents.contains(&i) {
            r -= 1;
        } else {
            c += 1;
        }
        cells.push((r, c));
    }
    SkewShape::from_cells(cells)
}

/// The ribbon of up-down permutations `s(1) < s(2) > s(3) < ...` of size `n`.
pub fn updown_shape(n: u32) -> SkewShape {
    let descents: Vec<u32> = (1..n).filter(|i| i % 2 == 0).collect();
    ribbon_from_descents(&descents, n).expect("even positions are valid descents")
}

/// Positions `i` (1-based) with `word[i-1] > word[i]`.
pub fn descent_set(word: &[u32]) -> Vec<u32> {
    word.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i as u32 + 1)
        .collect()
}

/// A standard filling of a skew shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewShape,
    /// Entries aligned with `shape.cells()`.
    entries: Vec<u32>,
}

impl Tableau {
    /// `entries` are listed in row-major cell order.
    pub fn new(shape: SkewShape, entries: Vec<u32>) -> Result<Self> {
        let cells = shape.cells();
        if entries.len() != cells.len() {
            return Err(Error::Shape(alloc::format!(
                "{} entries for {} cells",
                entries.len(),
                cells.len()
            )));
        }
        let mut seen = alloc::vec![false; cells.len()];
        for &e in &entries {
            if e == 0 || e as usize > cells.len() || seen[e as usize - 1] {
                return Err(Error::Shape("entries are not a permutation of 1..n".into()));
            }
            seen[e as usize - 1] = true;
        }
        let t = Tableau { shape, entries };
        for (idx, &(r, c)) in cells.iter().enumerate() {
            let v = t.entries[idx];
            let bad_left = c > 1 && t.shape.contains(r, c - 1) && t.entry(r, c - 1) > v;
            let bad_up = r > 1 && t.shape.contains(r - 1, c) && t.entry(r - 1, c) > v;
            if bad_left || bad_up {
                return Err(Error::Shape(alloc::format!("entry at ({r},{c}) breaks monotonicity")));
            }
        }
        Ok(t)
    }

    pub(crate) fn new_unchecked(shape: SkewShape, entries: Vec<u32>) -> Self {
        Tableau { shape, entries }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Entries in row-major cell order.
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Entry at `(row, col)`; panics if the cell is not in the shape.
    pub fn entry(&self, row: u32, col: u32) -> u32 {
        let r = row as usize - 1;
        let offset: usize = self.shape.lambda[..r]
            .iter()
            .zip(&self.shape.mu[..r])
            .map(|(&l, &m)| (l - m) as usize)
            .sum();
        assert!(self.shape.contains(row, col), "({row},{col}) not in shape");
        self.entries[offset + (col - self.shape.mu[r] - 1) as usize]
    }

    /// Entries along a ribbon, bottom-left to top-right.
    pub fn ribbon_word(&self) -> Result<Vec<u32>> {
        if !self.shape.is_ribbon() {
            return Err(Error::Shape("not a ribbon".into()));
        }
        let mut cells: Vec<((u32, u32), u32)> =
            self.shape.cells().into_iter().zip(self.entries.iter().copied()).collect();
        cells.sort_by_key(|&((r, c), _)| c as i64 - r as i64);
        Ok(cells.into_iter().map(|(_, e)| e).collect())
    }
}

/// The up-down permutation read from the bottom-left box, alternately right
/// and up.
pub fn tableau_to_updown(t: &Tableau) -> Result<Vec<u32>> {
    let n = t.shape.n_cells() as u32;
    if n == 0 || t.shape != updown_shape(n) {
        return Err(Error::Shape(alloc::format!("{} is not an up-down shape", t.shape)));
    }
    t.ribbon_word()
}
