use alloc::vec::Vec;
use core::fmt;

use super::{write_list, Partition, SkewShape};
use crate::{Error, Result};

/// An m-strip diagonal diagram: `n` columns of a diagonal band of thickness
/// `m`, capped by a rotated head partition at the top-right end and a tail
/// partition at the bottom-left end, each with exactly `k = m / 2` parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StripSpec {
    m: u32,
    n: u32,
    head: Partition,
    tail: Partition,
}

impl StripSpec {
    /// Validates the parameters. Besides `m >= 2` and `k`-part head and tail,
    /// the band must be long enough for the caps: `2n >= m - 2`, and cap parts
    /// beyond the `n`-th must vanish (they would hang off missing columns).
    pub fn new(m: u32, n: u32, head: Partition, tail: Partition) -> Result<Self> {
        if m < 2 {
            return Err(Error::Spec(alloc::format!("strip thickness m = {m} must be at least 2")));
        }
        if n < 1 {
            return Err(Error::Spec("a strip needs at least one column".into()));
        }
        let k = (m / 2) as usize;
        for (name, p) in [("head", &head), ("tail", &tail)] {
            if p.len() != k {
                return Err(Error::Spec(alloc::format!(
                    "{name} must have exactly k = {k} parts, got {}",
                    p.len()
                )));
            }
            if p.parts().iter().skip(n as usize).any(|&x| x > 0) {
                return Err(Error::Spec(alloc::format!(
                    "{name} part beyond column {n} must be zero"
                )));
            }
        }
        if 2 * n + 2 < m {
            return Err(Error::Spec(alloc::format!("n = {n} is too short for m = {m}")));
        }
        Ok(StripSpec { m, n, head, tail })
    }

    /// Convenience constructor from plain part lists.
    pub fn from_parts(m: u32, n: u32, head: &[u32], tail: &[u32]) -> Result<Self> {
        let head = Partition::new(head.to_vec()).map_err(|e| Error::Spec(alloc::format!("{e}")))?;
        let tail = Partition::new(tail.to_vec()).map_err(|e| Error::Spec(alloc::format!("{e}")))?;
        Self::new(m, n, head, tail)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn head(&self) -> &Partition {
        &self.head
    }

    pub fn tail(&self) -> &Partition {
        &self.tail
    }

    pub fn k(&self) -> usize {
        (self.m / 2) as usize
    }

    /// 1 for odd strips, 0 for even.
    pub fn parity(&self) -> u32 {
        self.m % 2
    }

    /// Power of the body transfer operator, `2n - m + 1`; at least -1.
    pub fn big_n(&self) -> i64 {
        2 * self.n as i64 - self.m as i64 + 1
    }

    /// `L_i = head_i + k - i`.
    pub fn l_values(&self) -> Vec<u32> {
        shifted(&self.head)
    }

    /// `M_i = tail_i + k - i`.
    pub fn m_values(&self) -> Vec<u32> {
        shifted(&self.tail)
    }

    /// `mn - 2 t(k) + |head| + |tail|`, with `t` the staircase removed at
    /// each end.
    pub fn expected_cells(&self) -> u64 {
        let k = self.k() as u64;
        let corner = if self.parity() == 0 { k * (k.saturating_sub(1)) / 2 } else { k * (k + 1) / 2 };
        self.m as u64 * self.n as u64 - 2 * corner + self.head.size() + self.tail.size()
    }

    /// Row span of every column, left to right, before translation.
    fn column_spans(&self) -> Vec<(i64, i64)> {
        let (m, n) = (self.m as i64, self.n as i64);
        let k = self.k() as i64;
        let eps = self.parity() as i64;
        (1..=n)
            .map(|c| {
                let top = if c > n - k {
                    k + eps - self.head.get((n - c) as usize) as i64
                } else {
                    n - c + 1
                };
                let bottom = if c <= k {
                    n + m - k - eps + self.tail.get((c - 1) as usize) as i64
                } else {
                    n - c + m
                };
                (top, bottom)
            })
            .collect()
    }
}

fn shifted(p: &Partition) -> Vec<u32> {
    let k = p.len();
    p.parts().iter().enumerate().map(|(i, &x)| x + (k - 1 - i) as u32).collect()
}

impl fmt::Display for StripSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "strip:m={},n={},head=", self.m, self.n)?;
        write_list(f, self.head.parts())?;
        f.write_str(";tail=")?;
        write_list(f, self.tail.parts())
    }
}

/// The diagram of a strip spec as a canonical skew shape.
///
/// Column `c` (1-based, left to right) spans rows `top(c)..=bottom(c)`:
/// the body has `top = n - c + 1` and `bottom = n - c + m`; the last `k`
/// columns get `top = k + eps - head_i` (column `n + 1 - i`), the first `k`
/// columns get `bottom = n + m - k - eps + tail_j` (column `j`).
pub fn strip_shape(spec: &StripSpec) -> Result<SkewShape> {
    let spans = spec.column_spans();
    for w in spans.windows(2) {
        if w[0].0 < w[1].0 || w[0].1 < w[1].1 {
            return Err(Error::Spec(alloc::format!("{spec} does not describe a skew diagram")));
        }
    }
    let mut cells = Vec::new();
    for (i, &(top, bottom)) in spans.iter().enumerate() {
        if top > bottom {
            return Err(Error::Spec(alloc::format!("{spec} has an empty column")));
        }
        cells.extend((top..=bottom).map(|r| (r, i as i64 + 1)));
    }
    let shape = SkewShape::from_cells(cells)?;
    if shape.n_cells() as u64 != spec.expected_cells() {
        return Err(Error::Spec(alloc::format!(
            "{spec}: built {} cells, expected {}",
            shape.n_cells(),
            spec.expected_cells()
        )));
    }
    Ok(shape)
}
