//! Partitions, skew shapes and their hook statistics.
//!
//! Cells are 1-based `(row, col)` in English notation: rows grow downward,
//! columns grow to the right. Hooks are always taken in the outer shape.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

mod family;
mod notation;

pub use family::ShapeFamily;
pub use notation::{parse_partition, parse_skew};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Content `col − row`, the diagonal index of the cell.
    pub fn content(&self) -> isize {
        self.col as isize - self.row as isize
    }

    /// `self ≼ other` in the componentwise order.
    pub fn precedes(&self, other: &Cell) -> bool {
        self.row <= other.row && self.col <= other.col
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for (i, w) in parts.windows(2).enumerate() {
            if w[1] > w[0] {
                return Err(Error::NotDecreasing { index: i + 2 });
            }
        }
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(Error::ZeroPart { index: i + 1 });
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `(cols^rows)`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![cols; rows],
        }
    }

    /// Staircase `δ_k = (k−1, …, 2, 1)`.
    pub fn staircase(k: usize) -> Self {
        Partition {
            parts: (1..k).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `λ_i` for 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(1)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.part(c.row)
    }

    /// Componentwise containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (1..=other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
            .collect()
    }

    pub fn hook_length(&self, c: Cell) -> Result<usize> {
        if !self.contains_cell(c) {
            return Err(Error::CellOutside(c));
        }
        let leg = self.parts[c.row..].iter().take_while(|&&p| p >= c.col).count();
        Ok(self.part(c.row) - c.col + leg + 1)
    }

    /// Hook lengths of every cell, row by row.
    pub fn hooks(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                (1..=p)
                    .map(|j| (p - j) + (conj.part(j) - (i + 1)) + 1)
                    .collect()
            })
            .collect()
    }

    /// Side of the Durfee square, `max{i : λ_i ≥ i}`.
    pub fn durfee(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p > *i)
            .count()
    }

    /// Cells `(i, λ_i)` that can be removed leaving a partition.
    pub fn removable_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.len()).filter(move |&i| self.part(i) > self.part(i + 1))
    }

    /// Rows where a cell can be added leaving a partition (includes row `ℓ+1`).
    pub fn addable_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.len() + 1).filter(move |&i| i == 1 || self.part(i - 1) > self.part(i))
    }

    pub(crate) fn with_part(&self, row: usize, value: usize) -> Partition {
        let mut parts = self.parts.clone();
        if row > parts.len() {
            parts.resize(row, 0);
        }
        parts[row - 1] = value;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// A skew diagram `λ/μ` with `μ ⊆ λ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if inner.len() > outer.len() {
            return Err(Error::InnerNotContained {
                index: outer.len() + 1,
            });
        }
        if let Some(i) = (1..=inner.len()).find(|&i| inner.part(i) > outer.part(i)) {
            return Err(Error::InnerNotContained { index: i });
        }
        Ok(SkewShape { outer, inner })
    }

    /// `λ/∅`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn from_parts(outer: &[usize], inner: &[usize]) -> Result<Self> {
        SkewShape::new(Partition::new(outer.to_vec())?, Partition::new(inner.to_vec())?)
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        self.outer.contains_cell(c) && !self.inner.contains_cell(c)
    }

    /// Skew cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        (1..=self.outer.len())
            .flat_map(|i| {
                (self.inner.part(i) + 1..=self.outer.part(i)).map(move |j| Cell::new(i, j))
            })
            .collect()
    }

    /// Outer-shape hook lengths `h_λ(u)` over the skew cells, row-major.
    pub fn hook_multiset(&self) -> Vec<usize> {
        let hooks = self.outer.hooks();
        self.cells()
            .into_iter()
            .map(|c| hooks[c.row - 1][c.col - 1])
            .collect()
    }

    /// `(min(λ₁, λ′₁), max hook over skew cells)`.
    pub fn width_depth(&self) -> (usize, usize) {
        let width = self.outer.first().min(self.outer.len());
        let depth = self.hook_multiset().into_iter().max().unwrap_or(0);
        (width, depth)
    }

    /// Sizes `r_1, r_2, …` of the antidiagonals `i + j = const`, starting at
    /// the smallest `i + j` occurring in the shape.
    pub fn antidiagonal_ranks(&self) -> Vec<usize> {
        let cells = self.cells();
        let Some(lo) = cells.iter().map(|c| c.row + c.col).min() else {
            return Vec::new();
        };
        let hi = cells.iter().map(|c| c.row + c.col).max().unwrap_or(lo);
        let mut ranks = vec![0; hi - lo + 1];
        for c in &cells {
            ranks[c.row + c.col - lo] += 1;
        }
        ranks
    }

    /// The diagram rotated by 180 degrees inside its bounding box, with
    /// empty leading rows and columns trimmed.
    pub fn rotate180(&self) -> SkewShape {
        if self.is_empty() {
            return SkewShape::straight(Partition::empty());
        }
        let rows = self.outer.len();
        let cols = self.outer.first();
        let outer: Vec<usize> = (1..=rows)
            .map(|i| cols - self.inner.part(rows + 1 - i))
            .collect();
        let inner: Vec<usize> = (1..=rows)
            .map(|i| cols - self.outer.part(rows + 1 - i))
            .collect();
        let rotated = SkewShape {
            outer: Partition::new(outer).expect("rotation preserves monotonicity"),
            inner: Partition::new(inner).expect("rotation preserves monotonicity"),
        };
        rotated.trimmed()
    }

    /// Drops empty rows at the top and empty columns on the left, and
    /// trailing rows that lie entirely inside the inner shape.
    pub fn trimmed(&self) -> SkewShape {
        let cells = self.cells();
        let Some(top) = cells.iter().map(|c| c.row).min() else {
            return SkewShape::straight(Partition::empty());
        };
        let bottom = cells.iter().map(|c| c.row).max().unwrap_or(top);
        let left = cells.iter().map(|c| c.col).min().unwrap_or(1);
        let shift = |p: usize| p.saturating_sub(left - 1);
        let outer: Vec<usize> = (top..=bottom).map(|i| shift(self.outer.part(i))).collect();
        let inner: Vec<usize> = (top..=bottom).map(|i| shift(self.inner.part(i))).collect();
        SkewShape {
            outer: Partition::new(outer).expect("trimming preserves monotonicity"),
            inner: Partition::new(inner).expect("trimming preserves monotonicity"),
        }
    }

    /// Edge-connectivity of the cell set; the empty shape counts as connected.
    pub fn is_connected(&self) -> bool {
        let cells = self.cells();
        let Some(&start) = cells.first() else {
            return true;
        };
        let mut seen = BTreeSet::new();
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(c) = stack.pop() {
            let mut nbrs = Vec::with_capacity(4);
            nbrs.push(Cell::new(c.row + 1, c.col));
            nbrs.push(Cell::new(c.row, c.col + 1));
            if c.row > 1 {
                nbrs.push(Cell::new(c.row - 1, c.col));
            }
            if c.col > 1 {
                nbrs.push(Cell::new(c.row, c.col - 1));
            }
            for nb in nbrs {
                if self.contains_cell(nb) && seen.insert(nb) {
                    stack.push(nb);
                }
            }
        }
        seen.len() == cells.len()
    }

    /// At most one cell on every diagonal `j − i`.
    pub fn is_ribbon(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.cells().iter().all(|c| seen.insert(c.content()))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.outer)?;
        if !self.inner.is_empty() {
            write!(f, "/{}", self.inner)?;
        }
        Ok(())
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions contained in `lambda` (including `∅` and `lambda`).
pub fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    fn rec(lambda: &Partition, row: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition { parts: cur.clone() });
        if row > lambda.len() {
            return;
        }
        for p in 1..=max.min(lambda.part(row)) {
            cur.push(p);
            rec(lambda, row + 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 1, lambda.first(), &mut Vec::new(), &mut out);
    out
}

/// Every nonempty connected skew shape `λ/μ` with `1 ≤ |λ| ≤ max_outer`.
pub fn connected_skew_shapes(max_outer: usize) -> Vec<SkewShape> {
    skew_shapes(max_outer)
        .into_iter()
        .filter(SkewShape::is_connected)
        .collect()
}

/// Every nonempty skew shape `λ/μ` with `1 ≤ |λ| ≤ max_outer`, connected
/// or not, ordered by `|λ|`, then `λ`, then `μ` as generated.
pub fn skew_shapes(max_outer: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for size in 1..=max_outer {
        for lambda in partitions_of(size) {
            for mu in subpartitions(&lambda) {
                let s = SkewShape {
                    outer: lambda.clone(),
                    inner: mu,
                };
                if !s.is_empty() {
                    out.push(s);
                }
            }
        }
    }
    out
}
