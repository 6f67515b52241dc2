use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::shapes::{Partition, SkewShape};
use crate::{Caps, ExactCount};

/// `c^λ_{μν}`: the number of semistandard fillings of `λ/μ` with content
/// `ν` whose reverse reading word is a lattice word.
pub fn lr_coefficient(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    caps: &Caps,
) -> Result<ExactCount> {
    if lambda.size() != mu.size() + nu.size() {
        return Err(Error::domain(format!(
            "|λ| = {} but |μ| + |ν| = {}",
            lambda.size(),
            mu.size() + nu.size()
        )));
    }
    if lambda.size() > caps.lr_size {
        return Err(Error::CapExceeded {
            what: "Littlewood–Richardson size",
            limit: caps.lr_size as u64,
            requested: lambda.size() as u64,
        });
    }
    if !lambda.contains(mu) {
        return Ok(BigUint::default());
    }
    let shape = SkewShape::new(lambda.clone(), mu.clone())?;
    Ok(BigUint::from(lr_tableaux_count(&shape, nu)))
}

/// Backtracking count of LR tableaux of shape `shape` and content `nu`.
pub fn lr_tableaux_count(shape: &SkewShape, nu: &Partition) -> u64 {
    if shape.size() != nu.size() {
        return 0;
    }
    let lambda = shape.outer();
    let mu = shape.inner();
    // Reading order: rows top to bottom, each right to left.
    let order: Vec<(usize, usize)> = (1..=lambda.len())
        .flat_map(|i| (mu.part(i) + 1..=lambda.part(i)).rev().map(move |j| (i, j)))
        .collect();
    let width = lambda.first();
    let mut grid = vec![vec![0usize; width + 2]; lambda.len() + 2];
    let mut counts = vec![0usize; nu.len() + 1];
    let mut state = Search {
        shape,
        nu,
        order: &order,
        grid: &mut grid,
        counts: &mut counts,
    };
    state.run(0)
}

struct Search<'a> {
    shape: &'a SkewShape,
    nu: &'a Partition,
    order: &'a [(usize, usize)],
    grid: &'a mut Vec<Vec<usize>>,
    counts: &'a mut Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize) -> u64 {
        let Some(&(r, c)) = self.order.get(pos) else {
            return 1;
        };
        let right = if self.shape.contains_cell(crate::Cell::new(r, c + 1)) {
            self.grid[r][c + 1]
        } else {
            self.nu.len()
        };
        let above = if r > 1 && self.shape.contains_cell(crate::Cell::new(r - 1, c)) {
            self.grid[r - 1][c]
        } else {
            0
        };
        let mut total = 0;
        for v in (above + 1)..=right {
            if self.counts[v] >= self.nu.part(v) {
                continue;
            }
            if v > 1 && self.counts[v] + 1 > self.counts[v - 1] {
                continue;
            }
            self.counts[v] += 1;
            self.grid[r][c] = v;
            total += self.run(pos + 1);
            self.grid[r][c] = 0;
            self.counts[v] -= 1;
        }
        total
    }
}
