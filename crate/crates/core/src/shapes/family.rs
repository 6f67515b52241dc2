use alloc::format;
use alloc::vec::Vec;

use super::{Partition, SkewShape};
use crate::error::{Error, Result};

/// Parametric shape families. Staircases follow `δ_k = (k−1, …, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShapeFamily {
    /// `(k^k)`.
    Square { k: usize },
    /// `δ_k`.
    Staircase { k: usize },
    /// `δ_{k+r}/δ_k`.
    ThickRibbon { k: usize, r: usize },
    /// `(k+1)^{k+1}/k^k`.
    InvertedHook { k: usize },
    /// `(2k)^{2k}/k^k`.
    InvertedThickHook { k: usize },
    /// `δ_{k+2}/δ_k`.
    Zigzag { k: usize },
    /// Ribbon with `k` columns, each of length `m`.
    RibbonRho { k: usize, m: usize },
    /// `λ/δ_ℓ` with `λ_i = 3ℓ − 1 − i`, every row of length `2ℓ − 1`.
    SlimStripe { l: usize },
    /// Two copies of `σ*` attached above and left of `τ = (cols^rows)`,
    /// with `σ*` removed from `τ`.
    RegevVershik {
        sigma: Partition,
        rows: usize,
        cols: usize,
    },
}

impl ShapeFamily {
    pub fn name(&self) -> &'static str {
        match self {
            ShapeFamily::Square { .. } => "square",
            ShapeFamily::Staircase { .. } => "staircase",
            ShapeFamily::ThickRibbon { .. } => "thick-ribbon",
            ShapeFamily::InvertedHook { .. } => "inverted-hook",
            ShapeFamily::InvertedThickHook { .. } => "inverted-thick-hook",
            ShapeFamily::Zigzag { .. } => "zigzag",
            ShapeFamily::RibbonRho { .. } => "ribbon-rho",
            ShapeFamily::SlimStripe { .. } => "slim-stripe",
            ShapeFamily::RegevVershik { .. } => "regev-vershik",
        }
    }

    /// The primary size parameter `k` (or `ℓ`, or the rectangle height).
    pub fn k(&self) -> usize {
        match *self {
            ShapeFamily::Square { k }
            | ShapeFamily::Staircase { k }
            | ShapeFamily::ThickRibbon { k, .. }
            | ShapeFamily::InvertedHook { k }
            | ShapeFamily::InvertedThickHook { k }
            | ShapeFamily::Zigzag { k }
            | ShapeFamily::RibbonRho { k, .. } => k,
            ShapeFamily::SlimStripe { l } => l,
            ShapeFamily::RegevVershik { rows, .. } => rows,
        }
    }

    /// Same family with the primary parameter replaced. A thick ribbon
    /// with `r = k` keeps `r = k`.
    pub fn with_k(&self, k: usize) -> ShapeFamily {
        let mut f = self.clone();
        match &mut f {
            ShapeFamily::ThickRibbon { k: kk, r } => {
                if *r == *kk {
                    *r = k;
                }
                *kk = k;
            }
            ShapeFamily::Square { k: kk }
            | ShapeFamily::Staircase { k: kk }
            | ShapeFamily::InvertedHook { k: kk }
            | ShapeFamily::InvertedThickHook { k: kk }
            | ShapeFamily::Zigzag { k: kk }
            | ShapeFamily::RibbonRho { k: kk, .. } => *kk = k,
            ShapeFamily::SlimStripe { l } => *l = k,
            ShapeFamily::RegevVershik { rows, .. } => *rows = k,
        }
        f
    }

    pub fn generate(&self) -> Result<SkewShape> {
        match *self {
            ShapeFamily::Square { k } => {
                positive("k", k)?;
                Ok(SkewShape::straight(Partition::rectangle(k, k)))
            }
            ShapeFamily::Staircase { k } => {
                positive("k", k)?;
                Ok(SkewShape::straight(Partition::staircase(k)))
            }
            ShapeFamily::ThickRibbon { k, r } => {
                positive("k", k)?;
                positive("r", r)?;
                SkewShape::new(Partition::staircase(k + r), Partition::staircase(k))
            }
            ShapeFamily::InvertedHook { k } => {
                positive("k", k)?;
                SkewShape::new(Partition::rectangle(k + 1, k + 1), Partition::rectangle(k, k))
            }
            ShapeFamily::InvertedThickHook { k } => {
                positive("k", k)?;
                SkewShape::new(Partition::rectangle(2 * k, 2 * k), Partition::rectangle(k, k))
            }
            ShapeFamily::Zigzag { k } => {
                positive("k", k)?;
                SkewShape::new(Partition::staircase(k + 2), Partition::staircase(k))
            }
            ShapeFamily::RibbonRho { k, m } => {
                positive("k", k)?;
                positive("m", m)?;
                Ok(ribbon_rho(k, m))
            }
            ShapeFamily::SlimStripe { l } => {
                positive("l", l)?;
                let outer = Partition::new((1..=l).map(|i| 3 * l - 1 - i).collect())?;
                SkewShape::new(outer, Partition::staircase(l))
            }
            ShapeFamily::RegevVershik {
                ref sigma,
                rows,
                cols,
            } => regev_vershik(sigma, rows, cols),
        }
    }
}

fn positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        Err(Error::domain(format!("parameter {name} must be at least 1")))
    } else {
        Ok(())
    }
}

/// Column `c` (left to right) occupies rows `(k−c)(m−1)+1 ..= (k−c)(m−1)+m`;
/// consecutive columns share one row.
fn ribbon_rho(k: usize, m: usize) -> SkewShape {
    let rows = k * (m - 1) + 1;
    let top = |c: usize| (k - c) * (m - 1) + 1;
    let mut outer = Vec::with_capacity(rows);
    let mut inner = Vec::with_capacity(rows);
    for r in 1..=rows {
        let cols: Vec<usize> = (1..=k)
            .filter(|&c| top(c) <= r && r < top(c) + m)
            .collect();
        outer.push(*cols.last().expect("every row meets a column"));
        inner.push(cols[0] - 1);
    }
    SkewShape::new(
        Partition::new(outer).expect("ribbon rows decrease"),
        Partition::new(inner).expect("ribbon rows decrease"),
    )
    .expect("ribbon inner lies inside outer")
}

/// Builds the skew shape whose hook multiset is that of `σ` and `τ` together.
///
/// With `a = ℓ(σ)`, `b = σ₁`: rows `1..=a` are `λ = b + cols`,
/// `μ = b + cols − σ_{a+1−r}`; rows `a+i` (`i = 1..=rows`) are
/// `λ = b + cols − σ_{rows+1−i}`, `μ = b − σ_{rows+1−i}`.
fn regev_vershik(sigma: &Partition, rows: usize, cols: usize) -> Result<SkewShape> {
    positive("rows", rows)?;
    positive("cols", cols)?;
    if !Partition::rectangle(rows, cols).contains(sigma) {
        return Err(Error::domain("sigma must fit inside the rectangle"));
    }
    let a = sigma.len();
    let b = sigma.first();
    let mut outer = Vec::with_capacity(a + rows);
    let mut inner = Vec::with_capacity(a + rows);
    for r in 1..=a {
        outer.push(b + cols);
        inner.push(b + cols - sigma.part(a + 1 - r));
    }
    for i in 1..=rows {
        let s = sigma.part(rows + 1 - i);
        outer.push(b + cols - s);
        inner.push(b - s);
    }
    SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)
}
