//! Lower and upper bounds on the number of standard fillings of a skew
//! shape, from general poset arguments and from hook formulas.
//!
//! All comparisons are exact; floats appear only in the log-gap column of
//! [`BoundsReport`], which is informational.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::arith::{ceil_nonneg, divide_exact, factorial, rational, to_rational};
use crate::asymptotics::ln_rational;
use crate::error::{Error, Result};
use crate::exact::{hook_product, naive_hlf, skew_count};
use crate::excited::xi_determinant;
use crate::shapes::{Cell, SkewShape};
use crate::{binomial, ExactCount, ExactRational};

/// `∏ r_k!` over the antidiagonal rank sizes `r_k`.
///
/// Sorting cells by antidiagonal always gives a valid filling order and
/// cells on one antidiagonal are pairwise incomparable, so this is a lower
/// bound for every skew shape.
pub fn rank_factorial_lower(s: &SkewShape) -> ExactCount {
    s.antidiagonal_ranks()
        .into_iter()
        .fold(BigUint::one(), |acc, r| acc * factorial(r as u64))
}

/// A partition of the cells of a skew shape into chains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecomposition {
    pub chains: Vec<Vec<Cell>>,
}

impl ChainDecomposition {
    pub fn lengths(&self) -> Vec<usize> {
        self.chains.iter().map(Vec::len).collect()
    }

    /// Checks that the chains partition the cells of `s` and that each is
    /// totally ordered under `≼`.
    pub fn validate(&self, s: &SkewShape) -> Result<()> {
        let mut all: Vec<Cell> = self.chains.iter().flatten().copied().collect();
        all.sort_unstable();
        if all != s.cells() {
            return Err(Error::domain("chains do not partition the cells of the shape"));
        }
        for chain in &self.chains {
            let mut sorted = chain.clone();
            sorted.sort_unstable();
            if !sorted.windows(2).all(|w| w[0].precedes(&w[1])) {
                return Err(Error::domain("a chain contains incomparable cells"));
            }
        }
        Ok(())
    }
}

/// Pairs adjacent content diagonals into chains.
///
/// The union of two adjacent diagonals `j − i = c, c+1` is always a chain
/// (it zigzags east and south). A dynamic program picks the pairing that
/// maximizes `∏ ℓ_i!`, preferring a pair over a singleton on ties.
pub fn chain_decomposition(s: &SkewShape) -> ChainDecomposition {
    let mut diagonals: BTreeMap<isize, Vec<Cell>> = BTreeMap::new();
    for c in s.cells() {
        diagonals.entry(c.content()).or_default().push(c);
    }
    // Contents of a skew shape's cells may skip values only between
    // components; pairing across a gap would not give a chain.
    let diags: Vec<(isize, Vec<Cell>)> = diagonals.into_iter().collect();
    let len = diags.len();
    let weight = |k: usize| factorial(k as u64);
    // best[i]: best product for the first i diagonals, with the choice made.
    let mut best: Vec<(BigUint, bool)> = alloc::vec![(BigUint::one(), false)];
    for i in 1..=len {
        let single = &best[i - 1].0 * weight(diags[i - 1].1.len());
        let mut choice = (single, false);
        if i >= 2 && diags[i - 1].0 == diags[i - 2].0 + 1 {
            let pair = &best[i - 2].0 * weight(diags[i - 1].1.len() + diags[i - 2].1.len());
            if pair >= choice.0 {
                choice = (pair, true);
            }
        }
        best.push(choice);
    }
    let mut chains = Vec::new();
    let mut i = len;
    while i > 0 {
        if best[i].1 {
            let mut chain = diags[i - 2].1.clone();
            chain.extend_from_slice(&diags[i - 1].1);
            chain.sort_unstable();
            chains.push(chain);
            i -= 2;
        } else {
            chains.push(diags[i - 1].1.clone());
            i -= 1;
        }
    }
    chains.reverse();
    ChainDecomposition { chains }
}

/// `n!/∏ ℓ_i!` for a valid chain decomposition.
pub fn chain_upper(s: &SkewShape, cd: &ChainDecomposition) -> Result<ExactCount> {
    cd.validate(s)?;
    let denom = cd
        .chains
        .iter()
        .fold(BigUint::one(), |acc, c| acc * factorial(c.len() as u64));
    Ok(divide_exact(&factorial(s.size() as u64), &denom).expect("multinomial is an integer"))
}

/// `br(x)`: the number of cells `y` of the shape with `x ≼ y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpperIdealSizes {
    pub br: BTreeMap<Cell, usize>,
}

pub fn upper_ideal_sizes(s: &SkewShape) -> UpperIdealSizes {
    let cells = s.cells();
    let br = cells
        .iter()
        .map(|&x| (x, cells.iter().filter(|y| x.precedes(y)).count()))
        .collect();
    UpperIdealSizes { br }
}

/// `n!/∏ br(x)` for the shape as given.
pub fn hp_lower_single(s: &SkewShape) -> ExactRational {
    let denom = upper_ideal_sizes(s)
        .br
        .values()
        .fold(BigUint::one(), |acc, &b| acc * b);
    rational(factorial(s.size() as u64), denom)
}

/// The upper-ideal lower bound, taken as the better of the shape and its
/// 180° rotation (the bound depends on orientation).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HpBound {
    pub value: ExactRational,
    /// `⌈value⌉`, still a lower bound since the count is an integer.
    pub ceiling: ExactCount,
    /// True when the rotated shape gave the larger value.
    pub from_rotation: bool,
}

pub fn hp_lower(s: &SkewShape) -> HpBound {
    let direct = hp_lower_single(s);
    let rotated = hp_lower_single(&s.rotate180());
    let from_rotation = rotated > direct;
    let value = if from_rotation { rotated } else { direct };
    HpBound {
        ceiling: ceil_nonneg(&value),
        value,
        from_rotation,
    }
}

/// `∏_{u∈λ} h(u) / ∏_{v∈μ} h(v)`, which equals `|λ|!·f^μ/(|μ|!·f^λ)`.
pub fn skew_lr_upper(s: &SkewShape) -> ExactRational {
    rational(hook_product(s.outer()), hook_product(s.inner()))
}

/// `(F, ξ·F)`.
pub fn main_sandwich(s: &SkewShape) -> (ExactRational, ExactRational) {
    let f = naive_hlf(s);
    let xi_f = &f * to_rational(&xi_determinant(s));
    (f, xi_f)
}

/// One orientation of the rank-factorial versus `F` comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankComparison {
    /// Antidiagonal sizes, starting from the north-west corner.
    pub ranks: Vec<usize>,
    /// True when the ranks are weakly increasing.
    pub hypothesis: bool,
    /// `∏ r_i!`.
    pub rank_product: ExactCount,
    /// `F` of this orientation.
    pub naive: ExactRational,
}

impl RankComparison {
    fn new(s: &SkewShape) -> Self {
        let ranks = s.antidiagonal_ranks();
        RankComparison {
            hypothesis: ranks.windows(2).all(|w| w[0] <= w[1]),
            rank_product: rank_factorial_lower(s),
            naive: naive_hlf(s),
            ranks,
        }
    }

    /// Whether `∏ r_i! ≤ F`, regardless of the hypothesis.
    pub fn inequality(&self) -> bool {
        to_rational(&self.rank_product) <= self.naive
    }
}

/// `∏ r_i! ≤ F` for shapes whose antidiagonal sizes weakly increase.
///
/// The comparison is made for the shape and for its 180° rotation, each
/// with its own `F`; an orientation whose ranks are not weakly increasing
/// is not applicable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompareCheck {
    pub direct: RankComparison,
    pub rotated: RankComparison,
}

impl CompareCheck {
    /// `None` if neither orientation satisfies the hypothesis, otherwise
    /// whether the inequality holds in every applicable orientation.
    pub fn verdict(&self) -> Option<bool> {
        let applicable: Vec<&RankComparison> = [&self.direct, &self.rotated]
            .into_iter()
            .filter(|c| c.hypothesis)
            .collect();
        if applicable.is_empty() {
            None
        } else {
            Some(applicable.iter().all(|c| c.inequality()))
        }
    }
}

pub fn compare_check(s: &SkewShape) -> CompareCheck {
    CompareCheck {
        direct: RankComparison::new(s),
        rotated: RankComparison::new(&s.rotate180()),
    }
}

/// `binom(t+r, r) ≥ ((2t+r−1)/r)^r`, checked as
/// `binom(t+r, r)·r^r ≥ (2t+r−1)^r`. `None` outside `t ≥ r ≥ 3`.
pub fn binom_lemma_check(t: u64, r: u64) -> Option<bool> {
    if !(t >= r && r >= 3) {
        return None;
    }
    let lhs = binomial(t + r, r) * BigUint::from(r).pow(r as u32);
    let rhs = BigUint::from(2 * t + r - 1).pow(r as u32);
    Some(lhs >= rhs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundSide {
    Lower,
    Upper,
}

/// One bound, its value and whether it holds against the exact count.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundRow {
    pub name: &'static str,
    pub side: BoundSide,
    pub value: ExactRational,
    pub holds: bool,
    /// `ln(bound) − ln(e)`: nonpositive for a sound lower bound,
    /// nonnegative for a sound upper bound. Rounded to double precision.
    pub log_gap: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundsReport {
    pub shape: SkewShape,
    pub n: usize,
    pub exact: ExactCount,
    pub naive: ExactRational,
    pub xi: ExactCount,
    pub chain_lengths: Vec<usize>,
    pub hp: HpBound,
    pub rows: Vec<BoundRow>,
}

impl BoundsReport {
    pub fn all_hold(&self) -> bool {
        self.rows.iter().all(|r| r.holds)
    }

    pub fn row(&self, name: &str) -> Option<&BoundRow> {
        self.rows.iter().find(|r| r.name == name)
    }
}

/// Row names in report order.
pub const BOUND_NAMES: [&str; 6] = [
    "rank-factorial",
    "hp",
    "naive-hlf",
    "chain",
    "xi-times-f",
    "skew-lr",
];

pub fn bounds_report(s: &SkewShape) -> BoundsReport {
    let exact = skew_count(s);
    let e = to_rational(&exact);
    let ln_e = ln_rational(&e);
    let (naive, xi_f) = main_sandwich(s);
    let cd = chain_decomposition(s);
    let chain = chain_upper(s, &cd).expect("constructed decomposition is valid");
    let hp = hp_lower(s);
    let values = [
        (BoundSide::Lower, to_rational(&rank_factorial_lower(s))),
        (BoundSide::Lower, hp.value.clone()),
        (BoundSide::Lower, naive.clone()),
        (BoundSide::Upper, to_rational(&chain)),
        (BoundSide::Upper, xi_f),
        (BoundSide::Upper, skew_lr_upper(s)),
    ];
    let rows = BOUND_NAMES
        .iter()
        .zip(values)
        .map(|(&name, (side, value))| BoundRow {
            name,
            side,
            holds: match side {
                BoundSide::Lower => value <= e,
                BoundSide::Upper => value >= e,
            },
            log_gap: ln_rational(&value) - ln_e,
            value,
        })
        .collect();
    BoundsReport {
        shape: s.clone(),
        n: s.size(),
        xi: xi_determinant(s),
        exact,
        naive,
        chain_lengths: cd.lengths(),
        hp,
        rows,
    }
}

/// Formats a rational as `p/q`, or `p` when integral.
pub fn format_rational(q: &ExactRational) -> alloc::string::String {
    if q.is_integer() {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
