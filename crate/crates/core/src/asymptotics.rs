//! Finite-size asymptotics: logarithms of exact counts, Stirling-type main
//! terms, second-order constants of shape families, hook integrals over
//! piecewise-linear regions and the constant of shapes with linearly
//! growing Frobenius coordinates.
//!
//! This is the only module that works in floating point. Logarithms of
//! big integers are exact to double precision (see [`ln_count`]); the
//! quadrature error is estimated by halving the grid.

use alloc::vec::Vec;
use core::f64::consts::LN_2;

use num_bigint::BigUint;
// Float supplies `ln` and friends without std. Builds that pull in std
// (unit tests, or num-traits/std via feature unification) see it as unused.
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::{ToPrimitive, Zero};

use crate::arith::{factorial, to_rational};
use crate::error::{Error, Result};
use crate::exact::{skew_count, naive_hlf, FactorialKind, FactorialTable};
use crate::excited::xi_determinant;
use crate::shapes::{Partition, ShapeFamily, SkewShape};
use crate::{ExactCount, ExactRational};

/// Natural log of a big integer; `−∞` for zero.
///
/// The top 64 bits are converted to `f64` and the discarded bits are added
/// back as a multiple of `ln 2`, so the relative error is a few ulps.
pub fn ln_count(v: &BigUint) -> f64 {
    if v.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = v.bits();
    let shift = bits.saturating_sub(64);
    let top = (v >> shift).to_f64().expect("64-bit value fits in f64");
    top.ln() + shift as f64 * LN_2
}

/// Natural log of a nonnegative rational.
pub fn ln_rational(q: &ExactRational) -> f64 {
    let num = q.numer().magnitude();
    let den = q.denom().magnitude();
    ln_count(num) - ln_count(den)
}

/// Log of a factorial-family value next to its main asymptotic terms.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FamilyLog {
    pub exact: f64,
    pub main: f64,
}

impl FamilyLog {
    pub fn residual(&self) -> f64 {
        self.exact - self.main
    }
}

/// Main terms, with the error term left out:
///
/// * `log n! ≈ n log n − n`
/// * `log (2n−1)!! ≈ n log n + (log 2 − 1) n` (error `O(1)`)
/// * `log Φ(n) ≈ ½n² log n − ¾n² + n log n` (error `O(n)`)
/// * `log Ψ(n) ≈ n² log n + (log 2 − 3/2) n² + ½ n log n` (error `O(n)`)
/// * `log Λ(n) ≈ ½n² log n + (½ log 2 − ¾) n² + ½ n log n` (error `O(n)`)
pub fn main_terms(kind: FactorialKind, n: usize) -> f64 {
    let x = n as f64;
    if n == 0 {
        return 0.0;
    }
    let l = x.ln();
    match kind {
        FactorialKind::Factorial => x * l - x,
        FactorialKind::DoubleFactorial => x * l + (LN_2 - 1.0) * x,
        FactorialKind::Superfactorial => 0.5 * x * x * l - 0.75 * x * x + x * l,
        FactorialKind::DoubleSuperfactorial => x * x * l + (LN_2 - 1.5) * x * x + 0.5 * x * l,
        FactorialKind::SuperDoubleFactorial => {
            0.5 * x * x * l + (0.5 * LN_2 - 0.75) * x * x + 0.5 * x * l
        }
    }
}

pub fn log_factorial_family(kind: FactorialKind, n: usize) -> FamilyLog {
    let table = FactorialTable::up_to(n);
    FamilyLog {
        exact: ln_count(table.get(kind, n)),
        main: main_terms(kind, n),
    }
}

/// `c_k = (log e − ½ n log n)/n` at one instance of a family.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SecondOrder {
    pub n: usize,
    pub ln_e: f64,
    pub c: f64,
}

pub fn second_order_constant(family: &ShapeFamily, k: usize) -> Result<SecondOrder> {
    let s = family.with_k(k).generate()?;
    let n = s.size();
    if n == 0 {
        return Err(Error::domain("empty shape has no second-order constant"));
    }
    let ln_e = ln_count(&skew_count(&s));
    let x = n as f64;
    Ok(SecondOrder {
        n,
        ln_e,
        c: (ln_e - 0.5 * x * x.ln()) / x,
    })
}

/// `∫∫_{[0,1]²} log(x+y) = 2 log 2 − 3/2`.
pub fn c1() -> f64 {
    2.0 * LN_2 - 1.5
}

/// `∫∫_{[0,1]²} log(1+x+y) = (9/2) log 3 − 4 log 2 − 3/2`.
pub fn c2() -> f64 {
    4.5 * 3f64.ln() - 4.0 * LN_2 - 1.5
}

/// `∫∫_{[0,1]²} log(2+x+y) = 18 log 2 − 9 log 3 − 3/2`.
pub fn c3() -> f64 {
    18.0 * LN_2 - 9.0 * 3f64.ln() - 1.5
}

/// Interval for the second-order constant of a family, and its exact
/// limit when known.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Band {
    pub lower: f64,
    pub upper: f64,
    pub limit: Option<f64>,
}

impl Band {
    pub fn contains(&self, c: f64) -> bool {
        self.lower <= c && c <= self.upper
    }
}

/// Closed-form band constants for thick ribbons `δ_{2k}/δ_k`, inverted
/// thick hooks `(2k)^{2k}/k^k` and squares. `None` for other families.
pub fn band_constants(family: &ShapeFamily) -> Option<Band> {
    let ln3 = 3f64.ln();
    match *family {
        ShapeFamily::ThickRibbon { k, r } if k == r => Some(Band {
            lower: 1.0 / 6.0 - 1.5 * LN_2 + 0.5 * ln3,
            upper: 1.0 / 6.0 - 3.5 * LN_2 + 2.0 * ln3,
            limit: None,
        }),
        ShapeFamily::InvertedThickHook { .. } => {
            let lower = -1.0 - c1() / 3.0 - 2.0 * c2() / 3.0;
            Some(Band {
                lower,
                upper: lower + (3.0 * 3f64.sqrt() / 4.0).ln(),
                limit: Some(-1.0 - 2.0 * c1() / 3.0 - c3() / 3.0),
            })
        }
        ShapeFamily::Square { .. } => {
            let c = 0.5 - 2.0 * LN_2;
            Some(Band {
                lower: c,
                upper: c,
                limit: Some(c),
            })
        }
        _ => None,
    }
}

/// One row of a family table: exact logs and the second-order constant.
#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticReport {
    pub family: ShapeFamily,
    pub k: usize,
    pub n: usize,
    pub ln_e: f64,
    pub c: f64,
    pub ln_f: f64,
    pub ln_xi: f64,
    pub band: Option<Band>,
    /// `F ≤ e ≤ ξ·F`, decided in exact arithmetic.
    pub sandwich: bool,
}

pub fn family_report(family: &ShapeFamily, k: usize) -> Result<AsymptoticReport> {
    let inst = family.with_k(k);
    let s = inst.generate()?;
    let n = s.size();
    let e = skew_count(&s);
    let f = naive_hlf(&s);
    let xi = xi_determinant(&s);
    let e_q = to_rational(&e);
    let sandwich = f <= e_q && e_q <= &f * to_rational(&xi);
    let ln_e = ln_count(&e);
    let x = (n.max(1)) as f64;
    Ok(AsymptoticReport {
        band: band_constants(&inst),
        family: inst,
        k,
        n,
        c: (ln_e - 0.5 * x * x.ln()) / x,
        ln_e,
        ln_f: ln_rational(&f),
        ln_xi: ln_count(&xi),
        sandwich,
    })
}

/// A weakly decreasing, piecewise-linear function on `[0, a]`, given by
/// breakpoints. Repeating an `x` gives a vertical drop.
#[derive(Clone, Debug, PartialEq)]
pub struct PiecewiseLinear {
    points: Vec<(f64, f64)>,
}

impl PiecewiseLinear {
    pub fn new(points: Vec<(f64, f64)>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::domain("a boundary needs at least two points"));
        }
        if points.iter().any(|&(x, y)| !x.is_finite() || !y.is_finite() || y < 0.0) {
            return Err(Error::domain("boundary points must be finite with y ≥ 0"));
        }
        if points[0].0 != 0.0 {
            return Err(Error::domain("a boundary must start at x = 0"));
        }
        if points.windows(2).any(|w| w[1].0 < w[0].0 || w[1].1 > w[0].1) {
            return Err(Error::domain("boundary must have increasing x and decreasing y"));
        }
        if points.last().map(|p| p.0) == Some(0.0) {
            return Err(Error::domain("boundary has an empty domain"));
        }
        Ok(PiecewiseLinear { points })
    }

    pub fn constant(a: f64, y: f64) -> Result<Self> {
        PiecewiseLinear::new(alloc::vec![(0.0, y), (a, y)])
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn end(&self) -> f64 {
        self.points.last().expect("at least two points").0
    }

    /// Value at `x`; at a vertical drop the left segment wins.
    pub fn eval(&self, x: f64) -> f64 {
        for w in self.points.windows(2) {
            let ((x0, y0), (x1, y1)) = (w[0], w[1]);
            if x1 > x0 && x <= x1 {
                let t = ((x - x0) / (x1 - x0)).clamp(0.0, 1.0);
                return y0 + t * (y1 - y0);
            }
        }
        self.points.last().expect("at least two points").1
    }

    /// `sup{x : f(x) ≥ y}`, the inverse of a decreasing boundary.
    pub fn inverse(&self, y: f64) -> f64 {
        if self.points[0].1 < y {
            return 0.0;
        }
        for w in self.points.windows(2) {
            let ((x0, y0), (x1, y1)) = (w[0], w[1]);
            if y1 >= y {
                continue;
            }
            if y0 == y1 {
                return x0;
            }
            return x0 + (y0 - y) / (y0 - y1) * (x1 - x0);
        }
        self.end()
    }
}

/// The region between two decreasing boundaries `π ≤ ω` on `[0, a]`.
#[derive(Clone, Debug, PartialEq)]
pub struct StableShape {
    pub omega: PiecewiseLinear,
    pub pi: PiecewiseLinear,
}

impl StableShape {
    pub fn new(omega: PiecewiseLinear, pi: PiecewiseLinear) -> Result<Self> {
        if omega.end() != pi.end() {
            return Err(Error::domain("ω and π must share their domain"));
        }
        let shape = StableShape { omega, pi };
        let xs = shape.breakpoints();
        let mut probes = xs.clone();
        probes.extend(xs.windows(2).map(|w| 0.5 * (w[0] + w[1])));
        if probes.iter().any(|&x| shape.pi.eval(x) > shape.omega.eval(x)) {
            return Err(Error::domain("π must lie below ω"));
        }
        Ok(shape)
    }

    /// The rectangle `[0, a] × [0, b]`.
    pub fn rectangle(a: f64, b: f64) -> Result<Self> {
        StableShape::new(PiecewiseLinear::constant(a, b)?, PiecewiseLinear::constant(a, 0.0)?)
    }

    fn breakpoints(&self) -> Vec<f64> {
        let mut xs: Vec<f64> = self
            .omega
            .points()
            .iter()
            .chain(self.pi.points())
            .map(|p| p.0)
            .collect();
        xs.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
        xs.dedup();
        xs
    }

    /// Exact area (both boundaries are linear between breakpoints).
    pub fn area(&self) -> f64 {
        self.breakpoints()
            .windows(2)
            .map(|w| {
                let m = 0.5 * (w[0] + w[1]);
                (w[1] - w[0]) * (self.omega.eval(m) - self.pi.eval(m))
            })
            .sum()
    }

    /// Scaled hook `(ω(x) − y) + (ω⁻¹(y) − x)`.
    pub fn hook(&self, x: f64, y: f64) -> f64 {
        (self.omega.eval(x) - y) + (self.omega.inverse(y) - x)
    }
}

/// A quadrature value with the coarse value used to check it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub coarse: f64,
    pub grid: usize,
}

impl Quadrature {
    pub fn error_estimate(&self) -> f64 {
        (self.value - self.coarse).abs()
    }
}

/// Relative disagreement allowed between grid `g` and `g/2`.
pub const REFINEMENT_TOLERANCE: f64 = 1e-3;

fn pairwise_sum(v: &[f64]) -> f64 {
    if v.len() <= 16 {
        v.iter().sum()
    } else {
        let (a, b) = v.split_at(v.len() / 2);
        pairwise_sum(a) + pairwise_sum(b)
    }
}

/// Midpoint rule with about `grid` points per unit length in each
/// direction. Columns never straddle a breakpoint; within a column `y`
/// runs over `[π(x), ω(x)]` at the column midpoint.
fn midpoint(ss: &StableShape, f: &impl Fn(f64, f64) -> f64, grid: usize) -> f64 {
    let g = grid as f64;
    let mut columns = Vec::new();
    for w in ss.breakpoints().windows(2) {
        let (x0, x1) = (w[0], w[1]);
        let nx = ((x1 - x0) * g).round().max(1.0) as usize;
        let dx = (x1 - x0) / nx as f64;
        for i in 0..nx {
            let x = x0 + (i as f64 + 0.5) * dx;
            let (lo, hi) = (ss.pi.eval(x), ss.omega.eval(x));
            if hi <= lo {
                continue;
            }
            let ny = ((hi - lo) * g).round().max(1.0) as usize;
            let dy = (hi - lo) / ny as f64;
            let col: Vec<f64> = (0..ny)
                .map(|j| f(x, lo + (j as f64 + 0.5) * dy))
                .collect();
            columns.push(pairwise_sum(&col) * dy * dx);
        }
    }
    pairwise_sum(&columns)
}

/// Integrates `f` over the region, checking the result against the same
/// rule at half the resolution.
pub fn integrate_region(
    ss: &StableShape,
    f: impl Fn(f64, f64) -> f64,
    grid: usize,
) -> Result<Quadrature> {
    if grid < 64 {
        return Err(Error::domain("quadrature grid must be at least 64"));
    }
    let value = midpoint(ss, &f, grid);
    let coarse = midpoint(ss, &f, grid / 2);
    if !value.is_finite() || !coarse.is_finite() {
        return Err(Error::Numeric(alloc::format!("non-finite quadrature value {value}")));
    }
    if (value - coarse).abs() > REFINEMENT_TOLERANCE * value.abs().max(1.0) {
        return Err(Error::Numeric(alloc::format!(
            "quadrature did not settle: {value} at grid {grid}, {coarse} at grid {}",
            grid / 2
        )));
    }
    Ok(Quadrature {
        value,
        coarse,
        grid,
    })
}

/// `∫∫ log ℏ(x, y)` over the region.
pub fn hook_integral(ss: &StableShape, grid: usize) -> Result<Quadrature> {
    integrate_region(ss, |x, y| ss.hook(x, y).ln(), grid)
}

/// Limits `a_i/n → α_i`, `b_i/n → β_i` of the Frobenius coordinates of the
/// outer shape and `π_i`, `τ_i` of the inner shape.
#[derive(Clone, Debug, PartialEq)]
pub struct TvkData {
    pub alpha: Vec<f64>,
    pub beta: Vec<f64>,
    pub pi: Vec<f64>,
    pub tau: Vec<f64>,
}

impl TvkData {
    pub fn new(alpha: Vec<f64>, beta: Vec<f64>, pi: Vec<f64>, tau: Vec<f64>) -> Result<Self> {
        let k = alpha.len();
        if k == 0 || beta.len() != k || pi.len() != k || tau.len() != k {
            return Err(Error::domain("Frobenius limit vectors must share a positive length"));
        }
        let all = alpha.iter().chain(&beta).chain(&pi).chain(&tau);
        if all.clone().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::domain("Frobenius limits must be finite and nonnegative"));
        }
        if (0..k).any(|i| alpha[i] < pi[i] || beta[i] < tau[i]) {
            return Err(Error::domain("need α ≥ π and β ≥ τ componentwise"));
        }
        let d = TvkData {
            alpha,
            beta,
            pi,
            tau,
        };
        if d.gamma() <= 0.0 {
            return Err(Error::domain("γ must be positive"));
        }
        Ok(d)
    }

    /// `γ = Σ (α_i + β_i − π_i − τ_i)`.
    pub fn gamma(&self) -> f64 {
        (0..self.alpha.len())
            .map(|i| self.alpha[i] + self.beta[i] - self.pi[i] - self.tau[i])
            .sum()
    }
}

fn x_ln_x(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * x.ln()
    }
}

/// `γ log γ − Σ (α_i−π_i) log(α_i−π_i) − Σ (β_i−τ_i) log(β_i−τ_i)`, with
/// `0·log 0 = 0`.
pub fn tvk_constant(d: &TvkData) -> f64 {
    let k = d.alpha.len();
    x_ln_x(d.gamma())
        - (0..k).map(|i| x_ln_x(d.alpha[i] - d.pi[i])).sum::<f64>()
        - (0..k).map(|i| x_ln_x(d.beta[i] - d.tau[i])).sum::<f64>()
}

/// Partition with Frobenius coordinates `(a_1, … | b_1, …)`; both lists
/// strictly decreasing and of equal length.
pub fn partition_from_frobenius(a: &[usize], b: &[usize]) -> Result<Partition> {
    if a.len() != b.len()
        || a.windows(2).any(|w| w[1] >= w[0])
        || b.windows(2).any(|w| w[1] >= w[0])
    {
        return Err(Error::domain("Frobenius coordinates must be strictly decreasing pairs"));
    }
    let d = a.len();
    let mut parts: Vec<usize> = (0..d).map(|i| a[i] + i + 1).collect();
    let depth = b.first().map_or(0, |&b1| b1 + 1);
    for row in d + 1..=depth {
        parts.push((0..d).filter(|&j| b[j] + j + 1 >= row).count());
    }
    Partition::new(parts)
}

/// The shape with Frobenius coordinates `⌊α_i n⌋ | ⌊β_i n⌋` minus the one
/// with `⌊π_i n⌋ | ⌊τ_i n⌋`. A coordinate pair with both limits zero is
/// left out.
pub fn tvk_discretize(d: &TvkData, n: usize) -> Result<SkewShape> {
    let scale = |v: &[f64], w: &[f64]| -> (Vec<usize>, Vec<usize>) {
        let keep = v.iter().zip(w).take_while(|(x, y)| **x + **y > 0.0).count();
        let f = |x: &f64| (x * n as f64).floor() as usize;
        (v[..keep].iter().map(f).collect(), w[..keep].iter().map(f).collect())
    };
    let (a, b) = scale(&d.alpha, &d.beta);
    let (p, t) = scale(&d.pi, &d.tau);
    SkewShape::new(partition_from_frobenius(&a, &b)?, partition_from_frobenius(&p, &t)?)
}

/// `log F(υ_n)/n` for the discretized shape.
pub fn tvk_log_rate(d: &TvkData, n: usize) -> Result<f64> {
    let s = tvk_discretize(d, n)?;
    Ok(ln_rational(&naive_hlf(&s)) / n as f64)
}

/// Hook statistics of a shape of small depth.
#[derive(Clone, Debug, PartialEq)]
pub struct SubpolyReport {
    pub n: usize,
    /// Largest hook of a skew cell.
    pub depth: usize,
    pub n_log_n: f64,
    pub log_factorial: f64,
    pub sum_log_hooks: f64,
    pub n_log_depth: f64,
    /// `log F = log n! − Σ log h`.
    pub log_f: f64,
    /// `∏ h ≤ depth^n`, decided exactly.
    pub holds: bool,
}

pub fn subpoly_report(s: &SkewShape) -> SubpolyReport {
    let hooks = s.hook_multiset();
    let n = s.size();
    let depth = hooks.iter().copied().max().unwrap_or(0);
    let product = hooks.iter().fold(BigUint::from(1u8), |acc, &h| acc * h);
    let bound = num_traits::pow(BigUint::from(depth), n);
    let sum_log_hooks = ln_count(&product);
    let log_factorial = ln_count(&factorial(n as u64));
    let x = n as f64;
    SubpolyReport {
        n,
        depth,
        n_log_n: if n == 0 { 0.0 } else { x * x.ln() },
        log_factorial,
        sum_log_hooks,
        n_log_depth: if depth == 0 { 0.0 } else { x * (depth as f64).ln() },
        log_f: log_factorial - sum_log_hooks,
        holds: product <= bound,
    }
}

/// `(log e − n log n + n log g)/n` for the thick ribbon `δ_{k+g}/δ_k`,
/// with `n` its size and `e` exact.
pub fn thick_ribbon_depth_gap(k: usize, g: usize) -> Result<f64> {
    let s = ShapeFamily::ThickRibbon { k, r: g }.generate()?;
    let x = s.size() as f64;
    let ln_e = ln_count(&skew_count(&s));
    Ok((ln_e - x * x.ln() + x * (g as f64).ln()) / x)
}

/// The expansion `n log n − n log m − n log m/(2m) − n/m` for the ribbon
/// `ρ(k, m)` next to the exact `log e`.
#[derive(Clone, Debug, PartialEq)]
pub struct RibbonRhoTerms {
    pub k: usize,
    pub m: usize,
    pub n: usize,
    pub terms: [f64; 4],
    pub expansion: f64,
    pub exact: ExactCount,
    pub ln_e: f64,
    pub residual: f64,
}

pub fn ribbon_rho_terms(k: usize, m: usize) -> Result<RibbonRhoTerms> {
    let s = ShapeFamily::RibbonRho { k, m }.generate()?;
    let n = s.size();
    let (x, g) = (n as f64, m as f64);
    let terms = [x * x.ln(), -x * g.ln(), -x * g.ln() / (2.0 * g), -x / g];
    let expansion = terms.iter().sum();
    let exact = skew_count(&s);
    let ln_e = ln_count(&exact);
    Ok(RibbonRhoTerms {
        k,
        m,
        n,
        terms,
        expansion,
        exact,
        ln_e,
        residual: ln_e - expansion,
    })
}
