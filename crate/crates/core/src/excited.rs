//! Excited diagrams of a skew shape and everything built on them.
//!
//! An excited move replaces a cell `(i, j)` of a diagram `D ⊆ λ` by
//! `(i+1, j+1)` when `(i+1, j)`, `(i, j+1)` and `(i+1, j+1)` all lie in
//! `λ ∖ D`. The excited diagrams of `λ/μ` are the diagrams reachable from
//! `μ`; `ξ(λ/μ)` is their number.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Pow};

use crate::arith::{
    bareiss_determinant, binomial, binomial_signed, divide_exact, factorial, rational,
};
use crate::error::{Error, Result};
use crate::exact::{double_factorial, hook_product, FactorialKind, FactorialTable};
use crate::shapes::{Cell, Partition, SkewShape};
use crate::{Caps, ExactCount, ExactRational};

/// A set of `|μ|` cells of `λ`, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExcitedDiagram {
    cells: Vec<Cell>,
}

impl ExcitedDiagram {
    pub fn new(mut cells: Vec<Cell>) -> Self {
        cells.sort_unstable();
        cells.dedup();
        ExcitedDiagram { cells }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn contains(&self, c: &Cell) -> bool {
        self.cells.binary_search(c).is_ok()
    }

    fn moved(&self, index: usize) -> ExcitedDiagram {
        let mut cells = self.cells.clone();
        let c = cells[index];
        cells[index] = Cell::new(c.row + 1, c.col + 1);
        ExcitedDiagram::new(cells)
    }
}

fn is_active(lambda: &Partition, d: &ExcitedDiagram, c: Cell) -> bool {
    [
        Cell::new(c.row + 1, c.col),
        Cell::new(c.row, c.col + 1),
        Cell::new(c.row + 1, c.col + 1),
    ]
    .iter()
    .all(|&x| lambda.contains_cell(x) && !d.contains(&x))
}

/// Breadth-first closure of `μ` under excited moves; `μ` comes first and
/// the order is deterministic.
pub fn enumerate_excited(s: &SkewShape, caps: &Caps) -> Result<Vec<ExcitedDiagram>> {
    let xi = xi_determinant(s);
    if xi > BigUint::from(caps.excited_count) {
        return Err(Error::CapExceeded {
            what: "excited diagrams",
            limit: caps.excited_count,
            requested: u64::try_from(&xi).unwrap_or(u64::MAX),
        });
    }
    let lambda = s.outer();
    let start = ExcitedDiagram::new(s.inner().cells());
    let mut seen = BTreeSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    let mut out = Vec::new();
    while let Some(d) = queue.pop_front() {
        for (idx, &c) in d.cells.iter().enumerate() {
            if is_active(lambda, &d, c) {
                let next = d.moved(idx);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        out.push(d);
    }
    Ok(out)
}

/// Characterization test: `D ⊆ λ` has as many cells on each diagonal as
/// `μ`, and the diagonal-order bijection `μ → D` preserves `≼`.
pub fn is_excited_diagram(s: &SkewShape, d: &ExcitedDiagram) -> bool {
    let lambda = s.outer();
    if d.cells.len() != s.inner().size() || !d.cells.iter().all(|&c| lambda.contains_cell(c)) {
        return false;
    }
    let by_diagonal = |cells: &[Cell]| {
        let mut map: BTreeMap<isize, Vec<Cell>> = BTreeMap::new();
        for &c in cells {
            map.entry(c.content()).or_default().push(c);
        }
        for v in map.values_mut() {
            v.sort_unstable();
        }
        map
    };
    let mu_cells = s.inner().cells();
    let mu_diag = by_diagonal(&mu_cells);
    let d_diag = by_diagonal(&d.cells);
    if mu_diag.len() != d_diag.len()
        || mu_diag
            .iter()
            .zip(d_diag.iter())
            .any(|((a, x), (b, y))| a != b || x.len() != y.len())
    {
        return false;
    }
    let image = |c: Cell| -> Cell {
        let diag = &mu_diag[&c.content()];
        let pos = diag.iter().position(|&x| x == c).expect("cell of μ");
        d_diag[&c.content()][pos]
    };
    mu_cells.iter().all(|&c| {
        let mapped = image(c);
        [Cell::new(c.row + 1, c.col), Cell::new(c.row, c.col + 1)]
            .into_iter()
            .filter(|&v| s.inner().contains_cell(v))
            .all(|v| mapped.precedes(&image(v)))
    })
}

/// Flags `ϑ_i`: the last row reached by the diagonal through `(i, μ_i)`
/// while it stays inside `λ`.
pub fn flags(s: &SkewShape) -> Vec<usize> {
    let lambda = s.outer();
    let mu = s.inner();
    (1..=mu.len())
        .map(|i| {
            let mut r = i;
            let mut c = mu.part(i);
            while lambda.contains_cell(Cell::new(r + 1, c + 1)) {
                r += 1;
                c += 1;
            }
            r
        })
        .collect()
}

/// `ξ(λ/μ) = det[binom(ϑ_i + μ_i − i + j − 1, ϑ_i − 1)]`.
pub fn xi_determinant(s: &SkewShape) -> ExactCount {
    let mu = s.inner();
    let theta = flags(s);
    let l = mu.len();
    let matrix: Vec<Vec<BigInt>> = (1..=l)
        .map(|i| {
            let t = theta[i - 1] as i64;
            (1..=l)
                .map(|j| {
                    let top = t + mu.part(i) as i64 - i as i64 + j as i64 - 1;
                    BigInt::from_biguint(Sign::Plus, binomial_signed(top, t - 1))
                })
                .collect()
        })
        .collect();
    bareiss_determinant(matrix)
        .to_biguint()
        .expect("excited diagram count is nonnegative")
}

/// `e(λ/μ) = n!·Σ_D ∏_{u∈λ∖D} 1/h(u)`.
pub fn nhlf_count(s: &SkewShape, caps: &Caps) -> Result<ExactCount> {
    let diagrams = enumerate_excited(s, caps)?;
    let hooks = s.outer().hooks();
    let total: BigUint = diagrams
        .iter()
        .map(|d| diagram_hook_product(&hooks, d))
        .sum();
    let numer = factorial(s.size() as u64) * total;
    Ok(divide_exact(&numer, &hook_product(s.outer())).expect("NHLF sum is an integer"))
}

fn diagram_hook_product(hooks: &[Vec<usize>], d: &ExcitedDiagram) -> BigUint {
    d.cells
        .iter()
        .fold(BigUint::one(), |acc, c| acc * hooks[c.row - 1][c.col - 1])
}

/// Smallest and largest NHLF summand `∏_{u∈λ∖D} 1/h(u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermExtremes {
    pub min: ExactRational,
    pub argmin: ExcitedDiagram,
    pub max: ExactRational,
    pub argmax: ExcitedDiagram,
}

pub fn min_max_term(s: &SkewShape, caps: &Caps) -> Result<TermExtremes> {
    let diagrams = enumerate_excited(s, caps)?;
    let hooks = s.outer().hooks();
    let total = hook_product(s.outer());
    let mut terms = diagrams
        .into_iter()
        .map(|d| (rational(diagram_hook_product(&hooks, &d), total.clone()), d));
    let (first, d0) = terms.next().expect("μ is always an excited diagram");
    let mut ext = TermExtremes {
        min: first.clone(),
        argmin: d0.clone(),
        max: first,
        argmax: d0,
    };
    for (t, d) in terms {
        if t < ext.min {
            ext.min = t.clone();
            ext.argmin = d.clone();
        }
        if t > ext.max {
            ext.max = t;
            ext.argmax = d;
        }
    }
    Ok(ext)
}

/// One border strip of the decomposition of `λ/μ`, listed from its
/// south-west end to its north-east end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderStrip {
    /// 1 for the strips along the inner boundary.
    pub level: usize,
    pub cells: Vec<Cell>,
}

impl BorderStrip {
    pub fn start(&self) -> Cell {
        self.cells[0]
    }

    pub fn end(&self) -> Cell {
        *self.cells.last().expect("strips are nonempty")
    }
}

/// The unique decomposition of `λ/μ` into border strips that each start
/// at the bottom cell of a column of `λ` and end at the last cell of a row
/// of `λ`. A cell's level is one more than the number of skew cells
/// north-west of it on its diagonal; the strips are the connected pieces
/// of the level sets.
pub fn border_strips(s: &SkewShape) -> Vec<BorderStrip> {
    let cells = s.cells();
    let level_of = |c: Cell| {
        let mut lvl = 1;
        let (mut r, mut col) = (c.row, c.col);
        while r > 1 && col > 1 && s.contains_cell(Cell::new(r - 1, col - 1)) {
            lvl += 1;
            r -= 1;
            col -= 1;
        }
        lvl
    };
    let levels: BTreeMap<Cell, usize> = cells.iter().map(|&c| (c, level_of(c))).collect();
    let mut seen = BTreeSet::new();
    let mut strips = Vec::new();
    for &c in &cells {
        if seen.contains(&c) {
            continue;
        }
        let lvl = levels[&c];
        let mut comp = Vec::new();
        let mut stack = alloc::vec![c];
        seen.insert(c);
        while let Some(x) = stack.pop() {
            comp.push(x);
            let mut nbrs = alloc::vec![Cell::new(x.row + 1, x.col), Cell::new(x.row, x.col + 1)];
            if x.row > 1 {
                nbrs.push(Cell::new(x.row - 1, x.col));
            }
            if x.col > 1 {
                nbrs.push(Cell::new(x.row, x.col - 1));
            }
            for nb in nbrs {
                if levels.get(&nb) == Some(&lvl) && seen.insert(nb) {
                    stack.push(nb);
                }
            }
        }
        comp.sort_unstable_by_key(|x| x.content());
        strips.push(BorderStrip { level: lvl, cells: comp });
    }
    strips.sort_by_key(|st| (st.level, st.start().content()));
    strips
}

/// A lattice path, from its south-west end, stepping north or east.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LatticePath {
    pub cells: Vec<Cell>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathFamily {
    pub paths: Vec<LatticePath>,
}

impl PathFamily {
    /// Union of the path cells, sorted.
    pub fn support(&self) -> Vec<Cell> {
        let mut all: Vec<Cell> = self.paths.iter().flat_map(|p| p.cells.iter().copied()).collect();
        all.sort_unstable();
        all
    }
}

/// Splits `λ ∖ D` into non-intersecting paths with the endpoints of the
/// border strips of `λ/μ`. Along each diagonal the support cells, read
/// north-west to south-east, belong to the strips in level order.
pub fn paths_from_diagram(s: &SkewShape, d: &ExcitedDiagram) -> Result<PathFamily> {
    if !is_excited_diagram(s, d) {
        return Err(Error::domain("not an excited diagram of this shape"));
    }
    let strips = border_strips(s);
    let mut support: BTreeMap<isize, Vec<Cell>> = BTreeMap::new();
    for c in s.outer().cells() {
        if !d.contains(&c) {
            support.entry(c.content()).or_default().push(c);
        }
    }
    for v in support.values_mut() {
        v.sort_unstable();
    }
    let mut paths: Vec<Vec<Cell>> = strips.iter().map(|_| Vec::new()).collect();
    let mut by_diag: BTreeMap<isize, Vec<usize>> = BTreeMap::new();
    for (idx, st) in strips.iter().enumerate() {
        for c in &st.cells {
            by_diag.entry(c.content()).or_default().push(idx);
        }
    }
    for (diag, owners) in &mut by_diag {
        owners.sort_unstable_by_key(|&i| strips[i].level);
        let cells = support.get(diag).map(Vec::as_slice).unwrap_or(&[]);
        if cells.len() != owners.len() {
            return Err(Error::domain(format!("diagonal {diag} has the wrong number of cells")));
        }
        for (&owner, &c) in owners.iter().zip(cells) {
            paths[owner].push(c);
        }
    }
    for (path, st) in paths.iter_mut().zip(&strips) {
        path.sort_unstable_by_key(|c| c.content());
        let steps_ok = path.windows(2).all(|w| {
            let (a, b) = (w[0], w[1]);
            (b.row + 1 == a.row && b.col == a.col) || (b.row == a.row && b.col == a.col + 1)
        });
        if !steps_ok || path.first() != Some(&st.start()) || path.last() != Some(&st.end()) {
            return Err(Error::domain("complement does not split into the fixed paths"));
        }
    }
    Ok(PathFamily {
        paths: paths.into_iter().map(|cells| LatticePath { cells }).collect(),
    })
}

/// Certified upper bounds on `ξ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiBounds {
    /// Number of border strips `k`.
    pub strips: usize,
    /// `2^{n−k}`.
    pub two_power: ExactCount,
    /// Durfee size `d` of `λ`.
    pub durfee: usize,
    /// `n^{2d²}`.
    pub polynomial: ExactCount,
}

pub fn xi_bounds(s: &SkewShape) -> XiBounds {
    let n = s.size();
    let strips = border_strips(s).len();
    let d = s.outer().durfee();
    XiBounds {
        strips,
        two_power: BigUint::from(2u8).pow((n - strips) as u32),
        durfee: d,
        polynomial: BigUint::from(n.max(1)).pow((2 * d * d) as u32),
    }
}

/// `∏_{1≤i<j≤k} (k+i+j−1)/(i+j−1)`, which counts excited diagrams of
/// `δ_{2k}/δ_k` for even `k`.
pub fn proctor_xi(k: usize) -> Result<ExactCount> {
    if k < 2 || !k.is_multiple_of(2) {
        return Err(Error::domain("Proctor's product needs an even k ≥ 2"));
    }
    let (mut num, mut den) = (BigUint::one(), BigUint::one());
    for i in 1..=k {
        for j in i + 1..=k {
            num *= k + i + j - 1;
            den *= i + j - 1;
        }
    }
    Ok(divide_exact(&num, &den).expect("Proctor's product is an integer"))
}

/// Radicand `Φ(3k−1)Φ(k−1)³(2k−1)!!(k−1)!! / (Φ(2k−1)³(3k−1)!!)`.
pub fn proctor_radicand(k: usize) -> Result<ExactRational> {
    if k < 2 || !k.is_multiple_of(2) {
        return Err(Error::domain("Proctor's product needs an even k ≥ 2"));
    }
    let t = FactorialTable::up_to(3 * k);
    let phi = |n: usize| t.get(FactorialKind::Superfactorial, n).clone();
    let num = phi(3 * k - 1)
        * phi(k - 1).pow(3u32)
        * t.get(FactorialKind::DoubleFactorial, k)
        * double_factorial(k as u64 - 1);
    let den = phi(2 * k - 1).pow(3u32) * double_factorial(3 * k as u64 - 1);
    Ok(rational(num, den))
}

/// Square root of [`proctor_radicand`], when the radicand is a perfect
/// square integer.
pub fn proctor_xi_superfactorial(k: usize) -> Result<Option<ExactCount>> {
    let q = proctor_radicand(k)?;
    let Some(v) = crate::arith::rational_to_count(&q) else {
        return Ok(None);
    };
    let root = v.sqrt();
    Ok((&root * &root == v).then_some(root))
}

/// MacMahon's box product `∏_{i,j=1..k} (k+i+j−1)/(i+j−1)`, which counts
/// excited diagrams of `(2k)^{2k}/k^k`.
pub fn macmahon_xi(k: usize) -> ExactCount {
    let (mut num, mut den) = (BigUint::one(), BigUint::one());
    for i in 1..=k {
        for j in 1..=k {
            num *= k + i + j - 1;
            den *= i + j - 1;
        }
    }
    divide_exact(&num, &den).expect("MacMahon's product is an integer")
}

/// `Φ(k−1)³Φ(3k−1)/Φ(2k−1)³`.
pub fn macmahon_superfactorial(k: usize) -> ExactCount {
    if k == 0 {
        return BigUint::one();
    }
    let t = FactorialTable::up_to(3 * k);
    let phi = |n: usize| t.get(FactorialKind::Superfactorial, n).clone();
    let num = phi(k - 1).pow(3u32) * phi(3 * k - 1);
    divide_exact(&num, &phi(2 * k - 1).pow(3u32)).expect("superfactorial quotient is an integer")
}

/// Excited-diagram statistics of a slim shape (`λ_ℓ ≥ μ₁ + ℓ`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlimReport {
    pub l: usize,
    pub m: usize,
    pub xi: ExactCount,
    /// `Some(ξ = 2^{C(ℓ,2)})` when `μ = δ_ℓ`.
    pub staircase_claim: Option<bool>,
    /// `ξ·∏_{x∈μ} h(x) / ℓ^m`.
    pub ratio: ExactRational,
}

pub fn slim_xi_checks(lambda: &Partition, mu: &Partition) -> Result<SlimReport> {
    let l = lambda.len();
    if l == 0 || lambda.part(l) < mu.first() + l {
        return Err(Error::domain("shape is not slim: need λ_ℓ ≥ μ₁ + ℓ"));
    }
    let s = SkewShape::new(lambda.clone(), mu.clone())?;
    let xi = xi_determinant(&s);
    let m = mu.size();
    let staircase_claim = (*mu == Partition::staircase(l)).then(|| {
        let e = binomial(l as u64, 2);
        xi == BigUint::from(2u8).pow(&e)
    });
    let ratio = rational(&xi * hook_product(mu), BigUint::from(l).pow(m as u32));
    Ok(SlimReport {
        l,
        m,
        xi,
        staircase_claim,
        ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::from_parts(outer, inner).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn enumerates_example() {
        let caps = Caps::default();
        let ex = enumerate_excited(&s(&[4, 4, 3, 2], &[2, 1]), &caps).unwrap();
        assert_eq!(ex.len(), 5);
        assert_eq!(ex[0].cells(), &[Cell::new(1, 1), Cell::new(1, 2), Cell::new(2, 1)]);
        let two = enumerate_excited(&s(&[2, 2], &[1]), &caps).unwrap();
        assert_eq!(two.len(), 2);
        assert_eq!(two[1].cells(), &[Cell::new(2, 2)]);
        let one = enumerate_excited(&s(&[3, 1], &[]), &caps).unwrap();
        assert_eq!(one.len(), 1);
        assert!(one[0].cells().is_empty());
    }

    #[test]
    fn flag_determinant() {
        let ex = s(&[4, 4, 3, 2], &[2, 1]);
        assert_eq!(flags(&ex), alloc::vec![2, 3]);
        assert_eq!(xi_determinant(&ex), big(5));
        assert_eq!(xi_determinant(&s(&[3, 2], &[])), big(1));
        assert_eq!(xi_determinant(&s(&[5, 4, 4, 1], &[2, 1])), big(8));
    }

    #[test]
    fn nhlf_values() {
        let caps = Caps::default();
        assert_eq!(nhlf_count(&s(&[4, 4, 3, 2], &[2, 1]), &caps).unwrap(), big(3060));
        assert_eq!(nhlf_count(&s(&[3, 2, 1], &[1]), &caps).unwrap(), big(16));
        assert_eq!(nhlf_count(&s(&[3, 3, 1], &[]), &caps).unwrap(), big(21));
    }

    #[test]
    fn term_extremes() {
        let caps = Caps::default();
        let ext = min_max_term(&s(&[2, 2], &[1]), &caps).unwrap();
        assert_eq!(ext.argmax.cells(), &[Cell::new(1, 1)]);
        assert_eq!(ext.max, rational(big(3), big(12)));
        assert_eq!(ext.min, rational(big(1), big(12)));
        let straight = min_max_term(&s(&[3, 1], &[]), &caps).unwrap();
        assert_eq!(straight.min, straight.max);
        assert_eq!(straight.max, rational(big(1), big(8)));
    }

    #[test]
    fn strips_and_paths() {
        let sq = s(&[2, 2], &[1]);
        assert_eq!(border_strips(&sq).len(), 1);
        let d = ExcitedDiagram::new(alloc::vec![Cell::new(2, 2)]);
        let fam = paths_from_diagram(&sq, &d).unwrap();
        assert_eq!(fam.support(), alloc::vec![Cell::new(1, 1), Cell::new(1, 2), Cell::new(2, 1)]);
        let bogus = ExcitedDiagram::new(alloc::vec![Cell::new(1, 2)]);
        assert!(paths_from_diagram(&sq, &bogus).is_err());
    }

    #[test]
    fn bounds_on_xi() {
        let b = xi_bounds(&s(&[2, 2], &[1]));
        assert_eq!(b.strips, 1);
        assert_eq!(b.two_power, big(4));
        let ex = xi_bounds(&s(&[4, 4, 3, 2], &[2, 1]));
        assert!(ex.two_power >= big(5) && ex.polynomial >= big(5));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(proctor_xi(2).unwrap(), big(2));
        assert_eq!(proctor_radicand(2).unwrap(), rational(big(4), big(1)));
        assert_eq!(proctor_xi_superfactorial(2).unwrap(), Some(big(2)));
        assert!(proctor_xi(3).is_err());
        assert_eq!(macmahon_xi(1), big(2));
        assert_eq!(macmahon_xi(2), big(20));
        assert_eq!(macmahon_superfactorial(1), big(2));
        assert_eq!(macmahon_superfactorial(2), big(20));
    }

    #[test]
    fn slim_shapes() {
        let lam = Partition::new(alloc::vec![7, 6, 5]).unwrap();
        let r = slim_xi_checks(&lam, &Partition::staircase(3)).unwrap();
        assert_eq!(r.xi, big(8));
        assert_eq!(r.staircase_claim, Some(true));
        let lam = Partition::rectangle(5, 9);
        let r = slim_xi_checks(&lam, &Partition::new(alloc::vec![1]).unwrap()).unwrap();
        assert_eq!(r.xi, big(5));
        assert!(slim_xi_checks(&Partition::rectangle(3, 3), &Partition::staircase(3)).is_err());
    }
}
