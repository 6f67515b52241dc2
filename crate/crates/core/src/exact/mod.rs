//! Exact counts: hook-length formulas, the Jacobi–Trudi determinant, a
//! brute-force tableau counter, classical sequences and hook identities.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

use crate::arith::{bareiss_determinant, divide_exact, factorial, rational};
use crate::error::{Error, Result};
use crate::shapes::{Partition, ShapeFamily, SkewShape};
use crate::{Caps, ExactCount, ExactRational};

mod lr;

pub use lr::{lr_coefficient, lr_tableaux_count};

/// `f^λ = n!/∏h(u)`.
pub fn hlf_count(lambda: &Partition) -> ExactCount {
    let hooks: BigUint = lambda
        .hooks()
        .iter()
        .flatten()
        .fold(BigUint::one(), |acc, &h| acc * h);
    divide_exact(&factorial(lambda.size() as u64), &hooks)
        .expect("hook product divides n! for a straight shape")
}

/// Product of hook lengths of every cell of `lambda`.
pub fn hook_product(lambda: &Partition) -> BigUint {
    lambda
        .hooks()
        .iter()
        .flatten()
        .fold(BigUint::one(), |acc, &h| acc * h)
}

/// `F(λ/μ) = n!/∏_{u∈λ/μ} h_λ(u)`, generally not an integer.
pub fn naive_hlf(s: &SkewShape) -> ExactRational {
    let hooks = s
        .hook_multiset()
        .into_iter()
        .fold(BigUint::one(), |acc, h| acc * h);
    rational(factorial(s.size() as u64), hooks)
}

/// `f^{λ/μ} = n!·det[1/(λ_i − μ_j − i + j)!]`, with `1/m! = 0` for `m < 0`.
///
/// Row `i` is scaled by `M_i!`, `M_i` the largest argument in that row, so
/// the matrix becomes integral (falling factorials); the determinant is
/// then taken by Bareiss elimination and the scaling divided back out.
pub fn jacobi_trudi_count(s: &SkewShape) -> ExactCount {
    let lambda = s.outer();
    let mu = s.inner();
    let l = lambda.len();
    if l == 0 {
        return BigUint::one();
    }
    let arg = |i: usize, j: usize| lambda.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64;
    let mut scale = BigUint::one();
    let mut matrix = Vec::with_capacity(l);
    for i in 1..=l {
        let top = (1..=l).map(|j| arg(i, j)).max().unwrap_or(0);
        let row: Vec<BigInt> = (1..=l)
            .map(|j| {
                let m = arg(i, j);
                if m < 0 || top < 0 {
                    BigInt::zero()
                } else {
                    // top!/m! = (m+1)(m+2)…top
                    let v = ((m + 1)..=top).fold(BigUint::one(), |acc, t| acc * t as u64);
                    BigInt::from_biguint(Sign::Plus, v)
                }
            })
            .collect();
        if top > 0 {
            scale *= factorial(top as u64);
        }
        matrix.push(row);
    }
    let det = bareiss_determinant(matrix);
    assert!(!det.is_negative(), "Jacobi–Trudi determinant is nonnegative");
    let numer = factorial(s.size() as u64) * det.magnitude();
    divide_exact(&numer, &scale).expect("Jacobi–Trudi count is an integer")
}

/// Counts standard fillings of a connected ribbon from its up/down pattern.
///
/// Reading the cells by increasing content, a step to the right forces the
/// next entry to be larger and a step up forces it to be smaller. The count
/// of permutations with a given pattern follows from the usual prefix-sum
/// recursion in `O(n²)` big-integer additions. Returns `None` for shapes
/// that are not connected ribbons.
pub fn ribbon_count(s: &SkewShape) -> Option<ExactCount> {
    if s.is_empty() || !s.is_ribbon() || !s.is_connected() {
        return None;
    }
    let mut cells = s.cells();
    cells.sort_by_key(|c| c.content());
    // ways[j]: fillings of the cells read so far whose last entry is the
    // (j+1)-th smallest among them.
    let mut ways = vec![BigUint::one()];
    for pair in cells.windows(2) {
        let ascent = pair[1].row == pair[0].row;
        let len = ways.len() + 1;
        let mut next = vec![BigUint::zero(); len];
        if ascent {
            let mut acc = BigUint::zero();
            for j in 1..len {
                acc += &ways[j - 1];
                next[j] = acc.clone();
            }
        } else {
            let mut acc = BigUint::zero();
            for j in (0..len - 1).rev() {
                acc += &ways[j];
                next[j] = acc.clone();
            }
        }
        ways = next;
    }
    Some(ways.into_iter().sum())
}

/// Number of standard fillings, by [`ribbon_count`] when it applies and by
/// [`jacobi_trudi_count`] otherwise.
pub fn skew_count(s: &SkewShape) -> ExactCount {
    ribbon_count(s).unwrap_or_else(|| jacobi_trudi_count(s))
}

/// Counts standard fillings by walking the chain of partitions from `μ`
/// to `λ`, one added cell at a time.
pub fn brute_force_count(s: &SkewShape, caps: &Caps) -> Result<ExactCount> {
    let n = s.size();
    if n > caps.brute_force_cells {
        return Err(Error::CapExceeded {
            what: "brute-force cells",
            limit: caps.brute_force_cells as u64,
            requested: n as u64,
        });
    }
    let lambda = s.outer();
    let mut layer: BTreeMap<Partition, BigUint> = BTreeMap::new();
    layer.insert(s.inner().clone(), BigUint::one());
    for _ in 0..n {
        let mut next: BTreeMap<Partition, BigUint> = BTreeMap::new();
        for (nu, count) in &layer {
            for row in nu.addable_rows() {
                let value = nu.part(row) + 1;
                if value <= lambda.part(row) {
                    *next.entry(nu.with_part(row, value)).or_default() += count;
                }
            }
        }
        layer = next;
    }
    Ok(layer.remove(lambda).unwrap_or_default())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorialKind {
    /// `n!`
    Factorial,
    /// `(2n−1)!! = 1·3·5⋯(2n−1)`
    DoubleFactorial,
    /// `Φ(n) = 1!·2!⋯n!`
    Superfactorial,
    /// `Ψ(n) = 1!·3!·5!⋯(2n−1)!`
    DoubleSuperfactorial,
    /// `Λ(n) = 1!!·3!!⋯(2n−1)!!`
    SuperDoubleFactorial,
}

/// Cached tables of the factorial family up to a fixed `n`.
#[derive(Clone, Debug)]
pub struct FactorialTable {
    fact: Vec<BigUint>,
    odd_double: Vec<BigUint>,
    phi: Vec<BigUint>,
    psi: Vec<BigUint>,
    lambda: Vec<BigUint>,
}

impl FactorialTable {
    pub fn up_to(n: usize) -> Self {
        // n! is needed up to 2n − 1 for Ψ.
        let mut fact = vec![BigUint::one()];
        for i in 1..=(2 * n).max(1) {
            let v = &fact[i - 1] * i;
            fact.push(v);
        }
        let mut odd_double = vec![BigUint::one()];
        let mut phi = vec![BigUint::one()];
        let mut psi = vec![BigUint::one()];
        let mut lambda = vec![BigUint::one()];
        for i in 1..=n {
            odd_double.push(&odd_double[i - 1] * (2 * i - 1));
            phi.push(&phi[i - 1] * &fact[i]);
            psi.push(&psi[i - 1] * &fact[2 * i - 1]);
            lambda.push(&lambda[i - 1] * &odd_double[i]);
        }
        fact.truncate(n + 1);
        FactorialTable {
            fact,
            odd_double,
            phi,
            psi,
            lambda,
        }
    }

    pub fn max(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn get(&self, kind: FactorialKind, n: usize) -> &BigUint {
        let table = match kind {
            FactorialKind::Factorial => &self.fact,
            FactorialKind::DoubleFactorial => &self.odd_double,
            FactorialKind::Superfactorial => &self.phi,
            FactorialKind::DoubleSuperfactorial => &self.psi,
            FactorialKind::SuperDoubleFactorial => &self.lambda,
        };
        &table[n]
    }
}

pub fn factorials(kind: FactorialKind, n: usize) -> ExactCount {
    FactorialTable::up_to(n).get(kind, n).clone()
}

/// `m!!` for any `m ≥ 0`: the product of `m, m−2, …` down to 1 or 2.
pub fn double_factorial(m: u64) -> BigUint {
    (1..=m).rev().step_by(2).fold(BigUint::one(), |acc, t| acc * t)
}

/// Euler (up/down) number `E_n` by the boustrophedon recurrence.
pub fn euler_number(n: usize, caps: &Caps) -> Result<ExactCount> {
    if n > caps.euler_index {
        return Err(Error::CapExceeded {
            what: "Euler index",
            limit: caps.euler_index as u64,
            requested: n as u64,
        });
    }
    // row[k] holds the Entringer number E(i, k).
    let mut row = vec![BigUint::one()];
    for i in 1..=n {
        let mut next = Vec::with_capacity(i + 1);
        next.push(BigUint::zero());
        for k in 1..=i {
            let v = &next[k - 1] + &row[i - k];
            next.push(v);
        }
        row = next;
    }
    Ok(row.pop().expect("row is nonempty"))
}

/// `C_m = binom(2m, m)/(m+1)`.
pub fn catalan(m: usize) -> ExactCount {
    crate::arith::binomial(2 * m as u64, m as u64) / (m as u64 + 1)
}

/// `s_μ(1^ℓ)` by the hook–content formula; zero when `ℓ < ℓ(μ)`.
pub fn schur_principal(mu: &Partition, l: usize) -> ExactCount {
    if l < mu.len() {
        return BigUint::zero();
    }
    let numer = mu
        .cells()
        .iter()
        .fold(BigUint::one(), |acc, c| acc * (l + c.col - c.row));
    divide_exact(&numer, &hook_product(mu)).expect("hook–content quotient is an integer")
}

/// `(H, H*)` with `H = ∏h(x)` and `H* = ∏(i + j − 1)`.
pub fn dual_hook_products(nu: &Partition) -> (ExactCount, ExactCount) {
    let dual = nu
        .cells()
        .iter()
        .fold(BigUint::one(), |acc, c| acc * (c.row + c.col - 1));
    (hook_product(nu), dual)
}

/// True iff `nu` is a rectangle (including `∅`).
pub fn is_rectangle(nu: &Partition) -> bool {
    nu.parts().windows(2).all(|w| w[0] == w[1])
}

/// Checks that the hook multiset of the Regev–Vershik shape built from
/// `σ ⊆ (cols^rows)` is the union of the hook multisets of `σ` and `τ`.
pub fn rv_hook_identity_check(sigma: &Partition, rows: usize, cols: usize) -> Result<bool> {
    let shape = ShapeFamily::RegevVershik {
        sigma: sigma.clone(),
        rows,
        cols,
    }
    .generate()?;
    let mut lhs = shape.hook_multiset();
    let mut rhs: Vec<usize> = sigma.hooks().into_iter().flatten().collect();
    rhs.extend(Partition::rectangle(rows, cols).hooks().into_iter().flatten());
    lhs.sort_unstable();
    rhs.sort_unstable();
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::to_rational;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn s(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::from_parts(outer, inner).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn straight_counts() {
        assert_eq!(hlf_count(&p(&[2, 2])), big(2));
        assert_eq!(hlf_count(&p(&[1])), big(1));
        assert_eq!(hlf_count(&Partition::empty()), big(1));
        assert_eq!(hlf_count(&p(&[4, 4, 3, 2])), big(8580));
    }

    #[test]
    fn naive_hlf_values() {
        assert_eq!(naive_hlf(&s(&[4, 4, 3, 2], &[2, 1])), to_rational(&big(1260)));
        assert_eq!(naive_hlf(&s(&[2, 2], &[1])), rational(big(3), big(2)));
        assert_eq!(naive_hlf(&s(&[3, 2], &[])), to_rational(&big(5)));
    }

    #[test]
    fn jacobi_trudi_values() {
        assert_eq!(jacobi_trudi_count(&s(&[4, 4, 3, 2], &[2, 1])), big(3060));
        assert_eq!(jacobi_trudi_count(&s(&[2, 2], &[1])), big(2));
        assert_eq!(jacobi_trudi_count(&s(&[2, 1], &[1])), big(2));
        assert_eq!(jacobi_trudi_count(&s(&[3, 2, 1], &[1])), big(16));
        assert_eq!(jacobi_trudi_count(&s(&[2, 2], &[2, 2])), big(1));
    }

    #[test]
    fn brute_force_values() {
        let caps = Caps::default();
        assert_eq!(brute_force_count(&s(&[4, 4, 3, 2], &[2, 1]), &caps).unwrap(), big(3060));
        assert_eq!(brute_force_count(&s(&[1], &[]), &caps).unwrap(), big(1));
        assert_eq!(brute_force_count(&s(&[3, 2, 1], &[1]), &caps).unwrap(), big(16));
        let small = Caps {
            brute_force_cells: 4,
            ..Caps::default()
        };
        assert!(brute_force_count(&s(&[3, 2], &[]), &small).unwrap_err().is_resource());
    }

    #[test]
    fn factorial_family() {
        assert_eq!(factorials(FactorialKind::Superfactorial, 3), big(12));
        assert_eq!(factorials(FactorialKind::SuperDoubleFactorial, 2), big(3));
        assert_eq!(factorials(FactorialKind::DoubleSuperfactorial, 2), big(6));
        assert_eq!(factorials(FactorialKind::DoubleFactorial, 3), big(15));
        assert_eq!(factorials(FactorialKind::Factorial, 5), big(120));
        assert_eq!(factorials(FactorialKind::Factorial, 0), big(1));
        assert_eq!(double_factorial(7), big(105));
        assert_eq!(double_factorial(6), big(48));
        assert_eq!(double_factorial(0), big(1));
        let t = FactorialTable::up_to(6);
        for n in 1..=6 {
            assert_eq!(
                t.get(FactorialKind::Superfactorial, n),
                &(t.get(FactorialKind::Superfactorial, n - 1) * t.get(FactorialKind::Factorial, n))
            );
            assert_eq!(
                t.get(FactorialKind::SuperDoubleFactorial, n),
                &(t.get(FactorialKind::SuperDoubleFactorial, n - 1)
                    * t.get(FactorialKind::DoubleFactorial, n))
            );
            assert_eq!(
                t.get(FactorialKind::DoubleSuperfactorial, n),
                &(t.get(FactorialKind::DoubleSuperfactorial, n - 1) * factorial(2 * n as u64 - 1))
            );
        }
    }

    #[test]
    fn euler_and_catalan() {
        let caps = Caps::default();
        let e: Vec<BigUint> = (0..=8).map(|n| euler_number(n, &caps).unwrap()).collect();
        assert_eq!(e, [1u64, 1, 1, 2, 5, 16, 61, 272, 1385].map(big).to_vec());
        assert!(euler_number(caps.euler_index + 1, &caps).is_err());
        assert_eq!(catalan(0), big(1));
        assert_eq!(catalan(3), big(5));
        assert_eq!(catalan(5), big(42));
    }

    #[test]
    fn principal_specializations() {
        assert_eq!(schur_principal(&Partition::staircase(3), 3), big(8));
        assert_eq!(schur_principal(&p(&[1]), 7), big(7));
        assert_eq!(schur_principal(&p(&[2, 1]), 3), big(8));
        assert_eq!(schur_principal(&p(&[1, 1, 1]), 2), big(0));
    }

    #[test]
    fn dual_hooks() {
        assert_eq!(dual_hook_products(&p(&[2, 1])), (big(3), big(4)));
        let (h, hs) = dual_hook_products(&p(&[3, 3]));
        assert_eq!(h, hs);
        assert_eq!(dual_hook_products(&p(&[1])), (big(1), big(1)));
    }

    #[test]
    fn rv_identity_small() {
        assert!(rv_hook_identity_check(&Partition::empty(), 2, 2).unwrap());
        assert!(rv_hook_identity_check(&p(&[2, 2]), 2, 2).unwrap());
        assert!(rv_hook_identity_check(&p(&[1]), 2, 2).unwrap());
        assert!(rv_hook_identity_check(&p(&[3]), 2, 2).is_err());
    }
}
