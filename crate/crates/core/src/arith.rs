//! Big-number helpers shared by the counting modules.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision nonnegative integer count.
pub type ExactCount = BigUint;
/// Reduced arbitrary-precision rational with positive denominator.
pub type ExactRational = BigRational;

/// `binom(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial with a signed top entry; zero when `n < 0` or `k > n`.
pub(crate) fn binomial_signed(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        BigUint::zero()
    } else {
        binomial(n as u64, k as u64)
    }
}

pub(crate) fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub(crate) fn to_rational(n: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from_biguint(Sign::Plus, n.clone()))
}

pub(crate) fn rational(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(
        BigInt::from_biguint(Sign::Plus, num),
        BigInt::from_biguint(Sign::Plus, den),
    )
}

/// Integer value of a rational known to be a nonnegative integer.
pub(crate) fn rational_to_count(q: &BigRational) -> Option<BigUint> {
    if q.is_integer() && !q.is_negative() {
        q.numer().to_biguint()
    } else {
        None
    }
}

/// Smallest integer `≥ q`.
pub(crate) fn ceil_nonneg(q: &BigRational) -> BigUint {
    q.ceil().numer().to_biguint().unwrap_or_default()
}

/// Exact division, returning `None` if `den` does not divide `num`.
pub(crate) fn divide_exact(num: &BigUint, den: &BigUint) -> Option<BigUint> {
    let (q, r) = num.div_rem(den);
    r.is_zero().then_some(q)
}

/// Determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination with row pivoting.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                // exact by Sylvester's identity
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}
