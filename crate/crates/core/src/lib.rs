//! Exact enumeration of standard Young tableaux of skew shape.
//!
//! The crate counts `f^{λ/μ}` by several independent routes (the
//! Jacobi–Trudi determinant, a lattice-path dynamic program over
//! intermediate partitions, and the excited-diagram hook formula), and
//! evaluates the classical lower and upper bounds for it. All counting is
//! done over arbitrary-precision integers and rationals; floating point is
//! confined to [`asymptotics`].
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod asymptotics;
pub mod bounds;
mod error;
pub mod exact;
pub mod excited;
pub mod shapes;

mod arith;

pub use crate::arith::{binomial, ExactCount, ExactRational};
pub use crate::error::{Error, Result};
pub use crate::shapes::{Cell, Partition, ShapeFamily, SkewShape};

/// Resource caps for the exponential-time routines.
///
/// Exceeding a cap always produces [`Error::CapExceeded`]; nothing is
/// silently truncated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest skew size accepted by the brute-force tableau counter.
    pub brute_force_cells: usize,
    /// Largest number of excited diagrams enumeration will materialize.
    pub excited_count: u64,
    /// Largest `|λ|` accepted by the Littlewood–Richardson enumerator.
    pub lr_size: usize,
    /// Largest index accepted by the Euler number recurrence.
    pub euler_index: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            brute_force_cells: 24,
            excited_count: 10_000_000,
            lr_size: 16,
            euler_index: 2_000,
        }
    }
}
