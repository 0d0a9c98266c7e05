//! Exact enumeration of standard Young tableaux of skew shapes, with a focus on
//! diagonal m-strip diagrams.
//!
//! The crate carries three independent counting routes (down-set dynamic
//! programming, the Aitken determinant, and closed forms in the zig-zag numbers),
//! an exact order-polytope volume engine built on transfer operators over
//! polynomials, and a floating-point verifier for the explicit eigensystems of
//! those transfer operators.
//!
//! Everything except [`spectral`] works in exact arithmetic. The crate is
//! `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod arith;
pub mod counting;
mod error;
pub mod formulas;
pub mod numbers;
pub mod polytope;
pub mod shapes;
pub mod spectral;

pub use arith::{BigInt, BigRat};
pub use error::{Error, Result};
pub use shapes::{Partition, SkewShape, StripSpec, Tableau};

/// Resource guards for the exponential-time paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of live states in one layer of the down-set lattice.
    pub max_states: usize,
    /// Maximum number of terms in any intermediate polynomial.
    pub max_terms: usize,
    /// Maximum number of cells accepted by the backtracking counter.
    pub max_backtrack_cells: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_states: 10_000_000,
            max_terms: 1_000_000,
            max_backtrack_cells: 12,
        }
    }
}
