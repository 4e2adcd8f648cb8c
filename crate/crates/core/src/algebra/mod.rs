//! Exact arithmetic used throughout the crate.
//!
//! Everything is over arbitrary-precision rationals: Laurent polynomials in
//! `y`, homogeneous polynomial functions on the lattice, character sums
//! (finitely supported maps `Z^n -> Q[y, 1/y]`) and polynomials in the
//! dilation variable `z` with Laurent coefficients.

mod charsum;
mod homog;
mod laurent;
mod rat;
mod zpoly;

pub use charsum::CharacterSum;
pub use homog::HomogPoly;
pub use laurent::LaurentPoly;
pub use rat::{format_rat, parse_rat, rat, Rat};
pub use zpoly::{lagrange_interpolate, ZPoly};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("polynomial is not homogeneous: monomial of degree {found} in a degree-{expected} polynomial")]
    NotHomogeneous { expected: u32, found: u32 },
    #[error("interpolation needs at least one sample")]
    NoSamples,
    #[error("interpolation node {0} appears more than once")]
    DuplicateNode(String),
    #[error("expected {expected} samples for degree bound {bound}, got {got}")]
    SampleCount {
        expected: usize,
        bound: usize,
        got: usize,
    },
    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
}
