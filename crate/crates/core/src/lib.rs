//! Exact weighted Ehrhart theory for lattice polytopes.
//!
//! Given a full-dimensional lattice polytope `P`, a weight function `f`
//! assigning a Laurent polynomial in `y` to every nonempty face, and a
//! homogeneous polynomial `phi`, the crate computes
//!
//! ```text
//! E(l, y) = sum_Q f_Q(y) (1+y)^(dim Q [+ deg phi]) sum_{m in Relint(lQ)} phi(m)
//! ```
//!
//! as an exact polynomial in `z = l`, together with the equivariant
//! character sums behind it, the duality involution on weight functions, the
//! Stanley g-weights and h-polynomial of the polar polytope, and exact checks
//! of the reciprocity, duality and purity identities tying them together.
//!
//! Modules, bottom up:
//!
//! - [`algebra`]: rationals, Laurent polynomials, homogeneous integrands,
//!   character sums and exact interpolation.
//! - [`polytope`]: facet presentation, face lattice, lattice points by face.
//! - [`stanley`]: Stanley's f/g recursion on reversed face intervals.
//! - [`weights`]: weight functions and the duality `D`.
//! - [`ehrhart`]: character sums, weighted values, polynomials, verification.
//! - [`corpus`]: the bundled test polytopes and integrands.
//! - [`cli`]: the `wehrhart` command line.

pub mod algebra;
pub mod polytope;
pub mod weights;
pub mod stanley;
pub mod ehrhart;
pub mod corpus;
pub mod cli;
