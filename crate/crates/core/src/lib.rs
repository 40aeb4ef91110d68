//! Exact computation of root sums, root products and resultants for
//! developed systems of Laurent polynomials.
//!
//! Everything in the main pipeline is exact: lattice polytopes use integer
//! coordinates, polynomials carry arbitrary-precision rational coefficients,
//! and sums over the roots of a system are obtained from residues at the
//! vertices of Newton polytopes instead of from numerical root finding.
//! The [`oracle`] module is the one exception; it solves small systems in
//! floating point so the exact results can be cross-checked.
//!
//! Indices of polynomials and polytopes are 0-based throughout the API.

pub mod combinatorics;
pub mod error;
pub mod lattice;
pub mod laurent;
mod linalg;
pub mod oracle;
pub mod residues;
pub mod resultants;

pub use error::{Error, Result};
pub use lattice::{Covector, ExponentVector, LatticePolytope};
pub use laurent::{LaurentPoly, Rational, SystemInstance};
