//! Exact-arithmetic toolkit for checkerboard-restricted no-three-in-line
//! bounds: monochromatic NTIL search, the four-direction LP relaxation and
//! its symmetry-reduced duals, and full verification of the odd-fat
//! continuum dual certificate over the cubic field Q(p).
//!
//! Everything here is exact: rationals are arbitrary precision, the LP
//! solver is a rational simplex with machine-checked duality certificates,
//! and all certificate sign decisions go through a decidable sign oracle
//! for Q(p).

pub mod algebra;
pub mod certificate;
pub mod grid;
pub mod lp;
pub mod relaxation;
pub mod search;

#[doc(hidden)]
pub mod testing;

pub use algebra::{FieldElem, RatPoly, Rational, RootInterval, Sign};
