//! Exact scalar kernel: arbitrary-precision rationals, univariate rational
//! polynomials, Sturm sequences, and the cubic field Q(p) with a decidable
//! sign oracle.

mod field;
mod poly;
mod rational;
mod sturm;

pub use field::{field, CubicField, FieldElem, Sign};
pub use poly::RatPoly;
pub use rational::{decimal_string, parse_rational, rat, rat_floor, Rational};
pub use sturm::{isolate_real_roots, refine_root, sturm_count, RootInterval};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("interval endpoint {which} = {value} is a root of the polynomial")]
    EndpointIsRoot { which: &'static str, value: String },
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("division by zero element of Q(p)")]
    DivisionByZero,
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
    #[error("cannot parse field element from {0:?}")]
    ParseFieldElem(String),
}
