//! Exact arithmetic in `Z[q, x]` and its fraction field.

mod bipoly;
mod gcd;
pub(crate) mod qpoly;
mod ratfunc;
mod subst;
mod text;

pub use bipoly::BiPoly;
pub use ratfunc::RatFunc;
pub use subst::{QImage, XImage};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("divisor does not divide the dividend exactly")]
    NotDivisible,
    #[error("substituted denominator vanishes identically")]
    SubstitutionSingular,
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}
