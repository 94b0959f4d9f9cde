//! Exact Hankel determinants of q-exponential polynomials and their
//! relatives, computed over `Z[q, x]`.

pub mod ring;

pub use ring::{BiPoly, QImage, RatFunc, RingError, XImage};

pub mod families;
pub mod hankel;
pub mod jfraction;
pub mod motzkin;
pub mod operators;
pub mod qkernel;
pub mod verify;
