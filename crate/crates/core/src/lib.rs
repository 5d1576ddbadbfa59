#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod areal;
pub mod construct;
pub mod reflect;
pub mod scalar;
pub mod verify;

pub use scalar::{Field, Poly, RatFunc, Rational, ScalarError, Var};
