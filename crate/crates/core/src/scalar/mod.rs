//! Exact scalar fields.
//!
//! Two realizations share the [`Field`] trait: [`Rational`] for concrete
//! triangles and [`RatFunc`] for symbolic ones, where the squared side
//! lengths (and optionally the starting point) are indeterminates.

mod poly;
mod ratfunc;
mod rational;

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

pub use poly::{Monomial, Poly, Var, MAX_VARS};
pub use ratfunc::RatFunc;
pub use rational::Rational;

use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero: {numerator} / 0")]
    DivisionByZero { numerator: String },
}

/// An exact field with decidable zero test.
///
/// Arithmetic always returns canonical forms, so `==` on two values is
/// equality of field elements.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Short name of the realization, as reported in check reports.
    const REALIZATION: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;

    fn try_div(&self, rhs: &Self) -> Result<Self, ScalarError>;

    /// `Some(sign > 0)` when the realization carries an order, `None` for
    /// symbolic values.
    fn is_positive(&self) -> Option<bool> {
        None
    }

    /// Rescale a homogeneous tuple in place to a canonical representative of
    /// its projective class (e.g. coprime integers). The default leaves it
    /// untouched.
    fn normalize_projective(_coords: &mut [Self]) {}

    /// A rough storage size: number of monomials for symbolic values.
    fn size(&self) -> usize {
        1
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// Sum of products `Σ xs[i]·ys[i]`.
pub fn dot<F: Field>(xs: &[F; 3], ys: &[F; 3]) -> F {
    xs[0].clone() * &ys[0] + &(xs[1].clone() * &ys[1]) + &(xs[2].clone() * &ys[2])
}

/// Determinant of the 3×3 matrix with the given rows.
pub fn det3<F: Field>(r0: &[F; 3], r1: &[F; 3], r2: &[F; 3]) -> F {
    dot(r0, &cross(r1, r2))
}

pub fn cross<F: Field>(p: &[F; 3], q: &[F; 3]) -> [F; 3] {
    [
        p[1].clone() * &q[2] - &(p[2].clone() * &q[1]),
        p[2].clone() * &q[0] - &(p[0].clone() * &q[2]),
        p[0].clone() * &q[1] - &(p[1].clone() * &q[0]),
    ]
}

/// True when `xs` and `ys` are proportional: every 2×2 minor vanishes.
pub fn proportional<F: Field>(xs: &[F], ys: &[F]) -> bool {
    debug_assert_eq!(xs.len(), ys.len());
    for i in 0..xs.len() {
        for j in (i + 1)..xs.len() {
            let minor = xs[i].clone() * &ys[j] - &(xs[j].clone() * &ys[i]);
            if !minor.is_zero() {
                return false;
            }
        }
    }
    true
}
