//! Reflections in the sidelines, in closed form.
//!
//! The formulas are homogeneous of degree one and keep the coordinate sum
//! of the input triple, so the result is not rescaled.

use crate::areal::{ArealPoint, TriangleParams};
use crate::scalar::Field;

/// Which sideline to reflect in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Bc,
    Ca,
    Ab,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::Bc, Side::Ca, Side::Ab];
}

/// `(d, e, f) ↦ (−d, e + d(a²+b²−c²)/a², f + d(c²+a²−b²)/a²)`.
pub fn reflect_bc<F: Field>(t: &TriangleParams<F>, p: &ArealPoint<F>) -> ArealPoint<F> {
    let [d, e, f] = p.coords();
    let k = d.try_div(&t.sa).expect("positive side");
    ArealPoint::new(
        -d.clone(),
        e.clone() + &(k.clone() * &t.s_c()),
        f.clone() + &(k * &t.s_b()),
    )
    .expect("reflection is a bijection")
}

/// `(d, e, f) ↦ (d + e(a²+b²−c²)/b², −e, f + e(b²+c²−a²)/b²)`.
pub fn reflect_ca<F: Field>(t: &TriangleParams<F>, p: &ArealPoint<F>) -> ArealPoint<F> {
    let [d, e, f] = p.coords();
    let k = e.try_div(&t.sb).expect("positive side");
    ArealPoint::new(
        d.clone() + &(k.clone() * &t.s_c()),
        -e.clone(),
        f.clone() + &(k * &t.s_a()),
    )
    .expect("reflection is a bijection")
}

/// `(d, e, f) ↦ (d + f(c²+a²−b²)/c², e + f(b²+c²−a²)/c², −f)`.
pub fn reflect_ab<F: Field>(t: &TriangleParams<F>, p: &ArealPoint<F>) -> ArealPoint<F> {
    let [d, e, f] = p.coords();
    let k = f.try_div(&t.sc).expect("positive side");
    ArealPoint::new(
        d.clone() + &(k.clone() * &t.s_b()),
        e.clone() + &(k * &t.s_a()),
        -f.clone(),
    )
    .expect("reflection is a bijection")
}

pub fn reflect<F: Field>(side: Side, t: &TriangleParams<F>, p: &ArealPoint<F>) -> ArealPoint<F> {
    match side {
        Side::Bc => reflect_bc(t, p),
        Side::Ca => reflect_ca(t, p),
        Side::Ab => reflect_ab(t, p),
    }
}
