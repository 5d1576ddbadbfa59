//! Sparse multivariate polynomials over the integers.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

pub const MAX_VARS: usize = 6;

/// The indeterminates: squared side lengths, then a generic starting point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Sa,
    Sb,
    Sc,
    L,
    M,
    N,
}

impl Var {
    pub const ALL: [Var; MAX_VARS] = [Var::Sa, Var::Sb, Var::Sc, Var::L, Var::M, Var::N];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Sa => "sa",
            Var::Sb => "sb",
            Var::Sc => "sc",
            Var::L => "l",
            Var::M => "m",
            Var::N => "n",
        }
    }
}

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u16; MAX_VARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; MAX_VARS])
    }

    pub fn var(v: Var, exp: u16) -> Self {
        let mut e = [0; MAX_VARS];
        e[v.index()] = exp;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u16; MAX_VARS] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a = a.checked_add(*b).expect("monomial exponent overflow");
        }
        Monomial(e)
    }

    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a = a.checked_sub(*b)?;
        }
        Some(Monomial(e))
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a = (*a).min(*b);
        }
        Monomial(e)
    }

    fn with_exponent(&self, v: Var, exp: u16) -> Monomial {
        let mut e = self.0;
        e[v.index()] = exp;
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(v.name())?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial with integer coefficients. Terms are kept strictly descending
/// in monomial order with no zero coefficients, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, BigInt)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::monomial(Monomial::one(), c)
    }

    pub fn var(v: Var) -> Self {
        Poly::monomial(Monomial::var(v, 1), BigInt::one())
    }

    pub fn monomial(m: Monomial, c: BigInt) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: alloc::vec![(m, c)],
            }
        }
    }

    /// Collects arbitrary terms, combining repeats.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(BigInt::zero) += c;
        }
        Poly::from_map(acc)
    }

    fn from_map(acc: BTreeMap<Monomial, BigInt>) -> Self {
        Poly {
            terms: acc
                .into_iter()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// The value, when the polynomial is a constant (zero included).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(m, c)] if m.is_one() && c.is_one())
    }

    pub fn lead(&self) -> Option<&(Monomial, BigInt)> {
        self.terms.first()
    }

    pub fn lead_coeff_negative(&self) -> bool {
        self.lead().is_some_and(|(_, c)| c.is_negative())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms
            .iter()
            .map(|(m, _)| m.exponent(v))
            .max()
            .unwrap_or(0)
    }

    fn degrees(&self) -> [u16; MAX_VARS] {
        let mut d = [0; MAX_VARS];
        for (m, _) in &self.terms {
            for (slot, &e) in d.iter_mut().zip(m.exponents()) {
                *slot = (*slot).max(e);
            }
        }
        d
    }

    /// Positive gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, k: &BigInt) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    fn div_int(&self, k: &BigInt) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, c / k)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, k: &BigInt) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(n, c)| (n.mul(m), c * k)).collect(),
        }
    }

    /// Sign-normalized: leading coefficient positive.
    pub fn unit_normal(self) -> Poly {
        if self.lead_coeff_negative() {
            -self
        } else {
            self
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at `values[v.index()]` for each variable.
    pub fn eval(&self, values: &[BigRational; MAX_VARS]) -> BigRational {
        let mut sum = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for v in Var::ALL {
                let e = m.exponent(v);
                if e > 0 {
                    t *= Pow::pow(&values[v.index()], u32::from(e));
                }
            }
            sum += t;
        }
        sum
    }

    /// Substitutes polynomials for variables.
    pub fn substitute(&self, values: &[Poly; MAX_VARS]) -> Poly {
        let mut sum = Poly::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            for v in Var::ALL {
                let e = m.exponent(v);
                if e > 0 {
                    t = &t * &values[v.index()].pow(u32::from(e));
                }
            }
            sum = &sum + &t;
        }
        sum
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (lm, lc) = d.lead()?;
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if let Some(k) = d.as_constant() {
            return self
                .terms
                .iter()
                .all(|(_, c)| c.is_multiple_of(&k))
                .then(|| self.div_int(&k));
        }
        let (ds, dd) = (self.degrees(), d.degrees());
        if ds.iter().zip(dd.iter()).any(|(a, b)| a < b) {
            return None;
        }
        // trailing terms multiply too
        let (tm_s, tc_s) = self.terms.last()?;
        let (tm_d, tc_d) = d.terms.last()?;
        if tm_s.checked_div(tm_d).is_none() || !tc_s.is_multiple_of(tc_d) {
            return None;
        }

        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.lead() {
            let qm = m.checked_div(lm)?;
            let (qc, r) = c.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            rem = &rem - &d.mul_term(&qm, &qc);
            quotient.push((qm, qc));
        }
        Some(Poly { terms: quotient })
    }

    /// Coefficients as a polynomial in `v`, indexed by degree.
    pub fn coeffs_in(&self, v: Var) -> Vec<Poly> {
        let deg = usize::from(self.degree_in(v));
        let mut buckets: Vec<Vec<(Monomial, BigInt)>> = alloc::vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let e = usize::from(m.exponent(v));
            buckets[e].push((m.with_exponent(v, 0), c.clone()));
        }
        // Zeroing one exponent can reorder terms, so re-sort each bucket.
        buckets
            .into_iter()
            .map(|mut ts| {
                ts.sort_by_key(|t| core::cmp::Reverse(t.0));
                Poly { terms: ts }
            })
            .collect()
    }

    pub fn from_coeffs_in(v: Var, coeffs: &[Poly]) -> Poly {
        let mut terms = Vec::new();
        for (e, c) in coeffs.iter().enumerate() {
            let xe = Monomial::var(v, e as u16);
            terms.extend(c.terms.iter().map(|(m, k)| (m.mul(&xe), k.clone())));
        }
        terms.sort_by_key(|t| core::cmp::Reverse(t.0));
        Poly { terms }
    }

    fn uses(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(v) > 0)
    }

    /// Gcd of the coefficients of `self` viewed as a polynomial in `v`.
    pub fn content_in(&self, v: Var) -> Poly {
        let mut g = Poly::zero();
        for c in self.coeffs_in(v) {
            if c.is_zero() {
                continue;
            }
            g = Poly::gcd(&g, &c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Greatest common divisor over the integers, with positive leading
    /// coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() {
            return b.clone().unit_normal();
        }
        if b.is_zero() {
            return a.clone().unit_normal();
        }
        if let Some(c) = a.as_constant() {
            return Poly::constant(c.gcd(&b.content()));
        }
        if let Some(c) = b.as_constant() {
            return Poly::constant(c.gcd(&a.content()));
        }
        if a.len() == 1 {
            return monomial_gcd(&a.terms[0], b);
        }
        if b.len() == 1 {
            return monomial_gcd(&b.terms[0], a);
        }
        let (small, big) = if (a.total_degree(), a.len()) <= (b.total_degree(), b.len()) {
            (a, b)
        } else {
            (b, a)
        };
        if big.div_exact(small).is_some() {
            return small.clone().unit_normal();
        }

        // A variable present in only one argument can be stripped through
        // the content with respect to that variable.
        for v in Var::ALL {
            match (a.uses(v), b.uses(v)) {
                (true, false) => return Poly::gcd(&a.content_in(v), b),
                (false, true) => return Poly::gcd(a, &b.content_in(v)),
                _ => {}
            }
        }

        let v = Var::ALL
            .into_iter()
            .filter(|&v| a.uses(v))
            .min_by_key(|&v| a.degree_in(v).max(b.degree_in(v)))
            .expect("nonconstant polynomial uses a variable");

        let ca = a.content_in(v);
        let cb = b.content_in(v);
        let pa = a.div_exact(&ca).expect("content divides");
        let pb = b.div_exact(&cb).expect("content divides");
        let c = Poly::gcd(&ca, &cb);
        let h = primitive_prs_gcd(&pa, &pb, v);
        (&c * &h).unit_normal()
    }
}

fn monomial_gcd(term: &(Monomial, BigInt), p: &Poly) -> Poly {
    let (m, c) = term;
    let mut g = *m;
    for (n, _) in &p.terms {
        g = g.gcd(n);
    }
    Poly::monomial(g, c.gcd(&p.content()))
}

fn trim(coeffs: &mut Vec<Poly>) {
    while coeffs.last().is_some_and(Poly::is_zero) {
        coeffs.pop();
    }
}

/// Sparse pseudo-remainder of `f` by `g`, both given by coefficients in one
/// variable. `g` must be nonzero.
fn pseudo_rem(f: &[Poly], g: &[Poly]) -> Vec<Poly> {
    let dg = g.len() - 1;
    let lg = &g[dg];
    let mut r = f.to_vec();
    trim(&mut r);
    while !r.is_empty() && r.len() > dg {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - dg;
        for c in r.iter_mut() {
            *c = &*c * lg;
        }
        for (j, gj) in g.iter().enumerate() {
            r[j + shift] = &r[j + shift] - &(&lr * gj);
        }
        debug_assert!(r[dr].is_zero());
        trim(&mut r);
    }
    r
}

/// Gcd of two polynomials that are primitive with respect to `v` and both
/// of positive degree in it, by the primitive remainder sequence.
fn primitive_prs_gcd(a: &Poly, b: &Poly, v: Var) -> Poly {
    let mut f = a.coeffs_in(v);
    let mut g = b.coeffs_in(v);
    if f.len() < g.len() {
        core::mem::swap(&mut f, &mut g);
    }
    loop {
        let r = pseudo_rem(&f, &g);
        if r.is_empty() {
            return Poly::from_coeffs_in(v, &g);
        }
        if r.len() == 1 {
            return Poly::one();
        }
        let rp = Poly::from_coeffs_in(v, &r);
        let cont = rp.content_in(v);
        let rp = rp.div_exact(&cont).expect("content divides");
        f = core::mem::replace(&mut g, rp.coeffs_in(v));
    }
}

fn merge(a: &[(Monomial, BigInt)], b: &[(Monomial, BigInt)], negate_b: bool) -> Poly {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let tb = |c: &BigInt| if negate_b { -c } else { c.clone() };
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0, tb(&b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b {
                    &a[i].1 - &b[j].1
                } else {
                    &a[i].1 + &b[j].1
                };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(m, c)| (*m, tb(c))));
    Poly { terms: out }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        merge(&self.terms, &rhs.terms, false)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        merge(&self.terms, &rhs.terms, true)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if rhs.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return self.mul_term(m, c);
        }
        if self.len() == 1 {
            let (m, c) = &self.terms[0];
            return rhs.mul_term(m, c);
        }
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let k = ca * cb;
                acc.entry(ma.mul(mb)).and_modify(|c| *c += &k).or_insert(k);
            }
        }
        Poly::from_map(acc)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl<'a> Add<&'a Poly> for Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        &self + rhs
    }
}

impl<'a> Sub<&'a Poly> for Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        &self - rhs
    }
}

impl<'a> Mul<&'a Poly> for Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        &self * rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for (_, c) in self.terms.iter_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl From<Var> for Poly {
    fn from(v: Var) -> Poly {
        Poly::var(v)
    }
}

impl From<i64> for Poly {
    fn from(n: i64) -> Poly {
        Poly::constant(BigInt::from(n))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m:?}")?;
            } else {
                write!(f, "{mag}*{m:?}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn sa() -> Poly {
        Poly::var(Var::Sa)
    }
    fn sb() -> Poly {
        Poly::var(Var::Sb)
    }
    fn sc() -> Poly {
        Poly::var(Var::Sc)
    }
    fn k(n: i64) -> Poly {
        Poly::from(n)
    }

    #[test]
    fn graded_lex_order() {
        let a2 = Monomial::var(Var::Sa, 2);
        let ab = Monomial::var(Var::Sa, 1).mul(&Monomial::var(Var::Sb, 1));
        let b2 = Monomial::var(Var::Sb, 2);
        let c3 = Monomial::var(Var::Sc, 3);
        assert!(a2 > ab && ab > b2 && c3 > a2);
    }

    #[test]
    fn expansion_identity_cancels() {
        let lhs = &(&(&sa() + &sb()) * &(&sa() - &sb())) - &(&(&sa() * &sa()) - &(&sb() * &sb()));
        assert!(lhs.is_zero());
    }

    #[test]
    fn display() {
        let p = &(&(&k(3) * &(&sa() * &sa())) - &sb()) + &k(-2);
        assert_eq!(format!("{p}"), "3*sa^2 - sb - 2");
        assert_eq!(format!("{}", Poly::zero()), "0");
    }

    #[test]
    fn exact_division() {
        let a = &sa() + &sb();
        let b = &sa() - &(&k(2) * &sc());
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(prod.div_exact(&(&sa() + &sc())), None);
        assert_eq!(
            prod.scale(&BigInt::from(6)).div_exact(&k(3)),
            Some(prod.scale(&BigInt::from(2)))
        );
        assert_eq!(k(5).div_exact(&k(2)), None);
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let common = &(&sa() * &sb()) - &(&k(3) * &(&sc() * &sc())) + &k(1);
        let x = &(&sa() + &sb()) + &sc();
        let y = &(&sa() * &sa()) - &(&sb() * &sc());
        let p = &(&common * &x).scale(&BigInt::from(4)) * &sa();
        let q = (&(&common * &y).scale(&BigInt::from(6)) * &sa()).neg();
        let g = Poly::gcd(&p, &q);
        assert_eq!(g, (&common * &sa()).scale(&BigInt::from(2)).unit_normal());
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let p = &(&sa() * &sa()) + &(&sb() * &sb());
        let q = &(&sa() * &sb()) + &k(1);
        assert!(Poly::gcd(&p, &q).is_one());
    }

    #[test]
    fn gcd_with_variable_in_one_argument() {
        let p = &(&sa() - &sb()) * &(&sc() + &k(2));
        let q = &(&sa() - &sb()) * &(&sa() + &k(1));
        assert_eq!(Poly::gcd(&p, &q), (&sa() - &sb()));
    }

    #[test]
    fn coefficient_round_trip() {
        let p = &(&(&sa() * &sb()) * &sb()) + &(&(&sc() * &sb()) - &sa());
        let cs = p.coeffs_in(Var::Sb);
        assert_eq!(cs.len(), 3);
        assert_eq!(Poly::from_coeffs_in(Var::Sb, &cs), p);
    }

    #[test]
    fn evaluation() {
        let p = &(&sa() * &sa()) - &(&k(3) * &sb());
        let mut vals: [BigRational; MAX_VARS] = core::array::from_fn(|_| BigRational::zero());
        vals[0] = BigRational::new(1.into(), 2.into());
        vals[1] = BigRational::from_integer(2.into());
        assert_eq!(p.eval(&vals), BigRational::new((-23).into(), 4.into()));
    }
}
