use alloc::string::ToString;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use super::poly::{Poly, Var, MAX_VARS};
use super::{Field, Rational, ScalarError};

/// Quotient of two integer polynomials in lowest terms.
///
/// Canonical form: `gcd(num, den) = 1` over the integers and the leading
/// coefficient of `den` is positive; zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn var(v: Var) -> Self {
        RatFunc::from_poly(Poly::var(v))
    }

    /// Builds `num/den` and reduces it.
    pub fn new(num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero {
                numerator: num.to_string(),
            });
        }
        Ok(RatFunc::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        RatFunc::signed(num, den)
    }

    fn signed(num: Poly, den: Poly) -> Self {
        if den.lead_coeff_negative() {
            RatFunc {
                num: -num,
                den: -den,
            }
        } else {
            RatFunc { num, den }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Evaluates at a rational assignment of the indeterminates.
    pub fn eval(&self, values: &[BigRational; MAX_VARS]) -> Result<Rational, ScalarError> {
        let n = self.num.eval(values);
        let d = self.den.eval(values);
        if d.is_zero() {
            return Err(ScalarError::DivisionByZero {
                numerator: Rational::from_big(n).to_string(),
            });
        }
        Ok(Rational::from_big(n / d))
    }

    pub fn recip(&self) -> Result<Self, ScalarError> {
        RatFunc::one().try_div(self)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<Var> for RatFunc {
    fn from(v: Var) -> Self {
        RatFunc::var(v)
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::from_poly(Poly::from(n))
    }
}

fn add_sub(x: &RatFunc, y: &RatFunc, subtract: bool) -> RatFunc {
    let combine = |a: &Poly, b: &Poly| if subtract { a - b } else { a + b };
    if x.den == y.den {
        let num = combine(&x.num, &y.num);
        if x.den.is_one() {
            return RatFunc::from_poly(num);
        }
        return RatFunc::reduce(num, x.den.clone());
    }
    if x.den.is_one() {
        let num = combine(&(&x.num * &y.den), &y.num);
        return RatFunc::signed(num, y.den.clone());
    }
    if y.den.is_one() {
        let num = combine(&x.num, &(&y.num * &x.den));
        return RatFunc::signed(num, x.den.clone());
    }
    // Henrici: with g = gcd(b, d), a/b ± c/d = (a·d' ± c·b') / (b'·d),
    // and only g can share factors with the new numerator.
    let g = Poly::gcd(&x.den, &y.den);
    let b1 = x.den.div_exact(&g).expect("gcd divides");
    let d1 = y.den.div_exact(&g).expect("gcd divides");
    let num = combine(&(&x.num * &d1), &(&y.num * &b1));
    if num.is_zero() {
        return RatFunc::zero();
    }
    let den = &b1 * &y.den;
    let h = Poly::gcd(&num, &g);
    if h.is_one() {
        RatFunc::signed(num, den)
    } else {
        RatFunc::signed(
            num.div_exact(&h).expect("gcd divides"),
            den.div_exact(&h).expect("gcd divides"),
        )
    }
}

fn cancel(a: &Poly, b: &Poly) -> (Poly, Poly) {
    if b.is_one() || a.is_one() {
        return (a.clone(), b.clone());
    }
    let g = Poly::gcd(a, b);
    if g.is_one() {
        (a.clone(), b.clone())
    } else {
        (
            a.div_exact(&g).expect("gcd divides"),
            b.div_exact(&g).expect("gcd divides"),
        )
    }
}

fn mul(x: &RatFunc, y: &RatFunc) -> RatFunc {
    if x.num.is_zero() || y.num.is_zero() {
        return RatFunc::zero();
    }
    if x.den.is_one() && y.den.is_one() {
        return RatFunc::from_poly(&x.num * &y.num);
    }
    let (a, d) = cancel(&x.num, &y.den);
    let (c, b) = cancel(&y.num, &x.den);
    RatFunc::signed(&a * &c, &b * &d)
}

impl<'a> Add<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &'a RatFunc) -> RatFunc {
        add_sub(&self, rhs, false)
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        add_sub(&self, &rhs, false)
    }
}

impl<'a> Sub<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &'a RatFunc) -> RatFunc {
        add_sub(&self, rhs, true)
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        add_sub(&self, &rhs, true)
    }
}

impl<'a> Mul<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &'a RatFunc) -> RatFunc {
        mul(&self, rhs)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        mul(&self, &rhs)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Field for RatFunc {
    const REALIZATION: &'static str = "symbolic";

    fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }

    fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    fn from_i64(n: i64) -> Self {
        RatFunc::from(n)
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn try_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero {
                numerator: self.to_string(),
            });
        }
        let inv = RatFunc::signed(rhs.den.clone(), rhs.num.clone());
        Ok(mul(self, &inv))
    }

    /// Clears denominators and divides out the gcd of the numerators.
    fn normalize_projective(coords: &mut [Self]) {
        if coords.iter().all(Field::is_zero) {
            return;
        }
        let mut lcm = Poly::one();
        for c in coords.iter() {
            let g = Poly::gcd(&lcm, &c.den);
            lcm = &lcm * &c.den.div_exact(&g).expect("gcd divides");
        }
        let nums: alloc::vec::Vec<Poly> = coords
            .iter()
            .map(|c| &c.num * &lcm.div_exact(&c.den).expect("denominator divides lcm"))
            .collect();
        let mut g = Poly::zero();
        for n in &nums {
            g = Poly::gcd(&g, n);
            if g.is_one() {
                break;
            }
        }
        for (c, n) in coords.iter_mut().zip(nums) {
            *c = RatFunc::from_poly(n.div_exact(&g).expect("gcd divides"));
        }
    }

    fn size(&self) -> usize {
        self.num.len() + self.den.len()
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sa() -> RatFunc {
        RatFunc::var(Var::Sa)
    }
    fn sb() -> RatFunc {
        RatFunc::var(Var::Sb)
    }

    #[test]
    fn cancels_on_construction() {
        let num =
            &(Poly::var(Var::Sa) * Poly::var(Var::Sa)) - &(Poly::var(Var::Sb) * Poly::var(Var::Sb));
        let den = &Poly::var(Var::Sa) - &Poly::var(Var::Sb);
        let r = RatFunc::new(num, den).unwrap();
        assert_eq!(r, sa() + sb());
        assert!(r.is_polynomial());
    }

    #[test]
    fn additive_inverse_is_zero() {
        let r = (sa() - sb()) + (sb() - sa());
        assert!(r.is_zero());
        assert_eq!(r, RatFunc::zero());
    }

    #[test]
    fn division() {
        assert_eq!(sa().try_div(&sa()).unwrap(), RatFunc::one());
        assert!(sa().try_div(&RatFunc::zero()).is_err());
        let x = sa().try_div(&(sa() - sb())).unwrap();
        let back = x * &(sa() - sb());
        assert_eq!(back, sa());
    }

    #[test]
    fn denominator_sign_is_canonical() {
        let a = RatFunc::one().try_div(&(sb() - sa())).unwrap();
        let b = -RatFunc::one().try_div(&(sa() - sb())).unwrap();
        assert_eq!(a, b);
        assert!(!a.denom().lead_coeff_negative());
    }

    #[test]
    fn sums_with_unrelated_denominators() {
        let x = RatFunc::one().try_div(&sa()).unwrap();
        let y = RatFunc::one().try_div(&sb()).unwrap();
        let s = x + &y;
        let expected = (sa() + sb()).try_div(&(sa() * sb())).unwrap();
        assert_eq!(s, expected);
        let z = s - &expected;
        assert!(z.is_zero());
    }

    #[test]
    fn projective_normalization() {
        let mut v = [
            RatFunc::one().try_div(&sa()).unwrap(),
            RatFunc::one().try_div(&sb()).unwrap(),
            RatFunc::from(2).try_div(&(sa() * sb())).unwrap(),
        ];
        RatFunc::normalize_projective(&mut v);
        assert_eq!(v, [sb(), sa(), RatFunc::from(2)]);
    }
}
