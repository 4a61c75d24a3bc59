//! Rational functions in one variable, kept in lowest terms.
//!
//! Invariant: numerator and denominator are coprime and the denominator is
//! monic, so equality of representations is equality of functions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::scalar::{FieldCtx, Scalar};

/// Quotient of two polynomials in canonical form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

/// Shorthand constructor that panics on a zero denominator; for literals
/// whose denominator is visibly nonzero.
pub fn ratfunc_make(num: UniPoly, den: UniPoly) -> RatFunc {
    RatFunc::new(num, den).expect("nonzero denominator")
}

impl RatFunc {
    /// Reduce num/den to canonical form.
    pub fn new(num: UniPoly, den: UniPoly) -> Result<RatFunc> {
        assert_eq!(num.ctx(), den.ctx(), "mixed field contexts");
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num,
                den: UniPoly::one(den.ctx()),
            });
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g);
        let den = den.exact_div(&g);
        let lc_inv = den.lc().inv().expect("nonzero denominator");
        Ok(RatFunc {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        })
    }

    pub fn from_poly(p: UniPoly) -> RatFunc {
        let one = UniPoly::one(p.ctx());
        RatFunc { num: p, den: one }
    }

    pub fn constant(c: Scalar) -> RatFunc {
        RatFunc::from_poly(UniPoly::constant(c))
    }

    pub fn zero(ctx: FieldCtx) -> RatFunc {
        RatFunc::from_poly(UniPoly::zero(ctx))
    }

    pub fn ctx(&self) -> FieldCtx {
        self.den.ctx()
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// Degree as a map, max(deg num, deg den).  None for zero.
    pub fn degree(&self) -> Option<usize> {
        Some(self.num.degree()?.max(self.den.degree().unwrap()))
    }

    /// Reciprocal.  Errors on zero.
    pub fn inv(&self) -> Result<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    /// Evaluate; None exactly at poles of the reduced form.
    pub fn eval(&self, x: &Scalar) -> Option<Scalar> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) * d.inv().expect("nonzero denominator value"))
    }

    pub fn scale(&self, s: &Scalar) -> RatFunc {
        RatFunc {
            num: self.num.scale(s),
            den: self.den.clone(),
        }
    }

    /// Order of vanishing at x = 0: positive for zeros, negative for poles,
    /// None for the zero function.
    pub fn order_at_zero(&self) -> Option<i64> {
        let n = self.num.order_at_zero()? as i64;
        let d = self.den.order_at_zero().unwrap() as i64;
        Some(n - d)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, other: &RatFunc) -> RatFunc {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        ratfunc_make(num, &self.den * &other.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, other: &RatFunc) -> RatFunc {
        let num = &(&self.num * &other.den) - &(&other.num * &self.den);
        ratfunc_make(num, &self.den * &other.den)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, other: &RatFunc) -> RatFunc {
        ratfunc_make(&self.num * &other.num, &self.den * &other.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldCtx {
        FieldCtx::Q
    }

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        ratfunc_make(UniPoly::from_ints(q(), num), UniPoly::from_ints(q(), den))
    }

    #[test]
    fn reduction_to_lowest_terms() {
        // (x^2 - 1)/(x - 1) = x + 1
        let f = rf(&[-1, 0, 1], &[-1, 1]);
        assert!(f.is_polynomial());
        assert_eq!(f.num(), &UniPoly::from_ints(q(), &[1, 1]));
        // denominator is forced monic: x / (2x + 2) = (1/2 x)/(x + 1)
        let g = rf(&[0, 1], &[2, 2]);
        assert_eq!(g.den(), &UniPoly::from_ints(q(), &[1, 1]));
        assert_eq!(g.num().lc(), &q().ratio(1, 2));
    }

    #[test]
    fn zero_denominator_rejected() {
        let r = RatFunc::new(UniPoly::one(q()), UniPoly::zero(q()));
        assert!(matches!(r, Err(Error::ZeroDenominator)));
    }

    #[test]
    fn field_ops() {
        let x = RatFunc::from_poly(UniPoly::x(q()));
        let inv_x = x.inv().unwrap();
        assert_eq!(&x * &inv_x, RatFunc::constant(q().one()));
        // 1/x + 1/(x+1) = (2x+1)/(x^2+x)
        let f = rf(&[1], &[0, 1]);
        let g = rf(&[1], &[1, 1]);
        assert_eq!(&f + &g, rf(&[1, 2], &[0, 1, 1]));
        assert_eq!(&(&f - &g) + &g, f);
    }

    #[test]
    fn eval_hits_poles() {
        let f = rf(&[1], &[0, 1]); // 1/x
        assert_eq!(f.eval(&q().int(0)), None);
        assert_eq!(f.eval(&q().int(2)), Some(q().ratio(1, 2)));
        // removable singularity evaluates fine after reduction
        let g = rf(&[-1, 0, 1], &[-1, 1]);
        assert_eq!(g.eval(&q().int(1)), Some(q().int(2)));
    }

    #[test]
    fn order_at_zero() {
        let f = rf(&[0, 0, 3], &[0, 1]); // 3x^2/x = 3x
        assert_eq!(f.order_at_zero(), Some(1));
        let g = rf(&[1], &[0, 0, 1]); // 1/x^2
        assert_eq!(g.order_at_zero(), Some(-2));
        assert_eq!(RatFunc::zero(q()).order_at_zero(), None);
    }

    #[test]
    fn prime_field_arithmetic() {
        let f7 = FieldCtx::prime_field(7).unwrap();
        let f = ratfunc_make(
            UniPoly::from_ints(f7, &[1, 1]),
            UniPoly::from_ints(f7, &[3, 1]),
        );
        let g = &f * &f;
        // f(1) = 2/4 = 4 in F_7, so g(1) = 16 = 2
        assert_eq!(g.eval(&f7.int(1)), Some(f7.int(2)));
        assert_eq!(g.eval(&f7.int(4)), None); // 3 + 4 = 0 in F_7
    }
}
