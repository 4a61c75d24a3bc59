//! Dense univariate polynomials over an exact coefficient field.
//!
//! Coefficients are stored in ascending degree order with no trailing
//! zeros, so structural equality is mathematical equality.  The zero
//! polynomial keeps its field context in a separate tag.  Degrees stay in
//! the low hundreds throughout the crate, so all algorithms are the
//! classical dense ones.

mod ratfunc;
mod resultant;
mod squarefree;

pub use ratfunc::{ratfunc_make, RatFunc};
pub use resultant::resultant;
pub use squarefree::{
    is_perfect_square, multiplicity_profile, squarefree_split, MultiplicityProfile,
};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::Integer;
use num::traits::One;

use crate::error::{Error, Result};
use crate::scalar::{FieldCtx, Rational, Scalar};

/// Dense univariate polynomial over Q or F_p.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly {
    ctx: FieldCtx,
    /// Ascending coefficients, last entry nonzero (empty for the zero poly).
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    /// Polynomial from ascending coefficients; trailing zeros are stripped.
    pub fn new(ctx: FieldCtx, mut coeffs: Vec<Scalar>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.ctx() == ctx), "coefficient context mismatch");
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UniPoly { ctx, coeffs }
    }

    pub fn zero(ctx: FieldCtx) -> Self {
        UniPoly { ctx, coeffs: Vec::new() }
    }

    pub fn one(ctx: FieldCtx) -> Self {
        UniPoly::constant(ctx.one())
    }

    pub fn constant(c: Scalar) -> Self {
        let ctx = c.ctx();
        UniPoly::new(ctx, vec![c])
    }

    /// The monomial x.
    pub fn x(ctx: FieldCtx) -> Self {
        UniPoly::new(ctx, vec![ctx.zero(), ctx.one()])
    }

    /// c * x^k.
    pub fn monomial(c: Scalar, k: usize) -> Self {
        let ctx = c.ctx();
        let mut coeffs = vec![ctx.zero(); k];
        coeffs.push(c);
        UniPoly::new(ctx, coeffs)
    }

    /// Polynomial from ascending integer coefficients.
    pub fn from_ints(ctx: FieldCtx, coeffs: &[i64]) -> Self {
        UniPoly::new(ctx, coeffs.iter().map(|&c| ctx.int(c)).collect())
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient.  Panics on the zero polynomial.
    pub fn lc(&self) -> &Scalar {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    /// Ascending coefficient slice (no trailing zeros).
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.lc().is_one()
    }

    /// Divide through by the leading coefficient.  Panics on zero.
    pub fn monic(&self) -> UniPoly {
        let inv = self.lc().inv().expect("leading coefficient is nonzero");
        self.scale(&inv)
    }

    pub fn scale(&self, s: &Scalar) -> UniPoly {
        UniPoly::new(self.ctx, self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Multiply by x^k.
    pub fn mul_xpow(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.ctx.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly::new(self.ctx, coeffs)
    }

    /// Order of vanishing at x = 0.  None for the zero polynomial.
    pub fn order_at_zero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.ctx.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero(self.ctx);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.ctx.int(i as i64) * c.clone())
            .collect();
        UniPoly::new(self.ctx, coeffs)
    }

    /// Substitution self(g) by Horner in the polynomial ring.
    pub fn compose(&self, g: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero(self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &UniPoly::constant(c.clone());
        }
        acc
    }

    /// Euclidean division: self = q * div + r with deg r < deg div.
    /// Panics if div is zero.
    pub fn divrem(&self, div: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let d = div.degree().unwrap();
        let lc_inv = div.lc().inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quo = vec![self.ctx.zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1;
            let factor = rem[k].clone() * lc_inv.clone();
            if !factor.is_zero() {
                quo[k - d] = factor.clone();
                for (i, c) in div.coeffs.iter().enumerate() {
                    let idx = k - d + i;
                    rem[idx] = rem[idx].clone() - factor.clone() * c.clone();
                }
            }
            rem.pop();
        }
        (UniPoly::new(self.ctx, quo), UniPoly::new(self.ctx, rem))
    }

    /// Quotient of an exact division.  Panics if the division leaves a
    /// remainder; use only where divisibility is guaranteed.
    pub fn exact_div(&self, div: &UniPoly) -> UniPoly {
        let (q, r) = self.divrem(div);
        assert!(r.is_zero(), "exact_div with nonzero remainder");
        q
    }

    pub fn pow(&self, mut e: u32) -> UniPoly {
        let mut acc = UniPoly::one(self.ctx);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Coefficient-wise image in another context (identity, or Q to F_p).
    pub fn project(&self, ctx: FieldCtx) -> Result<UniPoly> {
        if ctx == self.ctx {
            return Ok(self.clone());
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| match c {
                Scalar::Rat(q) => ctx.project(q),
                Scalar::Mod(_) => Err(Error::Degenerate(
                    "cannot project out of a prime field".into(),
                )),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(UniPoly::new(ctx, coeffs))
    }

    /// Over Q, the pair (c * self, c) where c clears all denominators and
    /// c * self has integer coefficients.  Over F_p, (self, 1).
    pub fn clear_denominators(&self) -> (UniPoly, Scalar) {
        if self.ctx != FieldCtx::Q || self.is_zero() {
            return (self.clone(), self.ctx.one());
        }
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.as_rational().denom());
        }
        let factor = Scalar::Rat(Rational::from_integer(l));
        (self.scale(&factor), factor)
    }

    /// Monic gcd by the Euclidean algorithm.  Panics if both inputs are zero.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        assert!(
            !(self.is_zero() && other.is_zero()),
            "gcd of two zero polynomials"
        );
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Unique interpolating polynomial of degree < points.len() through
    /// pairwise-distinct sample points, by the Lagrange construction.
    pub fn interpolate(ctx: FieldCtx, points: &[(Scalar, Scalar)]) -> UniPoly {
        let mut acc = UniPoly::zero(ctx);
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut term = UniPoly::constant(yi.clone());
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let diff = xi - xj;
                assert!(!diff.is_zero(), "interpolation nodes must be distinct");
                let lin = UniPoly::new(ctx, vec![-xj.clone(), ctx.one()]);
                term = &term * &lin.scale(&diff.inv().expect("distinct nodes"));
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Render with a chosen variable name, descending powers.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", cs),
            };
            let body = match i {
                0 => mag,
                _ => {
                    let xp = if i == 1 { var.to_string() } else { format!("{var}^{i}") };
                    if mag == "1" {
                        xp
                    } else {
                        format!("{mag}*{xp}")
                    }
                }
            };
            if parts.is_empty() {
                parts.push(if sign == "-" { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{sign} {body}"));
            }
        }
        parts.join(" ")
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, other: &UniPoly) -> UniPoly {
        assert_eq!(self.ctx, other.ctx, "mixed field contexts");
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        UniPoly::new(self.ctx, coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, other: &UniPoly) -> UniPoly {
        assert_eq!(self.ctx, other.ctx, "mixed field contexts");
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        UniPoly::new(self.ctx, coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, other: &UniPoly) -> UniPoly {
        assert_eq!(self.ctx, other.ctx, "mixed field contexts");
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(self.ctx);
        }
        let mut coeffs = vec![self.ctx.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a * b;
            }
        }
        UniPoly::new(self.ctx, coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.ctx, self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x"))
    }
}
