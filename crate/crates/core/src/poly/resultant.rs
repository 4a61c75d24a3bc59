//! Resultants by the subresultant pseudo-remainder sequence.
//!
//! Convention: for f with leading coefficient a and roots alpha_i (with
//! multiplicity, in a splitting field), res(f, g) = a^(deg g) * prod g(alpha_i),
//! which equals the determinant of the Sylvester matrix of (f, g).  Swapping
//! the arguments multiplies the result by (-1)^(deg f * deg g).

use crate::poly::UniPoly;
use crate::scalar::Scalar;

/// Resultant of two polynomials over a common field.  Zero when either
/// input is the zero polynomial or when they share a root.
pub fn resultant(f: &UniPoly, g: &UniPoly) -> Scalar {
    assert_eq!(f.ctx(), g.ctx(), "mixed field contexts");
    let ctx = f.ctx();
    if f.is_zero() || g.is_zero() {
        return ctx.zero();
    }
    // Clear denominators so the pseudo-remainder sequence runs over
    // integer coefficients, then undo via res(c*f, g) = c^(deg g) res(f, g).
    let (fi, cf) = f.clear_denominators();
    let (gi, cg) = g.clear_denominators();
    let raw = subresultant(&fi, &gi);
    let correction = cf.pow(g.degree().unwrap() as i64) * cg.pow(f.degree().unwrap() as i64);
    raw * correction.inv().expect("denominator-clearing factors are nonzero")
}

/// Pseudo-remainder: the remainder of lc(b)^(delta+1) * a divided by b,
/// where delta = deg a - deg b >= 0.
fn prem(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let delta = a.degree().unwrap() - b.degree().unwrap();
    let factor = b.lc().pow(delta as i64 + 1);
    a.scale(&factor).divrem(b).1
}

/// Resultant of two nonzero polynomials by the subresultant sequence,
/// tracking the sign flips from argument swaps and odd-degree steps.
fn subresultant(a0: &UniPoly, b0: &UniPoly) -> Scalar {
    let ctx = a0.ctx();
    let (mut a, mut b, mut s) = {
        let da = a0.degree().unwrap();
        let db = b0.degree().unwrap();
        if da < db {
            let sign = if da % 2 == 1 && db % 2 == 1 { -ctx.one() } else { ctx.one() };
            (b0.clone(), a0.clone(), sign)
        } else {
            (a0.clone(), b0.clone(), ctx.one())
        }
    };
    let mut g = ctx.one();
    let mut h = ctx.one();
    loop {
        let da = a.degree().unwrap() as i64;
        let db = b.degree().unwrap() as i64;
        if db == 0 {
            // res = s * lc(b)^(deg a) / h^(deg a - 1); h = 1 on first pass
            return s * b.lc().pow(da) * h.pow(1 - da);
        }
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = prem(&a, &b);
        a = b;
        b = match r.is_zero() {
            true => return ctx.zero(),
            false => r.scale(&(g.clone() * h.pow(delta)).inv().expect("nonzero divisor")),
        };
        g = a.lc().clone();
        h = h.pow(1 - delta) * g.pow(delta);
    }
}
