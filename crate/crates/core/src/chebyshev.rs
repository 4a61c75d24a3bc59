//! Chebyshev polynomials of the first kind, the companion family R_n of
//! power sums for u + v = -1, uv = x, and the degree-m lift of a degree
//! map kappa.
//!
//! All three are pure functions of small inputs; nothing is memoized, so
//! they are trivially safe to call from any number of threads.

use crate::poly::{RatFunc, UniPoly};
use crate::scalar::FieldCtx;

/// Chebyshev polynomial T_n, normalized by T_n(cos t) = cos nt:
/// T_0 = 1, T_1 = x, T_m = 2x T_{m-1} - T_{m-2}.
pub fn chebyshev_t(n: usize, ctx: FieldCtx) -> UniPoly {
    let mut prev = UniPoly::one(ctx);
    if n == 0 {
        return prev;
    }
    let mut cur = UniPoly::x(ctx);
    let two_x = UniPoly::monomial(ctx.int(2), 1);
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// R_n = -(u^n + v^n) where u + v = -1 and uv = x, as a polynomial in x
/// of degree floor(n/2).  Power sums give the integer recurrence
/// R_0 = -2, R_1 = 1, R_m = -R_{m-1} - x R_{m-2}.
pub fn r_poly(n: usize, ctx: FieldCtx) -> UniPoly {
    let mut prev = UniPoly::constant(ctx.int(-2));
    if n == 0 {
        return prev;
    }
    let mut cur = UniPoly::one(ctx);
    let x = UniPoly::x(ctx);
    for _ in 1..n {
        let next = &(-&cur) - &(&x * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Composite degree map of order m over a degree map kappa:
/// (1 - T_m(1 - 2 kappa)) / 2.  Order 1 is the identity, and the degree
/// multiplies exactly: deg(result) = m * deg(kappa).
pub fn kappa_lift(kappa: &RatFunc, m: usize) -> RatFunc {
    assert!(m >= 1, "lift order must be positive");
    let ctx = kappa.ctx();
    let one = RatFunc::constant(ctx.one());
    let arg = &one - &kappa.scale(&ctx.int(2));
    let t = chebyshev_t(m, ctx);
    let mut acc = RatFunc::zero(ctx);
    for c in t.coeffs().iter().rev() {
        acc = &(&acc * &arg) + &RatFunc::constant(c.clone());
    }
    let lifted = (&one - &acc).scale(&ctx.ratio(1, 2));
    debug_assert!(
        kappa.degree().unwrap_or(0) == 0 || lifted.degree() == Some(m * kappa.degree().unwrap()),
        "lift must multiply the degree by its order"
    );
    lifted
}
