//! Squarefree decomposition by iterated gcd with the derivative.
//!
//! Over a field of characteristic p > 0 the gcd chain stalls exactly when
//! every remaining irreducible factor has multiplicity divisible by p (a
//! factor of multiplicity m freezes once the chain walks m down to a
//! multiple of p, which happens iff m >= p or p | m).  The stall is
//! detected by a degree that fails to drop and reported as an error, so a
//! returned decomposition is always trustworthy.

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::scalar::FieldCtx;

/// Multiplicities occurring in a polynomial, with the degree of the
/// squarefree part carrying each one.  Entries sorted by descending
/// multiplicity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiplicityProfile {
    /// (multiplicity, degree of the product of distinct factors with
    /// exactly that multiplicity)
    pub entries: Vec<(usize, usize)>,
}

/// Monic squarefree factors by multiplicity, descending: f is the leading
/// coefficient times the product of factor^multiplicity over the entries.
pub fn squarefree_split(f: &UniPoly) -> Result<Vec<(usize, UniPoly)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("squarefree_split"));
    }
    // chain[k] = product of p_i^(m_i - k) over factors with m_i > k
    let mut chain = vec![f.monic()];
    while chain.last().unwrap().degree().unwrap() > 0 {
        let cur = chain.last().unwrap();
        let next = cur.gcd(&cur.derivative());
        if next.degree() == cur.degree() {
            match f.ctx() {
                FieldCtx::Fp(p) => return Err(Error::InseparableProfile { modulus: p }),
                FieldCtx::Q => unreachable!("gcd with derivative drops degree over Q"),
            }
        }
        chain.push(next);
    }
    // g_k = chain[k]/chain[k+1] collects distinct factors of multiplicity > k,
    // so consecutive quotients isolate each exact multiplicity.
    let parts: Vec<UniPoly> = chain
        .windows(2)
        .map(|w| w[0].exact_div(&w[1]))
        .collect();
    let mut out = Vec::new();
    for m in (1..=parts.len()).rev() {
        let factor = match m == parts.len() {
            true => parts[m - 1].clone(),
            false => parts[m - 1].exact_div(&parts[m]),
        };
        if factor.degree().unwrap() > 0 {
            out.push((m, factor));
        }
    }
    Ok(out)
}

/// The (multiplicity, squarefree-part degree) profile of a nonzero
/// polynomial, descending by multiplicity.
pub fn multiplicity_profile(f: &UniPoly) -> Result<MultiplicityProfile> {
    let entries = squarefree_split(f)?
        .into_iter()
        .map(|(m, h)| (m, h.degree().unwrap()))
        .collect();
    Ok(MultiplicityProfile { entries })
}

/// Whether f is the square of a polynomial over its own field.  The zero
/// polynomial counts.  Works in any characteristic > 3 by attempting the
/// square root directly, so inseparable inputs are fine.
pub fn is_perfect_square(f: &UniPoly) -> bool {
    let Some(d) = f.degree() else {
        return true;
    };
    if d % 2 != 0 || !f.lc().is_square() {
        return false;
    }
    let m = f.monic();
    match monic_sqrt(&m) {
        Some(g) => &g * &g == m,
        None => false,
    }
}

/// Candidate monic square root of a monic even-degree polynomial, read off
/// top-down: each lower coefficient of g is determined linearly by a
/// matching coefficient of f.  The result still needs the final g^2 == f
/// check since the bottom half of f is not consulted.
fn monic_sqrt(f: &UniPoly) -> Option<UniPoly> {
    let ctx = f.ctx();
    let e = f.degree()? / 2;
    let half = ctx.int(2).inv().expect("characteristic exceeds 2");
    let mut g = vec![ctx.zero(); e + 1];
    g[e] = ctx.one();
    for j in 1..=e {
        let mut acc = ctx.zero();
        for i in (e - j + 1)..e {
            acc = acc + g[i].clone() * g[2 * e - j - i].clone();
        }
        g[e - j] = (f.coeff(2 * e - j) - acc) * half.clone();
    }
    Some(UniPoly::new(ctx, g))
}
