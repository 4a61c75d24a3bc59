//! Pade-approximation construction of Abel functions on elliptic curves
//! in the chart y^2 = 1 + ax + bx^2 + cx^3, plus torsion probing: the
//! approximant a = p - qy of the right order has divisor (n-1)A + C - nB,
//! and A is n-torsion relative to B exactly when C lands back on A.
//!
//! The pole at B is read as total order n: the source statement's
//! "(n-1)A + C - B" does not balance degrees, and principality forces
//! order n at the single infinite point.

use crate::abelforms::HyperellipticAbel;
use crate::error::{Error, Result};
use crate::linalg::solve;
use crate::poly::{resultant, squarefree_split, UniPoly};
use crate::scalar::{FieldCtx, Scalar};

/// Smooth plane cubic y^2 = 1 + ax + bx^2 + cx^3 with base point
/// A = (0, 1) and B the point at infinity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubicCurve {
    a: Scalar,
    b: Scalar,
    c: Scalar,
}

impl CubicCurve {
    /// Requires c != 0 and a squarefree right-hand side.
    pub fn new(a: Scalar, b: Scalar, c: Scalar) -> Result<CubicCurve> {
        if c.is_zero() {
            return Err(Error::Degenerate("cubic coefficient is zero".into()));
        }
        let curve = CubicCurve { a, b, c };
        let f = curve.rhs();
        if resultant(&f, &f.derivative()).is_zero() {
            return Err(Error::Degenerate("right-hand side has a repeated root".into()));
        }
        Ok(curve)
    }

    pub fn ctx(&self) -> FieldCtx {
        self.c.ctx()
    }

    pub fn coefficients(&self) -> (&Scalar, &Scalar, &Scalar) {
        (&self.a, &self.b, &self.c)
    }

    /// 1 + ax + bx^2 + cx^3.
    pub fn rhs(&self) -> UniPoly {
        UniPoly::new(
            self.ctx(),
            vec![self.ctx().one(), self.a.clone(), self.b.clone(), self.c.clone()],
        )
    }

    /// The same curve after x -> x/u: (a, b, c) -> (ua, u^2 b, u^3 c).
    pub fn x_scaled(&self, u: &Scalar) -> Result<CubicCurve> {
        CubicCurve::new(
            u.clone() * self.a.clone(),
            u.pow(2) * self.b.clone(),
            u.pow(3) * self.c.clone(),
        )
    }
}

/// Rewrite a two-sheet Abel form in the cubic chart: completing the
/// square turns alpha^2 + alpha P + x^n = 0 into y^2 = P^2 - 4x^n, the
/// square part of the right-hand side is divided off, and the result is
/// normalized so the total zero sits at (0, 1).  Fails when the
/// squarefree part is not a cubic (the form is not genus 1) or the total
/// zero is not smooth.
pub fn weierstrass_chart(form: &HyperellipticAbel) -> Result<CubicCurve> {
    let ctx = form.ctx();
    if !form.smooth_at_a() {
        return Err(Error::Degenerate("total zero is not a smooth point".into()));
    }
    let p = form.p();
    let h = &(p * p) - &UniPoly::monomial(ctx.int(4), form.n() as usize);
    if h.is_zero() {
        return Err(Error::Degenerate("form is a perfect square".into()));
    }
    let mut square = UniPoly::one(ctx);
    let mut reduced = UniPoly::constant(h.lc().clone());
    for (mult, part) in squarefree_split(&h)? {
        match mult {
            1 => reduced = &reduced * &part,
            2 => square = &square * &part,
            _ => {
                return Err(Error::Degenerate(format!(
                    "right-hand side has a root of multiplicity {mult}"
                )))
            }
        }
    }
    if reduced.degree() != Some(3) {
        return Err(Error::Degenerate(
            "squarefree part of the right-hand side is not a cubic".into(),
        ));
    }
    // y^2 = lc * reduced * square^2 becomes w^2 = f with
    // w = y * square(0) / (square(x) * P(0)) and f(0) = h(0)/P(0)^2 = 1
    let unit = (square.coeff(0) * p.coeff(0).inv()?).pow(2);
    let f = reduced.scale(&unit);
    CubicCurve::new(f.coeff(1), f.coeff(2), f.coeff(3))
}

fn truncated(f: &UniPoly, len: usize) -> UniPoly {
    let coeffs = f.coeffs();
    UniPoly::new(f.ctx(), coeffs[..coeffs.len().min(len)].to_vec())
}

/// Truncated square root: the series s with s(0) = 1 and
/// s^2 = f mod x^(m+1), by Newton iteration on the inverse square root.
pub fn series_sqrt(f: &UniPoly, m: usize) -> Result<UniPoly> {
    let ctx = f.ctx();
    if !f.coeff(0).is_one() {
        return Err(Error::Degenerate(
            "series square root needs constant term 1".into(),
        ));
    }
    let len = m + 1;
    let half = ctx.ratio(1, 2);
    let three = UniPoly::constant(ctx.int(3));
    // y -> y(3 - f y^2)/2 doubles the precision of y ~ f^(-1/2)
    let mut y = UniPoly::one(ctx);
    let mut prec = 1;
    while prec < len {
        prec = (2 * prec).min(len);
        let fyy = truncated(&(&truncated(f, prec) * &truncated(&(&y * &y), prec)), prec);
        y = truncated(&(&y * &(&three - &fyy)), prec).scale(&half);
    }
    let s = truncated(&(&truncated(f, len) * &y), len);
    debug_assert_eq!(truncated(&(&s * &s), len), truncated(f, len));
    Ok(s)
}

/// The [M, N] Pade approximant of a series known to order at least M+N:
/// p/q with deg p <= M, deg q <= N, q(0) = 1, and
/// p = series * q mod x^(M+N+1).
pub fn pade_approx(series: &UniPoly, m: usize, n: usize) -> Result<(UniPoly, UniPoly)> {
    let ctx = series.ctx();
    // rows k = M+1 .. M+N kill the middle coefficients of series * q
    let rows: Vec<Vec<Scalar>> = (m + 1..=m + n)
        .map(|k| {
            (1..=n)
                .map(|j| if j > k { ctx.zero() } else { series.coeff(k - j) })
                .collect()
        })
        .collect();
    let rhs: Vec<Scalar> = (m + 1..=m + n).map(|k| -series.coeff(k)).collect();
    let q = match n {
        0 => UniPoly::one(ctx),
        _ => {
            let tail = solve(&rows, &rhs)
                .map_err(|_| Error::DegenerateSystem("degenerate Pade table entry"))?;
            let mut coeffs = vec![ctx.one()];
            coeffs.extend(tail);
            UniPoly::new(ctx, coeffs)
        }
    };
    let p = truncated(&(series * &q), m + 1);
    Ok((p, q))
}

/// The Pade-built function a = p - qy on a cubic curve, together with
/// its norm p^2 - q^2 f and the x-coordinate of the residual point C.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PadeAbel {
    n: u64,
    p: UniPoly,
    q: UniPoly,
    norm: UniPoly,
    x_c: Option<Scalar>,
}

impl PadeAbel {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn p(&self) -> &UniPoly {
        &self.p
    }

    pub fn q(&self) -> &UniPoly {
        &self.q
    }

    /// p^2 - q^2 f, always divisible by x^(n-1) and of degree at most n.
    pub fn norm(&self) -> &UniPoly {
        &self.norm
    }

    /// x-coordinate of the residual point C; None when C is the point at
    /// infinity.
    pub fn x_c(&self) -> Option<&Scalar> {
        self.x_c.as_ref()
    }

    /// div(a) = nA - nB holds exactly when C = A, that is x_C = 0
    /// (C = sigma A is impossible: a(sigma A) = p(0) + q(0) = 2).
    pub fn is_abel(&self) -> bool {
        matches!(&self.x_c, Some(v) if v.is_zero())
    }
}

/// Build the order-[n/2, (n-3)/2] approximant of sqrt(f) on the curve
/// and package it with its norm.  Requires n >= 3 and char coprime to n.
pub fn abel_candidate(curve: &CubicCurve, n: u64) -> Result<PadeAbel> {
    if n < 3 {
        return Err(Error::OutOfRange {
            what: "divisor degree",
            value: n as i64,
            requirement: "n >= 3",
        });
    }
    let ctx = curve.ctx();
    ctx.check_coprime(n, "divisor degree")?;
    let deg_p = (n / 2) as usize;
    let deg_q = ((n - 3) / 2) as usize;
    let f = curve.rhs();
    let s = series_sqrt(&f, deg_p + deg_q)?;
    let (p, q) = pade_approx(&s, deg_p, deg_q)?;
    let norm = &(&p * &p) - &(&(&q * &q) * &f);
    // p - qs and f - s^2 both vanish to order n-1, so x^(n-1) | norm
    let nn = n as usize;
    assert!(
        norm.order_at_zero().unwrap_or(nn) >= nn - 1,
        "norm must vanish to order n-1 at the base point"
    );
    assert!(norm.degree().unwrap_or(0) <= nn, "norm degree stays at most n");
    let (lead, sub) = (norm.coeff(nn), norm.coeff(nn - 1));
    let x_c = match lead.is_zero() {
        true => None,
        false => Some(-(sub * lead.inv()?)),
    };
    Ok(PadeAbel { n, p, q, norm, x_c })
}

/// Whether A - B is killed by n: the residual point of the candidate
/// returns to the base point.
pub fn is_abel(curve: &CubicCurve, n: u64) -> Result<bool> {
    Ok(abel_candidate(curve, n)?.is_abel())
}

/// Result of sweeping abel_candidate over n = 3..N_max.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TorsionProbe {
    /// least n with is_abel true, if any
    pub order: Option<u64>,
    /// n skipped because the Pade system was singular or char | n;
    /// the verdict there is unknown, not false
    pub indeterminate: Vec<u64>,
}

/// Probe for the least n in [3, n_max] whose candidate is an Abel
/// function.  Singular Pade entries are recorded, not treated as false.
pub fn torsion_order(curve: &CubicCurve, n_max: u64) -> Result<TorsionProbe> {
    if n_max < 3 {
        return Err(Error::OutOfRange {
            what: "sweep bound",
            value: n_max as i64,
            requirement: "N_max >= 3",
        });
    }
    let mut indeterminate = Vec::new();
    for n in 3..=n_max {
        match abel_candidate(curve, n) {
            Ok(cand) => {
                if cand.is_abel() {
                    return Ok(TorsionProbe { order: Some(n), indeterminate });
                }
            }
            Err(Error::DegenerateSystem(_)) | Err(Error::CharDivides { .. }) => {
                indeterminate.push(n)
            }
            Err(other) => return Err(other),
        }
    }
    Ok(TorsionProbe { order: None, indeterminate })
}
