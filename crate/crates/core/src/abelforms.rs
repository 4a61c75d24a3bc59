//! Normal forms of Abel pairs, their hyperelliptic specialization
//! alpha^2 + alpha P(x) + x^n = 0, and the exact machinery around it:
//! admissibility for genus 1, smoothness at the total zero, critical
//! points and critical values, the rationality criterion, and the
//! degenerate boundary parametrization.

use crate::chebyshev::r_poly;
use crate::error::{Error, Result};
use crate::poly::{is_perfect_square, resultant, squarefree_split, UniPoly};
use crate::scalar::{FieldCtx, Scalar};

/// Whether the coefficient list (ascending in alpha) is a valid normal
/// form of level n: the alpha-polynomial must be monic, have constant
/// term exactly x^n, and every middle coefficient must have degree <= n.
pub fn validate_normal_form(n: u64, alpha_coeffs: &[UniPoly]) -> bool {
    let Some((last, rest)) = alpha_coeffs.split_last() else {
        return false;
    };
    let Some((first, middle)) = rest.split_first() else {
        return false; // need degree >= 1 in alpha
    };
    let ctx = last.ctx();
    last.is_monic()
        && last.degree() == Some(0)
        && *first == UniPoly::monomial(ctx.one(), n as usize)
        && middle.iter().all(|p| p.degree().unwrap_or(0) <= n as usize)
}

/// The two-sheet Abel form alpha^2 + alpha P(x) + x^n = 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HyperellipticAbel {
    n: u64,
    p: UniPoly,
}

/// Result of the critical-value extraction: either the monic quadratic
/// alpha^2 + s1 alpha + s0 whose roots are the two finite critical
/// values, or a typed degeneration (reducible or boundary member).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CriticalOutcome {
    Quadratic { s1: Scalar, s0: Scalar },
    Degenerate(&'static str),
}

impl CriticalOutcome {
    /// The invariant kappa = 1 - s1^2/(4 s0) of the two critical values,
    /// None for degenerate members.
    pub fn kappa(&self) -> Option<Scalar> {
        match self {
            CriticalOutcome::Quadratic { s1, s0 } => {
                let four_s0 = s0.ctx().int(4) * s0.clone();
                Some(s0.ctx().one() - s1.clone() * s1.clone() * four_s0.inv().expect("s0 != 0"))
            }
            CriticalOutcome::Degenerate(_) => None,
        }
    }
}

/// Result of matching P against the rational-curve pattern
/// C^(2k-n) x^k R_{n-2k}(C^2 x).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RationalityOutcome {
    /// The curve is rational; C is determined up to sign, so only C^2 is
    /// reported.
    Rational { k: usize, c_squared: Scalar },
    /// P^2 - 4x^n is a square, so the form splits into two sheets.
    ReduciblePerfectSquare,
    NotRational,
}

impl HyperellipticAbel {
    /// A level-n two-sheet form.  Requires n >= 2 and deg P <= n.
    pub fn new(n: u64, p: UniPoly) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfRange {
                what: "level",
                value: n as i64,
                requirement: "n >= 2",
            });
        }
        if p.degree().unwrap_or(0) > n as usize {
            return Err(Error::OutOfRange {
                what: "middle coefficient degree",
                value: p.degree().unwrap() as i64,
                requirement: "deg P <= n",
            });
        }
        Ok(HyperellipticAbel { n, p })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn p(&self) -> &UniPoly {
        &self.p
    }

    pub fn ctx(&self) -> FieldCtx {
        self.p.ctx()
    }

    /// Whether the form can have genus 1: 2 deg P <= n, and for even n
    /// the degree is exactly n/2 with leading coefficient 2 (so the top
    /// terms of P^2 and 4x^n cancel).
    pub fn genus1_admissible(&self) -> bool {
        match self.p.degree() {
            None => self.n % 2 != 0,
            Some(d) => {
                if 2 * d > self.n as usize {
                    return false;
                }
                self.n % 2 != 0
                    || (2 * d == self.n as usize && *self.p.lc() == self.ctx().int(2))
            }
        }
    }

    /// The total zero of the Abel function is a smooth point iff P(0) != 0.
    pub fn smooth_at_a(&self) -> bool {
        !self.p.coeff(0).is_zero()
    }

    /// Scaled form with P(x) replaced by u^(-n) P(u^2 x), the coordinate
    /// freedom (alpha, x) -> (u^n alpha, u^(-2) x).  Panics if u = 0.
    pub fn rescaled(&self, u: &Scalar) -> HyperellipticAbel {
        assert!(!u.is_zero(), "rescaling unit must be nonzero");
        let coeffs = self
            .p
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| c * &u.pow(2 * i as i64 - self.n as i64))
            .collect();
        HyperellipticAbel {
            n: self.n,
            p: UniPoly::new(self.ctx(), coeffs),
        }
    }

    fn check_char(&self) -> Result<()> {
        self.ctx().check_coprime(self.n, "level")
    }

    /// The polynomial whose roots are the finite critical x-coordinates:
    /// n^2 x^(n-1) - n P(x) P'(x) + x P'(x)^2.
    pub fn critical_x_poly(&self) -> Result<UniPoly> {
        self.check_char()?;
        let ctx = self.ctx();
        let dp = self.p.derivative();
        let n = self.n as i64;
        let lead = UniPoly::monomial(ctx.int(n * n), self.n as usize - 1);
        let mixed = (&self.p * &dp).scale(&ctx.int(n));
        let square = (&dp * &dp).mul_xpow(1);
        Ok(&(&lead - &mixed) + &square)
    }

    /// Resultant in x of F = alpha^2 + alpha P + x^n and dF/dx, as a
    /// polynomial in alpha of degree at most 3n - 2.  Computed by
    /// evaluation/interpolation over Q; prime-field coefficients are
    /// lifted to integer representatives first, which is valid because
    /// the x-leading coefficients 1 and n survive reduction.
    fn fiber_discriminant(&self) -> Result<UniPoly> {
        let ctx = self.ctx();
        let q = FieldCtx::Q;
        let lifted = match ctx {
            FieldCtx::Q => self.p.clone(),
            FieldCtx::Fp(_) => UniPoly::new(
                q,
                self.p
                    .coeffs()
                    .iter()
                    .map(|c| match c {
                        Scalar::Mod(m) => q.int(m.residue() as i64),
                        Scalar::Rat(_) => unreachable!("context is a prime field"),
                    })
                    .collect(),
            ),
        };
        let n = self.n as usize;
        let dp = lifted.derivative();
        let points: Vec<(Scalar, Scalar)> = (0..=(3 * n - 2) as i64)
            .map(|a| {
                let alpha = q.int(a);
                // F(alpha, x) and its x-derivative at this alpha
                let f = &(&lifted.scale(&alpha) + &UniPoly::monomial(q.one(), n))
                    + &UniPoly::constant(alpha.clone() * alpha.clone());
                let fx = &dp.scale(&alpha)
                    + &UniPoly::monomial(q.int(self.n as i64), n - 1);
                (alpha, resultant(&f, &fx))
            })
            .collect();
        let disc = UniPoly::interpolate(q, &points);
        disc.project(ctx)
    }

    /// Monic polynomial in alpha whose roots are the values of the Abel
    /// function at the singular points of the plane model: the multiple
    /// roots x_s of P^2 - 4x^n carry nodes at alpha = -P(x_s)/2, and each
    /// contributes a square factor to the fiber discriminant that is not
    /// a critical value.  Computed as prod (alpha + P(x_s)/2) by
    /// interpolation, without extracting the x_s themselves.
    fn singular_values_poly(&self) -> Result<UniPoly> {
        let ctx = self.ctx();
        let h = &(&self.p * &self.p) - &UniPoly::monomial(ctx.int(4), self.n as usize);
        if h.degree().unwrap_or(0) == 0 {
            return Ok(UniPoly::one(ctx)); // caller handles h = 0; constants are smooth
        }
        let mut w = UniPoly::one(ctx);
        for (mult, part) in squarefree_split(&h)? {
            if mult >= 2 {
                w = &w * &part;
            }
        }
        let Some(d) = w.degree().filter(|d| *d > 0) else {
            return Ok(UniPoly::one(ctx));
        };
        if let FieldCtx::Fp(p) = ctx {
            if d as u64 >= p {
                return Err(Error::Degenerate(format!(
                    "not enough field elements to interpolate {d} singular values mod {p}"
                )));
            }
        }
        let half_p = self.p.scale(&ctx.ratio(1, 2));
        let points: Vec<(Scalar, Scalar)> = (0..=d as i64)
            .map(|a| {
                let alpha = ctx.int(a);
                // w is monic, so Res_x(w, P/2 + alpha) = prod (P(x_s)/2 + alpha)
                let g = &half_p + &UniPoly::constant(alpha.clone());
                (alpha, resultant(&w, &g))
            })
            .collect();
        Ok(UniPoly::interpolate(ctx, &points))
    }

    /// Extract the two finite critical values of the Abel function as the
    /// monic quadratic they satisfy.  The fiber discriminant D(alpha) is
    /// an exact alpha-power times the squared singular-value polynomial
    /// times that quadratic; boundary members where a critical value
    /// escapes, and reducible members where D vanishes identically, come
    /// back as Degenerate.
    pub fn critical_values(&self) -> Result<CriticalOutcome> {
        self.check_char()?;
        if !self.genus1_admissible() {
            return Err(Error::Degenerate(format!(
                "form of level {} is not genus-1 admissible",
                self.n
            )));
        }
        let disc = self.fiber_discriminant()?;
        if disc.is_zero() {
            return Ok(CriticalOutcome::Degenerate("fiber discriminant vanishes identically"));
        }
        let nodes = self.singular_values_poly()?;
        let (stripped, rem) = disc.divrem(&(&nodes * &nodes));
        if !rem.is_zero() {
            return Ok(CriticalOutcome::Degenerate(
                "singular fiber values do not split off as a square",
            ));
        }
        let v = stripped.order_at_zero().expect("quotient of nonzero is nonzero");
        let residual = UniPoly::new(self.ctx(), stripped.coeffs()[v..].to_vec());
        if residual.degree() != Some(2) {
            return Ok(CriticalOutcome::Degenerate(
                "critical values do not form a quadratic",
            ));
        }
        let lead_inv = residual.lc().inv().expect("leading coefficient is nonzero");
        let s0 = residual.coeff(0) * lead_inv.clone();
        debug_assert!(!s0.is_zero(), "constant term survives exact power stripping");
        Ok(CriticalOutcome::Quadratic {
            s1: residual.coeff(1) * lead_inv,
            s0,
        })
    }

    /// Match P against C^(2k-n) x^k R_{n-2k}(C^2 x), which characterizes
    /// the rational members, after splitting off the reducible
    /// perfect-square case P^2 - 4x^n = (..)^2.
    pub fn rationality_test(&self) -> Result<RationalityOutcome> {
        self.check_char()?;
        let ctx = self.ctx();
        let n = self.n as usize;
        let psq = &(&self.p * &self.p)
            - &UniPoly::monomial(ctx.int(4), n);
        if is_perfect_square(&psq) {
            return Ok(RationalityOutcome::ReduciblePerfectSquare);
        }
        let Some(k) = self.p.order_at_zero() else {
            return Ok(RationalityOutcome::NotRational);
        };
        if 2 * k > n {
            return Ok(RationalityOutcome::NotRational);
        }
        let m = n - 2 * k;
        let q = UniPoly::new(ctx, self.p.coeffs()[k..].to_vec());
        let r = r_poly(m, ctx);
        if q.degree() != r.degree() {
            return Ok(RationalityOutcome::NotRational);
        }
        // q must be u * R_m(gamma x) with u = C^(2k-n), gamma = C^2; the
        // sign of C drops out of the closure condition u^2 gamma^m = 1
        let u = q.coeff(0) * r.coeff(0).inv().expect("R has nonzero constant term");
        let gamma = match r.degree() {
            Some(d) if d >= 1 => {
                if q.coeff(1).is_zero() {
                    return Ok(RationalityOutcome::NotRational);
                }
                q.coeff(1) * r.coeff(1).inv().expect("coefficients of R are nonzero")
                    * u.inv().expect("u is nonzero")
            }
            // constant R: gamma is pinned by the closure condition alone
            _ => match m {
                1 => u.inv().expect("u is nonzero").pow(2),
                _ => ctx.one(),
            },
        };
        let pattern_matches = (0..=m / 2)
            .all(|j| q.coeff(j) == u.clone() * r.coeff(j) * gamma.pow(j as i64));
        if pattern_matches && u.pow(2) * gamma.pow(m as i64) == ctx.one() {
            Ok(RationalityOutcome::Rational { k, c_squared: gamma })
        } else {
            Ok(RationalityOutcome::NotRational)
        }
    }
}

/// Verify the boundary parametrization as a polynomial identity in t:
/// with x = t(-1-t) and alpha = t^(n-k) (-1-t)^k,
/// alpha^2 + alpha x^k R_{n-2k}(x) + x^n = 0.
pub fn cusp_param_check(n: u64, k: u64) -> bool {
    assert!(2 * k <= n, "parameter k must satisfy 0 <= k <= n/2");
    let ctx = FieldCtx::Q;
    let t = UniPoly::x(ctx);
    let w = UniPoly::from_ints(ctx, &[-1, -1]); // -1 - t
    let x = &t * &w;
    let alpha = &t.pow((n - k) as u32) * &w.pow(k as u32);
    let middle = &x.pow(k as u32) * &r_poly((n - 2 * k) as usize, ctx).compose(&x);
    let lhs = &(&(&alpha * &alpha) + &(&alpha * &middle)) + &x.pow(n as u32);
    lhs.is_zero()
}
