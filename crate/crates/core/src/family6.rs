//! The explicit level-6 pencil of two-sheet Abel forms, its kappa as a
//! rational function of the pencil parameter, reductions mod p, and the
//! census of primitive closed pairs read off the zero profile.

use crate::abelforms::{HyperellipticAbel, RationalityOutcome};
use crate::error::{Error, Result};
use crate::linalg::nullspace_one;
use crate::poly::{MultiplicityProfile, RatFunc, UniPoly};
use crate::poly::squarefree_split;
use crate::scalar::{FieldCtx, Scalar};

/// One member of the pencil: alpha^2 + alpha P_t(x) + x^6 = 0 with
/// P_t = -t(t-1)^2 - (3t+1)(t-1) x - 4x^2 + 2x^3.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Family6Member {
    t: Scalar,
    form: HyperellipticAbel,
}

impl Family6Member {
    pub fn t(&self) -> &Scalar {
        &self.t
    }

    pub fn form(&self) -> &HyperellipticAbel {
        &self.form
    }

    /// Members over t = 0 and t = 1 sit at the boundary: the total zero
    /// of the Abel function stops being a smooth point there.
    pub fn is_cuspidal(&self) -> bool {
        !self.form.smooth_at_a()
    }
}

/// The pencil member at parameter t.
pub fn member(t: &Scalar) -> Family6Member {
    let ctx = t.ctx();
    let one = ctx.one();
    let tm1 = t.clone() - one.clone();
    let c0 = -(t.clone() * tm1.clone() * tm1.clone());
    let c1 = -((ctx.int(3) * t.clone() + one) * tm1);
    let p = UniPoly::new(ctx, vec![c0, c1, ctx.int(-4), ctx.int(2)]);
    let form = HyperellipticAbel::new(6, p).expect("pencil member is a valid level-6 form");
    Family6Member { t: t.clone(), form }
}

/// The kappa invariant of the pencil as a rational function of t:
/// -(9t-1)(81t^3-27t^2+99t-25)^3 (9t-25)^2 / (2^14 3^12 t^5 (t-1)^4),
/// reduced into the requested field.
pub fn kappa6_closed(ctx: FieldCtx) -> RatFunc {
    let q = FieldCtx::Q;
    let lin = UniPoly::from_ints(q, &[-1, 9]);
    let cubic = UniPoly::from_ints(q, &[-25, 99, -27, 81]);
    let quad = UniPoly::from_ints(q, &[-25, 9]);
    let num = (&(&lin * &cubic.pow(3)) * &quad.pow(2))
        .scale(&q.ratio(-1, 16384 * 531441));
    let den = &UniPoly::monomial(q.one(), 5) * &UniPoly::from_ints(q, &[-1, 1]).pow(4);
    let num = num.project(ctx).expect("denominators are powers of 2 and 3");
    let den = den.project(ctx).expect("denominator is integral");
    RatFunc::new(num, den).expect("pole locus does not collapse")
}

/// kappa of a single member, recomputed from scratch through the fiber
/// discriminant.  Degenerate members (the boundary fibers) are errors.
pub fn kappa6_via_resultant(t: &Scalar) -> Result<Scalar> {
    let m = member(t);
    if m.is_cuspidal() {
        return Err(Error::Degenerate(format!(
            "member at t = {t} is a boundary fiber"
        )));
    }
    let outcome = m.form().critical_values()?;
    outcome.kappa().ok_or_else(|| {
        Error::Degenerate(format!("member at t = {t} has no critical quadratic"))
    })
}

/// Re-derive kappa6 by sampling the resultant path at t = 2, 3, ... and
/// solving for a degree-(12, 9) rational function through the samples.
/// This is a validation mode: the closed form stays the source of truth.
pub fn kappa6_interpolated(ctx: FieldCtx) -> Result<RatFunc> {
    const SAMPLES: usize = 25;
    if let FieldCtx::Fp(p) = ctx {
        if p < 2 + SAMPLES as u64 + 2 {
            return Err(Error::Degenerate(format!(
                "field with {p} elements is too small to sample the pencil"
            )));
        }
    }
    let mut rows = Vec::with_capacity(SAMPLES);
    let mut t_int = 2i64;
    while rows.len() < SAMPLES {
        let t = ctx.int(t_int);
        t_int += 1;
        let Ok(kappa) = kappa6_via_resultant(&t) else {
            continue; // skip the finitely many degenerate fibers
        };
        // unknowns: numerator a_0..a_12, denominator b_0..b_9, tied by
        // sum a_j t^j - kappa sum b_k t^k = 0
        let mut row = Vec::with_capacity(23);
        for j in 0..=12 {
            row.push(t.pow(j));
        }
        for k in 0..=9 {
            row.push(-(kappa.clone() * t.pow(k)));
        }
        rows.push(row);
    }
    let solution = nullspace_one(&rows, ctx)?;
    let num = UniPoly::new(ctx, solution[..13].to_vec());
    let den = UniPoly::new(ctx, solution[13..].to_vec());
    RatFunc::new(num, den)
}

/// Behavior of kappa6 at one of the distinguished parameters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CuspNote {
    Pole { order: usize },
    Value(Scalar),
}

/// The zero structure of kappa6 over one field: the function itself, its
/// behavior at t = 0, 1, infinity, the multiplicity profile of the zeros
/// away from the boundary, and the primitive census that profile encodes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Kappa6Report {
    pub characteristic: u64,
    pub kappa: RatFunc,
    pub at_zero: CuspNote,
    pub at_one: CuspNote,
    pub at_infinity: CuspNote,
    /// location of the simple zero whose fiber degenerates to a rational
    /// curve (identified by pattern-matching the fiber, not hard-coded)
    pub simple_zero_t: Option<Scalar>,
    /// multiplicities of the remaining zeros: each entry is
    /// (multiplicity, number of geometric zeros carrying it)
    pub zero_profile: MultiplicityProfile,
    /// geometric zeros of multiplicity 3
    pub hex_primitive: u64,
    /// geometric zeros of multiplicity 2
    pub box_primitive: u64,
}

fn root_multiplicity(f: &UniPoly, at: &Scalar) -> usize {
    let ctx = f.ctx();
    let linear = UniPoly::new(ctx, vec![-at.clone(), ctx.one()]);
    let mut rest = f.clone();
    let mut mult = 0;
    while !rest.is_zero() && rest.eval(at).is_zero() {
        rest = rest.exact_div(&linear);
        mult += 1;
    }
    mult
}

fn note_at(kappa: &RatFunc, at: &Scalar) -> CuspNote {
    match kappa.eval(at) {
        Some(v) => CuspNote::Value(v),
        None => CuspNote::Pole {
            order: root_multiplicity(kappa.den(), at),
        },
    }
}

/// Survey the zeros and poles of kappa6 over the given field and read
/// off the primitive census: multiplicity-3 zeros are closed hexagonal
/// pairs, multiplicity-2 zeros are closed box pairs, and the single
/// multiplicity-1 zero is the boundary point whose fiber is rational.
pub fn kappa6_census(ctx: FieldCtx) -> Result<Kappa6Report> {
    let kappa = kappa6_closed(ctx);
    let num = kappa.num();
    let at_infinity = {
        let dn = num.degree().expect("kappa6 is nonzero");
        let dd = kappa.den().degree().expect("denominator is nonzero");
        if dn > dd {
            CuspNote::Pole { order: dn - dd }
        } else if dn == dd {
            CuspNote::Value(num.lc().clone() * kappa.den().lc().inv()?)
        } else {
            CuspNote::Value(ctx.zero())
        }
    };
    let mut simple_zero_t = None;
    let mut hex_primitive = 0u64;
    let mut box_primitive = 0u64;
    let mut entries = Vec::new();
    for (mult, part) in squarefree_split(num)? {
        let deg = part.degree().unwrap();
        match mult {
            3 => hex_primitive += deg as u64,
            2 => box_primitive += deg as u64,
            1 => {
                // must be the lone boundary zero, and its fiber must
                // genuinely match a rational-curve pattern
                if deg != 1 || simple_zero_t.is_some() {
                    return Err(Error::Degenerate(format!(
                        "unexpected simple-zero structure of degree {deg}"
                    )));
                }
                let t0 = -part.coeff(0);
                match member(&t0).form().rationality_test()? {
                    RationalityOutcome::Rational { k: 0, .. } => {}
                    other => {
                        return Err(Error::Degenerate(format!(
                            "simple zero at t = {t0} is not a boundary fiber: {other:?}"
                        )))
                    }
                }
                simple_zero_t = Some(t0);
                continue;
            }
            _ => {
                return Err(Error::Degenerate(format!(
                    "zero of unexpected multiplicity {mult}"
                )))
            }
        }
        entries.push((mult, deg));
    }
    Ok(Kappa6Report {
        characteristic: ctx.characteristic(),
        at_zero: note_at(&kappa, &ctx.zero()),
        at_one: note_at(&kappa, &ctx.one()),
        at_infinity,
        simple_zero_t,
        zero_profile: MultiplicityProfile { entries },
        hex_primitive,
        box_primitive,
        kappa,
    })
}
