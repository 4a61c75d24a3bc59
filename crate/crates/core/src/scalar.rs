//! Exact scalars: arbitrary-precision rationals and prime-field elements.
//!
//! Every computation in this crate runs over one of two coefficient fields,
//! the rationals Q or a prime field F_p with p > 3 (characteristics 2 and 3
//! break the quadratic and cubic normalizations used throughout).  A
//! [`FieldCtx`] names the field, a [`Scalar`] is an element of it, and the
//! two never mix: arithmetic between scalars of different contexts is a
//! programming error and panics.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numtheory::is_prime;

/// Arbitrary-precision rational in canonical form: gcd-reduced with a
/// positive denominator.  Canonicality is maintained by the backing type
/// on every construction and operation.
pub type Rational = num::BigRational;

/// Build the canonical reduced rational num/den.
///
/// (6, 4) reduces to 3/2, (-2, -4) to 1/2, (0, 5) to 0/1.
pub fn reduce_rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rational> {
    let den = den.into();
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(num.into(), den))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational num/den, panicking on a zero denominator.  Test and constant
/// construction convenience.
pub fn rat(num: i64, den: i64) -> Rational {
    reduce_rational(num, den).expect("nonzero denominator")
}

/// True if the rational is an integer.
pub fn rat_is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Element of F_p, stored as the least nonnegative residue.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PrimeFieldElem {
    residue: u64,
    modulus: u64,
}

impl PrimeFieldElem {
    /// Element of F_p from a signed integer.  The modulus must be a prime
    /// greater than 3.
    pub fn new(value: i64, modulus: u64) -> Result<Self> {
        if modulus <= 3 || !is_prime(modulus) {
            return Err(Error::BadCharacteristic(modulus));
        }
        let m = modulus as i128;
        let residue = (((value as i128) % m + m) % m) as u64;
        Ok(PrimeFieldElem { residue, modulus })
    }

    fn from_residue(residue: u64, modulus: u64) -> Self {
        debug_assert!(residue < modulus);
        PrimeFieldElem { residue, modulus }
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.residue == 0
    }

    fn check_same(self, other: Self) -> u64 {
        assert_eq!(
            self.modulus, other.modulus,
            "mixed prime-field moduli {} and {}",
            self.modulus, other.modulus
        );
        self.modulus
    }

    pub fn add(self, other: Self) -> Self {
        let p = self.check_same(other);
        PrimeFieldElem::from_residue((self.residue + other.residue) % p, p)
    }

    pub fn sub(self, other: Self) -> Self {
        let p = self.check_same(other);
        PrimeFieldElem::from_residue((p + self.residue - other.residue) % p, p)
    }

    pub fn mul(self, other: Self) -> Self {
        let p = self.check_same(other);
        let prod = (self.residue as u128 * other.residue as u128) % p as u128;
        PrimeFieldElem::from_residue(prod as u64, p)
    }

    pub fn neg(self) -> Self {
        let p = self.modulus;
        PrimeFieldElem::from_residue((p - self.residue) % p, p)
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(self) -> Result<Self> {
        if self.residue == 0 {
            return Err(Error::Degenerate(format!(
                "inverse of zero in F_{}",
                self.modulus
            )));
        }
        let p = self.modulus as i128;
        let (mut r0, mut r1) = (p, self.residue as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "modulus must be prime");
        let inv = ((t0 % p + p) % p) as u64;
        Ok(PrimeFieldElem::from_residue(inv, self.modulus))
    }

    /// True if the residue is a square in F_p (Euler's criterion).
    /// Zero counts as a square.
    pub fn is_square(&self) -> bool {
        if self.residue == 0 {
            return true;
        }
        pow_mod(self.residue, (self.modulus - 1) / 2, self.modulus) == 1
    }
}

impl fmt::Display for PrimeFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

fn pow_mod(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b = base as u128 % p as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u128;
        }
        b = b * b % p as u128;
        exp >>= 1;
    }
    acc as u64
}

/// Reduce a canonical rational mod p.  Fails when p divides the denominator.
pub fn project_mod_p(q: &Rational, p: u64) -> Result<PrimeFieldElem> {
    if p <= 3 || !is_prime(p) {
        return Err(Error::BadCharacteristic(p));
    }
    let pb = BigInt::from(p);
    let den = q.denom().mod_floor_big(&pb);
    if den == 0 {
        return Err(Error::BadReduction { denominator: q.denom().to_string(), modulus: p });
    }
    let num = q.numer().mod_floor_big(&pb);
    let den_elem = PrimeFieldElem::from_residue(den, p);
    let num_elem = PrimeFieldElem::from_residue(num, p);
    Ok(num_elem.mul(den_elem.inv()?))
}

/// Least nonnegative residue of a big integer mod a small positive modulus.
trait ModFloorBig {
    fn mod_floor_big(&self, p: &BigInt) -> u64;
}

impl ModFloorBig for BigInt {
    fn mod_floor_big(&self, p: &BigInt) -> u64 {
        use num::Integer;
        let r = self.mod_floor(p);
        let (_, digits) = r.to_u64_digits();
        match digits.len() {
            0 => 0,
            1 => digits[0],
            _ => unreachable!("residue below a u64 modulus"),
        }
    }
}

/// The coefficient field a computation runs over.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FieldCtx {
    /// The rational numbers.
    Q,
    /// The prime field F_p, p > 3.
    Fp(u64),
}

impl FieldCtx {
    pub fn rationals() -> Self {
        FieldCtx::Q
    }

    /// Prime-field context.  The modulus must be prime and greater than 3.
    pub fn prime_field(p: u64) -> Result<Self> {
        if p <= 3 || !is_prime(p) {
            return Err(Error::BadCharacteristic(p));
        }
        Ok(FieldCtx::Fp(p))
    }

    /// Context from a characteristic given as 0 (rationals) or a prime.
    pub fn from_characteristic(c: u64) -> Result<Self> {
        if c == 0 {
            Ok(FieldCtx::Q)
        } else {
            FieldCtx::prime_field(c)
        }
    }

    /// 0 for the rationals, p for F_p.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldCtx::Q => 0,
            FieldCtx::Fp(p) => *p,
        }
    }

    /// Error when the characteristic divides n (vacuous over Q).
    pub fn check_coprime(&self, n: u64, what: &'static str) -> Result<()> {
        if let FieldCtx::Fp(p) = self {
            if n % p == 0 {
                return Err(Error::CharDivides { modulus: *p, value: n, what });
            }
        }
        Ok(())
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    /// Scalar from an integer.
    pub fn int(&self, n: i64) -> Scalar {
        match self {
            FieldCtx::Q => Scalar::Rat(rat_int(n)),
            FieldCtx::Fp(p) => {
                Scalar::Mod(PrimeFieldElem::new(n, *p).expect("context modulus is valid"))
            }
        }
    }

    /// Scalar num/den, for literals.  Panics if den is zero or shares a
    /// factor with the characteristic; use [`FieldCtx::project`] for
    /// runtime values.
    pub fn ratio(&self, num: i64, den: i64) -> Scalar {
        let q = reduce_rational(num, den).expect("literal denominator is nonzero");
        self.project(&q).expect("literal denominator is invertible")
    }

    /// Image of a rational in this field.
    pub fn project(&self, q: &Rational) -> Result<Scalar> {
        match self {
            FieldCtx::Q => Ok(Scalar::Rat(q.clone())),
            FieldCtx::Fp(p) => Ok(Scalar::Mod(project_mod_p(q, *p)?)),
        }
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldCtx::Q => write!(f, "Q"),
            FieldCtx::Fp(p) => write!(f, "Fp:{p}"),
        }
    }
}

/// Exact element of the field named by a [`FieldCtx`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Rat(Rational),
    Mod(PrimeFieldElem),
}

impl Scalar {
    pub fn ctx(&self) -> FieldCtx {
        match self {
            Scalar::Rat(_) => FieldCtx::Q,
            Scalar::Mod(m) => FieldCtx::Fp(m.modulus()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Mod(m) => m.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_one(),
            Scalar::Mod(m) => m.residue() == 1,
        }
    }

    /// The underlying rational.  Panics on a prime-field element.
    pub fn as_rational(&self) -> &Rational {
        match self {
            Scalar::Rat(q) => q,
            Scalar::Mod(_) => panic!("expected a rational scalar"),
        }
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rat(q) => {
                if q.is_zero() {
                    Err(Error::Degenerate("inverse of zero".into()))
                } else {
                    Ok(Scalar::Rat(q.recip()))
                }
            }
            Scalar::Mod(m) => Ok(Scalar::Mod(m.inv()?)),
        }
    }

    /// Integer power, negative exponents through the inverse.
    pub fn pow(&self, exp: i64) -> Scalar {
        let base = if exp < 0 {
            self.inv().expect("nonzero base for negative power")
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc = self.ctx().one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b.clone();
            }
            b = b.clone() * b;
            e >>= 1;
        }
        acc
    }

    /// True if this scalar is a square in its field.
    pub fn is_square(&self) -> bool {
        match self {
            Scalar::Rat(q) => {
                if q.is_zero() {
                    return true;
                }
                if q.is_negative() {
                    return false;
                }
                int_is_square(q.numer()) && int_is_square(q.denom())
            }
            Scalar::Mod(m) => m.is_square(),
        }
    }

    fn binop(self, other: Scalar, f: impl Fn(Rational, Rational) -> Rational,
             g: impl Fn(PrimeFieldElem, PrimeFieldElem) -> PrimeFieldElem) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(f(a, b)),
            (Scalar::Mod(a), Scalar::Mod(b)) => Scalar::Mod(g(a, b)),
            (a, b) => panic!("mixed field contexts {} and {}", a.ctx(), b.ctx()),
        }
    }
}

fn int_is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, other: Scalar) -> Scalar {
        self.binop(other, |a, b| a + b, PrimeFieldElem::add)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, other: Scalar) -> Scalar {
        self.binop(other, |a, b| a - b, PrimeFieldElem::sub)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, other: Scalar) -> Scalar {
        self.binop(other, |a, b| a * b, PrimeFieldElem::mul)
    }
}

impl Div for Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::inv`] to handle that case.
    fn div(self, other: Scalar) -> Scalar {
        let inv = other.inv().expect("division by zero scalar");
        self * inv
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(q) => Scalar::Rat(-q),
            Scalar::Mod(m) => Scalar::Mod(m.neg()),
        }
    }
}

impl<'a> Add for &'a Scalar {
    type Output = Scalar;
    fn add(self, other: &'a Scalar) -> Scalar {
        self.clone() + other.clone()
    }
}

impl<'a> Sub for &'a Scalar {
    type Output = Scalar;
    fn sub(self, other: &'a Scalar) -> Scalar {
        self.clone() - other.clone()
    }
}

impl<'a> Mul for &'a Scalar {
    type Output = Scalar;
    fn mul(self, other: &'a Scalar) -> Scalar {
        self.clone() * other.clone()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(q) => write!(f, "{q}"),
            Scalar::Mod(m) => write!(f, "{m}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce_rational(6, 4).unwrap(), rat(3, 2));
        assert_eq!(reduce_rational(-2, -4).unwrap(), rat(1, 2));
        let z = reduce_rational(0, 5).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.denom(), &BigInt::from(1));
        assert_eq!(reduce_rational(1, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn canonical_sign() {
        let q = reduce_rational(3, -6).unwrap();
        assert_eq!(q, rat(-1, 2));
        assert!(q.denom() > &BigInt::from(0));
    }

    #[test]
    fn projection_examples() {
        let q = rat(1, 9);
        assert_eq!(project_mod_p(&q, 5).unwrap().residue(), 4);
        let bad = project_mod_p(&rat(1, 10), 5);
        assert!(matches!(bad, Err(Error::BadReduction { .. })));
        assert!(matches!(project_mod_p(&rat(1, 2), 4), Err(Error::BadCharacteristic(4))));
        assert!(matches!(project_mod_p(&rat(1, 2), 3), Err(Error::BadCharacteristic(3))));
    }

    #[test]
    fn ctx_validation() {
        assert!(FieldCtx::prime_field(5).is_ok());
        assert!(FieldCtx::prime_field(2).is_err());
        assert!(FieldCtx::prime_field(3).is_err());
        assert!(FieldCtx::prime_field(9).is_err());
        assert_eq!(FieldCtx::from_characteristic(0).unwrap(), FieldCtx::Q);
        assert_eq!(FieldCtx::prime_field(5).unwrap().characteristic(), 5);
    }

    #[test]
    #[should_panic(expected = "mixed")]
    fn mixed_context_panics() {
        let a = FieldCtx::Q.int(1);
        let b = FieldCtx::prime_field(5).unwrap().int(1);
        let _ = a + b;
    }

    #[test]
    fn inverse_matches_fermat() {
        // Independent route: a^(p-2) mod p.
        for p in [5u64, 7, 11, 13, 37, 101] {
            for a in 1..p.min(40) {
                let e = PrimeFieldElem::new(a as i64, p).unwrap();
                let inv = e.inv().unwrap();
                assert_eq!(inv.residue(), pow_mod(a, p - 2, p));
                assert_eq!(e.mul(inv).residue(), 1);
            }
        }
    }

    #[test]
    fn square_detection() {
        let ctx5 = FieldCtx::prime_field(5).unwrap();
        // Squares mod 5 are {0, 1, 4}.
        let squares: Vec<bool> = (0..5).map(|r| ctx5.int(r).is_square()).collect();
        assert_eq!(squares, [true, true, false, false, true]);
        assert!(Scalar::Rat(rat(4, 9)).is_square());
        assert!(!Scalar::Rat(rat(-4, 9)).is_square());
        assert!(!Scalar::Rat(rat(2, 1)).is_square());
    }

    #[test]
    fn scalar_pow_negative() {
        let x = FieldCtx::Q.ratio(2, 3);
        assert_eq!(x.pow(-2), FieldCtx::Q.ratio(9, 4));
        let y = FieldCtx::prime_field(7).unwrap().int(3);
        assert_eq!(y.pow(-1), FieldCtx::prime_field(7).unwrap().int(5));
    }

    fn arb_rat() -> impl Strategy<Value = Rational> {
        (any::<i32>(), 1..10_000i32).prop_map(|(n, d)| rat(n as i64, d as i64))
    }

    proptest! {
        #[test]
        fn rational_field_axioms(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.recip(), rat_int(1));
            }
        }

        #[test]
        fn projection_is_a_homomorphism(a in arb_rat(), b in arb_rat()) {
            for p in [5u64, 7, 13] {
                let (pa, pb) = (project_mod_p(&a, p), project_mod_p(&b, p));
                let (pa, pb) = match (pa, pb) {
                    (Ok(x), Ok(y)) => (x, y),
                    _ => continue, // denominator divisible by p
                };
                if let Ok(psum) = project_mod_p(&(&a + &b), p) {
                    prop_assert_eq!(pa.add(pb), psum);
                }
                if let Ok(pprod) = project_mod_p(&(&a * &b), p) {
                    prop_assert_eq!(pa.mul(pb), pprod);
                }
            }
        }

        #[test]
        fn prime_field_axioms(a in 0..37i64, b in 0..37i64, c in 0..37i64) {
            let p = 37u64;
            let (x, y, z) = (
                PrimeFieldElem::new(a, p).unwrap(),
                PrimeFieldElem::new(b, p).unwrap(),
                PrimeFieldElem::new(c, p).unwrap(),
            );
            prop_assert_eq!(x.add(y), y.add(x));
            prop_assert_eq!(x.mul(y.add(z)), x.mul(y).add(x.mul(z)));
            prop_assert_eq!(x.sub(x).residue(), 0);
            if !x.is_zero() {
                prop_assert_eq!(x.mul(x.inv().unwrap()).residue(), 1);
            }
        }
    }
}
