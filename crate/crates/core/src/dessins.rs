//! Toric dessins with valency lists (n | n | 3,1,...,1) and
//! (n | n | 2,2,1,...,1), classified by cyclic tuples, together with their
//! weighted counts and the all-genera total.
//!
//! A class is stored as the lexicographically least rotation of its parts
//! tuple, so equality of values is equality of classes and enumeration
//! output is deterministic.

use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;
use num::traits::One;
use num::BigInt;

use crate::error::{Error, Result};
use crate::numtheory::divisors;
use crate::scalar::{rat, rat_int, Rational};

/// Cyclic class of a composition of n into three positive parts; the
/// dessin with one finite critical point of multiplicity 3.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct HexClass {
    parts: [u64; 3],
}

/// Cyclic class of a composition of n into four positive parts; the
/// dessin with two finite critical points of multiplicity 2.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct BoxClass {
    parts: [u64; 4],
}

fn least_rotation<const K: usize>(parts: [u64; K]) -> [u64; K] {
    let mut best = parts;
    let mut cur = parts;
    for _ in 1..K {
        cur.rotate_left(1);
        if cur < best {
            best = cur;
        }
    }
    best
}

fn rotation_stabilizer<const K: usize>(parts: &[u64; K]) -> u64 {
    let mut count = 0;
    let mut cur = *parts;
    for _ in 0..K {
        cur.rotate_left(1);
        if &cur == parts {
            count += 1;
        }
    }
    count
}

impl HexClass {
    /// Class of the given parts tuple.  Panics on a zero part.
    pub fn new(parts: [u64; 3]) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        HexClass { parts: least_rotation(parts) }
    }

    /// Canonical representative (least rotation).
    pub fn parts(&self) -> [u64; 3] {
        self.parts
    }

    pub fn n(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Order of the rotation stabilizer, 1 or 3.
    pub fn aut_order(&self) -> u64 {
        rotation_stabilizer(&self.parts)
    }

    /// Whether this class is the m-th power of a lower-level pair, which
    /// happens exactly when m divides every part.
    pub fn is_power(&self, m: u64) -> bool {
        assert!(m >= 2, "power exponent must be at least 2");
        self.parts.iter().all(|&p| p % m == 0)
    }

    /// No exponent m >= 2 exhibits this class as a power.  An m-th power
    /// has m dividing every part and hence m | n, so testing the divisors
    /// of n suffices.
    pub fn is_primitive(&self) -> bool {
        let n = self.n();
        !divisors(n).into_iter().any(|d| d > 1 && self.is_power(d))
    }
}

impl BoxClass {
    /// Class of the given parts tuple.  Panics on a zero part.
    pub fn new(parts: [u64; 4]) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        BoxClass { parts: least_rotation(parts) }
    }

    /// Canonical representative (least rotation).
    pub fn parts(&self) -> [u64; 4] {
        self.parts
    }

    pub fn n(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Order of the rotation stabilizer, 1, 2 or 4.
    pub fn aut_order(&self) -> u64 {
        rotation_stabilizer(&self.parts)
    }

    /// Whether this class is the m-th power of a lower-level pair: the
    /// parts must satisfy a = -b = c = -d (mod m).
    pub fn is_power(&self, m: u64) -> bool {
        assert!(m >= 2, "power exponent must be at least 2");
        let [a, b, c, d] = self.parts;
        (a + b) % m == 0 && (b + c) % m == 0 && (c + d) % m == 0
    }

    /// No exponent m >= 2 exhibits this class as a power.  The power
    /// congruences give a+b = c+d = 0 (mod m), so m | n and testing the
    /// divisors of n suffices.
    pub fn is_primitive(&self) -> bool {
        let n = self.n();
        !divisors(n).into_iter().any(|d| d > 1 && self.is_power(d))
    }
}

/// All triple classes of level n, sorted by canonical representative.
pub fn enumerate_hex(n: u64) -> Result<Vec<HexClass>> {
    if n < 3 {
        return Err(Error::OutOfRange {
            what: "triple class level",
            value: n as i64,
            requirement: "n >= 3",
        });
    }
    let mut classes = BTreeSet::new();
    for a in 1..=n - 2 {
        for b in 1..=n - 1 - a {
            classes.insert(HexClass::new([a, b, n - a - b]));
        }
    }
    Ok(classes.into_iter().collect())
}

/// All quadruple classes of level n, sorted by canonical representative.
pub fn enumerate_box(n: u64) -> Result<Vec<BoxClass>> {
    if n < 4 {
        return Err(Error::OutOfRange {
            what: "quadruple class level",
            value: n as i64,
            requirement: "n >= 4",
        });
    }
    let mut classes = BTreeSet::new();
    for a in 1..=n - 3 {
        for b in 1..=n - 2 - a {
            for c in 1..=n - 1 - a - b {
                classes.insert(BoxClass::new([a, b, c, n - a - b - c]));
            }
        }
    }
    Ok(classes.into_iter().collect())
}

/// Weighted count of triple classes: sum of 1/aut_order.
pub fn count_hex(n: u64) -> Result<Rational> {
    Ok(enumerate_hex(n)?
        .iter()
        .map(|c| rat(1, c.aut_order() as i64))
        .sum())
}

/// Weighted count of quadruple classes: sum of 1/aut_order.
pub fn count_box(n: u64) -> Result<Rational> {
    Ok(enumerate_box(n)?
        .iter()
        .map(|c| rat(1, c.aut_order() as i64))
        .sum())
}

/// Weighted count of primitive triple classes.  Integral for n > 3 since
/// a primitive class then has trivial stabilizer.
pub fn count_hex_primitive(n: u64) -> Result<Rational> {
    let mut total = rat_int(0);
    for class in enumerate_hex(n)?.iter().filter(|c| c.is_primitive()) {
        debug_assert!(n <= 3 || class.aut_order() == 1, "primitive class with symmetry");
        total += rat(1, class.aut_order() as i64);
    }
    Ok(total)
}

/// Weighted count of primitive quadruple classes.  Integral for n > 3.
pub fn count_box_primitive(n: u64) -> Result<Rational> {
    let mut total = rat_int(0);
    for class in enumerate_box(n)?.iter().filter(|c| c.is_primitive()) {
        debug_assert!(class.aut_order() == 1, "primitive class with symmetry");
        total += rat(1, class.aut_order() as i64);
    }
    Ok(total)
}

/// Weighted number of Abel-Belyi pairs of degree n over all genera:
/// (n-1)!/n.
pub fn total_abel_belyi(n: u64) -> Result<Rational> {
    if n < 1 {
        return Err(Error::OutOfRange {
            what: "pair degree",
            value: n as i64,
            requirement: "n >= 1",
        });
    }
    let mut fac = BigInt::one();
    for k in 2..n {
        fac *= k;
    }
    Ok(Rational::new(fac, BigInt::from(n)))
}

/// The same total by brute force: bijections between two cyclically
/// ordered n-sets of semi-edges, modulo independent rotations at the two
/// vertices, each orbit weighted by 1/|stabilizer|.  Refuses n > 8.
pub fn total_abel_belyi_oracle(n: u64) -> Result<Rational> {
    if !(1..=8).contains(&n) {
        return Err(Error::OutOfRange {
            what: "oracle degree",
            value: n as i64,
            requirement: "1 <= n <= 8",
        });
    }
    let n = n as usize;
    // (r, s) sends sigma to the bijection i -> sigma(i - r) + s (mod n)
    let act = |r: usize, s: usize, sigma: &[usize]| -> Vec<usize> {
        (0..n).map(|i| (sigma[(i + n - r) % n] + s) % n).collect()
    };
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut total = rat_int(0);
    for sigma in (0..n).permutations(n) {
        if seen.contains(&sigma) {
            continue;
        }
        let mut orbit: HashSet<Vec<usize>> = HashSet::new();
        let mut stab = 0i64;
        for r in 0..n {
            for s in 0..n {
                let image = act(r, s, &sigma);
                if image == sigma {
                    stab += 1;
                }
                orbit.insert(image);
            }
        }
        debug_assert_eq!(orbit.len() as i64 * stab, (n * n) as i64);
        total += rat(1, stab);
        seen.extend(orbit);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::{dedekind_psi, euler_phi};

    #[test]
    fn canonical_representatives() {
        assert_eq!(HexClass::new([4, 1, 1]).parts(), [1, 1, 4]);
        assert_eq!(HexClass::new([3, 2, 1]), HexClass::new([1, 3, 2]));
        assert_eq!(HexClass::new([3, 2, 1]), HexClass::new([2, 1, 3]));
        assert_ne!(HexClass::new([3, 2, 1]), HexClass::new([1, 2, 3]));
        assert_eq!(BoxClass::new([2, 1, 2, 1]).parts(), [1, 2, 1, 2]);
        assert_eq!(BoxClass::new([3, 1, 1, 1]).parts(), [1, 1, 1, 3]);
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_hex(3).unwrap(), vec![HexClass::new([1, 1, 1])]);
        assert_eq!(enumerate_hex(4).unwrap(), vec![HexClass::new([2, 1, 1])]);
        let hex6: Vec<HexClass> = enumerate_hex(6).unwrap();
        let expected6 = [
            HexClass::new([4, 1, 1]),
            HexClass::new([3, 2, 1]),
            HexClass::new([3, 1, 2]),
            HexClass::new([2, 2, 2]),
        ];
        assert_eq!(hex6.len(), 4);
        for c in expected6 {
            assert!(hex6.contains(&c));
        }
        assert_eq!(enumerate_box(4).unwrap(), vec![BoxClass::new([1, 1, 1, 1])]);
        assert_eq!(enumerate_box(5).unwrap(), vec![BoxClass::new([2, 1, 1, 1])]);
        let box6 = enumerate_box(6).unwrap();
        let expected = [
            BoxClass::new([2, 2, 1, 1]),
            BoxClass::new([3, 1, 1, 1]),
            BoxClass::new([2, 1, 2, 1]),
        ];
        assert_eq!(box6.len(), 3);
        for c in expected {
            assert!(box6.contains(&c));
        }
    }

    #[test]
    fn enumeration_rejects_small_levels() {
        assert!(enumerate_hex(2).is_err());
        assert!(enumerate_box(3).is_err());
    }

    #[test]
    fn automorphism_orders() {
        assert_eq!(HexClass::new([2, 2, 2]).aut_order(), 3);
        assert_eq!(HexClass::new([4, 1, 1]).aut_order(), 1);
        assert_eq!(BoxClass::new([2, 1, 2, 1]).aut_order(), 2);
        assert_eq!(BoxClass::new([1, 1, 1, 1]).aut_order(), 4);
        assert_eq!(BoxClass::new([2, 2, 1, 1]).aut_order(), 1);
    }

    #[test]
    fn power_detection() {
        assert!(HexClass::new([2, 2, 2]).is_power(2));
        assert!(!HexClass::new([2, 2, 2]).is_power(3));
        assert!(BoxClass::new([3, 1, 1, 1]).is_power(2));
        assert!(!BoxClass::new([3, 1, 1, 1]).is_power(3));
        assert!(BoxClass::new([2, 1, 2, 1]).is_power(3));
        assert!(!BoxClass::new([2, 1, 2, 1]).is_power(2));
        assert!(BoxClass::new([2, 2, 1, 1]).is_primitive());
        // level-6 primitives: the three asymmetric triples
        let primitive: Vec<HexClass> = enumerate_hex(6)
            .unwrap()
            .into_iter()
            .filter(HexClass::is_primitive)
            .collect();
        assert_eq!(primitive.len(), 3);
        assert!(!primitive.contains(&HexClass::new([2, 2, 2])));
    }

    #[test]
    fn level_six_census() {
        assert_eq!(count_hex(6).unwrap(), rat(10, 3));
        assert_eq!(count_box(6).unwrap(), rat(5, 2));
        assert_eq!(count_hex_primitive(6).unwrap(), rat_int(3));
        assert_eq!(count_box_primitive(6).unwrap(), rat_int(1));
    }

    #[test]
    fn closed_forms_match_enumeration() {
        for n in 4..=60i64 {
            assert_eq!(count_hex(n as u64).unwrap(), rat((n - 1) * (n - 2), 6));
            assert_eq!(
                count_box(n as u64).unwrap(),
                rat((n - 1) * (n - 2) * (n - 3), 24)
            );
        }
    }

    #[test]
    fn moebius_closed_forms_match_enumeration() {
        for n in 4..=60u64 {
            let phi = euler_phi(n) as i64;
            let psi = dedekind_psi(n) as i64;
            assert_eq!(
                count_hex_primitive(n).unwrap(),
                rat(phi * psi, 6) - rat(phi, 2),
                "triple primitives at level {n}"
            );
            assert_eq!(
                count_box_primitive(n).unwrap(),
                rat((n as i64 - 6) * phi * psi, 24) + rat(phi, 2),
                "quadruple primitives at level {n}"
            );
        }
    }

    #[test]
    fn hex_power_stratification() {
        // every triple class is a unique power of a primitive triple class
        for n in 4..=60u64 {
            let sum: Rational = divisors(n)
                .into_iter()
                .filter(|&d| d > 2)
                .map(|d| count_hex_primitive(d).unwrap())
                .sum();
            assert_eq!(sum, count_hex(n).unwrap(), "stratification at level {n}");
        }
    }

    #[test]
    fn box_stratification_undercounts() {
        // powers of lower-level TRIPLE classes can have quadruple shape
        // (squaring a pair turns one critical point of multiplicity 3 into
        // two of multiplicity 2), so summing primitive quadruple counts
        // over divisors misses classes: at level 6 the sum is 1 while the
        // full weighted count is 5/2.
        let sum: Rational = divisors(6)
            .into_iter()
            .filter(|&d| d >= 4)
            .map(|d| count_box_primitive(d).unwrap())
            .sum();
        assert_eq!(sum, rat_int(1));
        assert_eq!(count_box(6).unwrap(), rat(5, 2));
    }

    #[test]
    fn burnside_consistency() {
        // summing k/aut over classes recounts the compositions
        for n in 4..=60i64 {
            let hex_sum: Rational = enumerate_hex(n as u64)
                .unwrap()
                .iter()
                .map(|c| rat(3, c.aut_order() as i64))
                .sum();
            assert_eq!(hex_sum, rat((n - 1) * (n - 2), 2));
            let box_sum: Rational = enumerate_box(n as u64)
                .unwrap()
                .iter()
                .map(|c| rat(4, c.aut_order() as i64))
                .sum();
            assert_eq!(box_sum, rat((n - 1) * (n - 2) * (n - 3), 6));
        }
    }

    #[test]
    fn total_closed_form_values() {
        assert_eq!(total_abel_belyi(1).unwrap(), rat_int(1));
        assert_eq!(total_abel_belyi(2).unwrap(), rat(1, 2));
        assert_eq!(total_abel_belyi(3).unwrap(), rat(2, 3));
        assert_eq!(total_abel_belyi(4).unwrap(), rat(3, 2));
        assert_eq!(total_abel_belyi(5).unwrap(), rat(24, 5));
        assert!(total_abel_belyi(0).is_err());
    }

    #[test]
    fn total_matches_orbit_oracle() {
        for n in 1..=8u64 {
            assert_eq!(
                total_abel_belyi_oracle(n).unwrap(),
                total_abel_belyi(n).unwrap(),
                "orbit census at degree {n}"
            );
        }
        assert!(total_abel_belyi_oracle(9).is_err());
    }
}
