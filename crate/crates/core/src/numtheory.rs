//! Elementary arithmetic functions on small integers.
//!
//! Everything here is driven by trial-division factorization, which is
//! plenty for the argument sizes this crate works at (n in the hundreds,
//! characteristics below 2^32).  [`ArithValue`] caches a factorization so
//! the counting formulas can ask for phi, psi, sigma_0 and divisor lists
//! of the same n without refactoring it.

use crate::error::{Error, Result};

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0, "factorization of 0 is undefined");
    let mut out = Vec::new();
    let mut push = |p: u64, n: &mut u64| {
        let mut e = 0u32;
        while *n % p == 0 {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut n);
    let mut p = 3u64;
    while p.saturating_mul(p) <= n {
        push(p, &mut n);
        p += 2;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n > 0);
    factorize(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// Dedekind psi: n * prod over p | n of (1 + 1/p).
pub fn dedekind_psi(n: u64) -> u64 {
    assert!(n > 0);
    factorize(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p + 1))
}

/// Number of divisors.
pub fn sigma0(n: u64) -> u64 {
    assert!(n > 0);
    factorize(n)
        .iter()
        .map(|&(_, e)| (e + 1) as u64)
        .product()
}

/// Moebius function.
pub fn moebius(n: u64) -> i64 {
    assert!(n > 0);
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All divisors of n in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n > 0);
    let mut out = vec![1u64];
    for (p, e) in factorize(n) {
        let prev = out.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            out.extend(prev.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

/// Exponent of p in n.  Requires p >= 2 and n >= 1.
pub fn ordp(mut n: u64, p: u64) -> Result<u32> {
    if p < 2 {
        return Err(Error::OutOfRange {
            what: "ordp base",
            value: p as i64,
            requirement: "p >= 2",
        });
    }
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "ordp argument",
            value: 0,
            requirement: "n >= 1",
        });
    }
    let mut e = 0u32;
    while n % p == 0 {
        n /= p;
        e += 1;
    }
    Ok(e)
}

/// An integer together with its factorization and the derived arithmetic
/// functions, computed once.
#[derive(Clone, Debug)]
pub struct ArithValue {
    n: u64,
    factorization: Vec<(u64, u32)>,
}

impl ArithValue {
    pub fn new(n: u64) -> Self {
        assert!(n > 0);
        ArithValue { n, factorization: factorize(n) }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factorization(&self) -> &[(u64, u32)] {
        &self.factorization
    }

    pub fn phi(&self) -> u64 {
        self.factorization
            .iter()
            .fold(self.n, |acc, &(p, _)| acc / p * (p - 1))
    }

    pub fn psi(&self) -> u64 {
        self.factorization
            .iter()
            .fold(self.n, |acc, &(p, _)| acc / p * (p + 1))
    }

    pub fn sigma0(&self) -> u64 {
        self.factorization
            .iter()
            .map(|&(_, e)| (e + 1) as u64)
            .product()
    }

    pub fn divisors(&self) -> Vec<u64> {
        divisors(self.n)
    }
}
