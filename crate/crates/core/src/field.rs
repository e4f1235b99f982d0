//! Arithmetic in the prime field Z_p.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A prime modulus `p`, checked at construction.
///
/// Residues are stored as `u64` in `[0, p)`. Products of two residues must
/// fit in `u64`, so `p` is limited to `u32::MAX`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeModulus(p))
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_two(self) -> bool {
        self.0 == 2
    }

    #[inline]
    pub fn reduce(self, a: u64) -> u64 {
        a % self.0
    }

    /// Reduces a signed integer into `[0, p)`.
    #[inline]
    pub fn reduce_i64(self, a: i64) -> u64 {
        a.rem_euclid(self.0 as i64) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.0
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: u64) -> Option<u64> {
        let a = a % self.0;
        if a == 0 {
            None
        } else {
            Some(self.pow(a, self.0 - 2))
        }
    }

    /// `p^n` if it fits in `u64`.
    pub fn checked_power(self, n: usize) -> Option<u64> {
        let mut acc: u64 = 1;
        for _ in 0..n {
            acc = acc.checked_mul(self.0)?;
        }
        Some(acc)
    }
}

impl TryFrom<u64> for PrimeModulus {
    type Error = Error;
    fn try_from(p: u64) -> Result<Self> {
        PrimeModulus::new(p)
    }
}

impl From<PrimeModulus> for u64 {
    fn from(p: PrimeModulus) -> u64 {
        p.0
    }
}

impl std::fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors of `n` in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Euler criterion. For `p = 2` every nonzero element is a residue.
pub fn qr_test(a: u64, p: PrimeModulus) -> Result<bool> {
    let a = p.reduce(a);
    if a == 0 {
        return Err(Error::ZeroResidue);
    }
    if p.is_two() {
        return Ok(true);
    }
    Ok(p.pow(a, (p.value() - 1) / 2) == 1)
}

/// Smallest quadratic non-residue in `[2, p)`.
pub fn find_nonresidue(p: PrimeModulus) -> Result<u64> {
    if p.is_two() {
        return Err(Error::EvenPrime);
    }
    (2..p.value())
        .find(|&a| !p_is_residue(a, p))
        .ok_or_else(|| Error::Internal("odd prime without a non-residue".into()))
}

fn p_is_residue(a: u64, p: PrimeModulus) -> bool {
    p.pow(a, (p.value() - 1) / 2) == 1
}

/// Smallest `s` in `[1, p)` with `s^2 = a`, found by scan.
pub fn sqrt_mod(a: u64, p: PrimeModulus) -> Option<u64> {
    let a = p.reduce(a);
    (1..p.value()).find(|&s| p.mul(s, s) == a)
}
