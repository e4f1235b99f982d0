//! Polynomials over Z_p, irreducibility and primitivity tests.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{prime_factors, PrimeModulus};

/// A polynomial over Z_p; `coeffs[i]` is the coefficient of `x^i`.
///
/// Coefficients are reduced and trailing zeros trimmed, so the zero
/// polynomial has no coefficients and `degree() == None`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyZp {
    p: PrimeModulus,
    coeffs: Vec<u64>,
}

impl PolyZp {
    pub fn new(p: PrimeModulus, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| p.reduce(c)).collect();
        trim(&mut coeffs);
        PolyZp { p, coeffs }
    }

    pub fn from_i64(p: PrimeModulus, coeffs: &[i64]) -> Self {
        PolyZp::new(p, coeffs.iter().map(|&c| p.reduce_i64(c)).collect())
    }

    pub fn zero(p: PrimeModulus) -> Self {
        PolyZp {
            p,
            coeffs: Vec::new(),
        }
    }

    pub fn one(p: PrimeModulus) -> Self {
        PolyZp::new(p, vec![1])
    }

    /// The monomial `x^k`.
    pub fn monomial(p: PrimeModulus, k: usize) -> Self {
        let mut c = vec![0; k + 1];
        c[k] = 1;
        PolyZp::new(p, c)
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| p.add(p.mul(acc, x), c))
    }

    fn check(&self, other: &PolyZp) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p.value(), other.p.value()));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &PolyZp) -> Result<PolyZp> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| self.p.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(PolyZp::new(self.p, c))
    }

    pub fn checked_sub(&self, other: &PolyZp) -> Result<PolyZp> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| self.p.sub(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(PolyZp::new(self.p, c))
    }

    pub fn checked_mul(&self, other: &PolyZp) -> Result<PolyZp> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &PolyZp) -> PolyZp {
        if self.is_zero() || other.is_zero() {
            return PolyZp::zero(self.p);
        }
        let p = self.p;
        let mut c = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = p.add(c[i + j], p.mul(a, b));
            }
        }
        PolyZp::new(p, c)
    }

    pub fn scale(&self, s: u64) -> PolyZp {
        let p = self.p;
        PolyZp::new(
            p,
            self.coeffs.iter().map(|&c| p.mul(c, p.reduce(s))).collect(),
        )
    }

    /// Quotient and remainder with `deg(r) < deg(divisor)`.
    pub fn div_rem(&self, divisor: &PolyZp) -> Result<(PolyZp, PolyZp)> {
        self.check(divisor)?;
        let db = divisor.degree().ok_or(Error::DivisionByZero)?;
        let p = self.p;
        let inv_lead = p
            .inv(divisor.leading())
            .expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let Some(da) = self.degree() else {
            return Ok((PolyZp::zero(p), PolyZp::zero(p)));
        };
        if da < db {
            return Ok((PolyZp::zero(p), self.clone()));
        }
        let mut quot = vec![0u64; da - db + 1];
        for k in (0..=da - db).rev() {
            let c = p.mul(rem[k + db], inv_lead);
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = p.sub(rem[k + j], p.mul(c, b));
            }
        }
        Ok((PolyZp::new(p, quot), PolyZp::new(p, rem)))
    }

    pub fn rem(&self, divisor: &PolyZp) -> Result<PolyZp> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Monic greatest common divisor. Both inputs zero is a division by zero.
    pub fn gcd(&self, other: &PolyZp) -> Result<PolyZp> {
        self.check(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.make_monic())
    }

    pub fn make_monic(&self) -> PolyZp {
        match self.p.inv(self.leading()) {
            Some(inv) => self.scale(inv),
            None => self.clone(),
        }
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &PolyZp) -> Result<PolyZp> {
        self.check(m)?;
        let mut base = self.rem(m)?;
        let mut acc = PolyZp::one(self.p).rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base).rem(m)?;
            }
            base = base.mul_unchecked(&base).rem(m)?;
            e >>= 1;
        }
        Ok(acc)
    }

    fn require_monic_nonconstant(&self) -> Result<usize> {
        match self.degree() {
            None | Some(0) => Err(Error::ConstantPolynomial),
            Some(n) if self.is_monic() => Ok(n),
            Some(_) => Err(Error::NotMonic),
        }
    }
}

fn trim(c: &mut Vec<u64>) {
    while c.last() == Some(&0) {
        c.pop();
    }
}

/// Distinct-degree irreducibility test for a monic polynomial of degree >= 1.
pub fn poly_is_irreducible(f: &PolyZp) -> Result<bool> {
    let n = f.require_monic_nonconstant()?;
    if n == 1 {
        return Ok(true);
    }
    let p = f.modulus();
    let x = PolyZp::monomial(p, 1);
    let mut h = x.rem(f)?;
    for k in 1..=n {
        h = h.pow_mod(p.value(), f)?;
        if k <= n / 2 {
            let g = h.checked_sub(&x)?.gcd(f)?;
            if !g.is_one() {
                return Ok(false);
            }
        }
    }
    Ok(h == x.rem(f)?)
}

/// Whether `x` has multiplicative order `p^n - 1` modulo an irreducible `f`.
pub fn poly_is_primitive(f: &PolyZp) -> Result<bool> {
    if !poly_is_irreducible(f)? {
        return Err(Error::Reducible);
    }
    let n = f.degree().unwrap_or(0);
    let p = f.modulus();
    if f.coeff(0) == 0 {
        return Ok(false);
    }
    let order = p
        .checked_power(n)
        .ok_or_else(|| Error::Overflow(format!("{p}^{n}")))?
        - 1;
    let x = PolyZp::monomial(p, 1);
    for q in prime_factors(order) {
        if x.pow_mod(order / q, f)?.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

impl fmt::Display for PolyZp {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(out, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(out, "{c}")?,
                (1, 1) => write!(out, "x")?,
                (1, c) => write!(out, "{c}x")?,
                (i, 1) => write!(out, "x^{i}")?,
                (i, c) => write!(out, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolyDoc {
    p: PrimeModulus,
    coeffs: Vec<u64>,
}

impl Serialize for PolyZp {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyDoc {
            p: self.p,
            coeffs: self.coeffs.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PolyZp {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = PolyDoc::deserialize(d)?;
        Ok(PolyZp::new(doc.p, doc.coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn poly(p: u64, c: &[u64]) -> PolyZp {
        PolyZp::new(pm(p), c.to_vec())
    }

    #[test]
    fn normalization() {
        let a = poly(3, &[4, 0, 3]);
        assert_eq!(a.coeffs(), &[1]);
        assert_eq!(a.degree(), Some(0));
        assert_eq!(poly(3, &[0, 0]).degree(), None);
        assert_eq!(poly(2, &[1, 0, 1, 1]).to_string(), "x^3 + x^2 + 1");
    }

    #[test]
    fn division_examples() {
        let (q, r) = poly(2, &[1, 0, 1]).div_rem(&poly(2, &[1, 1])).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, poly(2, &[1, 1]));
        let g = poly(2, &[1, 1, 0, 1]).gcd(&poly(2, &[0, 1, 1])).unwrap();
        assert!(g.is_one());
        assert_eq!(
            poly(2, &[1]).div_rem(&PolyZp::zero(pm(2))),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            poly(2, &[1]).checked_add(&poly(3, &[1])),
            Err(Error::ModulusMismatch(2, 3))
        );
    }

    #[test]
    fn irreducibility_examples() {
        assert!(!poly_is_irreducible(&poly(2, &[1, 0, 1])).unwrap());
        assert!(poly_is_irreducible(&poly(3, &[2, 1, 1])).unwrap());
        assert!(poly_is_irreducible(&poly(3, &[1, 2, 1, 1])).unwrap());
        assert_eq!(poly_is_irreducible(&poly(3, &[1, 2])), Err(Error::NotMonic));
        assert_eq!(
            poly_is_irreducible(&poly(3, &[1])),
            Err(Error::ConstantPolynomial)
        );
    }

    #[test]
    fn primitivity_examples() {
        assert!(poly_is_primitive(&poly(2, &[1, 1, 0, 1])).unwrap());
        assert!(!poly_is_primitive(&poly(3, &[1, 0, 1])).unwrap());
        assert!(poly_is_primitive(&poly(2, &[1, 1])).unwrap());
        assert!(!poly_is_primitive(&poly(5, &[0, 1])).unwrap());
        assert_eq!(
            poly_is_primitive(&poly(2, &[1, 0, 1])),
            Err(Error::Reducible)
        );
    }

    #[test]
    fn serde_roundtrip() {
        let f = poly(2, &[1, 0, 1, 1]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"p":2,"coeffs":[1,0,1,1]}"#);
        assert_eq!(serde_json::from_str::<PolyZp>(&s).unwrap(), f);
    }
}
