//! Tridiagonal diagonals with primitive characteristic polynomials for
//! small fields, one or more per `(p, n)`.

use serde::Serialize;

use crate::error::Result;
use crate::field::PrimeModulus;
use crate::poly::{poly_is_irreducible, poly_is_primitive};
use crate::symrep::{tridiag_char_poly, TridiagSpec};

/// `(p, d)` rows; `n` is the length of `d`.
pub const TRIDIAGONAL_CATALOG: &[(u64, &[u64])] = &[
    (2, &[1, 0]),
    (2, &[1, 1, 0]),
    (2, &[1, 0, 0]),
    (2, &[1, 0, 1, 0]),
    (2, &[1, 1, 0, 1]),
    (2, &[1, 1, 1, 1, 0]),
    (2, &[0, 1, 1, 0, 0]),
    (2, &[1, 1, 0, 0, 0]),
    (2, &[1, 0, 0, 0, 0]),
    (2, &[0, 1, 1, 0, 0, 0]),
    (2, &[1, 0, 1, 1, 1, 0]),
    (2, &[0, 1, 1, 0, 1, 0]),
    (2, &[1, 0, 1, 0, 0, 1]),
    (2, &[1, 0, 1, 1, 0, 0, 1]),
    (2, &[0, 1, 1, 1, 0, 1, 0]),
    (2, &[1, 1, 1, 0, 0, 0, 1]),
    (2, &[1, 1, 1, 0, 1, 0, 0]),
    (2, &[0, 1, 1, 0, 0, 0, 0, 0]),
    (2, &[1, 1, 1, 1, 1, 0, 1, 0]),
    (2, &[1, 1, 1, 0, 1, 1, 1, 0]),
    (2, &[0, 1, 1, 0, 1, 1, 0, 0]),
    (3, &[2, 0]),
    (3, &[1, 0]),
    (3, &[1, 1, 0]),
    (3, &[2, 1, 1]),
    (3, &[1, 0, 0]),
    (3, &[1, 1, 0, 1]),
    (3, &[2, 2, 0, 2]),
    (3, &[1, 2, 1, 1]),
    (3, &[1, 2, 2, 0]),
    (3, &[2, 1, 2, 0, 1]),
    (3, &[2, 2, 1, 1, 0]),
    (3, &[0, 1, 2, 0, 0]),
    (3, &[2, 1, 1, 1, 1]),
    (3, &[1, 0, 2, 2, 1, 0]),
    (3, &[2, 0, 1, 1, 2, 0]),
    (3, &[1, 0, 2, 0, 2, 0]),
    (3, &[2, 2, 0, 1, 0, 0]),
    (5, &[3, 1]),
    (5, &[4, 2]),
    (5, &[2, 3, 0]),
    (5, &[3, 2, 0]),
    (5, &[3, 1, 0]),
    (5, &[4, 2, 3]),
    (5, &[3, 0, 1, 1]),
    (5, &[1, 3, 0, 1]),
    (5, &[3, 1, 0, 0]),
    (5, &[2, 3, 2, 1]),
    (5, &[2, 3, 0, 0, 0]),
    (5, &[3, 2, 0, 0, 0]),
    (5, &[3, 2, 3, 0, 2]),
    (5, &[3, 0, 2, 3, 2]),
    (5, &[4, 2, 2, 4, 1, 2]),
    (5, &[3, 4, 1, 3, 3, 1]),
    (5, &[1, 3, 2, 0, 4, 0]),
    (5, &[3, 3, 3, 0, 3, 3]),
    (7, &[4, 1]),
    (7, &[3, 2]),
    (7, &[6, 3]),
    (7, &[5, 4]),
    (7, &[2, 4, 1]),
    (7, &[3, 3, 1]),
    (7, &[2, 3, 1]),
    (7, &[6, 3, 3]),
    (7, &[5, 4, 4, 1]),
    (7, &[6, 3, 3, 2]),
    (7, &[6, 0, 5, 3]),
    (7, &[4, 2, 0, 1]),
    (7, &[5, 1, 0, 1, 0]),
    (7, &[6, 3, 4, 0, 1]),
    (7, &[6, 4, 0, 1, 3]),
    (7, &[6, 5, 4, 4, 2]),
    (7, &[6, 6, 0, 1, 0, 1]),
    (7, &[2, 4, 5, 5, 5, 0]),
    (7, &[5, 3, 2, 2, 2, 0]),
    (7, &[6, 0, 6, 0, 1, 1]),
];

/// A catalog row with its re-derived characteristic polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub p: u64,
    pub n: usize,
    pub d: Vec<u64>,
    /// `c_{n-1}, ..., c_0`.
    pub c: Vec<u64>,
    pub irreducible: bool,
    pub primitive: bool,
}

pub fn derive_entry(p: u64, d: &[u64]) -> Result<CatalogEntry> {
    let spec = TridiagSpec::new(PrimeModulus::new(p)?, d.to_vec())?;
    let f = tridiag_char_poly(&spec);
    let n = d.len();
    let irreducible = poly_is_irreducible(&f)?;
    let primitive = irreducible && poly_is_primitive(&f)?;
    Ok(CatalogEntry {
        p,
        n,
        d: d.to_vec(),
        c: (0..n).rev().map(|i| f.coeff(i)).collect(),
        irreducible,
        primitive,
    })
}

/// Re-derives every catalog row whose prime is in `primes` (all rows when
/// `primes` is empty).
pub fn derive_catalog(primes: &[u64]) -> Result<Vec<CatalogEntry>> {
    TRIDIAGONAL_CATALOG
        .iter()
        .filter(|(p, _)| primes.is_empty() || primes.contains(p))
        .map(|(p, d)| derive_entry(*p, d))
        .collect()
}
