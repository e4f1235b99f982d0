//! Tridiagonal symmetric matrices with unit off-diagonals.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::PrimeModulus;
use crate::matrix::MatZp;
use crate::poly::{poly_is_irreducible, poly_is_primitive, PolyZp};

/// Largest number of diagonals the searches will enumerate.
pub const ENUMERATION_LIMIT: u64 = 10_000_000;

/// Diagonal `d_1 .. d_n` of a tridiagonal matrix whose off-diagonals are 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TridiagSpec {
    pub p: PrimeModulus,
    pub d: Vec<u64>,
}

impl TridiagSpec {
    pub fn new(p: PrimeModulus, d: Vec<u64>) -> Result<Self> {
        if d.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        Ok(TridiagSpec {
            p,
            d: d.into_iter().map(|v| p.reduce(v)).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.d.len()
    }

    pub fn matrix(&self) -> MatZp {
        let n = self.d.len();
        let mut m = MatZp::zeros(self.p, n).expect("n >= 1");
        for (i, &v) in self.d.iter().enumerate() {
            m.set(i, i, v);
            if i + 1 < n {
                m.set(i, i + 1, 1);
                m.set(i + 1, i, 1);
            }
        }
        m
    }

    pub fn reversed(&self) -> TridiagSpec {
        TridiagSpec {
            p: self.p,
            d: self.d.iter().rev().copied().collect(),
        }
    }

    /// The diagonal at position `index` of the search order, `d_1` fastest.
    fn from_index(p: PrimeModulus, n: usize, mut index: u64) -> TridiagSpec {
        let mut d = Vec::with_capacity(n);
        for _ in 0..n {
            d.push(index % p.value());
            index /= p.value();
        }
        TridiagSpec { p, d }
    }
}

/// Characteristic polynomial via `D_k = (x - d_{n+1-k}) D_{k-1} - D_{k-2}`.
pub fn tridiag_char_poly(spec: &TridiagSpec) -> PolyZp {
    let p = spec.p;
    let mut prev = PolyZp::zero(p);
    let mut cur = PolyZp::one(p);
    for &dk in spec.d.iter().rev() {
        let lin = PolyZp::new(p, vec![p.neg(dk), 1]);
        let next = lin
            .checked_mul(&cur)
            .and_then(|t| t.checked_sub(&prev))
            .expect("same modulus");
        prev = cur;
        cur = next;
    }
    cur
}

fn search_size(p: PrimeModulus, n: usize) -> Result<u64> {
    p.checked_power(n)
        .filter(|&s| s <= ENUMERATION_LIMIT)
        .ok_or(Error::EnumerationTooLarge(p.value(), n))
}

fn accepts(f: &PolyZp, target: Option<&PolyZp>, primitive: bool) -> bool {
    if let Some(t) = target {
        if f != t {
            return false;
        }
    }
    match poly_is_irreducible(f) {
        Ok(true) => !primitive || poly_is_primitive(f).unwrap_or(false),
        _ => false,
    }
}

/// First diagonal, with `d_1` varying fastest, whose characteristic
/// polynomial is irreducible (primitive if requested) and equals `target`
/// when one is given. `Ok(None)` means the enumeration was exhausted.
pub fn tridiag_search(
    p: PrimeModulus,
    n: usize,
    target: Option<&PolyZp>,
    primitive: bool,
) -> Result<Option<TridiagSpec>> {
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    if let Some(t) = target {
        if t.modulus() != p {
            return Err(Error::ModulusMismatch(t.modulus().value(), p.value()));
        }
        if t.degree() != Some(n) || !t.is_monic() || !accepts(t, None, primitive) {
            return Ok(None);
        }
    }
    let total = search_size(p, n)?;
    Ok((0..total)
        .into_par_iter()
        .map(|i| TridiagSpec::from_index(p, n, i))
        .find_first(|spec| accepts(&tridiag_char_poly(spec), target, primitive)))
}

/// All tridiagonal realizations of `f` for degree at most 4, found by
/// fixing `d_n` through the trace identity and filtering the remaining
/// diagonals with Newton's identities.
pub fn newton_identities_solve(f: &PolyZp) -> Result<Vec<TridiagSpec>> {
    let n = match f.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        Some(n) => n,
    };
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if n > 4 {
        return Err(Error::DegreeTooLarge(n, 4));
    }
    let p = f.modulus();
    let c = |i: usize| f.coeff(i);
    let t1 = p.neg(c(n - 1));
    let free = search_size(p, n - 1)?;
    let mut out = Vec::new();
    for i in 0..free {
        let mut d = TridiagSpec::from_index(p, n - 1, i).d;
        let partial = d.iter().fold(0, |acc, &v| p.add(acc, v));
        d.push(p.sub(t1, partial));
        let spec = TridiagSpec { p, d };
        let q = spec.matrix();
        let mut traces = vec![0u64; n + 1];
        let mut pw = q.clone();
        for (k, slot) in traces.iter_mut().enumerate().skip(1) {
            if k > 1 {
                pw = pw.checked_mul(&q).expect("same shape");
            }
            *slot = pw.trace();
        }
        let newton_ok = (1..=n).all(|k| {
            let mut s = traces[k];
            for i in 1..k {
                s = p.add(s, p.mul(c(n - i), traces[k - i]));
            }
            s = p.add(s, p.mul(p.reduce(k as u64), c(n - k)));
            s == 0
        });
        if newton_ok && &tridiag_char_poly(&spec) == f {
            out.push(spec);
        }
    }
    out.sort_by_key(|s| s.d.iter().rev().copied().collect::<Vec<_>>());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn spec(p: u64, d: &[u64]) -> TridiagSpec {
        TridiagSpec::new(pm(p), d.to_vec()).unwrap()
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(
            tridiag_char_poly(&spec(2, &[1, 0, 0])).coeffs(),
            &[1, 0, 1, 1]
        );
        assert_eq!(tridiag_char_poly(&spec(3, &[1, 0])).coeffs(), &[2, 2, 1]);
        assert_eq!(tridiag_char_poly(&spec(2, &[0, 0])).coeffs(), &[1, 0, 1]);
        let s = spec(5, &[2, 4, 1, 3]);
        assert_eq!(tridiag_char_poly(&s), s.matrix().char_poly());
    }

    #[test]
    fn search_examples() {
        let target = PolyZp::new(pm(2), vec![1, 1, 0, 1]);
        let hit = tridiag_search(pm(2), 3, Some(&target), false)
            .unwrap()
            .unwrap();
        assert_eq!(hit.d, vec![1, 1, 0]);
        let hit = tridiag_search(pm(2), 2, None, false).unwrap().unwrap();
        assert_eq!(tridiag_char_poly(&hit).coeffs(), &[1, 1, 1]);
        let hit = tridiag_search(pm(2), 3, None, false).unwrap().unwrap();
        assert_eq!(hit.d, vec![1, 0, 0]);
        let reducible = PolyZp::new(pm(3), vec![0, 0, 0, 1]);
        assert_eq!(
            tridiag_search(pm(3), 3, Some(&reducible), false).unwrap(),
            None
        );
        assert!(tridiag_search(pm(7), 9, None, false).is_err());
    }

    #[test]
    fn unreachable_targets_exhaust() {
        // Some irreducible cubics over Z_3 have no tridiagonal realization.
        let p = pm(3);
        let mut missing = 0;
        for c0 in 1..3 {
            for c1 in 0..3 {
                for c2 in 0..3 {
                    let f = PolyZp::new(p, vec![c0, c1, c2, 1]);
                    if poly_is_irreducible(&f).unwrap()
                        && tridiag_search(p, 3, Some(&f), false).unwrap().is_none()
                    {
                        missing += 1;
                    }
                }
            }
        }
        assert!(missing > 0);
    }

    #[test]
    fn newton_examples() {
        let f = PolyZp::new(pm(2), vec![1, 1, 0, 1]);
        let sols: Vec<Vec<u64>> = newton_identities_solve(&f)
            .unwrap()
            .into_iter()
            .map(|s| s.d)
            .collect();
        assert_eq!(sols, vec![vec![1, 1, 0], vec![0, 1, 1]]);
        let lin = PolyZp::new(pm(5), vec![2, 1]);
        let sols: Vec<Vec<u64>> = newton_identities_solve(&lin)
            .unwrap()
            .into_iter()
            .map(|s| s.d)
            .collect();
        assert_eq!(sols, vec![vec![3]]);
        let g = PolyZp::new(pm(3), vec![2, 2, 1]);
        let sols: Vec<Vec<u64>> = newton_identities_solve(&g)
            .unwrap()
            .into_iter()
            .map(|s| s.d)
            .collect();
        assert!(sols.contains(&vec![1, 0]) && sols.contains(&vec![0, 1]));
        let big = PolyZp::new(pm(2), vec![1, 0, 1, 0, 0, 1]);
        assert_eq!(
            newton_identities_solve(&big),
            Err(Error::DegreeTooLarge(5, 4))
        );
    }
}
