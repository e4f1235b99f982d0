//! Symmetric matrices whose characteristic polynomial is irreducible.
//!
//! Two routes are provided: symmetrizing a companion matrix by a congruence
//! `Q = P C P^-1`, and searching tridiagonal matrices with unit
//! off-diagonals.

mod congruence;
mod tridiag;

use serde::{Deserialize, Serialize};

pub use congruence::{congruence_reduce_p2, congruence_reduce_podd};
pub use tridiag::{
    newton_identities_solve, tridiag_char_poly, tridiag_search, TridiagSpec, ENUMERATION_LIMIT,
};

use crate::error::{Error, Result};
use crate::field::{find_nonresidue, qr_test};
use crate::matrix::{companion_matrix, MatZp};
use crate::poly::{poly_is_irreducible, poly_is_primitive, PolyZp};

/// How the symmetric representation was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    #[serde(rename = "companion")]
    CompanionSymmetrized,
    #[serde(rename = "tridiag")]
    Tridiagonal,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::CompanionSymmetrized => "companion",
            Method::Tridiagonal => "tridiag",
        })
    }
}

/// The factor `g` in `B = g B_0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GChoice {
    Scalar(u64),
    Companion,
}

impl std::fmt::Display for GChoice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GChoice::Scalar(g) => write!(f, "{g}"),
            GChoice::Companion => f.write_str("C"),
        }
    }
}

/// A symmetric `Q` with `char_poly(Q) = f`, plus how it was built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymRepWitness {
    pub f: PolyZp,
    pub method: Method,
    pub q: MatZp,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub c: Option<MatZp>,
    /// `B` for p = 2, `B_0` for odd p.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub b: Option<MatZp>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p: Option<MatZp>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub g: Option<GChoice>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<Vec<u64>>,
}

impl SymRepWitness {
    /// Witness for a tridiagonal matrix; rejects reducible polynomials.
    pub fn from_tridiag(spec: &TridiagSpec) -> Result<Self> {
        let f = tridiag_char_poly(spec);
        if !poly_is_irreducible(&f)? {
            return Err(Error::Reducible);
        }
        Ok(SymRepWitness {
            f,
            method: Method::Tridiagonal,
            q: spec.matrix(),
            c: None,
            b: None,
            p: None,
            g: None,
            d: Some(spec.d.clone()),
        })
    }

    pub fn dim(&self) -> usize {
        self.q.dim()
    }

    /// Re-checks symmetry, the characteristic polynomial and, when present,
    /// the similarity `Q = P C P^-1`.
    pub fn validate(&self) -> Result<()> {
        if !self.q.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if self.q.char_poly() != self.f {
            return Err(Error::Internal("char_poly(Q) differs from f".into()));
        }
        if let (Some(c), Some(p)) = (&self.c, &self.p) {
            if p.checked_mul(c)?.checked_mul(&p.inverse()?)? != self.q {
                return Err(Error::Internal("Q is not P C P^-1".into()));
            }
        }
        Ok(())
    }
}

fn require_monic(f: &PolyZp) -> Result<usize> {
    match f.degree() {
        None | Some(0) => Err(Error::ConstantPolynomial),
        Some(n) if f.is_monic() => Ok(n),
        Some(_) => Err(Error::NotMonic),
    }
}

/// Symmetric `B` over Z_2 with `C B = B C^T`: a unit corner followed by an
/// anti-triangular Hankel block in `b_1 = c_0`,
/// `b_i = sum_{k<i} c_{n-i+k} b_k`.
pub fn build_b_p2(f: &PolyZp) -> Result<MatZp> {
    let p = f.modulus();
    if !p.is_two() {
        return Err(Error::OddPrime);
    }
    let n = require_monic(f)?;
    let mut b = MatZp::zeros(p, n)?;
    b.set(0, 0, 1);
    let m = n - 1;
    if m == 0 {
        return Ok(b);
    }
    let mut bs = vec![0u64; m + 1];
    bs[1] = f.coeff(0);
    for i in 2..=m {
        bs[i] = (1..i).fold(0, |acc, k| p.add(acc, p.mul(f.coeff(n - i + k), bs[k])));
    }
    for r in 0..m {
        for c in 0..m {
            if r + c + 1 >= m {
                b.set(r + 1, c + 1, bs[r + c + 2 - m]);
            }
        }
    }
    Ok(b)
}

/// Anti-triangular symmetric `B_0` for odd `p` with `b_0 = 1`,
/// `b_i = -sum_{k<i} c_{n-i+k} b_k`.
pub fn build_b0_podd(f: &PolyZp) -> Result<MatZp> {
    let p = f.modulus();
    if p.is_two() {
        return Err(Error::EvenPrime);
    }
    let n = require_monic(f)?;
    let mut bs = vec![0u64; n];
    bs[0] = 1;
    for i in 1..n {
        let s = (0..i).fold(0, |acc, k| p.add(acc, p.mul(f.coeff(n - i + k), bs[k])));
        bs[i] = p.neg(s);
    }
    let mut b = MatZp::zeros(p, n)?;
    for r in 0..n {
        for c in 0..n {
            if r + c + 1 >= n {
                b.set(r, c, bs[r + c + 1 - n]);
            }
        }
    }
    Ok(b)
}

/// Chooses `g` so that `det(g B_0)` is a quadratic residue.
pub fn choose_g(f: &PolyZp) -> Result<GChoice> {
    let p = f.modulus();
    if p.is_two() {
        return Err(Error::EvenPrime);
    }
    let n = require_monic(f)?;
    if n % 4 <= 1 || qr_test(p.neg(1), p)? {
        return Ok(GChoice::Scalar(1));
    }
    if n % 4 == 3 {
        return Ok(GChoice::Scalar(find_nonresidue(p)?));
    }
    if poly_is_primitive(f)? {
        Ok(GChoice::Companion)
    } else {
        Err(Error::PrimitiveRequired)
    }
}

/// Symmetrizes the companion matrix of an irreducible `f`.
pub fn symmetrize_companion(f: &PolyZp) -> Result<SymRepWitness> {
    require_monic(f)?;
    if !poly_is_irreducible(f)? {
        return Err(Error::Reducible);
    }
    let p = f.modulus();
    let c = companion_matrix(f)?;
    let (b, pm, g) = if p.is_two() {
        let b = build_b_p2(f)?;
        let pm = congruence_reduce_p2(&b)?;
        (b, pm, None)
    } else {
        let b0 = build_b0_podd(f)?;
        let g = choose_g(f)?;
        let b = match g {
            GChoice::Scalar(s) => b0.scale(s),
            GChoice::Companion => c.checked_mul(&b0)?,
        };
        let pm = congruence_reduce_podd(&b)?;
        (b0, pm, Some(g))
    };
    let q = pm.checked_mul(&c)?.checked_mul(&pm.inverse()?)?;
    let w = SymRepWitness {
        f: f.clone(),
        method: Method::CompanionSymmetrized,
        q,
        c: Some(c),
        b: Some(b),
        p: Some(pm),
        g,
        d: None,
    };
    w.validate()?;
    Ok(w)
}
