//! Complete sets of graph-state bases from a symmetric field representation.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::PrimeModulus;
use crate::matrix::{AdjacencyMatrix, MatZp};
use crate::poly::{poly_is_irreducible, poly_is_primitive, PolyZp};
use crate::symrep::{
    symmetrize_companion, tridiag_search, Method, SymRepWitness, TridiagSpec, ENUMERATION_LIMIT,
};

/// `p^n` adjacency matrices indexed by `(a_0, ..., a_{n-1})`, `a_0` fastest.
///
/// The computational basis completes the family to `p^n + 1` bases and is
/// not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MubSet {
    p: PrimeModulus,
    n: usize,
    adjacency: Vec<AdjacencyMatrix>,
    witness: Option<SymRepWitness>,
    method: Option<Method>,
    polynomial: Option<PolyZp>,
    diagonal: Option<Vec<u64>>,
    shifts: Vec<AdjacencyMatrix>,
    field_closure: bool,
}

/// Outcome of the determinant test on pairwise differences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Lemma1Outcome {
    Pass,
    Fail { r: usize, s: usize },
}

impl Lemma1Outcome {
    pub fn passed(&self) -> bool {
        matches!(self, Lemma1Outcome::Pass)
    }
}

/// Method selection for [`mub_set`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MethodChoice {
    #[default]
    Auto,
    Tridiagonal,
    Companion,
}

#[derive(Debug, Clone, Default)]
pub struct MubOptions {
    pub method: MethodChoice,
    pub polynomial: Option<PolyZp>,
    pub diagonal: Option<Vec<u64>>,
    pub primitive: bool,
}

impl MubSet {
    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    pub fn qupits(&self) -> usize {
        self.n
    }

    /// Number of qupit states `p^n`.
    pub fn dimension(&self) -> usize {
        self.adjacency.len()
    }

    pub fn matrices(&self) -> &[AdjacencyMatrix] {
        &self.adjacency
    }

    pub fn witness(&self) -> Option<&SymRepWitness> {
        self.witness.as_ref()
    }

    pub fn method(&self) -> Option<Method> {
        self.method
    }

    pub fn polynomial(&self) -> Option<&PolyZp> {
        self.polynomial.as_ref()
    }

    pub fn diagonal(&self) -> Option<&[u64]> {
        self.diagonal.as_deref()
    }

    pub fn shifts(&self) -> &[AdjacencyMatrix] {
        &self.shifts
    }

    pub fn has_field_closure(&self) -> bool {
        self.field_closure
    }

    /// Position of the matrix `sum a_i Q^i`.
    pub fn index_of(&self, coeffs: &[u64]) -> Option<usize> {
        if coeffs.len() != self.n {
            return None;
        }
        let p = self.p.value();
        coeffs.iter().rev().try_fold(0usize, |acc, &a| {
            (a < p).then(|| acc * p as usize + a as usize)
        })
    }

    /// Builds a set from explicit matrices. Closure is not assumed.
    pub fn from_matrices(
        p: PrimeModulus,
        n: usize,
        adjacency: Vec<AdjacencyMatrix>,
    ) -> Result<Self> {
        let expected = p
            .checked_power(n)
            .ok_or_else(|| Error::Overflow(format!("{p}^{n}")))? as usize;
        if adjacency.len() != expected {
            return Err(Error::IncompleteSet(adjacency.len(), expected));
        }
        for a in &adjacency {
            if a.modulus() != p {
                return Err(Error::ModulusMismatch(a.modulus().value(), p.value()));
            }
            if a.dim() != n {
                return Err(Error::ShapeMismatch(a.dim(), n));
            }
        }
        Ok(MubSet {
            p,
            n,
            adjacency,
            witness: None,
            method: None,
            polynomial: None,
            diagonal: None,
            shifts: Vec::new(),
            field_closure: false,
        })
    }
}

fn dimension_of(p: PrimeModulus, n: usize) -> Result<usize> {
    p.checked_power(n)
        .filter(|&d| d <= ENUMERATION_LIMIT)
        .map(|d| d as usize)
        .ok_or(Error::EnumerationTooLarge(p.value(), n))
}

/// `Q^0, ..., Q^{n-1}`.
pub fn fundamental_graphs(w: &SymRepWitness) -> Vec<AdjacencyMatrix> {
    let n = w.dim();
    let mut out = Vec::with_capacity(n);
    let mut cur = MatZp::identity(w.q.modulus(), n).expect("n >= 1");
    for _ in 0..n {
        out.push(AdjacencyMatrix::new(cur.clone()).expect("powers of a symmetric matrix"));
        cur = cur.checked_mul(&w.q).expect("same shape");
    }
    out
}

fn combination(p: PrimeModulus, basis: &[AdjacencyMatrix], mut index: usize) -> AdjacencyMatrix {
    let n = basis.len();
    let mut acc = MatZp::zeros(p, n).expect("n >= 1");
    for b in basis {
        let a = (index % p.value() as usize) as u64;
        index /= p.value() as usize;
        if a != 0 {
            acc = acc.checked_add(&b.matrix().scale(a)).expect("same shape");
        }
    }
    AdjacencyMatrix::new(acc).expect("sum of symmetric matrices")
}

/// All `p^n` combinations `sum a_i Q^i`.
pub fn generate_rep_set(w: &SymRepWitness) -> Result<MubSet> {
    let p = w.q.modulus();
    let n = w.dim();
    let d = dimension_of(p, n)?;
    let basis = fundamental_graphs(w);
    let adjacency = (0..d)
        .into_par_iter()
        .map(|i| combination(p, &basis, i))
        .collect();
    Ok(MubSet {
        p,
        n,
        adjacency,
        witness: Some(w.clone()),
        method: Some(w.method),
        polynomial: Some(w.f.clone()),
        diagonal: w.d.clone(),
        shifts: Vec::new(),
        field_closure: true,
    })
}

/// The same set built as `{0} ∪ {Q^i : 0 <= i < p^n - 1}`.
///
/// Each power is placed at the index given by the coefficients of
/// `x^i mod f`, and checked against the linear-combination construction.
pub fn generate_power_set(w: &SymRepWitness) -> Result<MubSet> {
    if !poly_is_primitive(&w.f)? {
        return Err(Error::PrimitiveRequired);
    }
    let reference = generate_rep_set(w)?;
    let p = w.q.modulus();
    let n = w.dim();
    let d = reference.dimension();
    let mut slots: Vec<Option<AdjacencyMatrix>> = vec![None; d];
    slots[0] = Some(AdjacencyMatrix::zeros(p, n)?);
    let x = PolyZp::monomial(p, 1);
    let mut residue = PolyZp::one(p);
    let mut power = MatZp::identity(p, n)?;
    for _ in 0..d - 1 {
        let coeffs: Vec<u64> = (0..n).map(|i| residue.coeff(i)).collect();
        let idx = reference.index_of(&coeffs).expect("reduced coefficients");
        if slots[idx].is_some() {
            return Err(Error::Internal(
                "matrix powers repeat before p^n - 1".into(),
            ));
        }
        slots[idx] = Some(AdjacencyMatrix::new(power.clone())?);
        residue = residue.checked_mul(&x)?.rem(&w.f)?;
        power = power.checked_mul(&w.q)?;
    }
    let adjacency: Vec<AdjacencyMatrix> = slots
        .into_iter()
        .map(|s| s.ok_or_else(|| Error::Internal("matrix powers miss an element".into())))
        .collect::<Result<_>>()?;
    if adjacency != reference.adjacency {
        return Err(Error::Internal(
            "power set differs from the combination set".into(),
        ));
    }
    Ok(reference)
}

/// Checks `det(A_r - A_s) != 0` for all `r != s`.
///
/// With field closure every difference is itself an element, so only the
/// nonzero elements are tested; otherwise all pairs are.
pub fn verify_lemma1(s: &MubSet) -> Lemma1Outcome {
    let mats = &s.adjacency;
    let d = mats.len();
    if s.field_closure {
        let zero = mats.iter().position(|a| a.matrix().is_zero());
        if let Some(z) = zero {
            let bad = (0..d)
                .into_par_iter()
                .filter(|&i| i != z)
                .find_first(|&i| mats[i].matrix().det() == 0);
            return match bad {
                None => Lemma1Outcome::Pass,
                Some(i) => Lemma1Outcome::Fail {
                    r: i.min(z),
                    s: i.max(z),
                },
            };
        }
    }
    let bad = (0..d).into_par_iter().find_map_first(|r| {
        (r + 1..d)
            .find(|&t| {
                mats[r]
                    .matrix()
                    .checked_sub(mats[t].matrix())
                    .map_or(true, |m| m.det() == 0)
            })
            .map(|t| (r, t))
    });
    match bad {
        None => Lemma1Outcome::Pass,
        Some((r, t)) => Lemma1Outcome::Fail { r, s: t },
    }
}

/// Adds a symmetric `m` to every element. The result keeps all pairwise
/// differences but is no longer closed under subtraction.
pub fn shift_set(s: &MubSet, m: &AdjacencyMatrix) -> Result<MubSet> {
    if m.modulus() != s.p {
        return Err(Error::ModulusMismatch(m.modulus().value(), s.p.value()));
    }
    if m.dim() != s.n {
        return Err(Error::ShapeMismatch(m.dim(), s.n));
    }
    let adjacency = s
        .adjacency
        .iter()
        .map(|a| a.checked_add(m))
        .collect::<Result<Vec<_>>>()?;
    let mut out = s.clone();
    out.adjacency = adjacency;
    out.shifts.push(m.clone());
    out.field_closure = false;
    Ok(out)
}

/// First monic polynomial of degree `n` that is irreducible (primitive if
/// asked), enumerating coefficient vectors with `c_0` fastest.
pub fn first_irreducible(p: PrimeModulus, n: usize, primitive: bool) -> Result<PolyZp> {
    let total = dimension_of(p, n)? as u64;
    (0..total)
        .into_par_iter()
        .map(|mut i| {
            let mut c = Vec::with_capacity(n + 1);
            for _ in 0..n {
                c.push(i % p.value());
                i /= p.value();
            }
            c.push(1);
            PolyZp::new(p, c)
        })
        .find_first(|f| match poly_is_irreducible(f) {
            Ok(true) => !primitive || poly_is_primitive(f).unwrap_or(false),
            _ => false,
        })
        .ok_or_else(|| Error::NotFound("irreducible polynomial".into()))
}

/// Builds a witness according to `opts`.
pub fn build_witness(p: PrimeModulus, n: usize, opts: &MubOptions) -> Result<SymRepWitness> {
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    if let Some(f) = &opts.polynomial {
        if f.modulus() != p {
            return Err(Error::ModulusMismatch(f.modulus().value(), p.value()));
        }
        if f.degree() != Some(n) {
            return Err(Error::ShapeMismatch(f.degree().unwrap_or(0), n));
        }
    }
    let check_primitive = |w: SymRepWitness| -> Result<SymRepWitness> {
        if opts.primitive && !poly_is_primitive(&w.f)? {
            return Err(Error::PrimitiveRequired);
        }
        Ok(w)
    };
    if let Some(d) = &opts.diagonal {
        if d.len() != n {
            return Err(Error::ShapeMismatch(d.len(), n));
        }
        let w = SymRepWitness::from_tridiag(&TridiagSpec::new(p, d.clone())?)?;
        if let Some(f) = &opts.polynomial {
            if &w.f != f {
                return Err(Error::NotFound(
                    "diagonal realizing the given polynomial".into(),
                ));
            }
        }
        return check_primitive(w);
    }
    let companion = || -> Result<SymRepWitness> {
        let f = match &opts.polynomial {
            Some(f) => f.clone(),
            None => first_irreducible(p, n, true)?,
        };
        check_primitive(symmetrize_companion(&f)?)
    };
    match opts.method {
        MethodChoice::Companion => companion(),
        MethodChoice::Tridiagonal | MethodChoice::Auto => {
            let found = tridiag_search(p, n, opts.polynomial.as_ref(), opts.primitive);
            match (found, opts.method) {
                (Ok(Some(spec)), _) => SymRepWitness::from_tridiag(&spec),
                (Ok(None), MethodChoice::Tridiagonal) => {
                    Err(Error::NotFound("tridiagonal realization".into()))
                }
                (Err(e), MethodChoice::Tridiagonal) => Err(e),
                _ => companion(),
            }
        }
    }
}

/// End-to-end construction: witness, set, and the determinant check.
pub fn mub_set(p: PrimeModulus, n: usize, opts: &MubOptions) -> Result<MubSet> {
    let w = build_witness(p, n, opts)?;
    let s = generate_rep_set(&w)?;
    if let Lemma1Outcome::Fail { r, s: t } = verify_lemma1(&s) {
        return Err(Error::Internal(format!(
            "singular difference between elements {r} and {t}"
        )));
    }
    Ok(s)
}

/// Interchange document for a set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MubDocument {
    pub p: u64,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub method: Option<Method>,
    /// Ascending coefficients.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub polynomial: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub shifts: Vec<Vec<Vec<u64>>>,
    pub matrices: Vec<Vec<Vec<u64>>>,
}

impl MubSet {
    pub fn to_document(&self) -> MubDocument {
        MubDocument {
            p: self.p.value(),
            n: self.n,
            method: self.method,
            polynomial: self.polynomial.as_ref().map(|f| f.coeffs().to_vec()),
            d: self.diagonal.clone(),
            shifts: self.shifts.iter().map(|m| m.matrix().rows()).collect(),
            matrices: self.adjacency.iter().map(|m| m.matrix().rows()).collect(),
        }
    }

    /// Canonical single-line JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(&self.to_document()).expect("plain data serializes");
        s.push('\n');
        s
    }

    /// Imports a document. Imported sets are checked pairwise, so closure
    /// is not assumed.
    pub fn from_document(doc: &MubDocument) -> Result<Self> {
        let p = PrimeModulus::new(doc.p)?;
        let adjacency = doc
            .matrices
            .iter()
            .map(|rows| {
                if rows.len() != doc.n {
                    return Err(Error::ShapeMismatch(rows.len(), doc.n));
                }
                AdjacencyMatrix::from_rows(p, rows)
            })
            .collect::<Result<Vec<_>>>()?;
        let mut s = MubSet::from_matrices(p, doc.n, adjacency)?;
        s.method = doc.method;
        s.polynomial = doc.polynomial.as_ref().map(|c| PolyZp::new(p, c.clone()));
        s.diagonal = doc.d.clone();
        s.shifts = doc
            .shifts
            .iter()
            .map(|rows| AdjacencyMatrix::from_rows(p, rows))
            .collect::<Result<_>>()?;
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: MubDocument =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        MubSet::from_document(&doc)
    }
}
