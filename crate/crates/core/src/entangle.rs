//! Bipartite entanglement of graph bases and the purity identity of
//! complete sets.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{rank_of_rows, AdjacencyMatrix};
use crate::mubset::MubSet;

/// A split of the qupits `1..=n` into two nonempty parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Bipartition {
    n: usize,
    x: Vec<usize>,
    y: Vec<usize>,
}

impl Bipartition {
    /// `x` holds 1-based qupit indices; `y` is the complement.
    pub fn new(n: usize, x: &[usize]) -> Result<Self> {
        let mut xs = x.to_vec();
        xs.sort_unstable();
        xs.dedup();
        if xs.len() != x.len() {
            return Err(Error::InvalidBipartition(format!(
                "repeated index in {x:?}"
            )));
        }
        if let Some(&q) = xs.iter().find(|&&q| q == 0 || q > n) {
            return Err(Error::IndexOutOfRange(q, n));
        }
        if xs.is_empty() || xs.len() == n {
            return Err(Error::InvalidBipartition(
                "both parts must be nonempty".into(),
            ));
        }
        let y = (1..=n).filter(|q| !xs.contains(q)).collect();
        Ok(Bipartition { n, x: xs, y })
    }

    /// Every split once, taking the part containing qupit 1 as `x`.
    pub fn all(n: usize) -> Vec<Bipartition> {
        if n < 2 {
            return Vec::new();
        }
        (0u64..1 << (n - 1))
            .filter_map(|mask| {
                let x: Vec<usize> = std::iter::once(1)
                    .chain((2..=n).filter(|q| mask >> (q - 2) & 1 == 1))
                    .collect();
                Bipartition::new(n, &x).ok()
            })
            .collect()
    }

    pub fn x(&self) -> &[usize] {
        &self.x
    }

    pub fn y(&self) -> &[usize] {
        &self.y
    }

    pub fn qupits(&self) -> usize {
        self.n
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|q| q.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{}|{}", join(&self.x), join(&self.y))
    }
}

fn check_dims(a: &AdjacencyMatrix, b: &Bipartition) -> Result<()> {
    if a.dim() != b.n {
        return Err(Error::DimensionMismatch(a.dim(), b.n));
    }
    Ok(())
}

/// Rank over Z_p of the off-diagonal block with rows `x` and columns `y`.
pub fn connectivity_rank(a: &AdjacencyMatrix, b: &Bipartition) -> Result<usize> {
    check_dims(a, b)?;
    let rows: Vec<Vec<u64>> =
        b.x.iter()
            .map(|&i| b.y.iter().map(|&j| a.get(i - 1, j - 1)).collect())
            .collect();
    Ok(rank_of_rows(a.modulus(), &rows))
}

fn power_of(p: u64, k: usize) -> BigInt {
    num_traits::pow(BigInt::from(p), k)
}

/// Purity `p^-rank` of the reduced state on `x`.
pub fn purity(a: &AdjacencyMatrix, b: &Bipartition) -> Result<BigRational> {
    let r = connectivity_rank(a, b)?;
    Ok(BigRational::new(
        BigInt::one(),
        power_of(a.modulus().value(), r),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignCheck {
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub pass: bool,
}

/// Compares `(1 + sum_i p^-rank_i) / (p^n + 1)` with
/// `(d_X + d_Y) / (d_X d_Y + 1)` exactly.
pub fn design_purity_check(s: &MubSet, b: &Bipartition) -> Result<DesignCheck> {
    let p = s.modulus().value();
    let n = s.qupits();
    let expected = s
        .modulus()
        .checked_power(n)
        .ok_or_else(|| Error::Overflow(format!("{p}^{n}")))? as usize;
    if s.dimension() != expected {
        return Err(Error::IncompleteSet(s.dimension(), expected));
    }
    if b.n != n {
        return Err(Error::DimensionMismatch(b.n, n));
    }
    let sum = s
        .matrices()
        .par_iter()
        .map(|a| purity(a, b))
        .try_reduce(BigRational::zero, |x, y| Ok(x + y))?;
    let d = power_of(p, n);
    let lhs = (BigRational::one() + sum) / BigRational::from_integer(d + 1);
    let dx = power_of(p, b.x.len());
    let dy = power_of(p, b.y.len());
    let rhs = BigRational::new(&dx + &dy, dx * dy + 1);
    let pass = lhs == rhs;
    Ok(DesignCheck { lhs, rhs, pass })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BasisLabel {
    FullySeparable,
    GhzType,
    GenuinelyMultipartite,
    BiseparableStructure,
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasisLabel::FullySeparable => "fully-separable",
            BasisLabel::GhzType => "GHZ-type",
            BasisLabel::GenuinelyMultipartite => "genuinely-multipartite",
            BasisLabel::BiseparableStructure => "biseparable-structure",
        })
    }
}

fn edges(a: &AdjacencyMatrix) -> Vec<(usize, usize)> {
    let n = a.dim();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| a.get(i, j) != 0)
        .collect()
}

fn is_connected(a: &AdjacencyMatrix) -> bool {
    let n = a.dim();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for (j, s) in seen.iter_mut().enumerate() {
            if i != j && !*s && a.get(i, j) != 0 {
                *s = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn is_star_or_complete(a: &AdjacencyMatrix) -> bool {
    let n = a.dim();
    let e = edges(a);
    if e.len() == n * (n - 1) / 2 {
        return true;
    }
    e.len() == n - 1 && (0..n).any(|c| e.iter().all(|&(i, j)| i == c || j == c))
}

/// Entanglement class of the basis of `a`; diagonal entries are ignored.
///
/// Every bipartition has a nonzero connectivity rank exactly when the graph
/// is connected, which is what is tested.
pub fn classify_basis(a: &AdjacencyMatrix) -> BasisLabel {
    let n = a.dim();
    if !a.has_edges() {
        return BasisLabel::FullySeparable;
    }
    if a.modulus().is_two() && is_star_or_complete(a) {
        return BasisLabel::GhzType;
    }
    if n >= 2 && is_connected(a) {
        BasisLabel::GenuinelyMultipartite
    } else {
        BasisLabel::BiseparableStructure
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Census {
    /// Graph bases per label.
    pub graphs: BTreeMap<BasisLabel, usize>,
    /// Fully separable bases counting the computational basis.
    pub fully_separable_bases: usize,
    /// Bases whose graph is connected, i.e. entangled across every split.
    pub entangled_every_split: usize,
}

impl Census {
    pub fn count(&self, label: BasisLabel) -> usize {
        self.graphs.get(&label).copied().unwrap_or(0)
    }
}

pub fn census(s: &MubSet) -> Census {
    let labels: Vec<BasisLabel> = s.matrices().par_iter().map(classify_basis).collect();
    let mut graphs = BTreeMap::new();
    for l in &labels {
        *graphs.entry(*l).or_insert(0) += 1;
    }
    let entangled_every_split = s
        .matrices()
        .iter()
        .filter(|a| a.dim() >= 2 && a.has_edges() && is_connected(a))
        .count();
    let fully = graphs
        .get(&BasisLabel::FullySeparable)
        .copied()
        .unwrap_or(0);
    Census {
        graphs,
        fully_separable_bases: fully + 1,
        entangled_every_split,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartitionReport {
    pub ranks: Vec<usize>,
    pub purities: Vec<String>,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub p: u64,
    pub n: usize,
    pub labels: Vec<BasisLabel>,
    pub census: Census,
    pub bipartitions: BTreeMap<String, BipartitionReport>,
}

/// Labels, census and the per-split purity identity for the given splits
/// (all splits when `splits` is empty).
pub fn analyze(s: &MubSet, splits: &[Bipartition]) -> Result<AnalysisReport> {
    let n = s.qupits();
    let splits = if splits.is_empty() {
        Bipartition::all(n)
    } else {
        splits.to_vec()
    };
    let mut bipartitions = BTreeMap::new();
    for b in &splits {
        let ranks = s
            .matrices()
            .iter()
            .map(|a| connectivity_rank(a, b))
            .collect::<Result<Vec<_>>>()?;
        let p = s.modulus().value();
        let purities = ranks
            .iter()
            .map(|&r| format!("1/{}", power_of(p, r)))
            .collect();
        let check = design_purity_check(s, b)?;
        bipartitions.insert(
            b.to_string(),
            BipartitionReport {
                ranks,
                purities,
                lhs: check.lhs.to_string(),
                rhs: check.rhs.to_string(),
                pass: check.pass,
            },
        );
    }
    Ok(AnalysisReport {
        p: s.modulus().value(),
        n,
        labels: s.matrices().iter().map(classify_basis).collect(),
        census: census(s),
        bipartitions,
    })
}
