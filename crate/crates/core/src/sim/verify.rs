use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::dense::DenseOperator;
use super::{basis_element, digits, inner, state_dim, Phases, StateVector};
use crate::error::{Error, Result};
use crate::matrix::AdjacencyMatrix;
use crate::mubset::MubSet;

/// Largest dimension for which dense stabilizer operators are built.
pub const MAX_OPERATOR_DIM: usize = 4096;

const MAX_REPORTED: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    /// Every cross-basis pair.
    Full,
    /// `count` random cross-basis pairs drawn with a fixed seed.
    Sampled { count: usize, seed: u64 },
}

/// A basis of the family: a graph basis by set index, or the computational one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BasisRef {
    Graph(usize),
    Computational,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MuViolation {
    pub basis_a: BasisRef,
    pub element_a: usize,
    pub basis_b: BasisRef,
    pub element_b: usize,
    pub overlap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MuReport {
    pub dimension: usize,
    pub tolerance: f64,
    pub checked: u64,
    pub worst_deviation: f64,
    /// At most a few of the violations found.
    pub violations: Vec<MuViolation>,
    pub violation_count: u64,
    pub pass: bool,
}

#[derive(Default)]
struct Tally {
    checked: u64,
    worst: f64,
    count: u64,
    violations: Vec<MuViolation>,
}

impl Tally {
    fn record(&mut self, target: f64, tol: f64, v: MuViolation) {
        self.checked += 1;
        let dev = (v.overlap - target).abs();
        if dev > self.worst || dev.is_nan() {
            self.worst = if dev.is_nan() { f64::INFINITY } else { dev };
        }
        if dev.is_nan() || dev > tol {
            self.count += 1;
            if self.violations.len() < MAX_REPORTED {
                self.violations.push(v);
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.worst = self.worst.max(other.worst);
        self.count += other.count;
        for v in other.violations {
            if self.violations.len() < MAX_REPORTED {
                self.violations.push(v);
            }
        }
        self
    }
}

fn basis_vectors(a: &AdjacencyMatrix) -> Result<Vec<Vec<Complex64>>> {
    let p = a.modulus();
    let n = a.dim();
    let d = state_dim(p, n)?;
    (0..d)
        .map(|m| Ok(basis_element(a, &digits(p, n, m))?.amplitudes().to_vec()))
        .collect()
}

/// Checks `| |<i_r|j_s>|^2 - 1/p^n | <= tol` across all bases of the family,
/// the computational basis included.
pub fn verify_mu_numeric(s: &MubSet, tol: f64, mode: VerifyMode) -> Result<MuReport> {
    let d = s.dimension();
    let target = 1.0 / d as f64;
    let mats = s.matrices();
    let tally = match mode {
        VerifyMode::Full => {
            let cache: Option<Vec<Vec<Vec<Complex64>>>> = if d.saturating_pow(3) <= 1 << 22 {
                Some(mats.par_iter().map(basis_vectors).collect::<Result<_>>()?)
            } else {
                None
            };
            (0..d)
                .into_par_iter()
                .map(|r| -> Result<Tally> {
                    let mut t = Tally::default();
                    let owned;
                    let vr = match &cache {
                        Some(c) => &c[r],
                        None => {
                            owned = basis_vectors(&mats[r])?;
                            &owned
                        }
                    };
                    for (i, u) in vr.iter().enumerate() {
                        for (k, amp) in u.iter().enumerate() {
                            t.record(
                                target,
                                tol,
                                MuViolation {
                                    basis_a: BasisRef::Graph(r),
                                    element_a: i,
                                    basis_b: BasisRef::Computational,
                                    element_b: k,
                                    overlap: amp.norm_sqr(),
                                },
                            );
                        }
                    }
                    for s_idx in r + 1..d {
                        let owned_s;
                        let vs = match &cache {
                            Some(c) => &c[s_idx],
                            None => {
                                owned_s = basis_vectors(&mats[s_idx])?;
                                &owned_s
                            }
                        };
                        for (i, u) in vr.iter().enumerate() {
                            for (j, v) in vs.iter().enumerate() {
                                t.record(
                                    target,
                                    tol,
                                    MuViolation {
                                        basis_a: BasisRef::Graph(r),
                                        element_a: i,
                                        basis_b: BasisRef::Graph(s_idx),
                                        element_b: j,
                                        overlap: inner(u, v).norm_sqr(),
                                    },
                                );
                            }
                        }
                    }
                    Ok(t)
                })
                .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?
        }
        VerifyMode::Sampled { count, seed } => {
            let p = s.modulus();
            let n = s.qupits();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let draws: Vec<(usize, usize, usize, usize)> = (0..count)
                .map(|_| {
                    let r = rng.gen_range(0..=d);
                    let mut t = rng.gen_range(0..d);
                    if t >= r {
                        t += 1;
                    }
                    (r, rng.gen_range(0..d), t, rng.gen_range(0..d))
                })
                .collect();
            draws
                .par_iter()
                .map(|&(r, i, t, j)| -> Result<Tally> {
                    let mut tally = Tally::default();
                    let pick = |b: usize, e: usize| -> Result<(BasisRef, Option<StateVector>)> {
                        if b == d {
                            Ok((BasisRef::Computational, None))
                        } else {
                            Ok((
                                BasisRef::Graph(b),
                                Some(basis_element(&mats[b], &digits(p, n, e))?),
                            ))
                        }
                    };
                    let (ra, va) = pick(r, i)?;
                    let (rb, vb) = pick(t, j)?;
                    let overlap = match (va, vb) {
                        (Some(u), Some(v)) => inner(u.amplitudes(), v.amplitudes()).norm_sqr(),
                        (Some(u), None) => u.amplitudes()[j].norm_sqr(),
                        (None, Some(v)) => v.amplitudes()[i].norm_sqr(),
                        (None, None) => unreachable!("distinct bases"),
                    };
                    tally.record(
                        target,
                        tol,
                        MuViolation {
                            basis_a: ra,
                            element_a: i,
                            basis_b: rb,
                            element_b: j,
                            overlap,
                        },
                    );
                    Ok(tally)
                })
                .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?
        }
    };
    Ok(MuReport {
        dimension: d,
        tolerance: tol,
        checked: tally.checked,
        worst_deviation: tally.worst,
        pass: tally.count == 0,
        violation_count: tally.count,
        violations: tally.violations,
    })
}

/// Generators `S_i` of the stabilizer of `|G(0)>`:
/// `omega_4^{A_ii} X_i Z_i^{A_ii} prod_j Z_j^{A_ij}` for p = 2 and
/// `X_i Z_i^{A_ii} prod_j Z_j^{A_ij}` for odd p.
pub fn stabilizer_generators(a: &AdjacencyMatrix) -> Result<Vec<DenseOperator>> {
    let p = a.modulus();
    let n = a.dim();
    let d = state_dim(p, n)?;
    if d > MAX_OPERATOR_DIM {
        return Err(Error::DimensionTooLarge(d));
    }
    let ph = Phases::new(p);
    let pv = p.value() as usize;
    let zpow = |e: u64| {
        DenseOperator::from_fn(pv, |r, c| {
            if r == c {
                ph.omega(e * r as u64)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    };
    let xzpow = |e: u64| {
        DenseOperator::from_fn(pv, |r, c| {
            if r == (c + 1) % pv {
                ph.omega(e * c as u64)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    };
    Ok((0..n)
        .map(|i| {
            let mut op = DenseOperator::identity(1);
            for j in 0..n {
                let local = if j == i {
                    xzpow(a.get(i, i))
                } else {
                    zpow(a.get(i, j))
                };
                op = op.kron(&local);
            }
            if p.is_two() {
                op.scale(ph.fine(a.get(i, i)))
            } else {
                op
            }
        })
        .collect())
}

/// Verifies `S_i |G(m)> = lambda_i |G(m)>` for every generator, with
/// `lambda_i = (-1)^{m_i}` for p = 2 and `omega_p^{-m_i}` for odd p.
pub fn stabilizer_check(a: &AdjacencyMatrix, m: &[u64]) -> Result<bool> {
    let state = basis_element(a, m)?;
    let p = a.modulus();
    let ph = Phases::new(p);
    for (i, s) in stabilizer_generators(a)?.iter().enumerate() {
        let lambda = ph.omega(p.neg(m[i]));
        let image = s.apply(state.amplitudes())?;
        let ok = image
            .iter()
            .zip(state.amplitudes())
            .all(|(x, y)| (x - lambda * y).norm() <= 1e-10);
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `tr(rho_X^2)` for the qupits in `x` (1-based), by reshaping the state
/// into a `d_X x d_Y` matrix `M` and summing `|M M^dag|^2` entrywise.
pub fn reduced_purity(state: &StateVector, x: &[usize]) -> Result<f64> {
    let n = state.qupits();
    let p = state.modulus();
    if x.is_empty() || x.iter().any(|&q| q == 0 || q > n) {
        return Err(Error::InvalidBipartition(format!("{x:?}")));
    }
    let y: Vec<usize> = (1..=n).filter(|q| !x.contains(q)).collect();
    let pv = p.value() as usize;
    let dx = pv.pow(x.len() as u32);
    let dy = pv.pow(y.len() as u32);
    let mut m = vec![Complex64::new(0.0, 0.0); dx * dy];
    for (idx, amp) in state.amplitudes().iter().enumerate() {
        let k = digits(p, n, idx);
        let row = x.iter().fold(0, |acc, &q| acc * pv + k[q - 1] as usize);
        let col = y.iter().fold(0, |acc, &q| acc * pv + k[q - 1] as usize);
        m[row * dy + col] = *amp;
    }
    let mut purity = 0.0;
    for r in 0..dx {
        for c in 0..dx {
            let v = inner(&m[c * dy..(c + 1) * dy], &m[r * dy..(r + 1) * dy]);
            purity += v.norm_sqr();
        }
    }
    Ok(purity)
}
