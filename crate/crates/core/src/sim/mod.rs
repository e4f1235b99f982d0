//! Dense state vectors for `n` qupits.
//!
//! Basis index `k = sum_i k_i p^(n-i)` with qupit 1 as the most significant
//! digit. All phases are exact roots of unity looked up from a table.

mod circuit;
mod dense;
mod verify;

use num_complex::Complex64;

pub use circuit::{emit_circuit, simulate_measurement, Circuit, Gate};
pub use dense::DenseOperator;
pub use verify::{
    reduced_purity, stabilizer_check, stabilizer_generators, verify_mu_numeric, BasisRef, MuReport,
    MuViolation, VerifyMode,
};

use crate::error::{Error, Result};
use crate::field::PrimeModulus;
use crate::matrix::AdjacencyMatrix;

/// Largest dimension accepted for dense state vectors.
pub const MAX_STATE_DIM: usize = 1 << 22;

/// Roots of unity of order `4` (p = 2) or `p`.
#[derive(Debug, Clone)]
pub struct Phases {
    p: u64,
    order: u64,
    roots: Vec<Complex64>,
}

impl Phases {
    pub fn new(p: PrimeModulus) -> Self {
        let order = if p.is_two() { 4 } else { p.value() };
        let roots = (0..order)
            .map(|k| {
                Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / order as f64)
            })
            .collect();
        Phases {
            p: p.value(),
            order,
            roots,
        }
    }

    /// Order of the finest root in the table.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// `omega_order^e`.
    #[inline]
    pub fn fine(&self, e: u64) -> Complex64 {
        self.roots[(e % self.order) as usize]
    }

    /// `omega_p^e`.
    #[inline]
    pub fn omega(&self, e: u64) -> Complex64 {
        self.fine(e % self.p * (self.order / self.p))
    }

    /// Exponent of `omega_order` for the one-qupit phase gate on digit `k`.
    #[inline]
    pub fn local_exponent(&self, k: u64) -> u64 {
        if self.p == 2 {
            k
        } else {
            k * k.saturating_sub(1) / 2 % self.p
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    p: PrimeModulus,
    n: usize,
    amps: Vec<Complex64>,
}

pub(crate) fn state_dim(p: PrimeModulus, n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    p.checked_power(n)
        .map(|d| d as usize)
        .filter(|&d| d <= MAX_STATE_DIM)
        .ok_or(Error::DimensionTooLarge(usize::MAX))
}

/// Digits `k_1 .. k_n` of a basis index.
pub fn digits(p: PrimeModulus, n: usize, mut index: usize) -> Vec<u64> {
    let mut out = vec![0u64; n];
    for slot in out.iter_mut().rev() {
        *slot = (index % p.value() as usize) as u64;
        index /= p.value() as usize;
    }
    out
}

/// Basis index of digits `k_1 .. k_n`.
pub fn index_of_digits(p: PrimeModulus, k: &[u64]) -> usize {
    k.iter()
        .fold(0usize, |acc, &v| acc * p.value() as usize + v as usize)
}

impl StateVector {
    pub fn from_amplitudes(p: PrimeModulus, n: usize, amps: Vec<Complex64>) -> Result<Self> {
        let d = state_dim(p, n)?;
        if amps.len() != d {
            return Err(Error::DimensionMismatch(amps.len(), d));
        }
        Ok(StateVector { p, n, amps })
    }

    pub fn plus_state(p: PrimeModulus, n: usize) -> Result<Self> {
        let d = state_dim(p, n)?;
        let a = Complex64::new(1.0 / (d as f64).sqrt(), 0.0);
        Ok(StateVector {
            p,
            n,
            amps: vec![a; d],
        })
    }

    /// Computational basis state `|k_1 ... k_n>`.
    pub fn computational(p: PrimeModulus, n: usize, k: &[u64]) -> Result<Self> {
        let d = state_dim(p, n)?;
        if k.len() != n {
            return Err(Error::DimensionMismatch(k.len(), n));
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); d];
        amps[index_of_digits(p, &k.iter().map(|&v| p.reduce(v)).collect::<Vec<_>>())] =
            Complex64::new(1.0, 0.0);
        Ok(StateVector { p, n, amps })
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    pub fn qupits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        if self.amps.len() != other.amps.len() {
            return Err(Error::DimensionMismatch(self.amps.len(), other.amps.len()));
        }
        Ok(inner(&self.amps, &other.amps))
    }

    /// Squared moduli of the amplitudes.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    pub(crate) fn amps_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }
}

#[inline]
pub(crate) fn inner(u: &[Complex64], v: &[Complex64]) -> Complex64 {
    u.iter()
        .zip(v)
        .fold(Complex64::new(0.0, 0.0), |acc, (a, b)| acc + a.conj() * b)
}

/// `|<u|v>|^2`.
pub fn overlap(u: &StateVector, v: &StateVector) -> Result<f64> {
    Ok(u.inner(v)?.norm_sqr())
}

/// Exponent of `omega_order` carried by basis index `k` of `|G(m)>`.
fn phase_exponent(a: &AdjacencyMatrix, m: &[u64], k: &[u64], ph: &Phases) -> u64 {
    let n = k.len();
    let p = ph.p;
    let scale = ph.order / p;
    let mut fine = 0u64;
    let mut coarse = 0u64;
    for i in 0..n {
        if k[i] == 0 {
            continue;
        }
        fine += a.get(i, i) * ph.local_exponent(k[i]);
        coarse += m[i] * k[i];
        for j in i + 1..n {
            coarse += a.get(i, j) * k[i] * k[j];
        }
        coarse %= p;
    }
    (fine + coarse * scale) % ph.order
}

fn check_graph(a: &AdjacencyMatrix, m: &[u64]) -> Result<()> {
    if m.len() != a.dim() {
        return Err(Error::DimensionMismatch(m.len(), a.dim()));
    }
    let p = a.modulus().value();
    if let Some(&bad) = m.iter().find(|&&v| v >= p) {
        return Err(Error::InvalidLabel(format!(
            "component {bad} not below {p}"
        )));
    }
    Ok(())
}

/// `|G(m)> = Z^{m_1} ... Z^{m_n} |G>`, evaluated amplitude by amplitude.
pub fn basis_element(a: &AdjacencyMatrix, m: &[u64]) -> Result<StateVector> {
    check_graph(a, m)?;
    let p = a.modulus();
    let n = a.dim();
    let d = state_dim(p, n)?;
    let ph = Phases::new(p);
    let norm = 1.0 / (d as f64).sqrt();
    let amps = (0..d)
        .map(|idx| ph.fine(phase_exponent(a, m, &digits(p, n, idx), &ph)) * norm)
        .collect();
    Ok(StateVector { p, n, amps })
}

/// `|G> = prod U_ij^{A_ij} |+>^n`.
pub fn graph_state(a: &AdjacencyMatrix) -> Result<StateVector> {
    basis_element(a, &vec![0; a.dim()])
}

/// The diagonal gates preparing `|G>` from `|+>^n`, in row-major order of
/// the upper triangle.
pub fn graph_gates(a: &AdjacencyMatrix) -> Vec<Gate> {
    let n = a.dim();
    let mut gates = Vec::new();
    for i in 0..n {
        for j in i..n {
            let v = a.get(i, j);
            if v == 0 {
                continue;
            }
            gates.push(if i == j {
                Gate::LocalPhase {
                    qupit: i + 1,
                    power: v,
                }
            } else {
                Gate::ControlledPhase {
                    control: i + 1,
                    target: j + 1,
                    power: v,
                }
            });
        }
    }
    gates
}
