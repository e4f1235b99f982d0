//! Gate lists and their text format.
//!
//! ```text
//! #qupits 3 prime 2
//! CP 1 2 1
//! P 1 3
//! FDAG 1
//! ```

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{digits, Phases, StateVector};
use crate::error::{Error, Result};
use crate::field::PrimeModulus;
use crate::matrix::AdjacencyMatrix;

/// A gate acting on 1-based qupit indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "gate", rename_all = "kebab-case")]
pub enum Gate {
    Fourier(usize),
    FourierDag(usize),
    /// `U_ii^power`; the power is taken mod 4 for p = 2 and mod p otherwise.
    LocalPhase {
        qupit: usize,
        power: u64,
    },
    /// `U_ij^power`, multiplying `|..k_i..l_j..>` by `omega_p^(power k l)`.
    ControlledPhase {
        control: usize,
        target: usize,
        power: u64,
    },
    PauliZ {
        qupit: usize,
        power: u64,
    },
}

impl Gate {
    fn qupits(&self) -> Vec<usize> {
        match *self {
            Gate::Fourier(i) | Gate::FourierDag(i) => vec![i],
            Gate::LocalPhase { qupit, .. } | Gate::PauliZ { qupit, .. } => vec![qupit],
            Gate::ControlledPhase {
                control, target, ..
            } => vec![control, target],
        }
    }

    /// Conventional name; qubit circuits use H, R_{pi/4} and CZ.
    pub fn name(&self, p: PrimeModulus) -> String {
        let qubit = p.is_two();
        match *self {
            Gate::Fourier(i) if qubit => format!("H({i})"),
            Gate::FourierDag(i) if qubit => format!("H({i})"),
            Gate::Fourier(i) => format!("F({i})"),
            Gate::FourierDag(i) => format!("F^dag({i})"),
            Gate::LocalPhase { qupit, power } if qubit => format!("R_pi/4({qupit})^{power}"),
            Gate::LocalPhase { qupit, power } => format!("U({qupit},{qupit})^{power}"),
            Gate::ControlledPhase {
                control,
                target,
                power,
            } if qubit => {
                format!("CZ({control},{target})^{power}")
            }
            Gate::ControlledPhase {
                control,
                target,
                power,
            } => {
                format!("U({control},{target})^{power}")
            }
            Gate::PauliZ { qupit, power } => format!("Z({qupit})^{power}"),
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Gate::Fourier(i) => write!(f, "F {i}"),
            Gate::FourierDag(i) => write!(f, "FDAG {i}"),
            Gate::LocalPhase { qupit, power } => write!(f, "P {qupit} {power}"),
            Gate::ControlledPhase {
                control,
                target,
                power,
            } => {
                write!(f, "CP {control} {target} {power}")
            }
            Gate::PauliZ { qupit, power } => write!(f, "Z {qupit} {power}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Circuit {
    pub p: PrimeModulus,
    pub n: usize,
    pub gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(p: PrimeModulus, n: usize, gates: Vec<Gate>) -> Result<Self> {
        for g in &gates {
            for q in g.qupits() {
                if q == 0 || q > n {
                    return Err(Error::IndexOutOfRange(q, n));
                }
            }
            if let Gate::ControlledPhase {
                control, target, ..
            } = g
            {
                if control == target {
                    return Err(Error::Parse("controlled phase on a single qupit".into()));
                }
            }
        }
        Ok(Circuit { p, n, gates })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("#qupits {} prime {}\n", self.n, self.p);
        for g in &self.gates {
            s.push_str(&g.to_string());
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty circuit".into()))?;
        let h: Vec<&str> = header.split_whitespace().collect();
        let (n, p) = match h.as_slice() {
            ["#qupits", n, "prime", p] => (parse_num::<usize>(n)?, parse_num::<u64>(p)?),
            _ => return Err(Error::Parse(format!("bad header: {header}"))),
        };
        let p = PrimeModulus::new(p)?;
        let mut gates = Vec::new();
        for line in lines {
            let t: Vec<&str> = line.split_whitespace().collect();
            let g = match t.as_slice() {
                [] => continue,
                ["F", i] => Gate::Fourier(parse_num(i)?),
                ["FDAG", i] => Gate::FourierDag(parse_num(i)?),
                ["P", i, k] => Gate::LocalPhase {
                    qupit: parse_num(i)?,
                    power: parse_num(k)?,
                },
                ["CP", i, j, k] => Gate::ControlledPhase {
                    control: parse_num(i)?,
                    target: parse_num(j)?,
                    power: parse_num(k)?,
                },
                ["Z", i, k] => Gate::PauliZ {
                    qupit: parse_num(i)?,
                    power: parse_num(k)?,
                },
                _ => return Err(Error::Parse(format!("bad gate line: {line}"))),
            };
            gates.push(g);
        }
        Circuit::new(p, n, gates)
    }
}

fn parse_num<T: std::str::FromStr>(s: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::Parse(format!("not a number: {s}")))
}

impl StateVector {
    pub fn apply(&mut self, g: &Gate) -> Result<()> {
        let n = self.qupits();
        for q in g.qupits() {
            if q == 0 || q > n {
                return Err(Error::IndexOutOfRange(q, n));
            }
        }
        let p = self.modulus();
        let ph = Phases::new(p);
        match *g {
            Gate::Fourier(i) => self.fourier(i, false, &ph),
            Gate::FourierDag(i) => self.fourier(i, true, &ph),
            Gate::LocalPhase { qupit, power } => {
                let power = power % ph.order();
                self.diagonal(|k| power * ph.local_exponent(k[qupit - 1]), &ph);
            }
            Gate::ControlledPhase {
                control,
                target,
                power,
            } => {
                let scale = ph.order() / p.value();
                let power = power % p.value();
                self.diagonal(
                    |k| power * k[control - 1] * k[target - 1] % p.value() * scale,
                    &ph,
                );
            }
            Gate::PauliZ { qupit, power } => {
                let scale = ph.order() / p.value();
                let power = power % p.value();
                self.diagonal(|k| power * k[qupit - 1] % p.value() * scale, &ph);
            }
        }
        Ok(())
    }

    fn diagonal<F: Fn(&[u64]) -> u64>(&mut self, exponent: F, ph: &Phases) {
        let (p, n) = (self.modulus(), self.qupits());
        for (idx, a) in self.amps_mut().iter_mut().enumerate() {
            *a *= ph.fine(exponent(&digits(p, n, idx)));
        }
    }

    fn fourier(&mut self, qupit: usize, dagger: bool, ph: &Phases) {
        let p = self.modulus().value() as usize;
        let n = self.qupits();
        let stride = p.pow((n - qupit) as u32);
        let norm = 1.0 / (p as f64).sqrt();
        let amps = self.amps_mut();
        let d = amps.len();
        let mut buf = vec![Complex64::new(0.0, 0.0); p];
        for base in 0..d {
            if !(base / stride).is_multiple_of(p) {
                continue;
            }
            for (j, slot) in buf.iter_mut().enumerate() {
                *slot = (0..p).fold(Complex64::new(0.0, 0.0), |acc, k| {
                    let e = (j * k) % p;
                    let e = if dagger { (p - e) % p } else { e };
                    acc + ph.omega(e as u64) * amps[base + k * stride]
                }) * norm;
            }
            for (j, v) in buf.iter().enumerate() {
                amps[base + j * stride] = *v;
            }
        }
    }
}

/// Measurement circuit for the basis of `a`: undo the graph phases, then
/// apply the inverse Fourier transform on every qupit.
pub fn emit_circuit(a: &AdjacencyMatrix) -> Circuit {
    let p = a.modulus();
    let n = a.dim();
    let pv = p.value();
    let mut gates = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let v = a.get(i, j);
            if v != 0 {
                gates.push(Gate::ControlledPhase {
                    control: i + 1,
                    target: j + 1,
                    power: pv - v,
                });
            }
        }
    }
    for i in 0..n {
        let v = a.get(i, i);
        if v != 0 {
            let power = if p.is_two() {
                (4 - v) % 4
            } else {
                (pv - v) % pv
            };
            gates.push(Gate::LocalPhase {
                qupit: i + 1,
                power,
            });
        }
    }
    gates.extend((1..=n).map(Gate::FourierDag));
    Circuit { p, n, gates }
}

/// Runs `c` on `s` and returns outcome probabilities in basis order.
pub fn simulate_measurement(c: &Circuit, s: &StateVector) -> Result<Vec<f64>> {
    if c.p != s.modulus() {
        return Err(Error::ModulusMismatch(c.p.value(), s.modulus().value()));
    }
    if c.n != s.qupits() {
        return Err(Error::DimensionMismatch(c.n, s.qupits()));
    }
    let mut state = s.clone();
    for g in &c.gates {
        state.apply(g)?;
    }
    Ok(state.probabilities())
}
