use num_complex::Complex64;

use crate::error::{Error, Result};

/// A dense square complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseOperator {
    dim: usize,
    data: Vec<Complex64>,
}

impl DenseOperator {
    pub fn identity(dim: usize) -> Self {
        let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        DenseOperator { dim, data }
    }

    pub fn from_fn<F: Fn(usize, usize) -> Complex64>(dim: usize, f: F) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        DenseOperator { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    pub fn scale(&self, s: Complex64) -> Self {
        DenseOperator {
            dim: self.dim,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    pub fn kron(&self, other: &DenseOperator) -> Self {
        let d = self.dim * other.dim;
        DenseOperator::from_fn(d, |i, j| {
            self.get(i / other.dim, j / other.dim) * other.get(i % other.dim, j % other.dim)
        })
    }

    pub fn apply(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch(v.len(), self.dim));
        }
        Ok((0..self.dim)
            .map(|i| {
                self.data[i * self.dim..(i + 1) * self.dim]
                    .iter()
                    .zip(v)
                    .fold(Complex64::new(0.0, 0.0), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_of_identities() {
        let i2 = DenseOperator::identity(2);
        let i3 = DenseOperator::identity(3);
        assert_eq!(i2.kron(&i3), DenseOperator::identity(6));
        let x = DenseOperator::from_fn(2, |i, j| Complex64::new((i != j) as u8 as f64, 0.0));
        let xi = x.kron(&i2);
        let v: Vec<Complex64> = (0..4).map(|k| Complex64::new(k as f64, 0.0)).collect();
        let w = xi.apply(&v).unwrap();
        assert_eq!(w[0].re, 2.0);
        assert_eq!(w[3].re, 1.0);
    }
}
