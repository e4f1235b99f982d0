//! Dense square matrices over Z_p.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::PrimeModulus;
use crate::poly::PolyZp;

/// An `n x n` matrix over Z_p stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatZp {
    p: PrimeModulus,
    n: usize,
    data: Vec<u64>,
}

impl MatZp {
    pub fn zeros(p: PrimeModulus, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        Ok(MatZp {
            p,
            n,
            data: vec![0; n * n],
        })
    }

    pub fn identity(p: PrimeModulus, n: usize) -> Result<Self> {
        let mut m = MatZp::zeros(p, n)?;
        for i in 0..n {
            m.data[i * n + i] = 1 % p.value();
        }
        Ok(m)
    }

    pub fn diagonal(p: PrimeModulus, diag: &[u64]) -> Result<Self> {
        let mut m = MatZp::zeros(p, diag.len())?;
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        Ok(m)
    }

    pub fn from_rows<R: AsRef<[u64]>>(p: PrimeModulus, rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut m = MatZp::zeros(p, n)?;
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != n {
                return Err(Error::Ragged);
            }
            for (j, &v) in r.iter().enumerate() {
                m.data[i * n + j] = p.reduce(v);
            }
        }
        Ok(m)
    }

    pub fn from_i64_rows<R: AsRef<[i64]>>(p: PrimeModulus, rows: &[R]) -> Result<Self> {
        let converted: Vec<Vec<u64>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&v| p.reduce_i64(v)).collect())
            .collect();
        MatZp::from_rows(p, &converted)
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.n + j] = self.p.reduce(v);
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.data.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> MatZp {
        let mut t = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                t.data[j * self.n + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn trace(&self) -> u64 {
        (0..self.n).fold(0, |acc, i| self.p.add(acc, self.get(i, i)))
    }

    fn check(&self, other: &MatZp) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p.value(), other.p.value()));
        }
        if self.n != other.n {
            return Err(Error::ShapeMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &MatZp) -> Result<MatZp> {
        self.check(other)?;
        let p = self.p;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| p.add(a, b))
            .collect();
        Ok(MatZp { p, n: self.n, data })
    }

    pub fn checked_sub(&self, other: &MatZp) -> Result<MatZp> {
        self.check(other)?;
        let p = self.p;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| p.sub(a, b))
            .collect();
        Ok(MatZp { p, n: self.n, data })
    }

    pub fn checked_mul(&self, other: &MatZp) -> Result<MatZp> {
        self.check(other)?;
        let (p, n) = (self.p, self.n);
        let mut data = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    data[idx] = p.add(data[idx], p.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(MatZp { p, n, data })
    }

    pub fn scale(&self, s: u64) -> MatZp {
        let p = self.p;
        let s = p.reduce(s);
        MatZp {
            p,
            n: self.n,
            data: self.data.iter().map(|&v| p.mul(v, s)).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> MatZp {
        let mut acc = MatZp::identity(self.p, self.n).expect("n >= 1");
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base).expect("same shape");
            }
            base = base.checked_mul(&base).expect("same shape");
            e >>= 1;
        }
        acc
    }

    pub fn det(&self) -> u64 {
        let p = self.p;
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = 1u64;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| a[r * n + col] != 0) else {
                return 0;
            };
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                }
                det = p.neg(det);
            }
            let pv = a[col * n + col];
            det = p.mul(det, pv);
            let inv = p.inv(pv).expect("nonzero pivot");
            for r in col + 1..n {
                let f = p.mul(a[r * n + col], inv);
                if f == 0 {
                    continue;
                }
                for j in col..n {
                    a[r * n + j] = p.sub(a[r * n + j], p.mul(f, a[col * n + j]));
                }
            }
        }
        det
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(self.p, &self.rows())
    }

    pub fn inverse(&self) -> Result<MatZp> {
        let p = self.p;
        let n = self.n;
        let mut a = self.clone();
        let mut inv = MatZp::identity(p, n)?;
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| a.get(r, col) != 0)
                .ok_or(Error::Singular)?;
            if piv != col {
                a.swap_rows(piv, col);
                inv.swap_rows(piv, col);
            }
            let s = p.inv(a.get(col, col)).expect("nonzero pivot");
            a.scale_row(col, s);
            inv.scale_row(col, s);
            for r in 0..n {
                let f = a.get(r, col);
                if r != col && f != 0 {
                    a.add_row_multiple(r, col, p.neg(f));
                    inv.add_row_multiple(r, col, p.neg(f));
                }
            }
        }
        Ok(inv)
    }

    /// `det(x I - self)` by the division-free Berkowitz algorithm.
    pub fn char_poly(&self) -> PolyZp {
        let p = self.p;
        let n = self.n;
        // Descending coefficients: v[0] x^r + v[1] x^(r-1) + ...
        let mut v: Vec<u64> = vec![1];
        for r in 1..=n {
            let k = r - 1;
            let a_rr = self.get(k, k);
            // Toeplitz column: 1, -a, -R S, -R M S, ..., -R M^(k-1) S
            let mut col = vec![1u64, p.neg(a_rr)];
            let mut s: Vec<u64> = (0..k).map(|i| self.get(i, k)).collect();
            for _ in 0..k {
                let rs = (0..k).fold(0, |acc, j| p.add(acc, p.mul(self.get(k, j), s[j])));
                col.push(p.neg(rs));
                s = (0..k)
                    .map(|i| (0..k).fold(0, |acc, j| p.add(acc, p.mul(self.get(i, j), s[j]))))
                    .collect();
            }
            let mut next = vec![0u64; r + 1];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, &vj) in v.iter().enumerate() {
                    if i >= j {
                        *slot = p.add(*slot, p.mul(col[i - j], vj));
                    }
                }
            }
            v = next;
        }
        v.reverse();
        PolyZp::new(p, v)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.n {
            self.data.swap(a * self.n + j, b * self.n + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.n {
            self.data.swap(i * self.n + a, i * self.n + b);
        }
    }

    pub fn scale_row(&mut self, i: usize, s: u64) {
        let p = self.p;
        for j in 0..self.n {
            self.data[i * self.n + j] = p.mul(self.data[i * self.n + j], s);
        }
    }

    /// `row[target] += f * row[source]`.
    pub fn add_row_multiple(&mut self, target: usize, source: usize, f: u64) {
        let p = self.p;
        let n = self.n;
        for j in 0..n {
            let v = p.mul(f, self.data[source * n + j]);
            self.data[target * n + j] = p.add(self.data[target * n + j], v);
        }
    }

    /// Replaces rows `idx` by `block * rows(idx)`.
    pub fn mix_rows(&mut self, idx: &[usize], block: &[Vec<u64>]) {
        let p = self.p;
        let n = self.n;
        let old: Vec<Vec<u64>> = idx.iter().map(|&i| self.row(i).to_vec()).collect();
        for (bi, &i) in idx.iter().enumerate() {
            for j in 0..n {
                let v = block[bi]
                    .iter()
                    .zip(&old)
                    .fold(0, |acc, (&c, r)| p.add(acc, p.mul(c, r[j])));
                self.data[i * n + j] = v;
            }
        }
    }

    /// Replaces columns `idx` by `cols(idx) * block^T`.
    pub fn mix_cols(&mut self, idx: &[usize], block: &[Vec<u64>]) {
        let p = self.p;
        let n = self.n;
        for i in 0..n {
            let old: Vec<u64> = idx.iter().map(|&j| self.data[i * n + j]).collect();
            for (bj, &j) in idx.iter().enumerate() {
                let v = block[bj]
                    .iter()
                    .zip(&old)
                    .fold(0, |acc, (&c, &o)| p.add(acc, p.mul(c, o)));
                self.data[i * n + j] = v;
            }
        }
    }
}

/// Rank over Z_p of a possibly rectangular list of rows.
pub fn rank_of_rows(p: PrimeModulus, rows: &[Vec<u64>]) -> usize {
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| p.reduce(v)).collect())
        .collect();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(piv, rank);
        let inv = p.inv(a[rank][col]).expect("nonzero pivot");
        for r in rank + 1..a.len() {
            let f = p.mul(a[r][col], inv);
            if f == 0 {
                continue;
            }
            let (top, bottom) = a.split_at_mut(r);
            for (x, &y) in bottom[0][col..cols].iter_mut().zip(&top[rank][col..cols]) {
                *x = p.sub(*x, p.mul(f, y));
            }
        }
        rank += 1;
    }
    rank
}

/// Companion matrix: ones on the superdiagonal, last row `-c_0 .. -c_{n-1}`.
pub fn companion_matrix(f: &PolyZp) -> Result<MatZp> {
    let n = match f.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        Some(n) => n,
    };
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let p = f.modulus();
    let mut c = MatZp::zeros(p, n)?;
    for i in 0..n - 1 {
        c.set(i, i + 1, 1);
    }
    for j in 0..n {
        c.set(n - 1, j, p.neg(f.coeff(j)));
    }
    Ok(c)
}

/// `pmat * b * pmat^T`.
pub fn congruence(pmat: &MatZp, b: &MatZp) -> Result<MatZp> {
    pmat.checked_mul(b)?.checked_mul(&pmat.transpose())
}

impl fmt::Display for MatZp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.data.chunks(self.n).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            write!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MatDoc {
    p: PrimeModulus,
    n: usize,
    rows: Vec<Vec<u64>>,
}

impl Serialize for MatZp {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatDoc {
            p: self.p,
            n: self.n,
            rows: self.rows(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MatZp {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = MatDoc::deserialize(d)?;
        let m = MatZp::from_rows(doc.p, &doc.rows).map_err(serde::de::Error::custom)?;
        if m.n != doc.n {
            return Err(serde::de::Error::custom(Error::ShapeMismatch(m.n, doc.n)));
        }
        Ok(m)
    }
}

/// A symmetric matrix read as a graph: off-diagonal entries are edge
/// multiplicities, diagonal entries are self-loops.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct AdjacencyMatrix(MatZp);

impl AdjacencyMatrix {
    pub fn new(m: MatZp) -> Result<Self> {
        if !m.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(AdjacencyMatrix(m))
    }

    pub fn from_rows<R: AsRef<[u64]>>(p: PrimeModulus, rows: &[R]) -> Result<Self> {
        AdjacencyMatrix::new(MatZp::from_rows(p, rows)?)
    }

    pub fn zeros(p: PrimeModulus, n: usize) -> Result<Self> {
        Ok(AdjacencyMatrix(MatZp::zeros(p, n)?))
    }

    pub fn matrix(&self) -> &MatZp {
        &self.0
    }

    pub fn into_matrix(self) -> MatZp {
        self.0
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.0.modulus()
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.0.get(i, j)
    }

    pub fn checked_add(&self, other: &AdjacencyMatrix) -> Result<AdjacencyMatrix> {
        Ok(AdjacencyMatrix(self.0.checked_add(&other.0)?))
    }

    pub fn has_edges(&self) -> bool {
        let n = self.dim();
        (0..n).any(|i| (0..n).any(|j| i != j && self.get(i, j) != 0))
    }
}

impl<'de> Deserialize<'de> for AdjacencyMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let m = MatZp::deserialize(d)?;
        AdjacencyMatrix::new(m).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for AdjacencyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
