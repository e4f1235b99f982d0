//! Congruence reduction of symmetric matrices to the identity.
//!
//! Both routines return `P` with `P * B * P^T = 1`. `P` is accumulated
//! from elementary congruences: row/column swaps, adding a multiple of one
//! row and column to another, and small block transforms on two or three
//! indices.

use crate::error::{Error, Result};
use crate::field::{find_nonresidue, qr_test, sqrt_mod, PrimeModulus};
use crate::matrix::{congruence, MatZp};

struct Tracker {
    p: PrimeModulus,
    b: MatZp,
    acc: MatZp,
}

impl Tracker {
    fn new(b: &MatZp) -> Result<Self> {
        Ok(Tracker {
            p: b.modulus(),
            b: b.clone(),
            acc: MatZp::identity(b.modulus(), b.dim())?,
        })
    }

    fn swap(&mut self, i: usize, j: usize) {
        if i != j {
            self.b.swap_rows(i, j);
            self.b.swap_cols(i, j);
            self.acc.swap_rows(i, j);
        }
    }

    /// Adds `a` times index `source` to index `target`.
    fn add(&mut self, target: usize, source: usize, a: u64) {
        self.block(&[target, source], &[vec![1, a], vec![0, 1]]);
    }

    fn block(&mut self, idx: &[usize], block: &[Vec<u64>]) {
        self.b.mix_rows(idx, block);
        self.b.mix_cols(idx, block);
        self.acc.mix_rows(idx, block);
    }

    fn scale(&mut self, i: usize, s: u64) {
        self.block(&[i], &[vec![s]]);
    }

    /// Clears column `k` below the diagonal using the pivot `b[k][k]`.
    fn eliminate(&mut self, k: usize) {
        let p = self.p;
        let n = self.b.dim();
        let inv = p.inv(self.b.get(k, k)).expect("pivot is nonzero");
        for j in k + 1..n {
            let v = self.b.get(j, k);
            if v != 0 {
                self.add(j, k, p.neg(p.mul(v, inv)));
            }
        }
    }

    fn finish(self, original: &MatZp) -> Result<MatZp> {
        let n = original.dim();
        if congruence(&self.acc, original)? != MatZp::identity(self.p, n)? {
            return Err(Error::Internal(
                "congruence reduction did not reach the identity".into(),
            ));
        }
        Ok(self.acc)
    }
}

fn check_symmetric_nonsingular(b: &MatZp) -> Result<()> {
    if !b.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if b.det() == 0 {
        return Err(Error::Singular);
    }
    Ok(())
}

/// Reduces a symmetric nonsingular `B` over Z_2 with a unit diagonal entry.
pub fn congruence_reduce_p2(b: &MatZp) -> Result<MatZp> {
    if !b.modulus().is_two() {
        return Err(Error::OddPrime);
    }
    check_symmetric_nonsingular(b)?;
    let n = b.dim();
    if (0..n).all(|i| b.get(i, i) == 0) {
        return Err(Error::NoUnitDiagonal);
    }
    let mut t = Tracker::new(b)?;
    let mut k = 0;
    while k < n {
        if t.b.get(k, k) == 0 {
            if let Some(j) = (k + 1..n).find(|&j| t.b.get(j, j) != 0) {
                t.swap(k, j);
            } else {
                // Remaining diagonal is empty: bring a unit to (k+1, k) and
                // turn the block on k-1, k, k+1 into the identity.
                if k == 0 {
                    return Err(Error::NoUnitDiagonal);
                }
                let j = (k + 1..n)
                    .find(|&j| t.b.get(j, k) != 0)
                    .ok_or(Error::Singular)?;
                t.swap(k + 1, j);
                t.block(
                    &[k - 1, k, k + 1],
                    &[vec![1, 1, 0], vec![1, 0, 1], vec![1, 1, 1]],
                );
                t.eliminate(k - 1);
                t.eliminate(k);
                t.eliminate(k + 1);
                k += 2;
                continue;
            }
        }
        t.eliminate(k);
        k += 1;
    }
    t.finish(b)
}

/// Reduces a symmetric nonsingular `B` over Z_p, `p` odd, whose determinant
/// is a quadratic residue.
///
/// Diagonal pivots prefer the first residue entry, then the first nonzero
/// entry.
pub fn congruence_reduce_podd(b: &MatZp) -> Result<MatZp> {
    let p = b.modulus();
    if p.is_two() {
        return Err(Error::EvenPrime);
    }
    check_symmetric_nonsingular(b)?;
    if !qr_test(b.det(), p)? {
        return Err(Error::NonResidueDeterminant);
    }
    let n = b.dim();
    let mut t = Tracker::new(b)?;

    for k in 0..n {
        if t.b.get(k, k) == 0 {
            let diag = |j: usize| t.b.get(j, j);
            let pick = (k + 1..n)
                .find(|&j| diag(j) != 0 && qr_test(diag(j), p).unwrap_or(false))
                .or_else(|| (k + 1..n).find(|&j| diag(j) != 0));
            if let Some(j) = pick {
                t.swap(k, j);
            } else {
                let j = (k + 1..n)
                    .find(|&j| t.b.get(j, k) != 0)
                    .ok_or(Error::Singular)?;
                t.swap(k + 1, j);
                t.block(&[k, k + 1], &[vec![1, 1], vec![1, p.neg(1)]]);
            }
        }
        t.eliminate(k);
    }

    let qhat = find_nonresidue(p)?;
    let mut nonresidues = Vec::new();
    for i in 0..n {
        let a = t.b.get(i, i);
        if qr_test(a, p)? {
            let s = sqrt_mod(a, p).expect("residue has a root");
            t.scale(i, p.inv(s).expect("nonzero"));
        } else {
            let ratio = p.mul(qhat, p.inv(a).expect("nonzero"));
            let s = sqrt_mod(ratio, p).expect("quotient of non-residues is a residue");
            t.scale(i, s);
            nonresidues.push(i);
        }
    }
    if nonresidues.len() % 2 == 1 {
        return Err(Error::NonResidueDeterminant);
    }
    if !nonresidues.is_empty() {
        let bphi = (1..p.value())
            .find(|&x| !qr_test(p.add(1, p.mul(x, x)), p).unwrap_or(true))
            .ok_or_else(|| Error::NotFound("parameter b with 1 + b^2 a non-residue".into()))?;
        for pair in nonresidues.chunks(2) {
            let (i, j) = (pair[0], pair[1]);
            t.block(&[i, j], &[vec![1, bphi], vec![p.neg(bphi), 1]]);
            for &k in &[i, j] {
                let s = sqrt_mod(t.b.get(k, k), p).expect("residue has a root");
                t.scale(k, p.inv(s).expect("nonzero"));
            }
        }
    }
    t.finish(b)
}
