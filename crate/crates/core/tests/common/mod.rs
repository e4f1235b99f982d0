#![allow(clippy::needless_range_loop)]
#![allow(dead_code)]

use graphmub::{MatZp, PolyZp, PrimeModulus};
use proptest::prelude::*;

pub fn pm(p: u64) -> PrimeModulus {
    PrimeModulus::new(p).unwrap()
}

pub fn mat(p: u64, rows: &[&[u64]]) -> MatZp {
    MatZp::from_rows(pm(p), rows).unwrap()
}

pub fn poly(p: u64, c: &[u64]) -> PolyZp {
    PolyZp::new(pm(p), c.to_vec())
}

/// All monic polynomials of the given degree.
pub fn monic_of_degree(p: u64, deg: usize) -> Vec<PolyZp> {
    let count = p.pow(deg as u32);
    (0..count)
        .map(|mut i| {
            let mut c = Vec::with_capacity(deg + 1);
            for _ in 0..deg {
                c.push(i % p);
                i /= p;
            }
            c.push(1);
            poly(p, &c)
        })
        .collect()
}

/// Irreducibility by trial division with every monic polynomial of degree
/// `1..=deg/2`.
pub fn brute_irreducible(f: &PolyZp) -> bool {
    let n = f.degree().unwrap();
    let p = f.modulus().value();
    (1..=n / 2).all(|k| {
        monic_of_degree(p, k)
            .iter()
            .all(|g| !f.div_rem(g).unwrap().1.is_zero())
    })
}

/// Multiplicative order of `x` modulo `f` by repeated multiplication.
pub fn brute_order_of_x(f: &PolyZp) -> u64 {
    let p = f.modulus();
    let x = PolyZp::monomial(p, 1);
    let mut cur = x.rem(f).unwrap();
    let mut k = 1;
    while !cur.is_one() {
        cur = cur.checked_mul(&x).unwrap().rem(f).unwrap();
        k += 1;
        assert!(k < 1_000_000, "x is not invertible");
    }
    k
}

pub fn random_matrix(p: u64, n: usize, entries: &[u64]) -> MatZp {
    let rows: Vec<Vec<u64>> = (0..n)
        .map(|i| entries[i * n..(i + 1) * n].to_vec())
        .collect();
    MatZp::from_rows(pm(p), &rows).unwrap()
}

pub fn random_symmetric(p: u64, n: usize, entries: &[u64]) -> MatZp {
    let mut rows = vec![vec![0u64; n]; n];
    let mut k = 0;
    for i in 0..n {
        for j in i..n {
            rows[i][j] = entries[k] % p;
            rows[j][i] = entries[k] % p;
            k += 1;
        }
    }
    MatZp::from_rows(pm(p), &rows).unwrap()
}

pub fn prime_strategy() -> impl Strategy<Value = u64> {
    prop_oneof![Just(2u64), Just(3u64), Just(5u64), Just(7u64)]
}

/// Determinant of `x I - m` by cofactor expansion over Z_p[x].
pub fn laplace_char_poly(m: &MatZp) -> PolyZp {
    let p = m.modulus();
    let n = m.dim();
    let entries: Vec<Vec<PolyZp>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = p.neg(m.get(i, j));
                    if i == j {
                        PolyZp::new(p, vec![c, 1])
                    } else {
                        PolyZp::new(p, vec![c])
                    }
                })
                .collect()
        })
        .collect();
    laplace(&entries, p)
}

fn laplace(e: &[Vec<PolyZp>], p: PrimeModulus) -> PolyZp {
    let n = e.len();
    if n == 1 {
        return e[0][0].clone();
    }
    let mut acc = PolyZp::zero(p);
    for j in 0..n {
        let minor: Vec<Vec<PolyZp>> = e[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = e[0][j].checked_mul(&laplace(&minor, p)).unwrap();
        acc = if j % 2 == 0 {
            acc.checked_add(&term).unwrap()
        } else {
            acc.checked_sub(&term).unwrap()
        };
    }
    acc
}

/// Determinant by the Leibniz-free cofactor expansion over Z_p.
pub fn cofactor_det(m: &MatZp) -> u64 {
    let p = m.modulus();
    let n = m.dim();
    if n == 1 {
        return m.get(0, 0);
    }
    let mut acc = 0;
    for j in 0..n {
        let rows: Vec<Vec<u64>> = (1..n)
            .map(|i| (0..n).filter(|&c| c != j).map(|c| m.get(i, c)).collect())
            .collect();
        let minor = MatZp::from_rows(p, &rows).unwrap();
        let term = p.mul(m.get(0, j), cofactor_det(&minor));
        acc = if j % 2 == 0 {
            p.add(acc, term)
        } else {
            p.sub(acc, term)
        };
    }
    acc
}
