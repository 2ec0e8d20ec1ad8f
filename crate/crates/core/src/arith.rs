//! Exact integer and rational linear algebra used across the crate.
//!
//! Small dense matrices only. Rank and determinant use fraction-free
//! Bareiss elimination in `i128` and fall back to `BigInt` when an
//! intermediate overflows. Lattice work (Hermite forms, kernels) always runs
//! in arbitrary precision.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Divides `v` by the gcd of its entries. The zero vector is returned as is.
pub fn make_primitive(v: &mut [i64]) {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
}

fn bareiss_i128(mut m: Vec<Vec<i128>>) -> Option<(usize, i128)> {
    let rows = m.len();
    if rows == 0 {
        return Some((0, 1));
    }
    let cols = m[0].len();
    let mut prev: i128 = 1;
    let mut rank = 0;
    let mut sign = 1i128;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            sign = -sign;
        }
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let a = m[rank][c].checked_mul(m[r][k])?;
                let b = m[r][c].checked_mul(m[rank][k])?;
                m[r][k] = a.checked_sub(b)? / prev;
            }
            m[r][c] = 0;
        }
        prev = m[rank][c];
        rank += 1;
    }
    let det = if rank == rows && rows == cols { sign * prev } else { 0 };
    Some((rank, det))
}

fn bareiss_big(mut m: Vec<Vec<BigInt>>) -> (usize, BigInt) {
    let rows = m.len();
    if rows == 0 {
        return (0, BigInt::one());
    }
    let cols = m[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut negate = false;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            negate = !negate;
        }
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = (&m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k]) / &prev;
                m[r][k] = v;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    let det = if rank == rows && rows == cols {
        if negate {
            -prev
        } else {
            prev
        }
    } else {
        BigInt::zero()
    };
    (rank, det)
}

fn to_i128(rows: &[Vec<i64>]) -> Vec<Vec<i128>> {
    rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect()
}

fn to_big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// Rank over the rationals.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    match bareiss_i128(to_i128(rows)) {
        Some((r, _)) => r,
        None => bareiss_big(to_big(rows)).0,
    }
}

/// Determinant of a square integer matrix.
pub fn det(rows: &[Vec<i64>]) -> BigInt {
    assert!(rows.iter().all(|r| r.len() == rows.len()), "det needs a square matrix");
    match bareiss_i128(to_i128(rows)) {
        Some((_, d)) => BigInt::from(d),
        None => bareiss_big(to_big(rows)).1,
    }
}

/// Row-style Hermite normal form: returns the nonzero rows of an echelon
/// basis of the row lattice, pivots positive, entries above each pivot
/// reduced into `[0, pivot)`.
pub fn hermite_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    if m.is_empty() {
        return m;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        // Euclid on column c among rows r..
        loop {
            let mut best: Option<usize> = None;
            for i in r..m.len() {
                if !m[i][c].is_zero()
                    && best.is_none_or(|b| m[i][c].abs() < m[b][c].abs())
                {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            m.swap(r, b);
            let mut done = true;
            for i in r + 1..m.len() {
                if m[i][c].is_zero() {
                    continue;
                }
                let q = m[i][c].div_floor(&m[r][c]);
                let pivot_row = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(pivot_row.iter()) {
                    *x -= &q * p;
                }
                if !m[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r < m.len() && !m[r][c].is_zero() {
            if m[r][c].is_negative() {
                for x in m[r].iter_mut() {
                    *x = -x.clone();
                }
            }
            let pivot_row = m[r].clone();
            for i in 0..r {
                let q = m[i][c].div_floor(&pivot_row[c]);
                if !q.is_zero() {
                    for (x, p) in m[i].iter_mut().zip(pivot_row.iter()) {
                        *x -= &q * p;
                    }
                }
            }
            r += 1;
        }
    }
    m.truncate(r);
    m
}

/// A basis of the integer kernel `{x : A x = 0}` of a `rows × cols` matrix,
/// computed by unimodular row reduction of `[Aᵀ | I]`.
pub fn integer_kernel(a: &[Vec<i64>], cols: usize) -> Result<Vec<Vec<i64>>> {
    let d = a.len();
    let mut m: Vec<Vec<BigInt>> = (0..cols)
        .map(|j| {
            let mut row: Vec<BigInt> = a.iter().map(|r| BigInt::from(r[j])).collect();
            row.extend((0..cols).map(|k| if k == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let mut r = 0;
    for c in 0..d {
        loop {
            let mut best: Option<usize> = None;
            for i in r..m.len() {
                if !m[i][c].is_zero()
                    && best.is_none_or(|b| m[i][c].abs() < m[b][c].abs())
                {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            m.swap(r, b);
            let mut done = true;
            for i in r + 1..m.len() {
                if m[i][c].is_zero() {
                    continue;
                }
                let q = m[i][c].div_floor(&m[r][c]);
                let pivot_row = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(pivot_row.iter()) {
                    *x -= &q * p;
                }
                if !m[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                r += 1;
                break;
            }
        }
    }
    let mut basis = Vec::new();
    for row in m.into_iter().skip(r) {
        debug_assert!(row[..d].iter().all(|x| x.is_zero()));
        let v: Option<Vec<i64>> = row[d..].iter().map(|x| x.to_i64()).collect();
        basis.push(v.ok_or(Error::Overflow("integer kernel"))?);
    }
    reduce_basis(&mut basis);
    Ok(basis)
}

fn l1(v: &[i64]) -> i64 {
    v.iter().map(|x| x.abs()).sum()
}

/// Greedy pairwise size reduction of a lattice basis (unimodular steps only).
pub fn reduce_basis(basis: &mut [Vec<i64>]) {
    let n = basis.len();
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let cur = l1(&basis[i]);
                for sign in [1i64, -1] {
                    let cand: Vec<i64> =
                        basis[i].iter().zip(&basis[j]).map(|(a, b)| a - sign * b).collect();
                    if l1(&cand) < cur {
                        basis[i] = cand;
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
    for v in basis.iter_mut() {
        // fix a sign convention: first nonzero entry positive
        if let Some(&first) = v.iter().find(|&&x| x != 0) {
            if first < 0 {
                v.iter_mut().for_each(|x| *x = -*x);
            }
        }
    }
}

/// Solves `x · B = w` for a row-echelon integer basis `B` (as produced by
/// [`hermite_rows`]). Returns `None` if `w` is not in the row lattice.
pub fn lattice_coordinates(basis: &[Vec<BigInt>], w: &[i64]) -> Option<Vec<i64>> {
    let mut rest: Vec<BigInt> = w.iter().map(|&x| BigInt::from(x)).collect();
    let mut coords = Vec::with_capacity(basis.len());
    for row in basis {
        let pivot = row.iter().position(|x| !x.is_zero())?;
        let (q, rem) = rest[pivot].div_rem(&row[pivot]);
        if !rem.is_zero() {
            return None;
        }
        for (x, b) in rest.iter_mut().zip(row.iter()) {
            *x -= &q * b;
        }
        coords.push(q.to_i64()?);
    }
    if rest.iter().all(|x| x.is_zero()) {
        Some(coords)
    } else {
        None
    }
}

/// Solves the square system `M x = b` over the rationals.
pub fn solve_rational(m: &[Vec<i64>], b: &[i64]) -> Option<Vec<BigRational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            let mut r: Vec<BigRational> =
                row.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect();
            r.push(BigRational::from_integer(BigInt::from(rhs)));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        let piv = a[c][c].clone();
        for x in a[c].iter_mut() {
            *x /= &piv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                let pivot_row = a[c].clone();
                for (x, p) in a[r].iter_mut().zip(pivot_row.iter()) {
                    *x -= &f * p;
                }
            }
        }
    }
    Some(a.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Dot product with overflow checking.
pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
