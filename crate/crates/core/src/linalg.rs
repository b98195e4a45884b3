//! Exact integer and rational linear algebra.
//!
//! Matrices are row-major `Vec<Vec<i64>>`. Anything that can grow (determinants,
//! Hermite reductions, rational solves) runs over `BigInt`, so no result is ever
//! truncated; rank uses a checked `i128` fast path and falls back to `BigInt`
//! on overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type IntMatrix = Vec<Vec<i64>>;

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
    vec![vec![0; cols]; rows]
}

pub fn transpose(m: &[Vec<i64>]) -> IntMatrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|row| row[j]).collect()).collect()
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> IntMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            debug_assert_eq!(row.len(), inner);
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .map(|(&x, brow)| x * brow[j])
                        .sum::<i64>()
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(&a, &b)| a * b).sum())
        .collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}

/// `xᵗ M y`.
pub fn bilinear(m: &[Vec<i64>], x: &[i64], y: &[i64]) -> i64 {
    let mut acc = 0;
    for (i, &xi) in x.iter().enumerate() {
        if xi == 0 {
            continue;
        }
        acc += xi * dot(&m[i], y);
    }
    acc
}

pub fn is_zero_vec(v: &[i64]) -> bool {
    v.iter().all(|&x| x == 0)
}

fn to_big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Narrows a `BigInt` vector back to `i64`, failing loudly instead of wrapping.
pub fn to_i64_vec(v: &[BigInt]) -> Result<Vec<i64>> {
    v.iter()
        .map(|x| {
            x.to_i64()
                .ok_or_else(|| Error::internal(format!("integer {x} exceeds 64-bit range")))
        })
        .collect()
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = to_big(m);
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

fn rank_generic<T>(mut rows: Vec<Vec<T>>) -> Option<usize>
where
    T: Clone + Integer + Signed + CheckedMul + CheckedSub,
{
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let pivot = (rank..nrows)
            .filter(|&i| !rows[i][col].is_zero())
            .min_by_key(|&i| rows[i][col].abs());
        let Some(p) = pivot else { continue };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = prow[col].gcd(&row[col]);
            let mp = row[col].clone() / g.clone();
            let mr = prow[col].clone() / g;
            let mut content = T::zero();
            for j in col..ncols {
                let lhs = row[j].checked_mul(&mr)?;
                let rhs = prow[j].checked_mul(&mp)?;
                row[j] = lhs.checked_sub(&rhs)?;
                content = content.gcd(&row[j]);
            }
            if !content.is_zero() && !content.is_one() {
                for x in row[col..].iter_mut() {
                    *x = x.clone() / content.clone();
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

/// Rank over ℚ.
pub fn rank(m: &[Vec<i64>]) -> usize {
    let small: Vec<Vec<i128>> = m
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    rank_generic(small).unwrap_or_else(|| {
        rank_generic(to_big(m)).expect("BigInt arithmetic does not overflow")
    })
}

/// Row-style Hermite reduction of the first `ncols` columns of `rows`.
///
/// Performs unimodular row operations only; pivots end up positive with the
/// entries above each pivot reduced into `[0, pivot)`. Returns the number of
/// pivot rows; every later row is zero on the reduced columns.
fn hermite_reduce(rows: &mut [Vec<BigInt>], ncols: usize) -> usize {
    let nrows = rows.len();
    let mut prow = 0;
    for col in 0..ncols {
        if prow == nrows {
            break;
        }
        loop {
            let best = (prow..nrows)
                .filter(|&i| !rows[i][col].is_zero())
                .min_by(|&i, &j| rows[i][col].abs().cmp(&rows[j][col].abs()));
            let Some(b) = best else { break };
            rows.swap(prow, b);
            let mut done = true;
            for i in prow + 1..nrows {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[prow][col]);
                let pr = rows[prow].clone();
                for (x, y) in rows[i].iter_mut().zip(&pr) {
                    *x -= &q * y;
                }
                if !rows[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if prow < nrows && !rows[prow][col].is_zero() {
            if rows[prow][col].is_negative() {
                for x in rows[prow].iter_mut() {
                    *x = -x.clone();
                }
            }
            let pr = rows[prow].clone();
            for i in 0..prow {
                let q = rows[i][col].div_floor(&pr[col]);
                if q.is_zero() {
                    continue;
                }
                for (x, y) in rows[i].iter_mut().zip(&pr) {
                    *x -= &q * y;
                }
            }
            prow += 1;
        }
    }
    prow
}

/// Hermite normal form of the lattice spanned by `rows` (zero rows dropped).
pub fn hermite_basis(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut big = to_big(rows);
    let k = hermite_reduce(&mut big, ncols);
    big.truncate(k);
    big
}

/// Basis of `ker(M) ∩ ℤⁿ`, returned in Hermite normal form.
pub fn integer_kernel(m: &[Vec<i64>], ncols: usize) -> Result<IntMatrix> {
    let nrows = m.len();
    // Row j of the work matrix is [column j of M | e_j].
    let mut work: Vec<Vec<BigInt>> = (0..ncols)
        .map(|j| {
            let mut row: Vec<BigInt> = m.iter().map(|r| BigInt::from(r[j])).collect();
            row.extend((0..ncols).map(|k| BigInt::from(i64::from(j == k))));
            row
        })
        .collect();
    let pivots = hermite_reduce(&mut work, nrows);
    let kernel: Vec<Vec<BigInt>> = work[pivots..]
        .iter()
        .map(|row| row[nrows..].to_vec())
        .collect();
    let kernel_i64 = kernel
        .iter()
        .map(|v| to_i64_vec(v))
        .collect::<Result<IntMatrix>>()?;
    hermite_basis(&kernel_i64)
        .iter()
        .map(|v| to_i64_vec(v))
        .collect()
}

/// A full-rank sublattice of ℤⁿ described by its Hermite basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    dim: usize,
    basis: Vec<Vec<i64>>,
    pivots: Vec<usize>,
}

impl Lattice {
    pub fn from_generators(dim: usize, gens: &[Vec<i64>]) -> Result<Self> {
        if gens.iter().any(|g| g.len() != dim) {
            return Err(Error::input("lattice generator has the wrong length"));
        }
        let basis = hermite_basis(gens)
            .iter()
            .map(|v| to_i64_vec(v))
            .collect::<Result<IntMatrix>>()?;
        let pivots = basis
            .iter()
            .map(|row| row.iter().position(|&x| x != 0).expect("nonzero row"))
            .collect();
        Ok(Lattice { dim, basis, pivots })
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        if v.len() != self.dim {
            return false;
        }
        let mut w: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if w[..p].iter().any(|&x| x != 0) {
                return false;
            }
            let piv = row[p] as i128;
            if w[p] % piv != 0 {
                return false;
            }
            let q = w[p] / piv;
            if q != 0 {
                for (x, &y) in w.iter_mut().zip(row) {
                    *x -= q * y as i128;
                }
            }
        }
        w.iter().all(|&x| x == 0)
    }
}

/// Some rational `x` with `M x = v`, if one exists.
pub fn solve_rational(m: &[Vec<i64>], v: &[i64]) -> Option<Vec<BigRational>> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .zip(v)
        .map(|(row, &rhs)| {
            row.iter()
                .chain(std::iter::once(&rhs))
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][col].recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pr = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pr) {
                *x -= &f * y;
            }
        }
        pivot_cols.push(col);
        r += 1;
        if r == nrows {
            break;
        }
    }
    if a[r..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); ncols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = a[i][ncols].clone();
    }
    Some(x)
}

/// Nonzero Smith invariant factors `d₁ | d₂ | …` of an integer matrix.
pub fn smith_invariants(m: &[Vec<i64>]) -> Vec<BigInt> {
    let mut a = to_big(m);
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut k = 0;
    while k < nrows.min(ncols) {
        let mut best: Option<(usize, usize)> = None;
        for i in k..nrows {
            for j in k..ncols {
                if a[i][j].is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(k, bi);
        for row in a.iter_mut() {
            row.swap(k, bj);
        }
        let mut clean = true;
        for i in k + 1..nrows {
            let q = a[i][k].div_floor(&a[k][k]);
            if !q.is_zero() {
                let pr = a[k].clone();
                for (x, y) in a[i].iter_mut().zip(&pr) {
                    *x -= &q * y;
                }
            }
            clean &= a[i][k].is_zero();
        }
        for j in k + 1..ncols {
            let q = a[k][j].div_floor(&a[k][k]);
            if !q.is_zero() {
                for row in a.iter_mut() {
                    let t = &q * &row[k];
                    row[j] -= t;
                }
            }
            clean &= a[k][j].is_zero();
        }
        if !clean {
            continue;
        }
        // Divisibility: fold any entry the pivot does not divide back into row k.
        let offender = (k + 1..nrows).find(|&i| {
            (k + 1..ncols).any(|j| !a[i][j].is_multiple_of(&a[k][k]))
        });
        if let Some(i) = offender {
            let ri = a[i].clone();
            for (x, y) in a[k].iter_mut().zip(&ri) {
                *x += y;
            }
            continue;
        }
        out.push(a[k][k].abs());
        k += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_small_cases() {
        assert_eq!(determinant(&[]), BigInt::one());
        assert_eq!(determinant(&[vec![0, 2], vec![-2, 0]]), BigInt::from(4));
        assert_eq!(
            determinant(&[vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]]),
            BigInt::from(-2)
        );
    }

    #[test]
    fn rank_counts_independent_rows() {
        assert_eq!(rank(&[vec![1, 0, 1], vec![0, 2, 0], vec![1, 0, 1]]), 2);
        assert_eq!(rank(&zeros(3, 4)), 0);
        assert_eq!(rank(&identity(5)), 5);
    }

    #[test]
    fn kernel_is_saturated() {
        // 2x = 0 has kernel {0} over ℚ, and x + 2y = 0 is spanned by (-2, 1), (2,-1) canonical.
        let k = integer_kernel(&[vec![2, 4]], 2).unwrap();
        assert_eq!(k, vec![vec![2, -1]]);
        let k = integer_kernel(&[vec![0, 0], vec![0, 0]], 2).unwrap();
        assert_eq!(k, identity(2));
    }

    #[test]
    fn lattice_membership() {
        let l = Lattice::from_generators(3, &[vec![1, 1, 1], vec![0, 2, 0]]).unwrap();
        assert!(l.contains(&[2, 2, 2]));
        assert!(l.contains(&[1, 3, 1]));
        assert!(!l.contains(&[1, 2, 1]));
        assert!(!l.contains(&[0, 0, 1]));
    }

    #[test]
    fn rational_solve_detects_inconsistency() {
        let m = vec![vec![1, 1], vec![2, 2]];
        assert!(solve_rational(&m, &[1, 3]).is_none());
        let x = solve_rational(&m, &[1, 2]).unwrap();
        assert_eq!(x[0].clone() + x[1].clone(), BigRational::one());
    }

    #[test]
    fn smith_invariants_of_diagonal() {
        let inv = smith_invariants(&[vec![4, 0], vec![0, 6]]);
        assert_eq!(inv, vec![BigInt::from(2), BigInt::from(12)]);
        assert!(smith_invariants(&zeros(2, 2)).is_empty());
    }
}
