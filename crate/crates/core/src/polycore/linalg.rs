//! Dense exact linear algebra over a [`Field`].

use super::field::Field;
use crate::error::{AlgebraError, Result};

pub type Matrix<E> = Vec<Vec<E>>;

/// In-place reduced row echelon form; returns pivot columns.
pub fn rref_in_place<F: Field>(f: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !f.is_zero(&m[i][c])) else { continue };
        m.swap(r, p);
        let inv = f.inv(&m[r][c]).unwrap();
        for x in m[r].iter_mut() {
            *x = f.mul(x, &inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !f.is_zero(&row[c]) {
                let factor = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                    *x = f.sub_mul(x, &factor, y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

/// Reduced row echelon form with zero rows dropped.
pub fn rref<F: Field>(f: &F, m: &[Vec<F::Elem>]) -> (Matrix<F::Elem>, Vec<usize>) {
    let mut a = m.to_vec();
    let piv = rref_in_place(f, &mut a);
    (a, piv)
}

pub fn rank<F: Field>(f: &F, m: &[Vec<F::Elem>]) -> usize {
    rref(f, m).1.len()
}

/// Basis of the right kernel `{x : m x = 0}`, for a matrix with `ncols` columns.
pub fn kernel<F: Field>(f: &F, m: &[Vec<F::Elem>], ncols: usize) -> Matrix<F::Elem> {
    let (r, piv) = rref(f, m);
    let mut out = Vec::new();
    let mut is_piv = vec![false; ncols];
    for &p in &piv {
        is_piv[p] = true;
    }
    for free in (0..ncols).filter(|&c| !is_piv[c]) {
        let mut v = vec![f.zero(); ncols];
        v[free] = f.one();
        for (row, &p) in r.iter().zip(&piv) {
            v[p] = f.neg(&row[free]);
        }
        out.push(v);
    }
    out
}

pub fn mat_mul<F: Field>(f: &F, a: &[Vec<F::Elem>], b: &[Vec<F::Elem>]) -> Matrix<F::Elem> {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    row.iter().zip(b).fold(f.zero(), |acc, (x, brow)| f.add(&acc, &f.mul(x, &brow[j])))
                })
                .collect()
        })
        .collect()
}

pub fn identity<F: Field>(f: &F, n: usize) -> Matrix<F::Elem> {
    (0..n).map(|i| (0..n).map(|j| if i == j { f.one() } else { f.zero() }).collect()).collect()
}

pub fn inverse<F: Field>(f: &F, m: &[Vec<F::Elem>]) -> Result<Matrix<F::Elem>> {
    let n = m.len();
    let mut aug: Matrix<F::Elem> = m
        .iter()
        .zip(identity(f, n))
        .map(|(r, id)| r.iter().cloned().chain(id).collect())
        .collect();
    let piv = rref_in_place(f, &mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return Err(AlgebraError::Singular);
    }
    Ok(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_vec<F: Field>(f: &F, m: &[Vec<F::Elem>], v: &[F::Elem]) -> Vec<F::Elem> {
    m.iter().map(|row| row.iter().zip(v).fold(f.zero(), |acc, (x, y)| f.add(&acc, &f.mul(x, y)))).collect()
}

/// Row-space basis (rref rows).
pub fn row_basis<F: Field>(f: &F, rows: &[Vec<F::Elem>]) -> Matrix<F::Elem> {
    rref(f, rows).0
}

/// Intersection of two row spaces of vectors of length `n`.
pub fn intersect_rowspaces<F: Field>(f: &F, a: &[Vec<F::Elem>], b: &[Vec<F::Elem>], n: usize) -> Matrix<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // x·A = y·B  <=>  (x, -y) in the left kernel of [A; B]; solve via the transpose.
    let (ka, kb) = (a.len(), b.len());
    let mut t: Matrix<F::Elem> = vec![Vec::with_capacity(ka + kb); n];
    for (j, row) in t.iter_mut().enumerate() {
        for ra in a {
            row.push(ra[j].clone());
        }
        for rb in b {
            row.push(f.neg(&rb[j]));
        }
    }
    let ker = kernel(f, &t, ka + kb);
    let vecs: Matrix<F::Elem> = ker
        .iter()
        .map(|k| {
            (0..n)
                .map(|j| (0..ka).fold(f.zero(), |acc, i| f.add(&acc, &f.mul(&k[i], &a[i][j]))))
                .collect()
        })
        .collect();
    row_basis(f, &vecs)
}

/// Whether `v` lies in the span of `rows` (rows need not be reduced).
pub fn in_span<F: Field>(f: &F, rows: &[Vec<F::Elem>], v: &[F::Elem]) -> bool {
    let r0 = rank(f, rows);
    let mut ext = rows.to_vec();
    ext.push(v.to_vec());
    rank(f, &ext) == r0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::field::PrimeField;

    #[test]
    fn kernel_and_inverse() {
        let f = PrimeField::new(1009).unwrap();
        let m: Matrix<u32> = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let k = kernel(&f, &m, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(mat_vec(&f, &m, v).iter().all(|&x| x == 0));
        }
        let a: Matrix<u32> = vec![vec![2, 1], vec![1, 1]];
        let ai = inverse(&f, &a).unwrap();
        assert_eq!(mat_mul(&f, &a, &ai), identity(&f, 2));
        let sing: Matrix<u32> = m.iter().map(|r| r[..2].to_vec()).collect();
        assert!(inverse(&f, &sing).is_err());
    }

    #[test]
    fn rowspace_intersection() {
        let f = PrimeField::new(1009).unwrap();
        let a: Matrix<u32> = vec![vec![1, 0, 0], vec![0, 1, 0]];
        let b: Matrix<u32> = vec![vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(intersect_rowspaces(&f, &a, &b, 3), vec![vec![0, 1, 0]]);
    }
}
