//! Exact linear algebra over the rationals.
//!
//! Ranks and determinants are computed fraction-free (Bareiss) after clearing
//! denominators, so every intermediate value is an integer minor of the input.
//! A sparse rational elimination with Markowitz-style pivoting backs the rank
//! computation for the large, very sparse matrices produced by the truncated
//! de Rham complexes; the two engines cross-check each other in tests.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::Rat;

/// Dense matrix of exact rationals, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Rat>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = QMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        let cur = out.at(i, j).clone();
                        out.set(i, j, cur + a * b);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Exact rank; dispatches to the sparse engine for large inputs.
    pub fn rank(&self) -> usize {
        if self.rows.min(self.cols) > 120 {
            rank_sparse(self)
        } else {
            rank_bareiss(self)
        }
    }

    pub fn det(&self) -> Rat {
        det_bareiss(self)
    }
}

fn clear_denominators(m: &QMatrix) -> Vec<Vec<BigInt>> {
    // Scale each row by the lcm of its denominators; rank is unchanged.
    let mut out = Vec::with_capacity(m.rows);
    for i in 0..m.rows {
        let mut lcm = BigInt::one();
        for j in 0..m.cols {
            let d = m.at(i, j).denom();
            lcm = num_integer::lcm(lcm, d.clone());
        }
        let row = (0..m.cols)
            .map(|j| {
                let e = m.at(i, j);
                e.numer() * (&lcm / e.denom())
            })
            .collect();
        out.push(row);
    }
    out
}

/// Rank by fraction-free Bareiss elimination over the integers.
pub fn rank_bareiss(m: &QMatrix) -> usize {
    let mut a = clear_denominators(m);
    let (rows, cols) = (m.rows, m.cols);
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row >= rows {
            break;
        }
        // Smallest nonzero entry as pivot keeps the minors small.
        let mut best: Option<usize> = None;
        for (r, row) in a.iter().enumerate().skip(pivot_row) {
            if !row[col].is_zero()
                && best.is_none_or(|b| row[col].abs() < a[b][col].abs())
            {
                best = Some(r);
            }
        }
        let Some(r) = best else { continue };
        a.swap(pivot_row, r);
        let pivot = a[pivot_row][col].clone();
        for i in pivot_row + 1..rows {
            for j in col + 1..cols {
                let v = (&pivot * &a[i][j] - &a[i][col] * &a[pivot_row][j]) / &prev;
                a[i][j] = v;
            }
            a[i][col] = BigInt::zero();
        }
        prev = pivot;
        pivot_row += 1;
        rank += 1;
    }
    rank
}

/// Determinant via Bareiss; the final pivot of the integer elimination is the
/// integer determinant, rescaled by the denominators cleared per row.
pub fn det_bareiss(m: &QMatrix) -> Rat {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    if n == 0 {
        return Rat::one();
    }
    let mut scale = BigInt::one();
    let mut a = Vec::with_capacity(n);
    for i in 0..n {
        let mut lcm = BigInt::one();
        for j in 0..n {
            lcm = num_integer::lcm(lcm, m.at(i, j).denom().clone());
        }
        let row: Vec<BigInt> = (0..n)
            .map(|j| {
                let e = m.at(i, j);
                e.numer() * (&lcm / e.denom())
            })
            .collect();
        scale *= &lcm;
        a.push(row);
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Rat::zero();
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det_int = a[n - 1][n - 1].clone() * BigInt::from(sign);
    Rat::new(det_int, scale)
}

/// Rank by sparse rational elimination with Markowitz-style pivot selection.
pub fn rank_sparse(m: &QMatrix) -> usize {
    // Columns as sparse (row index -> value) maps.
    let mut cols: Vec<Vec<(usize, Rat)>> = Vec::with_capacity(m.cols);
    for j in 0..m.cols {
        let mut col = Vec::new();
        for i in 0..m.rows {
            let v = m.at(i, j);
            if !v.is_zero() {
                col.push((i, v.clone()));
            }
        }
        cols.push(col);
    }
    let mut row_live = vec![true; m.rows];
    let mut col_live = vec![true; m.cols];
    let mut row_nnz = vec![0usize; m.rows];
    for col in &cols {
        for &(i, _) in col {
            row_nnz[i] += 1;
        }
    }
    let mut rank = 0;
    loop {
        // Pick the live entry minimizing (row_nnz - 1) * (col_nnz - 1).
        let mut best: Option<(usize, usize, usize)> = None; // (score, col, row)
        for (j, col) in cols.iter().enumerate() {
            if !col_live[j] {
                continue;
            }
            let cnnz = col.iter().filter(|&&(i, _)| row_live[i]).count();
            if cnnz == 0 {
                continue;
            }
            for &(i, _) in col.iter() {
                if !row_live[i] {
                    continue;
                }
                let score = (row_nnz[i].saturating_sub(1)) * (cnnz - 1);
                if best.is_none_or(|(s, _, _)| score < s) {
                    best = Some((score, j, i));
                }
                if score == 0 {
                    break;
                }
            }
            if matches!(best, Some((0, _, _))) {
                break;
            }
        }
        let Some((_, pj, pi)) = best else { break };
        rank += 1;
        let pivot = cols[pj]
            .iter()
            .find(|&&(i, _)| i == pi)
            .expect("pivot entry")
            .1
            .clone();
        // Eliminate row pi from every other live column containing it.
        let pivot_col: Vec<(usize, Rat)> = cols[pj]
            .iter()
            .filter(|&&(i, _)| row_live[i] && i != pi)
            .cloned()
            .collect();
        col_live[pj] = false;
        row_live[pi] = false;
        for &(i, _) in &pivot_col {
            row_nnz[i] = row_nnz[i].saturating_sub(1);
        }
        for (j, col) in cols.iter_mut().enumerate() {
            if !col_live[j] {
                continue;
            }
            let Some(pos) = col.iter().position(|&(i, _)| i == pi) else {
                continue;
            };
            let factor = col[pos].1.clone() / &pivot;
            col.swap_remove(pos);
            // col -= factor * pivot_col (on live rows).
            for (i, pv) in &pivot_col {
                let delta = &factor * pv;
                if let Some(q) = col.iter_mut().find(|(r, _)| r == i) {
                    q.1 -= delta;
                } else {
                    col.push((*i, -delta));
                    row_nnz[*i] += 1;
                }
            }
            col.retain(|(r, v)| {
                if v.is_zero() {
                    row_nnz[*r] = row_nnz[*r].saturating_sub(1);
                    false
                } else {
                    true
                }
            });
        }
    }
    rank
}

/// Solves `A·x = b` exactly when the system is consistent; free variables
/// are set to zero. Returns `None` for inconsistent systems.
pub fn solve_consistent(a: &QMatrix, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(a.rows, b.len());
    let (rows, cols) = (a.rows, a.cols);
    let mut m: Vec<Vec<Rat>> = (0..rows)
        .map(|i| {
            let mut row: Vec<Rat> = (0..cols).map(|j| a.at(i, j).clone()).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rat::one() / m[r][c].clone();
        for entry in m[r].iter_mut().skip(c) {
            *entry = &*entry * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (entry, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    *entry = &*entry - &factor * p;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    // Inconsistent when a zero row has nonzero right-hand side.
    for row in m.iter().skip(r) {
        if row[cols] != Rat::zero() && row[..cols].iter().all(Zero::is_zero) {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); cols];
    for (row, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[row][cols].clone();
    }
    Some(x)
}

/// Coefficients of `det(t·I - M)`, lowest degree first, by evaluating the
/// determinant at `n + 1` points and interpolating exactly.
pub fn charpoly(m: &QMatrix) -> Vec<Rat> {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    let points: Vec<Rat> = (0..=n as i64).map(crate::rat_int).collect();
    let values: Vec<Rat> = points
        .iter()
        .map(|t| {
            let mut shifted = m.clone();
            for i in 0..n {
                let v = t - m.at(i, i);
                shifted.set(i, i, v);
            }
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        let v = -m.at(i, j).clone();
                        shifted.set(i, j, v);
                    }
                }
            }
            shifted.det()
        })
        .collect();
    lagrange_interpolate(&points, &values)
}

/// Exact Lagrange interpolation; returns coefficients lowest degree first.
pub fn lagrange_interpolate(points: &[Rat], values: &[Rat]) -> Vec<Rat> {
    assert_eq!(points.len(), values.len());
    let n = points.len();
    let mut coeffs = vec![Rat::zero(); n];
    for i in 0..n {
        // Basis polynomial prod_{j != i} (t - x_j) / (x_i - x_j).
        let mut basis = vec![Rat::zero(); n];
        basis[0] = Rat::one();
        let mut deg = 0;
        let mut denom = Rat::one();
        for j in 0..n {
            if i == j {
                continue;
            }
            denom *= points[i].clone() - &points[j];
            // basis *= (t - x_j)
            let mut next = vec![Rat::zero(); n];
            for (k, b) in basis.iter().enumerate().take(deg + 1) {
                if b.is_zero() {
                    continue;
                }
                next[k + 1] += b;
                next[k] -= b * &points[j];
            }
            basis = next;
            deg += 1;
        }
        let weight = values[i].clone() / denom;
        for k in 0..n {
            let term = &basis[k] * &weight;
            coeffs[k] += term;
        }
    }
    coeffs
}
