//! Dense matrices over a [`Scalar`] field with exact elimination.
//!
//! Pivot search takes the first nonzero entry in a column. Over the
//! rationals no pivoting strategy is needed for accuracy and keeping the
//! natural column order makes reduced row-echelon forms, and therefore
//! kernel bases, canonical.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RealMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> RealMatrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(RealMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RealMatrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(RealMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_int_rows<const C: usize>(rows: &[[i64; C]]) -> Self {
        RealMatrix {
            rows: rows.len(),
            cols: C,
            data: rows.iter().flatten().map(|&v| T::from_int(v)).collect(),
        }
    }

    /// Column matrix.
    pub fn column(v: Vec<T>) -> Self {
        RealMatrix { rows: v.len(), cols: 1, data: v }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries.
    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn into_data(self) -> Vec<T> {
        self.data
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> RealMatrix<U> {
        RealMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|v| v.clone() * s.clone())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect();
        RealMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b.clone()).collect();
        RealMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// `self * rhs - rhs * self`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    /// Places `block` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self[(r0 + r, c0 + c)] = block[(r, c)].clone();
            }
        }
    }

    /// Reduced row-echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = T::one() / self[(row, col)].clone();
            for c in col..self.cols {
                if !self[(row, c)].is_zero() {
                    self[(row, c)] = self[(row, c)].clone() * inv.clone();
                }
            }
            let pivot_row: Vec<(usize, T)> = (col..self.cols)
                .filter(|&c| !self[(row, c)].is_zero())
                .map(|c| (c, self[(row, c)].clone()))
                .collect();
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let f = self[(r, col)].clone();
                if f.is_zero() {
                    continue;
                }
                for (c, v) in &pivot_row {
                    self[(r, *c)] = self[(r, *c)].clone() - f.clone() * v.clone();
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical kernel basis: one vector per free column, read off the
    /// reduced row-echelon form, with a `1` in its own free column.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![T::zero(); self.cols];
                v[free] = T::one();
                for (i, &p) in pivots.iter().enumerate() {
                    let a = &r[(i, free)];
                    if !a.is_zero() {
                        v[p] = -a.clone();
                    }
                }
                v
            })
            .collect()
    }

    /// Determinant by elimination.
    pub fn det(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!("det of {}x{}", self.rows, self.cols)));
        }
        let mut m = self.clone();
        let n = self.rows;
        let mut det = T::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Ok(T::zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det = det * pivot.clone();
            for r in col + 1..n {
                let f = m[(r, col)].clone();
                if f.is_zero() {
                    continue;
                }
                let f = f / pivot.clone();
                for c in col..n {
                    let v = m[(col, c)].clone();
                    if !v.is_zero() {
                        m[(r, c)] = m[(r, c)].clone() - f.clone() * v;
                    }
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!("inverse of {}x{}", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        aug.set_block(0, 0, self);
        aug.set_block(0, n, &Self::identity(n));
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular(format!("{n}x{n} matrix is not invertible")));
        }
        let mut inv = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = aug[(r, n + c)].clone();
            }
        }
        Ok(inv)
    }

    /// Solves `self x = b` for square nonsingular `self`.
    pub fn solve(&self, b: &[T]) -> Result<Vec<T>> {
        if !self.is_square() || b.len() != self.rows {
            return Err(Error::DimensionMismatch("solve needs a square system".into()));
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, n + 1);
        aug.set_block(0, 0, self);
        for (r, v) in b.iter().enumerate() {
            aug[(r, n)] = v.clone();
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular(format!("{n}x{n} system is singular")));
        }
        Ok((0..n).map(|r| aug[(r, n)].clone()).collect())
    }

    /// Sylvester inertia `(positive, negative, zero)` of a symmetric matrix,
    /// computed by congruence diagonalisation.
    pub fn inertia(&self) -> Result<(usize, usize, usize)> {
        if !self.is_square() || *self != self.transpose() {
            return Err(Error::DimensionMismatch("inertia needs a symmetric matrix".into()));
        }
        let n = self.rows;
        let mut m = self.clone();
        let (mut pos, mut neg) = (0, 0);
        let mut k = 0;
        while k < n {
            if m[(k, k)].is_zero() {
                // Bring a nonzero diagonal entry to position k, or create one
                // from an off-diagonal entry via e_k <- e_k + e_j.
                if let Some(j) = (k + 1..n).find(|&j| !m[(j, j)].is_zero()) {
                    m.swap_rows(k, j);
                    m.swap_cols(k, j);
                } else if let Some(j) = (k + 1..n).find(|&j| !m[(k, j)].is_zero()) {
                    m.add_row(k, j);
                    m.add_col(k, j);
                } else {
                    k += 1;
                    continue;
                }
            }
            let d = m[(k, k)].clone();
            if d.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            for r in k + 1..n {
                let f = m[(r, k)].clone();
                if f.is_zero() {
                    continue;
                }
                let f = f / d.clone();
                for c in k..n {
                    let v = m[(k, c)].clone();
                    m[(r, c)] = m[(r, c)].clone() - f.clone() * v;
                }
                for rr in k..n {
                    let v = m[(rr, k)].clone();
                    m[(rr, r)] = m[(rr, r)].clone() - f.clone() * v;
                }
            }
            k += 1;
        }
        Ok((pos, neg, n - pos - neg))
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize) {
        for c in 0..self.cols {
            self[(dst, c)] = self[(dst, c)].clone() + self[(src, c)].clone();
        }
    }

    fn add_col(&mut self, dst: usize, src: usize) {
        for r in 0..self.rows {
            self[(r, dst)] = self[(r, dst)].clone() + self[(r, src)].clone();
        }
    }
}

impl<T> Index<(usize, usize)> for RealMatrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for RealMatrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

impl<T: Scalar> fmt::Display for RealMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for r in 0..self.rows {
            let line: Vec<String> =
                (0..self.cols).map(|c| format!("{:>width$}", cells[r * self.cols + c])).collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

/// Rank of a family of equal-length vectors.
pub fn rank_of<T: Scalar>(vectors: &[Vec<T>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let cols = vectors[0].len();
    let data: Vec<T> = vectors.iter().flat_map(|v| v.iter().cloned()).collect();
    RealMatrix { rows: vectors.len(), cols, data }.rank()
}

/// Row space of a family of vectors in reduced form, for exact membership
/// tests and coordinate reduction.
#[derive(Clone, Debug)]
pub struct Span<T> {
    basis: RealMatrix<T>,
    pivots: Vec<usize>,
}

impl<T: Scalar> Span<T> {
    pub fn new(vectors: &[Vec<T>], len: usize) -> Self {
        let data: Vec<T> = vectors.iter().flat_map(|v| v.iter().cloned()).collect();
        let m = RealMatrix { rows: vectors.len(), cols: len, data };
        let (r, pivots) = m.rref();
        let rank = pivots.len();
        let basis = RealMatrix { rows: rank, cols: len, data: r.data[..rank * len].to_vec() };
        Span { basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Residual of `v` after removing its component along the span's
    /// echelon rows. Zero exactly when `v` lies in the span.
    pub fn residual(&self, v: &[T]) -> Vec<T> {
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let f = out[p].clone();
            if f.is_zero() {
                continue;
            }
            for (c, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    out[c] = out[c].clone() - f.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.residual(v).iter().all(|x| x.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::scalar::{int, ratio};
    use crate::Rational;

    type M = RealMatrix<Rational>;

    #[test]
    fn rank_and_kernel_of_small_matrix() {
        let m = M::from_int_rows(&[[1, 2, 3], [2, 4, 6], [1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![int(-1), int(-1), int(1)]);
        assert!(m.mul_vec(&k[0]).iter().all(|v| v.is_zero()));
    }

    #[test]
    fn determinant_inverse_and_solve() {
        let m = M::from_int_rows(&[[2, 1], [1, 1]]);
        assert_eq!(m.det().unwrap(), int(1));
        assert_eq!(m.mul(&m.inverse().unwrap()), M::identity(2));
        assert_eq!(m.solve(&[int(3), int(2)]).unwrap(), vec![int(1), int(1)]);
        let s = M::from_int_rows(&[[1, 2], [2, 4]]);
        assert_eq!(s.det().unwrap(), int(0));
        assert!(s.inverse().is_err());
        let p = M::from_int_rows(&[[0, 1], [1, 0]]);
        assert_eq!(p.det().unwrap(), int(-1));
        assert_eq!(M::identity(4).scale(&int(2)).det().unwrap(), int(16));
    }

    #[test]
    fn inertia_handles_zero_diagonal() {
        let m = M::from_int_rows(&[[0, 1], [1, 0]]);
        assert_eq!(m.inertia().unwrap(), (1, 1, 0));
        let d = M::from_int_rows(&[[1, 0, 0], [0, -2, 0], [0, 0, 0]]);
        assert_eq!(d.inertia().unwrap(), (1, 1, 1));
        let h = M::new(2, 2, vec![int(1), ratio(1, 2), ratio(1, 2), int(1)]).unwrap();
        assert_eq!(h.inertia().unwrap(), (2, 0, 0));
    }

    #[test]
    fn span_membership() {
        let s = Span::<Rational>::new(&[vec![int(1), int(1), int(0)], vec![int(0), int(1), int(1)]], 3);
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[int(1), int(2), int(1)]));
        assert!(!s.contains(&[int(1), int(0), int(0)]));
        assert_eq!(rank_of::<Rational>(&[vec![int(1), int(1)], vec![int(2), int(2)]]), 1);
    }
}
