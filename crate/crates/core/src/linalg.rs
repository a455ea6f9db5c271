//! Dense exact linear algebra over a [`Field`].

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(&'static str),
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ";")?;
            }
            for c in 0..self.cols {
                write!(f, " {:?}", self.data[r * self.cols + c])?;
            }
        }
        write!(f, " ]")
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| F::from_i64(v)).collect()).collect())
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, cols: &[Vec<F>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut F {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<F>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product shape");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.get_mut(i, j).add_mul_assign(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let mut out = vec![F::zero(); self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            for (k, x) in v.iter().enumerate() {
                o.add_mul_assign(self.get(i, k), x);
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "matrix sum shape");
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn scale(&self, s: &F) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.mul(s)).collect() }
    }

    pub fn neg(&self) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.neg()).collect() }
    }

    pub fn hstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.rows, rhs.rows, "hstack rows");
        Self::from_fn(self.rows, self.cols + rhs.cols, |r, c| if c < self.cols { self.get(r, c).clone() } else { rhs.get(r, c - self.cols).clone() })
    }

    pub fn vstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.cols, "vstack cols");
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Matrix { rows: self.rows + rhs.rows, cols: self.cols, data }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.rows, idx.len(), |r, c| self.get(r, idx[c]).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), self.cols, |r, c| self.get(idx[r], c).clone())
    }

    /// Copy `block` into `self` with top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |r, c| self.get(r0 + r, c0 + c).clone())
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub(crate) fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self.get(row, col).inv().expect("nonzero pivot");
            if !inv.is_one() {
                for c in col..self.cols {
                    let v = self.get(row, c).mul(&inv);
                    self.set(row, c, v);
                }
            }
            let pivot_row: Vec<(usize, F)> =
                (col..self.cols).filter(|&c| !self.get(row, c).is_zero()).map(|c| (c, self.get(row, c).clone())).collect();
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                let neg = factor.neg();
                for (c, v) in &pivot_row {
                    self.get_mut(r, *c).add_mul_assign(&neg, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows <= self.cols {
            self.rref().1.len()
        } else {
            self.transpose().rref().1.len()
        }
    }

    /// Kernel basis as columns.
    pub fn kernel(&self) -> Self {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots)
    }

    /// Independent columns of `self` spanning its column space.
    pub fn image(&self) -> Self {
        let (_, pivots) = self.rref();
        self.select_columns(&pivots)
    }
}

fn kernel_from_rref<F: Field>(r: &Matrix<F>, pivots: &[usize]) -> Matrix<F> {
    let n = r.cols;
    let mut is_pivot = vec![false; n];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
    let mut k = Matrix::zeros(n, free.len());
    for (j, &f) in free.iter().enumerate() {
        k.set(f, j, F::one());
        for (i, &p) in pivots.iter().enumerate() {
            let v = r.get(i, f);
            if !v.is_zero() {
                k.set(p, j, v.neg());
            }
        }
    }
    k
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankKernelImage<F> {
    pub rank: usize,
    pub kernel: Matrix<F>,
    pub image: Matrix<F>,
}

pub fn rank_kernel_image<F: Field>(m: &Matrix<F>) -> RankKernelImage<F> {
    let (r, pivots) = m.rref();
    RankKernelImage { rank: pivots.len(), kernel: kernel_from_rref(&r, &pivots), image: m.select_columns(&pivots) }
}

/// Solve `m * x = rhs`; `Ok(None)` when `rhs` leaves the column space.
pub fn solve<F: Field>(m: &Matrix<F>, rhs: &Matrix<F>) -> Result<Option<Matrix<F>>, LinalgError> {
    if m.rows != rhs.rows {
        return Err(LinalgError::DimensionMismatch("solve: row counts differ"));
    }
    let n = m.cols;
    let (r, pivots) = m.hstack(rhs).rref();
    if pivots.last().is_some_and(|&p| p >= n) {
        return Ok(None);
    }
    let mut x = Matrix::zeros(n, rhs.cols);
    for (i, &p) in pivots.iter().enumerate() {
        for c in 0..rhs.cols {
            x.set(p, c, r.get(i, n + c).clone());
        }
    }
    Ok(Some(x))
}

/// Basis of the intersection of the column spans.
pub fn intersect_subspaces<F: Field>(bases: &[Matrix<F>]) -> Result<Matrix<F>, LinalgError> {
    let Some(first) = bases.first() else {
        return Err(LinalgError::DimensionMismatch("intersect_subspaces: no subspaces"));
    };
    let n = first.rows;
    if bases.iter().any(|b| b.rows != n) {
        return Err(LinalgError::DimensionMismatch("intersect_subspaces: ambient dimensions differ"));
    }
    let mut acc = first.image();
    for b in &bases[1..] {
        if acc.cols == 0 {
            break;
        }
        let b = b.image();
        let k = acc.hstack(&b.neg()).kernel();
        let coeffs = k.block(0, 0, acc.cols, k.cols);
        acc = acc.mul(&coeffs).image();
    }
    Ok(acc)
}

/// Columns of `span` that extend a basis of `sub` to a basis of `sub + span`.
/// Returned as indices into `span`'s columns.
pub fn extend_basis<F: Field>(sub: &Matrix<F>, span: &Matrix<F>) -> Vec<usize> {
    assert_eq!(sub.rows, span.rows, "extend_basis ambient");
    let (_, pivots) = sub.hstack(span).rref();
    pivots.into_iter().filter(|&p| p >= sub.cols).map(|p| p - sub.cols).collect()
}

/// Coordinates of the columns of `v` in the (independent) column basis `basis`.
/// Panics if a column is not in the span.
pub fn coordinates<F: Field>(basis: &Matrix<F>, v: &Matrix<F>) -> Matrix<F> {
    solve(basis, v).expect("shape").expect("vector outside span")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;

    #[test]
    fn identity_and_zero() {
        let r = rank_kernel_image(&Matrix::<Q>::identity(2));
        assert_eq!(r.rank, 2);
        assert_eq!(r.kernel.cols(), 0);
        let r = rank_kernel_image(&Matrix::<Q>::zeros(3, 3));
        assert_eq!(r.rank, 0);
        assert_eq!(r.kernel, Matrix::identity(3));
    }

    #[test]
    fn rank_one_example() {
        let m = Matrix::<Q>::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6]]);
        let r = rank_kernel_image(&m);
        assert_eq!(r.rank, 1);
        assert_eq!(r.kernel.cols(), 2);
        assert!(m.mul(&r.kernel).is_zero());
    }

    #[test]
    fn solve_cases() {
        let rhs = Matrix::<Q>::from_i64_rows(&[&[3, 1], &[-4, 0]]);
        assert_eq!(solve(&Matrix::identity(2), &rhs).unwrap(), Some(rhs.clone()));
        assert_eq!(solve(&Matrix::zeros(2, 2), &rhs).unwrap(), None);
        let x = solve(&Matrix::<Q>::from_i64_rows(&[&[2]]), &Matrix::from_i64_rows(&[&[1]])).unwrap().unwrap();
        assert_eq!(*x.get(0, 0), Q::new(1, 2));
        assert!(solve(&Matrix::<Q>::zeros(2, 2), &Matrix::zeros(3, 1)).is_err());
    }

    #[test]
    fn intersections() {
        let a = Matrix::<Q>::from_i64_rows(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(intersect_subspaces(&[a.clone(), a.clone()]).unwrap().cols(), 2);
        let x = Matrix::<Q>::from_i64_rows(&[&[1], &[0]]);
        let y = Matrix::<Q>::from_i64_rows(&[&[0], &[1]]);
        assert_eq!(intersect_subspaces(&[x, y]).unwrap().cols(), 0);
        assert!(intersect_subspaces(&[a, Matrix::<Q>::identity(2)]).is_err());
    }

    #[test]
    fn extend_basis_picks_complement() {
        let sub = Matrix::<Q>::from_i64_rows(&[&[1], &[1], &[0]]);
        let span = Matrix::<Q>::identity(3);
        let ext = extend_basis(&sub, &span);
        assert_eq!(ext.len(), 2);
        assert_eq!(sub.hstack(&span.select_columns(&ext)).rank(), 3);
    }
}
