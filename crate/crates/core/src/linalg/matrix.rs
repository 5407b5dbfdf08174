use std::fmt;

use crate::error::{Error, Result};
use crate::gf::FieldSpec;

use super::axpy;

/// Dense row-major matrix over a finite field. Values are immutable; every
/// operation returns a new matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

/// Reduced row echelon form with its pivot columns. Rank is `pivots.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Matrix {
    pub fn new(field: &FieldSpec, rows: usize, cols: usize, data: Vec<u8>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        for &e in &data {
            field.check(e as u64)?;
        }
        Ok(Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from rows. An empty row list gives a `0 x cols` matrix
    /// only through [`Matrix::zeros`]; here it is `0 x 0`.
    pub fn from_rows<R: AsRef<[u8]>>(field: &FieldSpec, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            data.extend_from_slice(r);
        }
        Self::new(field, rows.len(), cols, data)
    }

    pub fn zeros(field: &FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u8]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.row_iter().map(|r| r.to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<u8> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.get(r, c);
            }
        }
        out
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(&self.field, self.rows, other.cols);
        for r in 0..self.rows {
            let out_row = &mut out.data[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                axpy(&self.field, out_row, self.get(r, k), other.row(k));
            }
        }
        Ok(out)
    }

    /// `M * v^T` as a plain vector of length `rows`.
    pub fn mul_vec(&self, v: &[u8]) -> Result<Vec<u8>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                actual: v.len(),
            });
        }
        Ok(self
            .row_iter()
            .map(|row| super::dot(&self.field, row, v))
            .collect())
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(Error::DimensionMismatch(
                "vstack column counts differ".into(),
            ));
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix::new(&self.field, self.rows + other.rows, cols, data)
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row counts differ".into()));
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Matrix::new(&self.field, self.rows, cols, data)
    }

    /// Submatrix made of the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            for &c in cols {
                data.push(self.get(r, c));
            }
        }
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    /// Indices of all-zero columns.
    pub fn zero_columns(&self) -> Vec<usize> {
        (0..self.cols)
            .filter(|&c| (0..self.rows).all(|r| self.get(r, c) == 0))
            .collect()
    }

    /// Reduced row echelon form.
    ///
    /// Columns are scanned left to right; the pivot row is the first row at
    /// or below the current one with a nonzero entry, scaled to 1.
    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for x in &mut m.data[r * m.cols..(r + 1) * m.cols] {
                *x = f.mul(inv, *x);
            }
            let pivot_row = m.row(r).to_vec();
            for i in 0..m.rows {
                if i != r {
                    let factor = f.neg(m.get(i, c));
                    let cols = m.cols;
                    axpy(f, &mut m.data[i * cols..(i + 1) * cols], factor, &pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
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
        self.rref().rank()
    }

    /// RREF with the zero rows dropped: a canonical basis of the row space.
    pub fn row_basis(&self) -> Matrix {
        let rref = self.rref();
        let rank = rref.rank();
        let mut m = rref.matrix;
        m.data.truncate(rank * m.cols);
        m.rows = rank;
        m
    }

    pub fn same_row_space(&self, other: &Matrix) -> bool {
        self.field == other.field
            && self.cols == other.cols
            && self.row_basis() == other.row_basis()
    }

    /// Basis of `{v : M v^T = 0}` in reduced row echelon form.
    pub fn kernel_basis(&self) -> Matrix {
        let f = &self.field;
        let rref = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (i, &p) in rref.pivots.iter().enumerate() {
            is_pivot[p] = Some(i);
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| is_pivot[c].is_none()).collect();
        let mut out = Self::zeros(f, free.len(), self.cols);
        for (row, &fc) in free.iter().enumerate() {
            out.data[row * self.cols + fc] = 1;
            for (i, &p) in rref.pivots.iter().enumerate() {
                out.data[row * self.cols + p] = f.neg(rref.matrix.get(i, fc));
            }
        }
        out.row_basis()
    }

    /// Kronecker product: block `(r, s)` of the result is `a[r][s] * B`.
    pub fn kron(&self, b: &Matrix) -> Result<Matrix> {
        self.same_field(b)?;
        let f = &self.field;
        let rows = self.rows * b.rows;
        let cols = self.cols * b.cols;
        let mut data = vec![0u8; rows * cols];
        for r in 0..self.rows {
            for s in 0..self.cols {
                let a = self.get(r, s);
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        data[(r * b.rows + i) * cols + s * b.cols + j] = f.mul(a, b.get(i, j));
                    }
                }
            }
        }
        Matrix::new(f, rows, cols, data)
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(&self.field, n)).ok()?;
        let rref = aug.rref();
        if rref.pivots.iter().take(n).copied().ne(0..n) {
            return None;
        }
        let idx: Vec<usize> = (n..2 * n).collect();
        Some(rref.matrix.select_columns(&idx))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_rows())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> FieldSpec {
        FieldSpec::with_order(q).unwrap()
    }

    fn m(f: &FieldSpec, rows: &[&[u8]]) -> Matrix {
        Matrix::from_rows(f, rows).unwrap()
    }

    #[test]
    fn rref_examples() {
        let f = gf(2);
        let r = Matrix::identity(&f, 3).rref();
        assert_eq!(r.matrix, Matrix::identity(&f, 3));
        assert_eq!(r.pivots, vec![0, 1, 2]);

        let r = m(&f, &[&[1, 1], &[1, 1]]).rref();
        assert_eq!(r.matrix, m(&f, &[&[1, 1], &[0, 0]]));
        assert_eq!((r.pivots.clone(), r.rank()), (vec![0], 1));

        let r = m(&f, &[&[0, 1, 1], &[1, 0, 1]]).rref();
        assert_eq!(r.matrix, m(&f, &[&[1, 0, 1], &[0, 1, 1]]));
        assert_eq!(r.rank(), 2);
    }

    #[test]
    fn kernel_examples() {
        let f = gf(2);
        let k = m(&f, &[&[1, 1, 1]]).kernel_basis();
        assert!(k.same_row_space(&m(&f, &[&[1, 1, 0], &[0, 1, 1]])));
        assert_eq!(k.rows(), 2);

        let k = Matrix::identity(&f, 4).kernel_basis();
        assert_eq!((k.rows(), k.cols()), (0, 4));

        let k = m(&f, &[&[1, 0, 1], &[0, 1, 1]]).kernel_basis();
        assert_eq!(k, m(&f, &[&[1, 1, 1]]));
    }

    #[test]
    fn kron_examples() {
        let f = gf(2);
        let b = m(&f, &[&[1, 0, 1], &[0, 1, 1]]);
        let h = m(&f, &[&[1, 1]]).kron(&b).unwrap();
        assert_eq!(h, m(&f, &[&[1, 0, 1, 1, 0, 1], &[0, 1, 1, 0, 1, 1]]));
        assert_eq!(m(&f, &[&[1]]).kron(&b).unwrap(), b);

        let f3 = gf(3);
        let h = m(&f3, &[&[1, 2]]).kron(&m(&f3, &[&[1, 1]])).unwrap();
        assert_eq!(h, m(&f3, &[&[1, 1, 2, 2]]));

        assert_eq!(
            m(&f, &[&[1]]).kron(&m(&f3, &[&[1]])).unwrap_err(),
            Error::FieldMismatch
        );
    }

    #[test]
    fn inverse_round_trip() {
        let f = gf(5);
        let a = m(&f, &[&[1, 2, 0], &[0, 3, 4], &[2, 0, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(&f, 3));
        assert!(m(&f, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn mul_vec_checks_length() {
        let f = gf(2);
        let a = m(&f, &[&[1, 1, 0]]);
        assert_eq!(a.mul_vec(&[1, 1, 1]).unwrap(), vec![0]);
        assert!(a.mul_vec(&[1]).is_err());
    }
}
