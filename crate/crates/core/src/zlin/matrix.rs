use std::collections::HashMap;
use std::fmt;

use super::{checked, ZlinError};
use crate::Name;

/// Row-major integer matrix with checked elementary operations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        DenseMatrix { rows: rows.len(), cols, data: rows.concat() }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += k * row[src]`
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, k: i64) -> Result<(), ZlinError> {
        if k == 0 {
            return Ok(());
        }
        for j in 0..self.cols {
            let s = self.get(src, j);
            if s != 0 {
                let v = checked::add(self.get(dst, j), checked::mul(k, s)?)?;
                self.set(dst, j, v);
            }
        }
        Ok(())
    }

    /// `col[dst] += k * col[src]`
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, k: i64) -> Result<(), ZlinError> {
        if k == 0 {
            return Ok(());
        }
        for i in 0..self.rows {
            let s = self.get(i, src);
            if s != 0 {
                let v = checked::add(self.get(i, dst), checked::mul(k, s)?)?;
                self.set(i, dst, v);
            }
        }
        Ok(())
    }

    pub fn negate_row(&mut self, i: usize) -> Result<(), ZlinError> {
        for j in 0..self.cols {
            let v = checked::neg(self.get(i, j))?;
            self.set(i, j, v);
        }
        Ok(())
    }

    pub fn negate_col(&mut self, j: usize) -> Result<(), ZlinError> {
        for i in 0..self.rows {
            let v = checked::neg(self.get(i, j))?;
            self.set(i, j, v);
        }
        Ok(())
    }

    pub fn checked_mul(&self, rhs: &DenseMatrix) -> Result<DenseMatrix, ZlinError> {
        if self.cols != rhs.rows {
            return Err(ZlinError::Shape { left: (self.rows, self.cols), right: (rhs.rows, rhs.cols) });
        }
        let mut out = DenseMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b != 0 {
                        let v = checked::add(out.get(i, j), checked::mul(a, b)?)?;
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut out = DenseMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<i64, ZlinError> {
        if self.rows != self.cols {
            return Err(ZlinError::Shape { left: (self.rows, self.cols), right: (self.cols, self.rows) });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(1);
        }
        let mut a: Vec<Vec<i128>> = (0..n).map(|i| self.row(i).iter().map(|&v| v as i128).collect()).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if a[k][k] == 0 {
                match (k + 1..n).find(|&i| a[i][k] != 0) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(0),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[i][j]
                        .checked_mul(a[k][k])
                        .and_then(|x| a[i][k].checked_mul(a[k][j]).and_then(|y| x.checked_sub(y)))
                        .ok_or(ZlinError::Overflow)?;
                    a[i][j] = num / prev;
                }
                a[i][k] = 0;
            }
            prev = a[k][k];
        }
        i64::try_from(sign * a[n - 1][n - 1]).map_err(|_| ZlinError::Overflow)
    }
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// An integer matrix whose rows and columns are labelled by generator names.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: Vec<Name>,
    cols: Vec<Name>,
    data: DenseMatrix,
}

impl IntMatrix {
    pub fn zeros(rows: Vec<Name>, cols: Vec<Name>) -> Self {
        let data = DenseMatrix::zeros(rows.len(), cols.len());
        IntMatrix { rows, cols, data }
    }

    pub fn from_dense(rows: Vec<Name>, cols: Vec<Name>, data: DenseMatrix) -> Result<Self, ZlinError> {
        if data.nrows() != rows.len() || data.ncols() != cols.len() {
            return Err(ZlinError::Shape { left: (rows.len(), cols.len()), right: (data.nrows(), data.ncols()) });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    /// Builds a matrix from `(row, col) -> value` entries over declared labels.
    pub fn from_entries<I>(rows: Vec<Name>, cols: Vec<Name>, entries: I) -> Result<Self, ZlinError>
    where
        I: IntoIterator<Item = ((Name, Name), i64)>,
    {
        let ri: HashMap<&Name, usize> = rows.iter().enumerate().map(|(i, n)| (n, i)).collect();
        let ci: HashMap<&Name, usize> = cols.iter().enumerate().map(|(i, n)| (n, i)).collect();
        let mut data = DenseMatrix::zeros(rows.len(), cols.len());
        for ((r, c), v) in entries {
            let i = *ri.get(&r).ok_or_else(|| ZlinError::UnknownName(r.clone()))?;
            let j = *ci.get(&c).ok_or_else(|| ZlinError::UnknownName(c.clone()))?;
            data.set(i, j, checked::add(data.get(i, j), v)?);
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn row_names(&self) -> &[Name] {
        &self.rows
    }

    pub fn col_names(&self) -> &[Name] {
        &self.cols
    }

    pub fn dense(&self) -> &DenseMatrix {
        &self.data
    }

    pub fn get(&self, row: &str, col: &str) -> Option<i64> {
        let i = self.rows.iter().position(|n| n.as_str() == row)?;
        let j = self.cols.iter().position(|n| n.as_str() == col)?;
        Some(self.data.get(i, j))
    }

    /// Non-zero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (&Name, &Name, i64)> + '_ {
        (0..self.data.nrows()).flat_map(move |i| {
            (0..self.data.ncols()).filter_map(move |j| {
                let v = self.data.get(i, j);
                (v != 0).then(|| (&self.rows[i], &self.cols[j], v))
            })
        })
    }

    pub fn is_square(&self) -> bool {
        self.data.nrows() == self.data.ncols()
    }

    pub fn determinant(&self) -> Result<i64, ZlinError> {
        self.data.determinant()
    }

    /// Product with labels taken from the outer factors. Inner labels are not
    /// required to match, only the inner dimension.
    pub fn checked_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix, ZlinError> {
        let data = self.data.checked_mul(&rhs.data)?;
        Ok(IntMatrix { rows: self.rows.clone(), cols: rhs.cols.clone(), data })
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IntMatrix").field("rows", &self.rows).field("cols", &self.cols).field("data", &self.data).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_small_cases() {
        assert_eq!(DenseMatrix::identity(3).determinant().unwrap(), 1);
        assert_eq!(DenseMatrix::from_rows(&[vec![2, 4], vec![6, 8]]).determinant().unwrap(), -8);
        assert_eq!(DenseMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).determinant().unwrap(), -1);
        assert_eq!(DenseMatrix::from_rows(&[vec![1, 2], vec![2, 4]]).determinant().unwrap(), 0);
        let m = DenseMatrix::from_rows(&[vec![0, 2, 1], vec![3, 0, 1], vec![1, 1, 0]]);
        // cofactor expansion along the first row: 0 - 2*(0-1) + 1*(3-0) = 5
        assert_eq!(m.determinant().unwrap(), 5);
    }

    #[test]
    fn named_entries_accumulate() {
        let names = |v: &[&str]| v.iter().map(|s| Name::from(*s)).collect::<Vec<_>>();
        let m = IntMatrix::from_entries(
            names(&["r"]),
            names(&["x", "y"]),
            [(("r".into(), "x".into()), 1), (("r".into(), "x".into()), 2)],
        )
        .unwrap();
        assert_eq!(m.get("r", "x"), Some(3));
        assert_eq!(m.get("r", "y"), Some(0));
        assert!(IntMatrix::from_entries(names(&["r"]), names(&["x"]), [(("r".into(), "z".into()), 1)]).is_err());
    }
}
