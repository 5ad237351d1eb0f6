//! Smith normal form over the integers with unimodular transforms.
//!
//! Pivoting is deterministic: the entry of smallest absolute value in the
//! active submatrix, ties broken by row and then column.

use super::{checked, DenseMatrix, IntMatrix, ZlinError};

/// `U · A · V = D` with `U`, `V` unimodular and `D` diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// The non-zero diagonal entries `d₁ | d₂ | … | d_r`.
    pub fn invariant_factors(&self) -> Vec<i64> {
        diagonal(self.d.dense()).into_iter().filter(|&x| x != 0).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Dense result, also carrying `V⁻¹` which the quotient computation needs.
#[derive(Clone, Debug)]
pub struct DenseSmith {
    pub u: DenseMatrix,
    pub d: DenseMatrix,
    pub v: DenseMatrix,
    pub v_inv: DenseMatrix,
}

impl DenseSmith {
    pub fn diagonal(&self) -> Vec<i64> {
        diagonal(&self.d)
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|&&x| x != 0).count()
    }
}

pub fn diagonal(m: &DenseMatrix) -> Vec<i64> {
    (0..m.nrows().min(m.ncols())).map(|i| m.get(i, i)).collect()
}

pub fn smith_normal_form(a: &IntMatrix) -> Result<SmithDecomposition, ZlinError> {
    let s = smith_dense(a.dense())?;
    let rows = a.row_names().to_vec();
    let cols = a.col_names().to_vec();
    Ok(SmithDecomposition {
        u: IntMatrix::from_dense(rows.clone(), rows.clone(), s.u)?,
        d: IntMatrix::from_dense(rows, cols.clone(), s.d)?,
        v: IntMatrix::from_dense(cols.clone(), cols, s.v)?,
    })
}

struct Reducer {
    a: DenseMatrix,
    u: DenseMatrix,
    v: DenseMatrix,
    v_inv: DenseMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    fn add_row(&mut self, dst: usize, src: usize, k: i64) -> Result<(), ZlinError> {
        self.a.add_row_multiple(dst, src, k)?;
        self.u.add_row_multiple(dst, src, k)
    }

    fn add_col(&mut self, dst: usize, src: usize, k: i64) -> Result<(), ZlinError> {
        self.a.add_col_multiple(dst, src, k)?;
        self.v.add_col_multiple(dst, src, k)?;
        self.v_inv.add_row_multiple(src, dst, checked::neg(k)?)
    }

    fn negate_row(&mut self, i: usize) -> Result<(), ZlinError> {
        self.a.negate_row(i)?;
        self.u.negate_row(i)
    }

    /// Smallest non-zero |entry| in rows/cols `t..`, ties by row then column.
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(u64, usize, usize)> = None;
        for i in t..self.a.nrows() {
            for j in t..self.a.ncols() {
                let x = self.a.get(i, j).unsigned_abs();
                if x != 0 && best.is_none_or(|(b, _, _)| x < b) {
                    best = Some((x, i, j));
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    fn bring_to(&mut self, t: usize, (i, j): (usize, usize)) {
        self.swap_rows(t, i);
        self.swap_cols(t, j);
    }

    /// Clears row and column `t` except the pivot. Returns false if a
    /// non-zero remainder was left behind.
    fn eliminate(&mut self, t: usize) -> Result<bool, ZlinError> {
        let p = self.a.get(t, t);
        let mut clean = true;
        for i in t + 1..self.a.nrows() {
            let x = self.a.get(i, t);
            if x != 0 {
                let q = checked::div(x, p)?;
                self.add_row(i, t, checked::neg(q)?)?;
                clean &= self.a.get(i, t) == 0;
            }
        }
        for j in t + 1..self.a.ncols() {
            let x = self.a.get(t, j);
            if x != 0 {
                let q = checked::div(x, p)?;
                self.add_col(j, t, checked::neg(q)?)?;
                clean &= self.a.get(t, j) == 0;
            }
        }
        Ok(clean)
    }

    fn non_divisible_row(&self, t: usize) -> Option<usize> {
        let p = self.a.get(t, t);
        (t + 1..self.a.nrows()).find(|&i| (t + 1..self.a.ncols()).any(|j| self.a.get(i, j) % p != 0))
    }
}

pub fn smith_dense(a: &DenseMatrix) -> Result<DenseSmith, ZlinError> {
    let (m, n) = (a.nrows(), a.ncols());
    let mut r = Reducer {
        a: a.clone(),
        u: DenseMatrix::identity(m),
        v: DenseMatrix::identity(n),
        v_inv: DenseMatrix::identity(n),
    };
    for t in 0..m.min(n) {
        let Some(pos) = r.pivot(t) else { break };
        r.bring_to(t, pos);
        loop {
            if r.eliminate(t)? {
                match r.non_divisible_row(t) {
                    Some(i) => r.add_row(t, i, 1)?,
                    None => break,
                }
            } else {
                let pos = r.pivot(t).expect("remainder left a non-zero entry");
                r.bring_to(t, pos);
            }
        }
        if r.a.get(t, t) < 0 {
            r.negate_row(t)?;
        }
    }
    Ok(DenseSmith { u: r.u, d: r.a, v: r.v, v_inv: r.v_inv })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check(a: &DenseMatrix) -> DenseSmith {
        let s = smith_dense(a).unwrap();
        assert_eq!(s.u.checked_mul(a).unwrap().checked_mul(&s.v).unwrap(), s.d);
        assert!(s.u.determinant().unwrap().abs() == 1);
        assert!(s.v.determinant().unwrap().abs() == 1);
        assert_eq!(s.v.checked_mul(&s.v_inv).unwrap(), DenseMatrix::identity(a.ncols()));
        for i in 0..s.d.nrows() {
            for j in 0..s.d.ncols() {
                if i != j {
                    assert_eq!(s.d.get(i, j), 0);
                }
            }
        }
        let diag = s.diagonal();
        let nz: Vec<i64> = diag.iter().copied().take_while(|&x| x != 0).collect();
        assert!(diag[nz.len()..].iter().all(|&x| x == 0), "zeros must trail: {diag:?}");
        assert!(nz.iter().all(|&x| x > 0));
        assert!(nz.windows(2).all(|w| w[1] % w[0] == 0), "divisibility: {diag:?}");
        s
    }

    #[test]
    fn zero_matrix() {
        let s = check(&DenseMatrix::zeros(2, 2));
        assert_eq!(s.u, DenseMatrix::identity(2));
        assert_eq!(s.v, DenseMatrix::identity(2));
        assert!(s.d.is_zero());
    }

    #[test]
    fn identity_matrix() {
        let s = check(&DenseMatrix::identity(3));
        assert_eq!(s.d, DenseMatrix::identity(3));
    }

    #[test]
    fn two_by_two() {
        // d1 = gcd(2,4,6,8) = 2 and d1*d2 = |det| = 8.
        let s = check(&DenseMatrix::from_rows(&[vec![2, 4], vec![6, 8]]));
        assert_eq!(s.diagonal(), vec![2, 4]);
    }

    #[test]
    fn empty_and_rectangular() {
        check(&DenseMatrix::zeros(0, 3));
        check(&DenseMatrix::zeros(3, 0));
        let s = check(&DenseMatrix::from_rows(&[vec![1, -1]]));
        assert_eq!(s.diagonal(), vec![1]);
        let s = check(&DenseMatrix::from_rows(&[vec![2, 0, 0], vec![0, 3, 0]]));
        assert_eq!(s.diagonal(), vec![1, 6]);
    }

    #[test]
    fn overflow_is_an_error() {
        let b = DenseMatrix::from_rows(&[vec![3, i64::MAX], vec![i64::MAX, 5]]);
        assert!(smith_dense(&b).is_err());
    }

    #[test]
    fn deterministic() {
        let a = DenseMatrix::from_rows(&[vec![3, -4, 5], vec![0, 2, 2], vec![-1, 1, 4]]);
        let s1 = smith_dense(&a).unwrap();
        let s2 = smith_dense(&a).unwrap();
        assert_eq!((s1.u, s1.v), (s2.u, s2.v));
    }

    proptest! {
        #[test]
        fn snf_invariants(rows in 0usize..=5, cols in 0usize..=5, seed in proptest::collection::vec(-5i64..=5, 25)) {
            let data: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 5 + j]).collect()).collect();
            let a = if rows == 0 { DenseMatrix::zeros(0, cols) } else { DenseMatrix::from_rows(&data) };
            check(&a);
        }
    }
}
