use std::collections::BTreeSet;

use super::{checked, smith_dense, DenseMatrix, IntVector, ZlinError};
use crate::Name;

/// Expresses `v` as a non-negative integer combination of `gens`.
///
/// Returns the coefficients aligned with `gens`, `None` if no such
/// combination exists, and [`ZlinError::Ambiguous`] if more than one does.
/// Linearly independent generators are solved exactly; dependent generators
/// are searched exhaustively, which is only bounded when every generator is
/// non-negative, so dependent mixed-sign input yields
/// [`ZlinError::Unbounded`].
pub fn monoid_coordinates(v: &IntVector, gens: &[IntVector]) -> Result<Option<Vec<i64>>, ZlinError> {
    let index: Vec<Name> = gens
        .iter()
        .flat_map(|g| g.names().cloned())
        .chain(v.names().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let pos = |n: &Name| index.binary_search(n).expect("indexed");
    let mut g = DenseMatrix::zeros(gens.len(), index.len());
    for (i, gen) in gens.iter().enumerate() {
        for (n, c) in gen.iter() {
            g.set(i, pos(n), c);
        }
    }
    let target: Vec<i64> = index.iter().map(|n| v.coeff(n.as_str())).collect();

    let smith = smith_dense(&g)?;
    if smith.rank() == gens.len() {
        return solve_independent(&smith, &target);
    }
    if gens.iter().any(|g| !g.is_nonnegative()) {
        return Err(ZlinError::Unbounded);
    }
    search_nonnegative(&g, &target)
}

/// Unique integer solution of `c · G = v` for `G` with independent rows.
fn solve_independent(smith: &super::DenseSmith, target: &[i64]) -> Result<Option<Vec<i64>>, ZlinError> {
    // U G V = D, so c G = v  ⇔  (c U⁻¹) D = v V.
    let k = smith.u.nrows();
    let row = DenseMatrix::from_rows(&[target.to_vec()]);
    let w = if target.is_empty() { DenseMatrix::zeros(1, 0) } else { row.checked_mul(&smith.v)? };
    let mut y = vec![0i64; k];
    for j in 0..w.ncols() {
        let wj = w.get(0, j);
        if j < k {
            let d = smith.d.get(j, j);
            if wj % d != 0 {
                return Ok(None);
            }
            y[j] = wj / d;
        } else if wj != 0 {
            return Ok(None);
        }
    }
    let mut c = vec![0i64; k];
    for (i, &yi) in y.iter().enumerate() {
        for (l, cl) in c.iter_mut().enumerate() {
            *cl = checked::add(*cl, checked::mul(yi, smith.u.get(i, l))?)?;
        }
    }
    Ok(c.iter().all(|&x| x >= 0).then_some(c))
}

fn search_nonnegative(g: &DenseMatrix, target: &[i64]) -> Result<Option<Vec<i64>>, ZlinError> {
    if target.iter().any(|&t| t < 0) {
        return Ok(None);
    }
    let k = g.nrows();
    let zero_gen = (0..k).find(|&i| g.row(i).iter().all(|&x| x == 0));
    let mut found: Vec<Vec<i64>> = Vec::new();
    let mut coeffs = vec![0i64; k];
    let mut rest = target.to_vec();
    dfs(g, 0, &mut rest, &mut coeffs, &mut found, zero_gen)?;
    match found.len() {
        0 => Ok(None),
        1 if zero_gen.is_none() => Ok(found.pop()),
        _ => Err(ZlinError::Ambiguous),
    }
}

fn dfs(
    g: &DenseMatrix,
    i: usize,
    rest: &mut Vec<i64>,
    coeffs: &mut Vec<i64>,
    found: &mut Vec<Vec<i64>>,
    skip: Option<usize>,
) -> Result<(), ZlinError> {
    if found.len() >= 2 {
        return Ok(());
    }
    if i == g.nrows() {
        if rest.iter().all(|&x| x == 0) {
            found.push(coeffs.clone());
        }
        return Ok(());
    }
    if Some(i) == skip {
        return dfs(g, i + 1, rest, coeffs, found, skip);
    }
    let row = g.row(i);
    let bound = row
        .iter()
        .zip(rest.iter())
        .filter(|(&x, _)| x > 0)
        .map(|(&x, &r)| r / x)
        .min()
        .unwrap_or(0);
    for c in (0..=bound).rev() {
        for (r, &x) in rest.iter_mut().zip(row) {
            *r = checked::add(*r, checked::mul(-c, x)?)?;
        }
        coeffs[i] = c;
        dfs(g, i + 1, rest, coeffs, found, skip)?;
        for (r, &x) in rest.iter_mut().zip(row) {
            *r = checked::add(*r, checked::mul(c, x)?)?;
        }
        coeffs[i] = 0;
    }
    Ok(())
}
