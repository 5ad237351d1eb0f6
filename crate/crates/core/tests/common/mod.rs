#![allow(dead_code)]

pub mod laws;
pub mod props;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use steiner_core::{CellExpr, PolyPresentation, PresentationBuilder};

/// A random well-typed expression of dimension `dim` over `p`, or `None`
/// if the attempt produced something ill-typed.
fn random_expr(p: &PolyPresentation, rng: &mut ChaCha8Rng, dim: usize, depth: u32) -> Option<CellExpr> {
    let gens: Vec<CellExpr> =
        p.generators().iter().filter(|g| g.dim == dim).map(|g| CellExpr::Gen(g.name.clone())).collect();
    let roll = rng.random_range(0..10);
    let e = if depth == 0 || roll < 5 {
        if !gens.is_empty() && (dim == 0 || roll < 4) {
            gens[rng.random_range(0..gens.len())].clone()
        } else if dim > 0 {
            CellExpr::id(random_expr(p, rng, dim - 1, depth.saturating_sub(1))?)
        } else {
            return None;
        }
    } else if dim == 0 {
        return None;
    } else {
        let level = rng.random_range(0..dim);
        let l = random_expr(p, rng, dim, depth - 1)?;
        let r = random_expr(p, rng, dim, depth - 1)?;
        CellExpr::comp(level, l, r)
    };
    p.eval_table(&e).ok().map(|_| e)
}

/// A seeded random presentation with at most three dimensions and at most
/// six generators. Boundaries are random expressions, kept only when the
/// resulting presentation validates.
pub fn random_presentation(seed: u64) -> PolyPresentation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let target = rng.random_range(2..=6);
    let mut b = PresentationBuilder::new();
    for i in 0..rng.random_range(1..=2) {
        b.add_point(format!("x{i}")).unwrap();
    }
    let mut p = b.build().unwrap();
    let mut count = p.len();
    // Most presentations stay atomic, so that the atomic fragment is
    // exercised beyond dimension one.
    let want_atomic = rng.random_bool(0.6);
    for attempt in 0..200 {
        if count == target {
            break;
        }
        let top = p.max_dim().unwrap_or(0);
        let dim = if rng.random_bool(0.1) {
            0
        } else if top < 3 && rng.random_bool(0.5) {
            top + 1
        } else {
            rng.random_range(1..=top.max(1))
        };
        let name = format!("g{attempt}");
        if dim == 0 {
            b.add_point(name.as_str()).unwrap();
            p = b.build().unwrap();
            count += 1;
            continue;
        }
        let Some(s) = random_expr(&p, &mut rng, dim - 1, 2) else { continue };
        let mut fallback = None;
        for _ in 0..40 {
            let Some(t) = random_expr(&p, &mut rng, dim - 1, 2) else { continue };
            let mut next = b.clone();
            if next.add_cell(name.as_str(), s.clone(), t).is_err() {
                continue;
            }
            let Ok(built) = next.build() else { continue };
            if !want_atomic || built.is_atomic().unwrap() {
                fallback = Some((next, built));
                break;
            }
            if !want_atomic {
                fallback.get_or_insert((next, built));
            }
        }
        if let Some((next, built)) = fallback {
            b = next;
            p = built;
            count += 1;
        }
    }
    p
}

/// Determinant by cofactor expansion in `i128`.
fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect()).collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n).filter(|m| m.count_ones() as usize == k).map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect()).collect()
}

/// Invariant factors from determinantal divisors: `d_k` is the gcd of all
/// `k × k` minors and the `k`-th factor is `d_k / d_{k-1}`. Zero factors
/// pad the result to `min(rows, cols)`.
pub fn invariant_factors_by_minors(a: &[Vec<i64>], cols: usize) -> Vec<i64> {
    let rows = a.len();
    let n = rows.min(cols);
    let mut out = Vec::with_capacity(n);
    let mut prev = 1i128;
    for k in 1..=n {
        let mut d = 0i128;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i128>> = rs.iter().map(|&i| cs.iter().map(|&j| a[i][j] as i128).collect()).collect();
                d = gcd(d, det(&minor));
            }
        }
        if d == 0 {
            out.resize(n, 0);
            break;
        }
        out.push((d / prev) as i64);
        prev = d;
    }
    out
}

/// Checks `count` seeded random matrices of shape at most 5×5 with entries
/// in [-5, 5]: `U·A·V = D`, the divisibility chain, and agreement with the
/// determinantal-divisor factors.
pub fn check_random_smith(seed: u64, count: usize) -> Result<usize, String> {
    use steiner_core::zlin::{smith_dense, DenseMatrix};
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let rows = rng.random_range(1..=5);
        let cols = rng.random_range(1..=5);
        let data: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.random_range(-5..=5)).collect()).collect();
        let a = DenseMatrix::from_rows(&data);
        let s = smith_dense(&a).map_err(|e| format!("{data:?}: {e}"))?;
        let uav = s.u.checked_mul(&a).and_then(|ua| ua.checked_mul(&s.v)).map_err(|e| e.to_string())?;
        if uav != s.d {
            return Err(format!("{data:?}: U·A·V ≠ D"));
        }
        let diag = s.diagonal();
        let nonzero: Vec<i64> = diag.iter().copied().filter(|&x| x != 0).collect();
        if !nonzero.windows(2).all(|w| w[1] % w[0] == 0) {
            return Err(format!("{data:?}: divisibility fails in {diag:?}"));
        }
        let oracle = invariant_factors_by_minors(&data, cols);
        if diag != oracle {
            return Err(format!("{data:?}: {diag:?} against {oracle:?}"));
        }
    }
    Ok(count)
}
