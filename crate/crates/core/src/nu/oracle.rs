use std::collections::{BTreeSet, HashSet};

use super::{NuError, NuTable};
use crate::adc::Adc;
use crate::zlin::IntVector;
use crate::Name;

/// Every valid table of dimension `q` whose coefficients are all at most
/// `cap`, found by exhaustive search without using composition.
///
/// A `q`-table is a valid `(q-1)`-table `s` (its source), a top chain `x`,
/// and the target row `s_top + ∂x`, which together with the lower rows of
/// `s` must again be a valid `(q-1)`-table.
pub fn brute_force_nu(c: &Adc, q: usize, cap: i64) -> Result<BTreeSet<NuTable>, NuError> {
    let mut level: HashSet<NuTable> = bounded_vectors(c.basis(0), cap)
        .into_iter()
        .filter(|x| c.augment(x).ok() == Some(1))
        .map(|x| NuTable::from_rows(vec![(x.clone(), x)]))
        .collect();
    for d in 1..=q {
        let tops = bounded_vectors(c.basis(d), cap);
        let mut next = HashSet::new();
        for x in &tops {
            let dx = c.differential(x)?;
            for s in &level {
                let src = s.top();
                let Ok(tgt) = src.checked_add(&dx) else { continue };
                if !tgt.is_nonnegative() || tgt.max_coeff() > cap {
                    continue;
                }
                let mut rows = s.rows()[..d - 1].to_vec();
                rows.push((tgt.clone(), tgt.clone()));
                if !level.contains(&NuTable::from_rows(rows.clone())) {
                    continue;
                }
                rows[d - 1] = (src.clone(), tgt);
                rows.push((x.clone(), x.clone()));
                next.insert(NuTable::from_rows(rows));
            }
        }
        level = next;
    }
    Ok(level.into_iter().collect())
}

/// All vectors over `basis` with coefficients in `0..=cap`.
fn bounded_vectors(basis: &[Name], cap: i64) -> Vec<IntVector> {
    let mut out = vec![IntVector::zero()];
    for n in basis {
        let mut grown = Vec::with_capacity(out.len() * (cap as usize + 1));
        for v in &out {
            for k in 0..=cap {
                let mut w = v.clone();
                w.add_term(n.clone(), k).expect("small coefficients");
                grown.push(w);
            }
        }
        out = grown;
    }
    out
}
