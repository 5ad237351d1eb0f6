use std::collections::{BTreeMap, HashMap, HashSet};

use super::{checked, smith_dense, DenseMatrix, IntMatrix, IntVector, ZlinError};
use crate::Name;

/// A free basis of `ℤ[ambient] / ⟨relations⟩` together with the projection.
#[derive(Clone, Debug)]
pub struct QuotientBasis {
    /// Names of the free basis vectors. A basis vector whose chosen
    /// representative is a single ambient generator takes that generator's
    /// name; the others are named `#k`.
    pub basis: Vec<Name>,
    /// `ambient × basis`: row `a` holds the coordinates of the class of `a`.
    pub projection: IntMatrix,
    /// For each basis vector, an ambient combination projecting onto it.
    pub representatives: Vec<IntVector>,
    ambient_index: HashMap<Name, usize>,
}

impl QuotientBasis {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of the class of an ambient generator.
    pub fn class_of(&self, name: &str) -> Option<&[i64]> {
        self.ambient_index.get(name).map(|&i| self.projection.dense().row(i))
    }

    /// Renames the basis vectors. Panics unless there are
    /// [`rank`](Self::rank) names.
    pub fn rename_basis(&mut self, names: Vec<Name>) -> Result<(), ZlinError> {
        assert_eq!(names.len(), self.rank(), "one name per basis vector");
        let rows = self.projection.row_names().to_vec();
        self.projection = IntMatrix::from_dense(rows, names.clone(), self.projection.dense().clone())?;
        self.basis = names;
        Ok(())
    }

    /// Coordinates of the class of an ambient combination.
    pub fn project(&self, v: &IntVector) -> Result<Vec<i64>, ZlinError> {
        let mut out = vec![0i64; self.rank()];
        for (name, c) in v.iter() {
            let row = self.class_of(name.as_str()).ok_or_else(|| ZlinError::UnknownName(name.clone()))?;
            for (o, &x) in out.iter_mut().zip(row) {
                *o = checked::add(*o, checked::mul(c, x)?)?;
            }
        }
        Ok(out)
    }
}

/// Integer row echelon form of a lattice, maintained under insertion.
///
/// Keeps the Smith reduction small: thousands of three-term relations
/// collapse to at most `ambient.len()` independent rows before the dense
/// reduction runs.
#[derive(Default)]
struct Echelon {
    pivots: BTreeMap<usize, BTreeMap<usize, i64>>,
}

fn axpy(dst: &mut BTreeMap<usize, i64>, k: i64, src: &BTreeMap<usize, i64>) -> Result<(), ZlinError> {
    for (&j, &x) in src {
        let e = dst.entry(j).or_insert(0);
        *e = checked::add(*e, checked::mul(k, x)?)?;
        if *e == 0 {
            dst.remove(&j);
        }
    }
    Ok(())
}

fn combine(
    a: i64,
    p: &BTreeMap<usize, i64>,
    b: i64,
    v: &BTreeMap<usize, i64>,
) -> Result<BTreeMap<usize, i64>, ZlinError> {
    let mut out = BTreeMap::new();
    axpy(&mut out, a, p)?;
    axpy(&mut out, b, v)?;
    Ok(out)
}

impl Echelon {
    fn insert(&mut self, mut v: BTreeMap<usize, i64>) -> Result<(), ZlinError> {
        loop {
            let Some((&c, &x)) = v.first_key_value() else { return Ok(()) };
            let Some(p) = self.pivots.get_mut(&c) else {
                if x < 0 {
                    for e in v.values_mut() {
                        *e = checked::neg(*e)?;
                    }
                }
                self.pivots.insert(c, v);
                return Ok(());
            };
            let pc = p[&c];
            if x % pc == 0 {
                axpy(&mut v, checked::neg(x / pc)?, p)?;
            } else {
                let (g, s, t) = checked::egcd(pc, x)?;
                let new_pivot = combine(s, p, t, &v)?;
                let rest = combine(x / g, p, checked::neg(pc / g)?, &v)?;
                *p = new_pivot;
                v = rest;
            }
        }
    }
}

/// Free basis of the quotient of `ℤ[ambient]` by the span of `relations`.
///
/// Fails with [`ZlinError::Torsion`] if the quotient is not free.
pub fn quotient_free_basis(ambient: &[Name], relations: &[IntVector]) -> Result<QuotientBasis, ZlinError> {
    let index: HashMap<Name, usize> = ambient.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
    let mut ech = Echelon::default();
    for rel in relations {
        let mut row = BTreeMap::new();
        for (name, c) in rel.iter() {
            let j = *index.get(name).ok_or_else(|| ZlinError::UnknownName(name.clone()))?;
            row.insert(j, c);
        }
        ech.insert(row)?;
    }
    let rows: Vec<_> = ech.pivots.into_values().collect();
    let n = ambient.len();
    let mut dense = DenseMatrix::zeros(rows.len(), n);
    for (i, row) in rows.iter().enumerate() {
        for (&j, &x) in row {
            dense.set(i, j, x);
        }
    }
    let smith = smith_dense(&dense)?;
    let diag = smith.diagonal();
    if let Some(&factor) = diag.iter().find(|&&d| d != 0 && d != 1) {
        return Err(ZlinError::Torsion { factor });
    }
    let rank = diag.iter().filter(|&&d| d != 0).count();
    let free: Vec<usize> = (rank..n).collect();

    let mut used = HashSet::new();
    let mut basis = Vec::with_capacity(free.len());
    let mut representatives = Vec::with_capacity(free.len());
    for (k, &col) in free.iter().enumerate() {
        let rep_row = smith.v_inv.row(col);
        let rep: IntVector = IntVector::from_terms(
            rep_row.iter().enumerate().filter(|(_, &x)| x != 0).map(|(j, &x)| (ambient[j].clone(), x)),
        )?;
        let single = (rep.len() == 1).then(|| rep.iter().next().filter(|(_, c)| *c == 1).map(|(n, _)| n.clone())).flatten();
        let name = match single {
            Some(n) if used.insert(n.clone()) => n,
            _ => Name::from(format!("#{k}")),
        };
        basis.push(name);
        representatives.push(rep);
    }
    let mut proj = DenseMatrix::zeros(n, free.len());
    for a in 0..n {
        for (k, &col) in free.iter().enumerate() {
            proj.set(a, k, smith.v.get(a, col));
        }
    }
    Ok(QuotientBasis {
        projection: IntMatrix::from_dense(ambient.to_vec(), basis.clone(), proj)?,
        basis,
        representatives,
        ambient_index: index,
    })
}
