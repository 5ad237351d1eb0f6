use std::collections::{HashMap, HashSet, VecDeque};

use super::{CapLimit, NuError, NuTable, Sign};
use crate::adc::Adc;
use crate::Name;

/// Limits on a closure computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Total number of cells over all dimensions.
    pub max_cells: usize,
    /// Largest coefficient allowed in any row.
    pub max_coeff: i64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_cells: 10_000, max_coeff: 8 }
    }
}

/// `cells[dim][result] = cells[dim][left] ∗_level cells[dim][right]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Composition {
    pub dim: usize,
    pub level: usize,
    pub left: usize,
    pub right: usize,
    pub result: usize,
}

/// The cells of the realization up to some dimension, with every binary
/// composite among them recorded.
#[derive(Clone, Debug)]
pub struct EnumeratedOmegaCat {
    complex: Adc,
    cells: Vec<Vec<NuTable>>,
    index: Vec<HashMap<NuTable, usize>>,
    atoms: Vec<(Name, usize)>,
    compositions: Vec<Composition>,
}

impl EnumeratedOmegaCat {
    pub fn complex(&self) -> &Adc {
        &self.complex
    }

    pub fn max_dim(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn cells(&self, q: usize) -> &[NuTable] {
        self.cells.get(q).map_or(&[], Vec::as_slice)
    }

    pub fn total_cells(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    pub fn index_of(&self, t: &NuTable) -> Option<usize> {
        self.index.get(t.dim())?.get(t).copied()
    }

    pub fn contains(&self, t: &NuTable) -> bool {
        self.index_of(t).is_some()
    }

    /// Number of non-identity cells of dimension `q`.
    pub fn nontrivial_count(&self, q: usize) -> usize {
        self.cells(q).iter().filter(|t| !t.is_identity()).count()
    }

    /// Generators whose atom is a valid table, with the atom's index in its
    /// dimension.
    pub fn atoms(&self) -> &[(Name, usize)] {
        &self.atoms
    }

    pub fn atom_name(&self, t: &NuTable) -> Option<&Name> {
        let i = self.index_of(t)?;
        self.atoms.iter().find(|(n, j)| *j == i && self.complex.degree_of(n) == Some(t.dim())).map(|(n, _)| n)
    }

    pub fn atom_table(&self, name: &str) -> Option<&NuTable> {
        let (n, i) = self.atoms.iter().find(|(n, _)| n.as_str() == name)?;
        Some(&self.cells[self.complex.degree_of(n)?][*i])
    }

    pub fn compositions(&self) -> &[Composition] {
        &self.compositions
    }
}

struct Closure {
    caps: Caps,
    cells: Vec<Vec<NuTable>>,
    index: Vec<HashMap<NuTable, usize>>,
    compositions: Vec<Composition>,
    total: usize,
}

impl Closure {
    fn insert(&mut self, q: usize, t: NuTable, work: &mut VecDeque<usize>) -> Result<usize, NuError> {
        if let Some(&i) = self.index[q].get(&t) {
            return Ok(i);
        }
        if t.max_coeff() > self.caps.max_coeff {
            return Err(NuError::EnumCap { dim: q, limit: CapLimit::Coefficient(self.caps.max_coeff) });
        }
        if self.total >= self.caps.max_cells {
            return Err(NuError::EnumCap { dim: q, limit: CapLimit::Cells(self.caps.max_cells) });
        }
        let i = self.cells[q].len();
        self.index[q].insert(t.clone(), i);
        self.cells[q].push(t);
        self.total += 1;
        work.push_back(i);
        Ok(i)
    }

    /// Closes dimension `q` under composition, starting from `seeds` and the
    /// identities on the cells of dimension `q - 1`.
    fn close_dim(&mut self, q: usize, seeds: Vec<NuTable>) -> Result<(), NuError> {
        self.cells.push(Vec::new());
        self.index.push(HashMap::new());
        let mut work = VecDeque::new();
        for t in seeds {
            self.insert(q, t, &mut work)?;
        }
        if q > 0 {
            let ids: Vec<NuTable> = self.cells[q - 1].iter().map(NuTable::identity).collect();
            for t in ids {
                self.insert(q, t, &mut work)?;
            }
        }
        let mut by_source: HashMap<(usize, NuTable), Vec<usize>> = HashMap::new();
        let mut by_target: HashMap<(usize, NuTable), Vec<usize>> = HashMap::new();
        let mut seen = HashSet::new();
        while let Some(i) = work.pop_front() {
            let c = self.cells[q][i].clone();
            for p in 0..q {
                let s = c.face(p, Sign::Minus)?;
                let t = c.face(p, Sign::Plus)?;
                by_source.entry((p, s.clone())).or_default().push(i);
                by_target.entry((p, t.clone())).or_default().push(i);
                let rights = by_source.get(&(p, t)).cloned().unwrap_or_default();
                for y in rights {
                    let r = c.compose(&self.cells[q][y], p)?;
                    let result = self.insert(q, r, &mut work)?;
                    let op = Composition { dim: q, level: p, left: i, right: y, result };
                    if seen.insert(op) {
                        self.compositions.push(op);
                    }
                }
                let lefts = by_target.get(&(p, s)).cloned().unwrap_or_default();
                for x in lefts.into_iter().filter(|&x| x != i) {
                    let r = self.cells[q][x].compose(&c, p)?;
                    let result = self.insert(q, r, &mut work)?;
                    let op = Composition { dim: q, level: p, left: x, right: i, result };
                    if seen.insert(op) {
                        self.compositions.push(op);
                    }
                }
            }
        }
        Ok(())
    }
}

/// Closes `seeds[q]` (for `q ≤ max_dim`) together with all identities under
/// composition, one dimension at a time.
pub(crate) fn close(
    seeds: Vec<Vec<NuTable>>,
    max_dim: usize,
    caps: Caps,
) -> Result<(Vec<Vec<NuTable>>, Vec<HashMap<NuTable, usize>>, Vec<Composition>), NuError> {
    let mut closure =
        Closure { caps, cells: Vec::new(), index: Vec::new(), compositions: Vec::new(), total: 0 };
    let mut seeds = seeds;
    seeds.resize(max_dim + 1, Vec::new());
    for (q, s) in seeds.into_iter().enumerate().take(max_dim + 1) {
        closure.close_dim(q, s)?;
    }
    Ok((closure.cells, closure.index, closure.compositions))
}

/// Enumerates the cells of dimension `≤ max_dim` generated by the atoms of
/// `c` under identities and composition.
///
/// Generators whose atom is not a valid table are skipped. Fails with
/// [`NuError::EnumCap`] if the closure does not stabilize within `caps`.
pub fn enumerate_nu(c: &Adc, max_dim: usize, caps: Caps) -> Result<EnumeratedOmegaCat, NuError> {
    let mut seeds = vec![Vec::new(); max_dim + 1];
    let mut atom_list = Vec::new();
    for g in c.generators().filter(|g| g.dim <= max_dim) {
        let t = c.atom_table(&g.name)?;
        if t.is_valid(c) {
            seeds[g.dim].push(t.clone());
            atom_list.push((g.name.clone(), t));
        }
    }
    let (cells, index, compositions) = close(seeds, max_dim, caps)?;
    let atoms = atom_list.into_iter().map(|(n, t)| (n, index[t.dim()][&t])).collect();
    Ok(EnumeratedOmegaCat { complex: c.clone(), cells, index, atoms, compositions })
}

/// Non-identity cells admitting no factorization `x = y ∗_p z` other than
/// those in which one factor is a unit, per dimension.
///
/// A whiskering such as `id(f) ∗_0 α` is a proper factorization even
/// though `id(f)` is an identity cell: it is not a unit for `∗_0`.
pub fn indecomposables(e: &EnumeratedOmegaCat) -> Vec<Vec<NuTable>> {
    let mut decomposable: Vec<HashSet<usize>> = vec![HashSet::new(); e.cells.len()];
    for op in &e.compositions {
        if op.result != op.left && op.result != op.right {
            decomposable[op.dim].insert(op.result);
        }
    }
    e.cells
        .iter()
        .enumerate()
        .map(|(q, cells)| {
            cells
                .iter()
                .enumerate()
                .filter(|(i, t)| !t.is_identity() && !decomposable[q].contains(i))
                .map(|(_, t)| t.clone())
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zlin::IntVector;

    fn v(terms: &[(&str, i64)]) -> IntVector {
        IntVector::from_terms(terms.iter().copied()).unwrap()
    }

    fn interval() -> Adc {
        let mut c = Adc::new();
        c.add_point("0").unwrap();
        c.add_point("1").unwrap();
        c.add_cell("01", v(&[("1", 1), ("0", -1)])).unwrap();
        c
    }

    #[test]
    fn interval_cells() {
        let e = enumerate_nu(&interval(), 1, Caps::default()).unwrap();
        assert_eq!(e.cells(0).len(), 2);
        assert_eq!(e.cells(1).len(), 3);
        assert_eq!(e.nontrivial_count(1), 1);
        let ind = indecomposables(&e);
        assert_eq!(ind[0].len() + ind[1].len(), 3);
        assert_eq!(e.atom_name(e.atom_table("01").unwrap()).map(|n| n.as_str()), Some("01"));
    }

    #[test]
    fn single_point() {
        let mut c = Adc::new();
        c.add_point("x").unwrap();
        let e = enumerate_nu(&c, 0, Caps::default()).unwrap();
        assert_eq!(e.cells(0), &[NuTable::point("x")]);
        assert_eq!(indecomposables(&e), vec![vec![NuTable::point("x")]]);
    }

    #[test]
    fn loop_hits_the_cap() {
        let mut c = Adc::new();
        c.add_point("a").unwrap();
        c.add_point("b").unwrap();
        c.add_cell("f", v(&[("b", 1), ("a", -1)])).unwrap();
        c.add_cell("g", v(&[("a", 1), ("b", -1)])).unwrap();
        let err = enumerate_nu(&c, 1, Caps { max_cells: 50, max_coeff: 8 }).unwrap_err();
        assert!(matches!(err, NuError::EnumCap { dim: 1, .. }), "{err}");
    }

    #[test]
    fn non_unital_atoms_are_skipped() {
        let mut c = Adc::new();
        c.add_generator("x", 0, IntVector::zero(), 2).unwrap();
        let e = enumerate_nu(&c, 1, Caps::default()).unwrap();
        assert_eq!(e.total_cells(), 0);
    }
}
