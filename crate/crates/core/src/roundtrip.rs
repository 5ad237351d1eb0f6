//! Linearization of enumerated ω-categories and the round trip from a
//! complex through its realization and back.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::adc::{Adc, AdcError};
use crate::nu::{enumerate_nu, Caps, EnumeratedOmegaCat, NuError, NuTable, Sign};
use crate::zlin::{monoid_coordinates, quotient_free_basis, smith_dense, DenseMatrix, IntVector, QuotientBasis, ZlinError};
use crate::Name;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RoundtripError {
    #[error("face of an enumerated {dim}-cell is missing from the enumeration")]
    MissingFace { dim: usize },
    #[error(transparent)]
    Nu(#[from] NuError),
    #[error(transparent)]
    Zlin(#[from] ZlinError),
    #[error(transparent)]
    Adc(#[from] AdcError),
}

/// `ℤ[cells] / ⟨[x ∗_p y] - [x] - [y]⟩` in every degree, with the induced
/// complex.
#[derive(Clone, Debug)]
pub struct QuotientLambda {
    /// Names given to the cells of each degree: atoms take their
    /// generator's name, other cells are named `#c{q}.{i}`.
    pub cell_names: Vec<Vec<Name>>,
    pub quotients: Vec<QuotientBasis>,
    pub complex: Adc,
}

impl QuotientLambda {
    pub fn ranks(&self) -> Vec<usize> {
        self.quotients.iter().map(QuotientBasis::rank).collect()
    }

    /// Coordinates of the class of cell `i` of degree `q`.
    pub fn class(&self, q: usize, i: usize) -> &[i64] {
        self.quotients[q].class_of(&self.cell_names[q][i]).expect("cell is in the ambient basis")
    }

    /// The class of cell `i` of degree `q` as a chain of the induced complex.
    pub fn class_vector(&self, q: usize, i: usize) -> IntVector {
        coords_to_vector(self.class(q, i), &self.quotients[q].basis)
    }
}

fn coords_to_vector(coords: &[i64], names: &[Name]) -> IntVector {
    IntVector::from_terms(names.iter().cloned().zip(coords.iter().copied())).expect("distinct names")
}

fn face_index(e: &EnumeratedOmegaCat, t: &NuTable, p: usize, sign: Sign) -> Result<usize, RoundtripError> {
    let f = t.face(p, sign)?;
    e.index_of(&f).ok_or(RoundtripError::MissingFace { dim: t.dim() })
}

/// Linearizes an enumeration by integer quotients.
///
/// Relations come from the recorded binary composites; identities vanish
/// because `id ∗ id = id` is among them.
pub fn lambda_of_enumerated(e: &EnumeratedOmegaCat) -> Result<QuotientLambda, RoundtripError> {
    let dims = e.max_dim() + 1;
    let mut cell_names = Vec::with_capacity(dims);
    for q in 0..dims {
        let names: Vec<Name> = e
            .cells(q)
            .iter()
            .enumerate()
            .map(|(i, t)| e.atom_name(t).cloned().unwrap_or_else(|| Name::from(format!("#c{q}.{i}"))))
            .collect();
        cell_names.push(names);
    }
    let mut relations: Vec<Vec<IntVector>> = vec![Vec::new(); dims];
    for op in e.compositions() {
        let n = &cell_names[op.dim];
        let mut r = IntVector::unit(n[op.result].clone());
        r.add_term(n[op.left].clone(), -1)?;
        r.add_term(n[op.right].clone(), -1)?;
        relations[op.dim].push(r);
    }
    let mut quotients = Vec::with_capacity(dims);
    for q in 0..dims {
        let mut qb = quotient_free_basis(&cell_names[q], &relations[q])?;
        let ambient: HashSet<&Name> = cell_names[q].iter().collect();
        let names = qb
            .basis
            .iter()
            .enumerate()
            .map(|(k, n)| if ambient.contains(n) { n.clone() } else { Name::from(format!("#b{q}.{k}")) })
            .collect();
        qb.rename_basis(names)?;
        quotients.push(qb);
    }
    let mut lambda = QuotientLambda { cell_names, quotients, complex: Adc::new() };
    let mut complex = Adc::new();
    for q in 0..dims {
        for (k, name) in lambda.quotients[q].basis.clone().into_iter().enumerate() {
            let rep = lambda.quotients[q].representatives[k].clone();
            if q == 0 {
                let aug = rep.iter().try_fold(0i64, |acc, (_, c)| acc.checked_add(c).ok_or(ZlinError::Overflow))?;
                complex.add_generator(name, 0, IntVector::zero(), aug)?;
                continue;
            }
            let mut d = IntVector::zero();
            for (cell, c) in rep.iter() {
                let i = lambda.cell_names[q].iter().position(|n| n == cell).expect("representative over cells");
                let t = &e.cells(q)[i];
                let tgt = face_index(e, t, q - 1, Sign::Plus)?;
                let src = face_index(e, t, q - 1, Sign::Minus)?;
                d.add_scaled(&lambda.class_vector(q - 1, tgt), c)?;
                d.add_scaled(&lambda.class_vector(q - 1, src), -c)?;
            }
            complex.add_generator(name, q, d, 0)?;
        }
    }
    lambda.complex = complex;
    Ok(lambda)
}

/// The condition of an ω-category basis that a candidate set fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BasisBullet {
    /// The candidate does not generate every cell under composition and
    /// identities.
    Generation,
    /// Two candidate cells have the same class.
    Injectivity,
    /// The classes are not a basis of the chain groups.
    IntegerBasis,
    /// Some cell class is not a unique non-negative combination.
    MonoidBasis,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisFailure {
    pub bullet: BasisBullet,
    pub detail: String,
}

impl fmt::Display for BasisFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self.bullet, self.detail)
    }
}

/// Checks whether `candidate` is a basis of the enumerated ω-category.
pub fn check_omega_basis(
    e: &EnumeratedOmegaCat,
    lambda: &QuotientLambda,
    candidate: &[NuTable],
) -> Result<Option<BasisFailure>, RoundtripError> {
    let fail = |bullet, detail: String| Ok(Some(BasisFailure { bullet, detail }));
    let mut chosen: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); e.max_dim() + 1];
    let mut seeds = vec![Vec::new(); e.max_dim() + 1];
    for t in candidate {
        match e.index_of(t) {
            Some(i) if t.dim() <= e.max_dim() => {
                chosen[t.dim()].insert(i);
                seeds[t.dim()].push(t.clone());
            }
            _ => return fail(BasisBullet::Generation, format!("{t} is not an enumerated cell")),
        }
    }

    let caps = Caps { max_cells: e.total_cells() + 1, max_coeff: i64::MAX };
    let (cells, _, _) = crate::nu::close(seeds, e.max_dim(), caps)?;
    for q in 0..=e.max_dim() {
        if cells[q].len() != e.cells(q).len() {
            return fail(
                BasisBullet::Generation,
                format!("generates {} of the {} cells of dimension {q}", cells[q].len(), e.cells(q).len()),
            );
        }
    }

    let mut seen = HashSet::new();
    for (q, idx) in chosen.iter().enumerate() {
        for &i in idx {
            if !seen.insert((q, lambda.class(q, i).to_vec())) {
                return fail(BasisBullet::Injectivity, format!("{} shares its class", e.cells(q)[i]));
            }
        }
    }

    for (q, idx) in chosen.iter().enumerate() {
        let rank = lambda.quotients[q].rank();
        if idx.len() != rank {
            return fail(
                BasisBullet::IntegerBasis,
                format!("{} classes in degree {q} against rank {rank}", idx.len()),
            );
        }
        let rows: Vec<Vec<i64>> = idx.iter().map(|&i| lambda.class(q, i).to_vec()).collect();
        let m = if rows.is_empty() { DenseMatrix::zeros(0, 0) } else { DenseMatrix::from_rows(&rows) };
        let det = m.determinant()?;
        if det.abs() != 1 {
            return fail(BasisBullet::IntegerBasis, format!("determinant {det} in degree {q}"));
        }
    }

    for (q, idx) in chosen.iter().enumerate() {
        let gens: Vec<IntVector> = idx.iter().map(|&i| lambda.class_vector(q, i)).collect();
        for i in 0..e.cells(q).len() {
            let x = lambda.class_vector(q, i);
            match monoid_coordinates(&x, &gens) {
                Ok(Some(_)) => {}
                Ok(None) => {
                    return fail(BasisBullet::MonoidBasis, format!("{} has no non-negative coordinates", e.cells(q)[i]))
                }
                Err(ZlinError::Ambiguous) => {
                    return fail(BasisBullet::MonoidBasis, format!("{} has several coordinates", e.cells(q)[i]))
                }
                Err(err) => return Err(err.into()),
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum EquivalenceReport {
    /// Atom classes form a basis and the induced complex matches the input
    /// generator by generator.
    Isomorphic { ranks: Vec<usize>, cells: Vec<usize> },
    /// The first generator at which the induced complex differs.
    Mismatch { generator: Name, detail: String },
    NotStrongSteiner { reason: String },
}

impl EquivalenceReport {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, EquivalenceReport::Isomorphic { .. })
    }
}

impl fmt::Display for EquivalenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquivalenceReport::Isomorphic { ranks, cells } => {
                write!(f, "isomorphic: ranks {ranks:?}, cells per dimension {cells:?}")
            }
            EquivalenceReport::Mismatch { generator, detail } => write!(f, "mismatch at `{generator}`: {detail}"),
            EquivalenceReport::NotStrongSteiner { reason } => write!(f, "not strong Steiner: {reason}"),
        }
    }
}

/// Inverse of a unimodular square matrix, or `None` if it is not unimodular.
fn unimodular_inverse(m: &DenseMatrix) -> Result<Option<DenseMatrix>, ZlinError> {
    let s = smith_dense(m)?;
    if s.diagonal().iter().any(|&d| d != 1) || m.nrows() != m.ncols() {
        return Ok(None);
    }
    // U M V = I, so M⁻¹ = V U.
    Ok(Some(s.v.checked_mul(&s.u)?))
}

/// Enumerates the realization of `c`, linearizes it, and compares the
/// result with `c` through the correspondence between atoms and generators.
pub fn verify_equivalence(c: &Adc, caps: Caps) -> Result<EquivalenceReport, RoundtripError> {
    if let Some(b) = c.unitality_violation()? {
        return Ok(EquivalenceReport::NotStrongSteiner { reason: format!("not unital at `{b}`") });
    }
    if let Some(cycle) = c.loop_free_report().cycle_witness {
        let names: Vec<&str> = cycle.iter().map(|n| n.as_str()).collect();
        return Ok(EquivalenceReport::NotStrongSteiner { reason: format!("preorder cycle {}", names.join(" → ")) });
    }
    let Some(top) = c.max_degree() else {
        return Ok(EquivalenceReport::Isomorphic { ranks: Vec::new(), cells: Vec::new() });
    };
    let e = enumerate_nu(c, top, caps)?;
    let lambda = lambda_of_enumerated(&e)?;
    let mismatch = |g: &Name, detail: String| Ok(EquivalenceReport::Mismatch { generator: g.clone(), detail });

    // Coordinates of every class in the basis of atom classes.
    let mut inverse = Vec::with_capacity(top + 1);
    for q in 0..=top {
        let atoms = c.basis(q);
        let mut rows = Vec::with_capacity(atoms.len());
        for g in atoms {
            let Some(i) = e.atom_table(g).and_then(|t| e.index_of(t)) else {
                return mismatch(g, "atom is not an enumerated cell".into());
            };
            rows.push(lambda.class(q, i).to_vec());
        }
        if atoms.len() != lambda.quotients[q].rank() {
            let g = &atoms[0];
            return mismatch(g, format!("{} atoms in degree {q} against rank {}", atoms.len(), lambda.quotients[q].rank()));
        }
        let m = if rows.is_empty() { DenseMatrix::zeros(0, 0) } else { DenseMatrix::from_rows(&rows) };
        match unimodular_inverse(&m)? {
            Some(inv) => inverse.push(inv),
            None => return mismatch(&atoms[0], format!("atom classes are not a basis in degree {q}")),
        }
    }
    let in_atoms = |q: usize, coords: &[i64]| -> Result<IntVector, ZlinError> {
        let inv = &inverse[q];
        let mut out = IntVector::zero();
        for (j, g) in c.basis(q).iter().enumerate() {
            let col: Vec<i64> = (0..inv.nrows()).map(|r| inv.get(r, j)).collect();
            let mut x = 0i64;
            for (a, b) in coords.iter().zip(&col) {
                x = a.checked_mul(*b).and_then(|ab| x.checked_add(ab)).ok_or(ZlinError::Overflow)?;
            }
            out.add_term(g.clone(), x)?;
        }
        Ok(out)
    };

    for g in c.generators() {
        let atom = e.atom_table(&g.name).expect("checked above");
        if g.dim == 0 {
            if g.augmentation != 1 {
                return mismatch(&g.name, format!("augmentation {} against 1", g.augmentation));
            }
            continue;
        }
        let q = g.dim;
        let tgt = face_index(&e, atom, q - 1, Sign::Plus)?;
        let src = face_index(&e, atom, q - 1, Sign::Minus)?;
        let t = in_atoms(q - 1, lambda.class(q - 1, tgt))?;
        let s = in_atoms(q - 1, lambda.class(q - 1, src))?;
        let d = t.checked_sub(&s)?;
        if d != g.boundary {
            return mismatch(&g.name, format!("induced boundary {d} against {}", g.boundary));
        }
    }
    Ok(EquivalenceReport::Isomorphic {
        ranks: lambda.ranks(),
        cells: (0..=top).map(|q| e.cells(q).len()).collect(),
    })
}
