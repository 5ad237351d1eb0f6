//! Augmented directed complexes with a chosen graded basis.
//!
//! The positivity submonoid in each degree is the free commutative monoid on
//! the basis, so a complex is fully described by its generators, their
//! boundaries and the augmentation of the degree-0 generators.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::graph::RelationGraph;
use crate::nu::NuTable;
use crate::zlin::{IntVector, ZlinError};
use crate::Name;

/// The atom of a generator: its table of iterated boundary parts.
pub type AtomTable = NuTable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdcError {
    #[error("generator `{0}` is declared twice")]
    Duplicate(Name),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(Name),
    #[error("boundary of `{generator}` mentions unknown generator `{name}`")]
    UnknownInBoundary { generator: Name, name: Name },
    #[error("boundary of `{generator}` (degree {degree}) mentions `{name}` of degree {found}")]
    BoundaryDegree { generator: Name, degree: usize, name: Name, found: usize },
    #[error("generator `{0}` of positive degree carries an augmentation")]
    AugmentationAbovePoint(Name),
    #[error(transparent)]
    Zlin(#[from] ZlinError),
}

/// One basis element with its boundary and augmentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdcGenerator {
    pub name: Name,
    pub dim: usize,
    /// `∂` of the generator; zero in degree 0.
    pub boundary: IntVector,
    /// `ε` of the generator; zero above degree 0.
    pub augmentation: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Adc {
    basis: Vec<Vec<Name>>,
    generators: HashMap<Name, AdcGenerator>,
}

/// The positive and negative parts of a chain and their supports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub pos: IntVector,
    pub neg: IntVector,
    pub supp_pos: BTreeSet<Name>,
    pub supp_neg: BTreeSet<Name>,
    pub supp: BTreeSet<Name>,
}

/// Splits `c` as `pos - neg` with disjointly supported non-negative parts.
pub fn decompose(c: &IntVector) -> Decomposition {
    let pos = c.positive_part();
    let neg = c.negative_part();
    let supp_pos = pos.support();
    let supp_neg = neg.support();
    let supp = c.support();
    Decomposition { pos, neg, supp_pos, supp_neg, supp }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidationFailure {
    /// `∂∂g ≠ 0`.
    BoundarySquared { generator: Name, residue: IntVector },
    /// `ε∂g ≠ 0` for a degree-1 generator.
    AugmentedBoundary { generator: Name, value: i64 },
}

impl fmt::Display for ValidationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationFailure::BoundarySquared { generator, residue } => {
                write!(f, "∂∂({generator}) = {residue}, expected 0")
            }
            ValidationFailure::AugmentedBoundary { generator, value } => {
                write!(f, "ε∂({generator}) = {value}, expected 0")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub failures: Vec<ValidationFailure>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopFreeReport {
    pub graph: RelationGraph,
    pub is_partial_order: bool,
    pub cycle_witness: Option<Vec<Name>>,
}

impl LoopFreeReport {
    pub fn from_graph(graph: RelationGraph) -> Self {
        let cycle_witness = graph.cycle_witness();
        LoopFreeReport { is_partial_order: cycle_witness.is_none(), graph, cycle_witness }
    }
}

impl Adc {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a generator. Boundary names must already be declared in degree
    /// `dim - 1`; only degree-0 generators may carry an augmentation.
    pub fn add_generator(
        &mut self,
        name: impl Into<Name>,
        dim: usize,
        boundary: IntVector,
        augmentation: i64,
    ) -> Result<(), AdcError> {
        let name = name.into();
        if self.generators.contains_key(&name) {
            return Err(AdcError::Duplicate(name));
        }
        if dim > 0 && augmentation != 0 {
            return Err(AdcError::AugmentationAbovePoint(name));
        }
        for n in boundary.names() {
            let g = self
                .generators
                .get(n)
                .ok_or_else(|| AdcError::UnknownInBoundary { generator: name.clone(), name: n.clone() })?;
            if g.dim + 1 != dim {
                return Err(AdcError::BoundaryDegree { generator: name, degree: dim, name: n.clone(), found: g.dim });
            }
        }
        if self.basis.len() <= dim {
            self.basis.resize(dim + 1, Vec::new());
        }
        self.basis[dim].push(name.clone());
        self.generators.insert(name.clone(), AdcGenerator { name, dim, boundary, augmentation });
        Ok(())
    }

    /// Adds a degree-0 generator with augmentation 1.
    pub fn add_point(&mut self, name: impl Into<Name>) -> Result<(), AdcError> {
        self.add_generator(name, 0, IntVector::zero(), 1)
    }

    /// Adds a generator of degree one more than its (non-empty) boundary.
    pub fn add_cell(&mut self, name: impl Into<Name>, boundary: IntVector) -> Result<(), AdcError> {
        let name = name.into();
        let dim = match boundary.names().next() {
            Some(n) => self.degree_of(n).ok_or_else(|| AdcError::UnknownInBoundary {
                generator: name.clone(),
                name: n.clone(),
            })? + 1,
            None => 1,
        };
        self.add_generator(name, dim, boundary, 0)
    }

    /// Basis of degree `q`, in declaration order.
    pub fn basis(&self, q: usize) -> &[Name] {
        self.basis.get(q).map_or(&[], Vec::as_slice)
    }

    /// Highest degree carrying a generator.
    pub fn max_degree(&self) -> Option<usize> {
        self.basis.iter().rposition(|b| !b.is_empty())
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// All generators, by degree and then declaration order.
    pub fn generators(&self) -> impl Iterator<Item = &AdcGenerator> + '_ {
        self.basis.iter().flatten().map(move |n| &self.generators[n])
    }

    pub fn generator(&self, name: &str) -> Option<&AdcGenerator> {
        self.generators.get(name)
    }

    pub fn degree_of(&self, name: &str) -> Option<usize> {
        self.generators.get(name).map(|g| g.dim)
    }

    fn get(&self, name: &str) -> Result<&AdcGenerator, AdcError> {
        self.generators.get(name).ok_or_else(|| AdcError::UnknownGenerator(Name::from(name)))
    }

    /// `∂` extended linearly to chains.
    pub fn differential(&self, c: &IntVector) -> Result<IntVector, AdcError> {
        let mut out = IntVector::zero();
        for (n, k) in c.iter() {
            out.add_scaled(&self.get(n)?.boundary, k)?;
        }
        Ok(out)
    }

    /// `ε` extended linearly to chains; generators above degree 0 count as 0.
    pub fn augment(&self, c: &IntVector) -> Result<i64, AdcError> {
        let mut total = 0i64;
        for (n, k) in c.iter() {
            let a = self.get(n)?.augmentation;
            total = k.checked_mul(a).and_then(|x| x.checked_add(total)).ok_or(ZlinError::Overflow)?;
        }
        Ok(total)
    }

    /// Checks `∂∂ = 0` and `ε∂ = 0` generator by generator.
    pub fn validate(&self) -> Result<ValidationReport, AdcError> {
        let mut failures = Vec::new();
        for g in self.generators() {
            match g.dim {
                0 => {}
                1 => {
                    let value = self.augment(&g.boundary)?;
                    if value != 0 {
                        failures.push(ValidationFailure::AugmentedBoundary { generator: g.name.clone(), value });
                    }
                }
                _ => {
                    let residue = self.differential(&g.boundary)?;
                    if !residue.is_zero() {
                        failures.push(ValidationFailure::BoundarySquared { generator: g.name.clone(), residue });
                    }
                }
            }
        }
        Ok(ValidationReport { failures })
    }

    /// `⟨b⟩`: row `q` is `(b, b)` and row `p < q` holds the negative part of
    /// `∂` of the negative row above and the positive part of `∂` of the
    /// positive row above.
    pub fn atom_table(&self, b: &str) -> Result<AtomTable, AdcError> {
        let g = self.get(b)?;
        let top = IntVector::unit(g.name.clone());
        let mut rows = vec![(top.clone(), top); g.dim + 1];
        for p in (0..g.dim).rev() {
            let neg = self.differential(&rows[p + 1].0)?.negative_part();
            let pos = self.differential(&rows[p + 1].1)?.positive_part();
            rows[p] = (neg, pos);
        }
        Ok(NuTable::from_rows(rows))
    }

    /// The first generator whose atom has a degree-0 row of augmentation
    /// other than 1.
    pub fn unitality_violation(&self) -> Result<Option<Name>, AdcError> {
        for g in self.generators() {
            let atom = self.atom_table(&g.name)?;
            let (neg, pos) = atom.row(0);
            if self.augment(neg)? != 1 || self.augment(pos)? != 1 {
                return Ok(Some(g.name.clone()));
            }
        }
        Ok(None)
    }

    pub fn is_unital(&self) -> Result<bool, AdcError> {
        Ok(self.unitality_violation()?.is_none())
    }

    /// The generating graph of the basis preorder: `a → b` when `a` is in
    /// the negative support of `∂b`, and `b → c` when `c` is in the positive
    /// support of `∂b`.
    pub fn preorder_graph(&self) -> RelationGraph {
        let mut graph = RelationGraph::with_nodes(self.generators().map(|g| g.name.clone()));
        for g in self.generators() {
            for (n, c) in g.boundary.iter() {
                if c < 0 {
                    graph.add_edge(n.clone(), g.name.clone());
                } else {
                    graph.add_edge(g.name.clone(), n.clone());
                }
            }
        }
        graph
    }

    pub fn loop_free_report(&self) -> LoopFreeReport {
        LoopFreeReport::from_graph(self.preorder_graph())
    }

    /// Unital with a strongly loop-free basis.
    pub fn is_strong_steiner_complex(&self) -> Result<bool, AdcError> {
        Ok(self.is_unital()? && self.loop_free_report().is_partial_order)
    }

    /// Discards every generator above degree `n`.
    pub fn truncate(&self, n: usize) -> Adc {
        let basis: Vec<Vec<Name>> = self.basis.iter().take(n + 1).cloned().collect();
        let generators = basis.iter().flatten().map(|name| (name.clone(), self.generators[name].clone())).collect();
        let mut out = Adc { basis, generators };
        while out.basis.last().is_some_and(Vec::is_empty) {
            out.basis.pop();
        }
        out
    }
}
