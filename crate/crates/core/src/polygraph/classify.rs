use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::{CellExpr, PolyPresentation, PolygraphError};
use crate::adc::LoopFreeReport;
use crate::graph::RelationGraph;
use crate::nu::Sign;
use crate::Name;

/// A generator whose `level`-source and `level`-target share generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AtomicityViolation {
    pub generator: Name,
    pub level: usize,
    pub intersection: BTreeSet<Name>,
}

impl fmt::Display for AtomicityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.intersection.iter().map(|n| n.as_str()).collect();
        write!(f, "atomicity violated at ({}, {}): {{{}}}", self.generator, self.level, names.join(", "))
    }
}

/// The two categorical preorders on the generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PreorderReport {
    /// Generated by codimension-one source and target supports.
    pub codim1: RelationGraph,
    /// Generated by source and target supports in every codimension.
    pub full: RelationGraph,
    pub codim1_antisymmetric: bool,
    pub full_antisymmetric: bool,
    pub codim1_cycle: Option<Vec<Name>>,
    pub full_cycle: Option<Vec<Name>>,
}

/// How far table equality can be trusted as cell equality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EqualityRegime {
    /// Strong Steiner: equal tables are equal cells.
    Exact,
    /// Otherwise equal tables are only necessary for equal cells.
    NecessaryOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub is_polygraphic: bool,
    pub is_atomic: bool,
    pub atomicity_violation: Option<AtomicityViolation>,
    pub preorders: PreorderReport,
    pub strongly_loop_free_categorical: bool,
    pub strongly_loop_free_algebraic: bool,
    pub algebraic_cycle: Option<Vec<Name>>,
    pub unital: bool,
    pub unitality_violation: Option<Name>,
    pub steiner_orderable: bool,
    pub steiner_order: Option<Vec<Name>>,
    pub steiner_cycle: Option<Vec<Name>>,
    pub strong_steiner: bool,
    pub equality_regime: EqualityRegime,
}

impl PolyPresentation {
    /// The first generator and level, in declaration order and then by level,
    /// at which source and target supports intersect.
    pub fn atomicity_violation(&self) -> Result<Option<AtomicityViolation>, PolygraphError> {
        for (g, _, _) in self.cells() {
            for level in 0..g.dim {
                let s = self.face_support(&g.name, level, Sign::Minus)?;
                let t = self.face_support(&g.name, level, Sign::Plus)?;
                let intersection: BTreeSet<Name> = s.intersection(&t).cloned().collect();
                if !intersection.is_empty() {
                    return Ok(Some(AtomicityViolation { generator: g.name.clone(), level, intersection }));
                }
            }
        }
        Ok(None)
    }

    pub fn is_atomic(&self) -> Result<bool, PolygraphError> {
        Ok(self.atomicity_violation()?.is_none())
    }

    fn preorder_graph(&self, all_levels: bool) -> Result<RelationGraph, PolygraphError> {
        let mut graph = RelationGraph::with_nodes(self.generators.iter().map(|g| g.name.clone()));
        for (g, _, _) in self.cells() {
            let levels = if all_levels { 0 } else { g.dim - 1 }..g.dim;
            for level in levels {
                for a in self.face_support(&g.name, level, Sign::Minus)? {
                    graph.add_edge(a, g.name.clone());
                }
                for b in self.face_support(&g.name, level, Sign::Plus)? {
                    graph.add_edge(g.name.clone(), b);
                }
            }
        }
        Ok(graph)
    }

    pub fn preorder_report(&self) -> Result<PreorderReport, PolygraphError> {
        let codim1 = self.preorder_graph(false)?;
        let full = self.preorder_graph(true)?;
        let codim1_cycle = codim1.cycle_witness();
        let full_cycle = full.cycle_witness();
        Ok(PreorderReport {
            codim1_antisymmetric: codim1_cycle.is_none(),
            full_antisymmetric: full_cycle.is_none(),
            codim1,
            full,
            codim1_cycle,
            full_cycle,
        })
    }

    /// Loop-freeness of the basis preorder of the linearized complex.
    pub fn algebraic_report(&self) -> LoopFreeReport {
        self.lambda.loop_free_report()
    }

    pub fn is_algebraically_loop_free(&self) -> bool {
        self.algebraic_report().is_partial_order
    }

    /// Constraints `u < v` for `u` in the support of the `q`-source and `v`
    /// in the support of the `q`-target of a generator, `q` below its
    /// dimension.
    pub fn steiner_constraints(&self) -> Result<RelationGraph, PolygraphError> {
        let mut graph = RelationGraph::with_nodes(self.generators.iter().map(|g| g.name.clone()));
        for (g, _, _) in self.cells() {
            for level in 0..g.dim {
                let s = self.face_support(&g.name, level, Sign::Minus)?;
                let t = self.face_support(&g.name, level, Sign::Plus)?;
                for u in &s {
                    for v in &t {
                        graph.add_edge(u.clone(), v.clone());
                    }
                }
            }
        }
        Ok(graph)
    }

    /// A linear order satisfying every constraint, or a cycle of constraints.
    pub fn steiner_order(&self) -> Result<Result<Vec<Name>, Vec<Name>>, PolygraphError> {
        Ok(self.steiner_constraints()?.linear_extension())
    }

    /// Runs every classifier and checks their known implications on this
    /// instance.
    pub fn classify(&self) -> Result<Verdict, PolygraphError> {
        let atomicity_violation = self.atomicity_violation()?;
        let is_atomic = atomicity_violation.is_none();
        let preorders = self.preorder_report()?;
        let algebraic = self.algebraic_report();
        let unitality_violation = self.lambda.unitality_violation()?;
        let (steiner_order, steiner_cycle) = match self.steiner_order()? {
            Ok(order) => (Some(order), None),
            Err(cycle) => (None, Some(cycle)),
        };
        let categorical = preorders.full_antisymmetric;
        if categorical && !is_atomic {
            return Err(PolygraphError::Inconsistent("strongly loop-free but not atomic".into()));
        }
        if categorical != (is_atomic && algebraic.is_partial_order) {
            return Err(PolygraphError::Inconsistent(format!(
                "categorical loop-freeness is {categorical} but atomic and algebraically loop-free is {}",
                is_atomic && algebraic.is_partial_order
            )));
        }
        Ok(Verdict {
            is_polygraphic: true,
            is_atomic,
            atomicity_violation,
            strongly_loop_free_categorical: categorical,
            strongly_loop_free_algebraic: algebraic.is_partial_order,
            algebraic_cycle: algebraic.cycle_witness,
            unital: unitality_violation.is_none(),
            unitality_violation,
            steiner_orderable: steiner_order.is_some(),
            steiner_order,
            steiner_cycle,
            strong_steiner: categorical,
            equality_regime: if categorical { EqualityRegime::Exact } else { EqualityRegime::NecessaryOnly },
            preorders,
        })
    }

    /// Equality of cells as decided by their tables; see [`EqualityRegime`].
    pub fn tables_equal(&self, a: &CellExpr, b: &CellExpr) -> Result<bool, PolygraphError> {
        Ok(self.eval_table(a)? == self.eval_table(b)?)
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::triangle;
    use super::super::PresentationBuilder;
    use super::*;

    fn g(n: &str) -> CellExpr {
        CellExpr::gen(n)
    }

    #[test]
    fn triangle_is_strong_steiner() {
        let v = triangle().classify().unwrap();
        assert!(v.strong_steiner && v.is_atomic && v.strongly_loop_free_algebraic && v.unital);
        assert!(v.steiner_orderable);
        let order = ["a", "h", "alpha", "f", "b", "g", "c"];
        for (i, x) in order.iter().enumerate() {
            for (j, y) in order.iter().enumerate() {
                assert_eq!(v.preorders.full.reaches(x, y), i <= j, "{x} {y}");
            }
        }
    }

    #[test]
    fn loop_is_rejected_everywhere() {
        let mut b = PresentationBuilder::new();
        b.add_point("a").unwrap().add_point("b").unwrap();
        b.add_cell("f", g("a"), g("b")).unwrap();
        b.add_cell("g", g("b"), g("a")).unwrap();
        let v = b.build().unwrap().classify().unwrap();
        assert!(v.is_atomic);
        assert!(!v.strong_steiner && !v.strongly_loop_free_algebraic && !v.steiner_orderable);
        let cycle = v.preorders.full_cycle.unwrap();
        assert_eq!(cycle.iter().map(|n| n.as_str()).collect::<Vec<_>>(), ["a", "f", "b", "g"]);
    }

    #[test]
    fn violation_message() {
        let v = AtomicityViolation { generator: "α".into(), level: 1, intersection: [Name::from("f")].into() };
        assert_eq!(v.to_string(), "atomicity violated at (α, 1): {f}");
    }
}
