//! Finite polygraph presentations and their cell expressions.
//!
//! Cells of the free ω-category are represented by expressions. Two
//! expressions are compared through their tables in the realization of the
//! linearized complex; this is exact when the presentation is strong
//! Steiner and only a necessary condition for equality otherwise.

mod classify;
mod expr;

pub use classify::{AtomicityViolation, EqualityRegime, PreorderReport, Verdict};
pub use expr::CellExpr;

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::adc::{Adc, AdcError};
use crate::nu::{NuError, NuTable, Sign};
use crate::zlin::{IntVector, ZlinError};
use crate::Name;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygraphError {
    #[error("generator `{0}` is declared twice")]
    Duplicate(Name),
    #[error("unknown generator `{0}`")]
    UnknownName(Name),
    #[error("source and target of `{generator}` have dimensions {source_dim} and {target_dim}")]
    BoundaryDims { generator: Name, source_dim: usize, target_dim: usize },
    #[error("composite at level {level} of cells of dimensions {left} and {right}")]
    CompShape { level: usize, left: usize, right: usize },
    #[error("level {level} is not below dimension {dim}")]
    Dim { level: usize, dim: usize },
    #[error("boundary of `{generator}` is ill-typed: {reason}")]
    IllTyped { generator: Name, reason: String },
    #[error("source and target of `{generator}` are not parallel")]
    NotParallel { generator: Name },
    #[error("linearization of `{generator}` fails: {reason}")]
    Linearization { generator: Name, reason: String },
    #[error("classifier implications fail: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Nu(#[from] NuError),
    #[error(transparent)]
    Adc(#[from] AdcError),
    #[error(transparent)]
    Zlin(#[from] ZlinError),
}

/// A generator with its source and target; points have none.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyGenerator {
    pub name: Name,
    pub dim: usize,
    pub boundary: Option<(CellExpr, CellExpr)>,
}

/// Collects generators in dependency order and validates on [`build`].
///
/// [`build`]: PresentationBuilder::build
#[derive(Clone, Debug, Default)]
pub struct PresentationBuilder {
    generators: Vec<PolyGenerator>,
    index: HashMap<Name, usize>,
}

impl PresentationBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    fn dim_of(&self, e: &CellExpr) -> Result<usize, PolygraphError> {
        expr_dim(e, &|n| self.index.get(n).map(|&i| self.generators[i].dim))
    }

    pub fn add_point(&mut self, name: impl Into<Name>) -> Result<&mut Self, PolygraphError> {
        self.push(PolyGenerator { name: name.into(), dim: 0, boundary: None })
    }

    /// Adds a generator from `src` to `tgt`. Both may only mention
    /// generators declared earlier.
    pub fn add_cell(
        &mut self,
        name: impl Into<Name>,
        src: CellExpr,
        tgt: CellExpr,
    ) -> Result<&mut Self, PolygraphError> {
        let name = name.into();
        let (ds, dt) = (self.dim_of(&src)?, self.dim_of(&tgt)?);
        if ds != dt {
            return Err(PolygraphError::BoundaryDims { generator: name, source_dim: ds, target_dim: dt });
        }
        self.push(PolyGenerator { name, dim: ds + 1, boundary: Some((src, tgt)) })
    }

    pub fn push(&mut self, g: PolyGenerator) -> Result<&mut Self, PolygraphError> {
        if self.index.contains_key(&g.name) {
            return Err(PolygraphError::Duplicate(g.name));
        }
        if let Some((s, t)) = &g.boundary {
            for e in [s, t] {
                if self.dim_of(e)? + 1 != g.dim {
                    return Err(PolygraphError::BoundaryDims {
                        generator: g.name.clone(),
                        source_dim: self.dim_of(s)?,
                        target_dim: self.dim_of(t)?,
                    });
                }
            }
        } else if g.dim != 0 {
            return Err(PolygraphError::BoundaryDims { generator: g.name, source_dim: 0, target_dim: 0 });
        }
        self.index.insert(g.name.clone(), self.generators.len());
        self.generators.push(g);
        Ok(self)
    }

    /// Validates the presentation: the linearized complex satisfies
    /// `∂∂ = 0`, every composite in a boundary is well-typed, and every
    /// source is parallel to its target.
    pub fn build(&self) -> Result<PolyPresentation, PolygraphError> {
        let mut p = PolyPresentation {
            generators: Vec::with_capacity(self.generators.len()),
            index: HashMap::new(),
            lambda: Adc::new(),
            eta: HashMap::new(),
        };
        for g in &self.generators {
            p.index.insert(g.name.clone(), p.generators.len());
            p.generators.push(g.clone());
            let boundary = match &g.boundary {
                None => {
                    p.lambda.add_point(g.name.clone())?;
                    p.eta.insert(g.name.clone(), NuTable::point(g.name.clone()));
                    continue;
                }
                Some(b) => b,
            };
            let ill = |reason: String| PolygraphError::IllTyped { generator: g.name.clone(), reason };
            let src = p.eval_table(&boundary.0).map_err(|e| ill(e.to_string()))?;
            let tgt = p.eval_table(&boundary.1).map_err(|e| ill(e.to_string()))?;
            if src.dim() > 0 && (src.source(src.dim() - 1)? != tgt.source(src.dim() - 1)? || src.target(src.dim() - 1)? != tgt.target(src.dim() - 1)?) {
                return Err(PolygraphError::NotParallel { generator: g.name.clone() });
            }
            let d = tgt.top().checked_sub(src.top())?;
            p.lambda.add_generator(g.name.clone(), g.dim, d, 0)?;
            let eta = p.compute_eta(&g.name)?;
            p.eta.insert(g.name.clone(), eta);
        }
        let report = p.lambda.validate()?;
        if let Some(f) = report.failures.first() {
            return Err(PolygraphError::Linearization { generator: failing_generator(f), reason: f.to_string() });
        }
        Ok(p)
    }
}

fn failing_generator(f: &crate::adc::ValidationFailure) -> Name {
    match f {
        crate::adc::ValidationFailure::BoundarySquared { generator, .. }
        | crate::adc::ValidationFailure::AugmentedBoundary { generator, .. } => generator.clone(),
    }
}

fn expr_dim(e: &CellExpr, dim_of: &dyn Fn(&str) -> Option<usize>) -> Result<usize, PolygraphError> {
    match e {
        CellExpr::Gen(n) => dim_of(n).ok_or_else(|| PolygraphError::UnknownName(n.clone())),
        CellExpr::Id(x) => Ok(expr_dim(x, dim_of)? + 1),
        CellExpr::Comp(p, l, r) => {
            let (dl, dr) = (expr_dim(l, dim_of)?, expr_dim(r, dim_of)?);
            if dl != dr || *p >= dl {
                return Err(PolygraphError::CompShape { level: *p, left: dl, right: dr });
            }
            Ok(dl)
        }
    }
}

/// A validated presentation together with its linearization.
#[derive(Clone, Debug)]
pub struct PolyPresentation {
    generators: Vec<PolyGenerator>,
    index: HashMap<Name, usize>,
    lambda: Adc,
    eta: HashMap<Name, NuTable>,
}

impl PartialEq for PolyPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for PolyPresentation {}

impl PolyPresentation {
    /// Generators in declaration order, which is also a dependency order.
    pub fn generators(&self) -> &[PolyGenerator] {
        &self.generators
    }

    pub fn generator(&self, name: &str) -> Option<&PolyGenerator> {
        self.index.get(name).map(|&i| &self.generators[i])
    }

    pub fn dim_of(&self, name: &str) -> Option<usize> {
        self.generator(name).map(|g| g.dim)
    }

    pub fn max_dim(&self) -> Option<usize> {
        self.generators.iter().map(|g| g.dim).max()
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Generators of positive dimension.
    fn cells(&self) -> impl Iterator<Item = (&PolyGenerator, &CellExpr, &CellExpr)> + '_ {
        self.generators.iter().filter_map(|g| g.boundary.as_ref().map(|(s, t)| (g, s, t)))
    }

    pub fn expr_dim(&self, e: &CellExpr) -> Result<usize, PolygraphError> {
        expr_dim(e, &|n| self.dim_of(n))
    }

    /// The iterated `p`-source (`Minus`) or `p`-target (`Plus`) of `e`.
    pub fn face_expr(&self, e: &CellExpr, p: usize, sign: Sign) -> Result<CellExpr, PolygraphError> {
        let dim = self.expr_dim(e)?;
        if p >= dim {
            return Err(PolygraphError::Dim { level: p, dim });
        }
        Ok(self.face_unchecked(e, p, sign, dim))
    }

    fn face_unchecked(&self, e: &CellExpr, p: usize, sign: Sign, dim: usize) -> CellExpr {
        match e {
            CellExpr::Gen(n) => {
                let (s, t) = self.generator(n).and_then(|g| g.boundary.as_ref()).expect("validated");
                let side = match sign {
                    Sign::Minus => s,
                    Sign::Plus => t,
                };
                if p + 1 == dim {
                    side.clone()
                } else {
                    self.face_unchecked(side, p, sign, dim - 1)
                }
            }
            CellExpr::Id(x) => {
                if p + 1 == dim {
                    (**x).clone()
                } else {
                    self.face_unchecked(x, p, sign, dim - 1)
                }
            }
            CellExpr::Comp(k, l, r) => {
                if p <= *k {
                    match sign {
                        Sign::Minus => self.face_unchecked(l, p, sign, dim),
                        Sign::Plus => self.face_unchecked(r, p, sign, dim),
                    }
                } else {
                    CellExpr::comp(*k, self.face_unchecked(l, p, sign, dim), self.face_unchecked(r, p, sign, dim))
                }
            }
        }
    }

    /// The class of `e`: generators count once, identities vanish and
    /// composites add.
    pub fn linearize(&self, e: &CellExpr) -> Result<IntVector, PolygraphError> {
        Ok(match e {
            CellExpr::Gen(n) => {
                self.generator(n).ok_or_else(|| PolygraphError::UnknownName(n.clone()))?;
                IntVector::unit(n.clone())
            }
            CellExpr::Id(x) => {
                self.expr_dim(x)?;
                IntVector::zero()
            }
            CellExpr::Comp(_, l, r) => {
                self.expr_dim(e)?;
                self.linearize(l)?.checked_add(&self.linearize(r)?)?
            }
        })
    }

    /// The linearized complex: `∂g = [tgt g] - [src g]` and `ε ≡ 1`.
    pub fn lambda(&self) -> &Adc {
        &self.lambda
    }

    /// Generators occurring in `e`, read off its class.
    pub fn support_expr(&self, e: &CellExpr) -> Result<BTreeSet<Name>, PolygraphError> {
        Ok(self.linearize(e)?.support())
    }

    /// `supp [face_p(g)]` for a generator `g` of dimension above `p`.
    fn face_support(&self, g: &Name, p: usize, sign: Sign) -> Result<BTreeSet<Name>, PolygraphError> {
        self.support_expr(&self.face_expr(&CellExpr::Gen(g.clone()), p, sign)?)
    }

    fn compute_eta(&self, name: &Name) -> Result<NuTable, PolygraphError> {
        let g = self.generator(name).ok_or_else(|| PolygraphError::UnknownName(name.clone()))?;
        let e = CellExpr::Gen(name.clone());
        let mut rows = Vec::with_capacity(g.dim + 1);
        for p in 0..g.dim {
            rows.push((
                self.linearize(&self.face_expr(&e, p, Sign::Minus)?)?,
                self.linearize(&self.face_expr(&e, p, Sign::Plus)?)?,
            ));
        }
        let top = IntVector::unit(name.clone());
        rows.push((top.clone(), top));
        Ok(NuTable::from_rows(rows))
    }

    /// The table of a generator: row `p` holds the classes of its `p`-source
    /// and `p`-target.
    ///
    /// This is the atom of the generator in the linearized complex when the
    /// presentation is atomic.
    pub fn generator_table(&self, name: &str) -> Option<&NuTable> {
        self.eta.get(name)
    }

    /// Interprets `e` in the realization of the linearized complex.
    pub fn eval_table(&self, e: &CellExpr) -> Result<NuTable, PolygraphError> {
        match e {
            CellExpr::Gen(n) => self.eta.get(n).cloned().ok_or_else(|| PolygraphError::UnknownName(n.clone())),
            CellExpr::Id(x) => Ok(self.eval_table(x)?.identity()),
            CellExpr::Comp(p, l, r) => Ok(self.eval_table(l)?.compose(&self.eval_table(r)?, *p)?),
        }
    }

    /// Keeps the generators of dimension at most `n`.
    pub fn truncate(&self, n: usize) -> PolyPresentation {
        let mut b = PresentationBuilder::new();
        for g in self.generators.iter().filter(|g| g.dim <= n) {
            b.push(g.clone()).expect("subset of a valid presentation");
        }
        b.build().expect("subset of a valid presentation")
    }
}
