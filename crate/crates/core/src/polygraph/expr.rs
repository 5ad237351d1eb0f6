use std::fmt;

use serde::{Deserialize, Serialize};

use crate::Name;

/// A cell of the free ω-category on a presentation.
///
/// `Comp(p, l, r)` is `l ∗_p r` in diagrammatic order: the `p`-target of
/// `l` must equal the `p`-source of `r`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CellExpr {
    Gen(Name),
    Id(Box<CellExpr>),
    Comp(usize, Box<CellExpr>, Box<CellExpr>),
}

impl CellExpr {
    pub fn gen(name: impl Into<Name>) -> Self {
        CellExpr::Gen(name.into())
    }

    pub fn id(inner: CellExpr) -> Self {
        CellExpr::Id(Box::new(inner))
    }

    pub fn comp(level: usize, left: CellExpr, right: CellExpr) -> Self {
        CellExpr::Comp(level, Box::new(left), Box::new(right))
    }

    /// Right-nested composite `e₀ ∗_p (e₁ ∗_p (… ∗_p eₙ))`. Panics on an
    /// empty list.
    pub fn comp_all(level: usize, parts: impl IntoIterator<Item = CellExpr>) -> Self {
        let mut parts: Vec<CellExpr> = parts.into_iter().collect();
        let mut acc = parts.pop().expect("at least one factor");
        while let Some(e) = parts.pop() {
            acc = CellExpr::comp(level, e, acc);
        }
        acc
    }

    /// Generator names occurring in the expression, without repetition.
    pub fn names(&self) -> Vec<&Name> {
        let mut out = Vec::new();
        self.collect_names(&mut out);
        out
    }

    fn collect_names<'a>(&'a self, out: &mut Vec<&'a Name>) {
        match self {
            CellExpr::Gen(n) => {
                if !out.contains(&n) {
                    out.push(n);
                }
            }
            CellExpr::Id(x) => x.collect_names(out),
            CellExpr::Comp(_, l, r) => {
                l.collect_names(out);
                r.collect_names(out);
            }
        }
    }
}

impl fmt::Display for CellExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellExpr::Gen(n) => write!(f, "{n}"),
            CellExpr::Id(x) => write!(f, "id({x})"),
            CellExpr::Comp(p, l, r) => write!(f, "({l} *{p} {r})"),
        }
    }
}

impl fmt::Debug for CellExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
