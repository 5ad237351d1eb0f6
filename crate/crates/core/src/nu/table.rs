use std::fmt;

use serde::Serialize;

use super::NuError;
use crate::adc::Adc;
use crate::zlin::IntVector;
use crate::Name;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    #[serde(rename = "-")]
    Minus,
    #[serde(rename = "+")]
    Plus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Minus, Sign::Plus];
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Minus => "-",
            Sign::Plus => "+",
        })
    }
}

/// A cell of the realization: rows `(x⁻_p, x⁺_p)` for `p = 0..=dim`.
///
/// Equality, ordering and hashing are row-wise, so equal tables are equal
/// cells.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NuTable {
    rows: Vec<(IntVector, IntVector)>,
}

/// Which of the four table conditions failed, and in which degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableViolation {
    /// 1: rows are non-negative over the basis of their degree;
    /// 2: `∂x^α_p = x⁺_{p-1} - x⁻_{p-1}`; 3: `ε(x^α_0) = 1`;
    /// 4: the top rows agree.
    pub condition: u8,
    pub degree: usize,
}

impl fmt::Display for TableViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "condition ({}) fails in degree {}", self.condition, self.degree)
    }
}

impl NuTable {
    /// Panics if `rows` is empty.
    pub fn from_rows(rows: Vec<(IntVector, IntVector)>) -> Self {
        assert!(!rows.is_empty(), "a table has at least one row");
        NuTable { rows }
    }

    pub fn point(name: impl Into<Name>) -> Self {
        let v = IntVector::unit(name);
        NuTable { rows: vec![(v.clone(), v)] }
    }

    pub fn dim(&self) -> usize {
        self.rows.len() - 1
    }

    /// `(x⁻_p, x⁺_p)`.
    pub fn row(&self, p: usize) -> (&IntVector, &IntVector) {
        let (n, q) = &self.rows[p];
        (n, q)
    }

    pub fn rows(&self) -> &[(IntVector, IntVector)] {
        &self.rows
    }

    /// The top chain `x_dim`.
    pub fn top(&self) -> &IntVector {
        &self.rows[self.dim()].0
    }

    /// Positive-dimensional with a zero top row, i.e. an identity.
    pub fn is_identity(&self) -> bool {
        self.dim() > 0 && self.rows[self.dim()].0.is_zero() && self.rows[self.dim()].1.is_zero()
    }

    pub fn max_coeff(&self) -> i64 {
        self.rows.iter().map(|(a, b)| a.max_coeff().max(b.max_coeff())).max().unwrap_or(0)
    }

    /// The iterated `p`-source (`Minus`) or `p`-target (`Plus`).
    pub fn face(&self, p: usize, sign: Sign) -> Result<NuTable, NuError> {
        if p >= self.dim() {
            return Err(NuError::Dim { level: p, dim: self.dim() });
        }
        let mut rows = self.rows[..p].to_vec();
        let x = match sign {
            Sign::Minus => &self.rows[p].0,
            Sign::Plus => &self.rows[p].1,
        };
        rows.push((x.clone(), x.clone()));
        Ok(NuTable { rows })
    }

    pub fn source(&self, p: usize) -> Result<NuTable, NuError> {
        self.face(p, Sign::Minus)
    }

    pub fn target(&self, p: usize) -> Result<NuTable, NuError> {
        self.face(p, Sign::Plus)
    }

    /// The identity one dimension up: same rows and a zero top row.
    pub fn identity(&self) -> NuTable {
        let mut rows = self.rows.clone();
        rows.push((IntVector::zero(), IntVector::zero()));
        NuTable { rows }
    }

    /// `self ∗_p other` in diagrammatic order: requires the `p`-target of
    /// `self` to equal the `p`-source of `other`.
    pub fn compose(&self, other: &NuTable, p: usize) -> Result<NuTable, NuError> {
        let q = self.dim();
        if other.dim() != q {
            return Err(NuError::DimMismatch { left: q, right: other.dim() });
        }
        if p >= q {
            return Err(NuError::Dim { level: p, dim: q });
        }
        if self.rows[..p] != other.rows[..p] || self.rows[p].1 != other.rows[p].0 {
            return Err(NuError::NotComposable { level: p });
        }
        let mut rows = Vec::with_capacity(q + 1);
        rows.extend_from_slice(&self.rows[..p]);
        rows.push((self.rows[p].0.clone(), other.rows[p].1.clone()));
        for r in p + 1..=q {
            let (a, b) = (&self.rows[r], &other.rows[r]);
            rows.push((a.0.checked_add(&b.0)?, a.1.checked_add(&b.1)?));
        }
        Ok(NuTable { rows })
    }

    /// The first of the four table conditions that fails over `c`.
    pub fn violation(&self, c: &Adc) -> Option<TableViolation> {
        let fail = |condition, degree| Some(TableViolation { condition, degree });
        for (p, (neg, pos)) in self.rows.iter().enumerate() {
            for x in [neg, pos] {
                let well_placed = x.iter().all(|(n, k)| k > 0 && c.degree_of(n) == Some(p));
                if !well_placed {
                    return fail(1, p);
                }
            }
        }
        for p in 1..self.rows.len() {
            let expected = match self.rows[p - 1].1.checked_sub(&self.rows[p - 1].0) {
                Ok(v) => v,
                Err(_) => return fail(2, p),
            };
            for x in [&self.rows[p].0, &self.rows[p].1] {
                if c.differential(x).ok().as_ref() != Some(&expected) {
                    return fail(2, p);
                }
            }
        }
        let (neg, pos) = &self.rows[0];
        if c.augment(neg).ok() != Some(1) || c.augment(pos).ok() != Some(1) {
            return fail(3, 0);
        }
        let (neg, pos) = &self.rows[self.dim()];
        if neg != pos {
            return fail(4, self.dim());
        }
        None
    }

    pub fn is_valid(&self, c: &Adc) -> bool {
        self.violation(c).is_none()
    }
}

impl fmt::Debug for NuTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NuTable[")?;
        for (p, (n, q)) in self.rows.iter().enumerate() {
            if p > 0 {
                write!(f, "; ")?;
            }
            if n == q {
                write!(f, "{n}")?;
            } else {
                write!(f, "{n} | {q}")?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Display for NuTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for NuTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Row<'a> {
            neg: &'a IntVector,
            pos: &'a IntVector,
        }
        #[derive(Serialize)]
        struct Repr<'a> {
            dim: usize,
            rows: Vec<Row<'a>>,
        }
        Repr { dim: self.dim(), rows: self.rows.iter().map(|(neg, pos)| Row { neg, pos }).collect() }.serialize(s)
    }
}
