use std::collections::btree_map::{self, BTreeMap};
use std::collections::BTreeSet;
use std::fmt;

use super::{checked, ZlinError};
use crate::Name;

/// A finite formal integer combination of named generators.
///
/// Zero coefficients are never stored, so two vectors are equal exactly when
/// their maps are equal.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntVector {
    entries: BTreeMap<Name, i64>,
}

impl IntVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit(name: impl Into<Name>) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(name.into(), 1);
        IntVector { entries }
    }

    /// Builds a vector from `(name, coefficient)` pairs, summing repeated names.
    pub fn from_terms<N, I>(terms: I) -> Result<Self, ZlinError>
    where
        N: Into<Name>,
        I: IntoIterator<Item = (N, i64)>,
    {
        let mut v = IntVector::zero();
        for (name, coeff) in terms {
            v.add_term(name.into(), coeff)?;
        }
        Ok(v)
    }

    pub fn coeff(&self, name: &str) -> i64 {
        self.entries.get(name).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of non-zero coefficients.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Name, i64)> + '_ {
        self.entries.iter().map(|(n, &c)| (n, c))
    }

    pub fn names(&self) -> impl Iterator<Item = &Name> + '_ {
        self.entries.keys()
    }

    /// Adds `coeff` to the coefficient of `name`, dropping the entry if it
    /// cancels.
    pub fn add_term(&mut self, name: Name, coeff: i64) -> Result<(), ZlinError> {
        if coeff == 0 {
            return Ok(());
        }
        match self.entries.entry(name) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = checked::add(*e.get(), coeff)?;
                if sum == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    /// `self += k * other`
    pub fn add_scaled(&mut self, other: &IntVector, k: i64) -> Result<(), ZlinError> {
        if k == 0 {
            return Ok(());
        }
        for (name, c) in other.iter() {
            self.add_term(name.clone(), checked::mul(c, k)?)?;
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &IntVector) -> Result<IntVector, ZlinError> {
        let mut out = self.clone();
        out.add_scaled(other, 1)?;
        Ok(out)
    }

    pub fn checked_sub(&self, other: &IntVector) -> Result<IntVector, ZlinError> {
        let mut out = self.clone();
        out.add_scaled(other, -1)?;
        Ok(out)
    }

    pub fn checked_scale(&self, k: i64) -> Result<IntVector, ZlinError> {
        let mut out = IntVector::zero();
        out.add_scaled(self, k)?;
        Ok(out)
    }

    /// The part with positive coefficients.
    pub fn positive_part(&self) -> IntVector {
        IntVector {
            entries: self.entries.iter().filter(|(_, &c)| c > 0).map(|(n, &c)| (n.clone(), c)).collect(),
        }
    }

    /// Minus the part with negative coefficients; non-negative by construction.
    pub fn negative_part(&self) -> IntVector {
        IntVector {
            entries: self.entries.iter().filter(|(_, &c)| c < 0).map(|(n, &c)| (n.clone(), -c)).collect(),
        }
    }

    pub fn support(&self) -> BTreeSet<Name> {
        self.entries.keys().cloned().collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.values().all(|&c| c > 0)
    }

    pub fn max_coeff(&self) -> i64 {
        self.entries.values().map(|c| c.abs()).max().unwrap_or(0)
    }

    pub fn l1_norm(&self) -> Result<i64, ZlinError> {
        self.entries.values().try_fold(0i64, |acc, &c| checked::add(acc, c.abs()))
    }

    /// Applies a linear functional given by its values on generators; missing
    /// generators evaluate to zero.
    pub fn evaluate(&self, mut value: impl FnMut(&Name) -> i64) -> Result<i64, ZlinError> {
        self.entries
            .iter()
            .try_fold(0i64, |acc, (n, &c)| checked::add(acc, checked::mul(c, value(n))?))
    }

    /// Renames generators. Names missing from `map` are kept.
    pub fn renamed(&self, map: &BTreeMap<Name, Name>) -> IntVector {
        IntVector {
            entries: self
                .entries
                .iter()
                .map(|(n, &c)| (map.get(n).cloned().unwrap_or_else(|| n.clone()), c))
                .collect(),
        }
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        for (i, (name, &c)) in self.entries.iter().enumerate() {
            let (sign, mag) = if c < 0 { ("-", -(c as i128)) } else { ("+", c as i128) };
            match (i, sign) {
                (0, "+") => {}
                (0, _) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            write!(f, "{name}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntVector({self})")
    }
}

impl serde::Serialize for IntVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for IntVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let mut entries = BTreeMap::<Name, i64>::deserialize(d)?;
        entries.retain(|_, c| *c != 0);
        Ok(IntVector { entries })
    }
}

impl<N: Into<Name>> FromIterator<(N, i64)> for IntVector {
    /// Panics on overflow; use [`IntVector::from_terms`] for checked input.
    fn from_iter<I: IntoIterator<Item = (N, i64)>>(iter: I) -> Self {
        IntVector::from_terms(iter).expect("coefficient overflow")
    }
}
