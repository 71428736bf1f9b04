//! Objective vectors and the domination order (all objectives maximized).

use std::fmt;

use crate::error::{Error, Result};

/// Outcome of comparing `u` against `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dominance {
    /// `u` strictly dominates `v`.
    Dominates,
    /// `v` strictly dominates `u`.
    Dominated,
    Equal,
    Incomparable,
}

impl Dominance {
    /// `u ⪰ v`.
    pub fn is_weak_domination(self) -> bool {
        matches!(self, Dominance::Dominates | Dominance::Equal)
    }
}

/// The value `f(x)` of an individual: one non-negative count per objective.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjectiveVector(Vec<u32>);

impl ObjectiveVector {
    pub fn new(values: Vec<u32>) -> Self {
        Self(values)
    }

    #[inline]
    pub fn values(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&v| u64::from(v)).sum()
    }

    pub fn compare(&self, other: &Self) -> Result<Dominance> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(compare_slices(&self.0, &other.0))
    }

    /// Strict domination. Panics in debug builds on length mismatch.
    #[inline]
    pub fn dominates(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len(), other.len());
        compare_slices(&self.0, &other.0) == Dominance::Dominates
    }

    #[inline]
    pub fn weakly_dominates(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

impl From<Vec<u32>> for ObjectiveVector {
    fn from(values: Vec<u32>) -> Self {
        Self(values)
    }
}

impl<const M: usize> From<[u32; M]> for ObjectiveVector {
    fn from(values: [u32; M]) -> Self {
        Self(values.to_vec())
    }
}

impl fmt::Debug for ObjectiveVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Compares two equal-length slices under the domination order.
pub(crate) fn compare_slices(u: &[u32], v: &[u32]) -> Dominance {
    let mut u_better = false;
    let mut v_better = false;
    for (a, b) in u.iter().zip(v) {
        if a > b {
            u_better = true;
        } else if b > a {
            v_better = true;
        }
        if u_better && v_better {
            return Dominance::Incomparable;
        }
    }
    match (u_better, v_better) {
        (true, false) => Dominance::Dominates,
        (false, true) => Dominance::Dominated,
        (false, false) => Dominance::Equal,
        (true, true) => Dominance::Incomparable,
    }
}

/// Compares `u` against `v`.
pub fn compare_domination(u: &ObjectiveVector, v: &ObjectiveVector) -> Result<Dominance> {
    u.compare(v)
}
