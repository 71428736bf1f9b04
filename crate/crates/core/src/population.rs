//! Multisets of evaluated individuals.

use std::ops::Index;

use rand::Rng;

use crate::benchmark::ProblemSpec;
use crate::error::Result;
use crate::individual::Individual;
use crate::objective::ObjectiveVector;

/// An individual together with its benchmark value.
///
/// Only constructible through evaluation, so `value == f(individual)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Member {
    individual: Individual,
    value: ObjectiveVector,
}

impl Member {
    pub fn evaluate(problem: &ProblemSpec, individual: Individual) -> Result<Self> {
        let value = problem.evaluate(&individual)?;
        Ok(Self { individual, value })
    }

    pub(crate) fn evaluate_unchecked(problem: &ProblemSpec, individual: Individual) -> Self {
        let value = problem.evaluate_unchecked(&individual);
        Self { individual, value }
    }

    pub fn individual(&self) -> &Individual {
        &self.individual
    }

    pub fn value(&self) -> &ObjectiveVector {
        &self.value
    }
}

/// An ordered multiset of members. Order is meaningful only for
/// reproducibility (fair selection and crowding tie rules follow it).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Population {
    members: Vec<Member>,
}

impl Population {
    pub fn new(members: Vec<Member>) -> Self {
        Self { members }
    }

    pub fn evaluate_all<I>(problem: &ProblemSpec, individuals: I) -> Result<Self>
    where
        I: IntoIterator<Item = Individual>,
    {
        individuals
            .into_iter()
            .map(|x| Member::evaluate(problem, x))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    /// `size` independent uniform strings.
    pub fn random<R: Rng + ?Sized>(problem: &ProblemSpec, size: usize, rng: &mut R) -> Self {
        let members = (0..size)
            .map(|_| Member::evaluate_unchecked(problem, Individual::random(problem.n(), rng)))
            .collect();
        Self { members }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Member> {
        self.members.iter()
    }

    pub fn values(&self) -> Vec<ObjectiveVector> {
        self.members.iter().map(|m| m.value.clone()).collect()
    }

    /// Multiset union; `self`'s members come first.
    pub fn combine(&self, other: &Population) -> Population {
        let mut members = Vec::with_capacity(self.len() + other.len());
        members.extend_from_slice(&self.members);
        members.extend_from_slice(&other.members);
        Population { members }
    }

    /// Members at `indices`, in that order.
    pub fn subset(&self, indices: &[usize]) -> Population {
        Population {
            members: indices.iter().map(|&i| self.members[i].clone()).collect(),
        }
    }

    /// Sorted objective values, for multiset comparisons.
    pub fn sorted_values(&self) -> Vec<ObjectiveVector> {
        let mut values = self.values();
        values.sort();
        values
    }
}

impl Index<usize> for Population {
    type Output = Member;

    fn index(&self, i: usize) -> &Member {
        &self.members[i]
    }
}

impl<'a> IntoIterator for &'a Population {
    type Item = &'a Member;
    type IntoIter = std::slice::Iter<'a, Member>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

impl FromIterator<Member> for Population {
    fn from_iter<T: IntoIterator<Item = Member>>(iter: T) -> Self {
        Self::new(iter.into_iter().collect())
    }
}
