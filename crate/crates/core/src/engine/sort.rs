//! Non-dominated sorting.
//!
//! Members with identical values always share a front, so sorting works on
//! the distinct values only. Distinct values are ordered by coordinate sum:
//! `v` strictly dominates `u` iff `v ≥ u` componentwise and `sum(v) > sum(u)`,
//! so a value only has to be tested against values with a larger sum.

use std::collections::HashMap;

use crate::objective::ObjectiveVector;

/// Partition of a multiset into fronts `F_1, F_2, ...`, as indices into
/// the sorted slice. Indices inside each front are ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fronts {
    fronts: Vec<Vec<usize>>,
}

impl Fronts {
    pub fn fronts(&self) -> &[Vec<usize>] {
        &self.fronts
    }

    pub fn len(&self) -> usize {
        self.fronts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fronts.is_empty()
    }

    pub fn first(&self) -> &[usize] {
        self.fronts.first().map_or(&[], Vec::as_slice)
    }

    /// 0-based front index of every member.
    pub fn front_of_each(&self, size: usize) -> Vec<usize> {
        let mut rank = vec![usize::MAX; size];
        for (f, front) in self.fronts.iter().enumerate() {
            for &i in front {
                rank[i] = f;
            }
        }
        rank
    }

    pub fn into_inner(self) -> Vec<Vec<usize>> {
        self.fronts
    }
}

/// Sorts `values` into all of its fronts.
pub fn nondominated_sort(values: &[ObjectiveVector]) -> Fronts {
    Fronts {
        fronts: FrontPeeler::new(values).collect(),
    }
}

/// Yields the fronts one at a time, so callers that only need the first
/// few fronts stop early.
pub struct FrontPeeler {
    m: usize,
    /// Distinct values, row-major with stride `m`.
    coords: Vec<u32>,
    sums: Vec<u64>,
    members: Vec<Vec<usize>>,
    /// Distinct-value ids still unsorted, by descending sum.
    remaining: Vec<usize>,
}

impl FrontPeeler {
    pub fn new(values: &[ObjectiveVector]) -> Self {
        let m = values.first().map_or(0, ObjectiveVector::len);
        let mut ids: HashMap<&[u32], usize> = HashMap::with_capacity(values.len());
        let mut coords = Vec::new();
        let mut sums = Vec::new();
        let mut members: Vec<Vec<usize>> = Vec::new();
        for (i, v) in values.iter().enumerate() {
            debug_assert_eq!(v.len(), m, "all objective vectors must have equal length");
            let id = *ids.entry(v.values()).or_insert_with(|| {
                coords.extend_from_slice(v.values());
                sums.push(v.sum());
                members.push(Vec::new());
                members.len() - 1
            });
            members[id].push(i);
        }
        let mut remaining: Vec<usize> = (0..members.len()).collect();
        remaining.sort_by(|&a, &b| sums[b].cmp(&sums[a]).then(a.cmp(&b)));
        Self {
            m,
            coords,
            sums,
            members,
            remaining,
        }
    }

    fn row(&self, id: usize) -> &[u32] {
        &self.coords[id * self.m..(id + 1) * self.m]
    }

    fn is_dominated(&self, pos: usize) -> bool {
        let u = self.remaining[pos];
        let u_sum = self.sums[u];
        let u_row = self.row(u);
        self.remaining[..pos]
            .iter()
            .take_while(|&&v| self.sums[v] > u_sum)
            .any(|&v| self.row(v).iter().zip(u_row).all(|(a, b)| a >= b))
    }
}

impl Iterator for FrontPeeler {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.remaining.is_empty() {
            return None;
        }
        let dominated: Vec<bool> = (0..self.remaining.len()).map(|pos| self.is_dominated(pos)).collect();
        let mut front = Vec::new();
        let mut rest = Vec::new();
        for (pos, &id) in self.remaining.iter().enumerate() {
            if dominated[pos] {
                rest.push(id);
            } else {
                front.extend_from_slice(&self.members[id]);
            }
        }
        self.remaining = rest;
        front.sort_unstable();
        Some(front)
    }
}
