//! Per-iteration observables: Pareto-front coverage and Pareto counts.

use std::collections::HashSet;

use crate::benchmark::ProblemSpec;
use crate::objective::ObjectiveVector;
use crate::population::Population;

/// Metrics of one loop step. Row `t` describes the step that produced
/// `P_t` from `R_{t-1} = P_{t-1} ∪ Q_{t-1}`; row 0 describes `P_0` alone
/// (there `R` stands for `P_0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IterationRecord {
    pub iteration: usize,
    /// Distinct Pareto-front values in `R`.
    pub covered_r: usize,
    /// Distinct Pareto-front values in the selected population.
    pub covered_p_next: usize,
    /// Members of `R` with a Pareto-front value, with multiplicity.
    pub pareto_individuals_r: usize,
    pub pareto_individuals_p_next: usize,
    /// `|F_1|` of `R`.
    pub f1_size: usize,
    /// The selected population covers the whole front.
    pub full_coverage: bool,
}

/// Distinct front values and front-valued member count of `values`.
pub(crate) fn front_stats<'a, I>(values: I, problem: &ProblemSpec) -> (usize, usize)
where
    I: IntoIterator<Item = &'a ObjectiveVector>,
{
    let mut distinct = HashSet::new();
    let mut count = 0;
    for v in values {
        if problem.is_on_front(v) {
            count += 1;
            distinct.insert(v);
        }
    }
    (distinct.len(), count)
}

/// Number of distinct Pareto optima realized by `population`.
pub fn covered_front_values(population: &Population, problem: &ProblemSpec) -> usize {
    front_stats(population.iter().map(|m| m.value()), problem).0
}

/// Members of `population` whose value is a Pareto optimum, with multiplicity.
pub fn count_pareto_individuals(population: &Population, problem: &ProblemSpec) -> usize {
    population.iter().filter(|m| problem.is_on_front(m.value())).count()
}

/// `N(t+1)` for the first row `t` whose selected population covers all `M`
/// front values.
pub fn detect_runtime(records: &[IterationRecord], population_size: usize, front_size: u64) -> Option<u64> {
    records
        .iter()
        .find(|r| r.covered_p_next as u64 == front_size)
        .map(|r| population_size as u64 * (r.iteration as u64 + 1))
}
