use rand::seq::SliceRandom;
use rand::Rng;

use super::crowding::{count_positive, crowding_distance};
use super::sort::FrontPeeler;
use crate::benchmark::ProblemSpec;
use crate::error::{Error, Result};
use crate::objective::ObjectiveVector;
use crate::population::Population;

/// Outcome of one survivor selection on a combined population.
#[derive(Debug, Clone, PartialEq)]
pub struct Survival {
    /// Indices into the combined population, ascending.
    pub survivors: Vec<usize>,
    /// `|F_1|` of the combined population.
    pub f1_size: usize,
    /// 0-based index of the critical front.
    pub critical_front: usize,
    /// Members of the critical front with their crowding distance.
    pub critical_members: Vec<usize>,
    pub critical_crowding: Vec<f64>,
    /// Members of the critical front with positive (or infinite) crowding distance.
    pub positive_crowding: usize,
}

/// Keeps `keep` members of `values`: whole fronts in order until the
/// critical front, then the critical-front members with the largest
/// crowding distance, ties at the cutoff broken uniformly at random.
///
/// Fronts after the critical one are never computed.
pub fn select_survivors<R: Rng + ?Sized>(values: &[ObjectiveVector], keep: usize, rng: &mut R) -> Result<Survival> {
    if keep == 0 {
        return Err(Error::InvalidConfig("population size must be at least 1".into()));
    }
    if values.len() < keep {
        return Err(Error::NotEnoughMembers {
            keep,
            available: values.len(),
        });
    }

    let mut survivors = Vec::with_capacity(keep);
    let mut f1_size = None;
    for (index, front) in FrontPeeler::new(values).enumerate() {
        f1_size.get_or_insert(front.len());
        if survivors.len() + front.len() < keep {
            survivors.extend_from_slice(&front);
            continue;
        }
        let set: Vec<&ObjectiveVector> = front.iter().map(|&i| &values[i]).collect();
        let crowding = crowding_distance(&set);
        let need = keep - survivors.len();
        let chosen = truncate_by_crowding(&crowding, need, rng);
        survivors.extend(chosen.into_iter().map(|k| front[k]));
        survivors.sort_unstable();
        return Ok(Survival {
            survivors,
            f1_size: f1_size.unwrap_or_default(),
            critical_front: index,
            positive_crowding: count_positive(&crowding),
            critical_members: front,
            critical_crowding: crowding,
        });
    }
    unreachable!("fronts cover all {} members and keep <= len", values.len())
}

/// Positions of the `need` largest entries of `crowding`. Entries equal to
/// the cutoff value form one group that is shuffled with `rng`; the needed
/// prefix of the shuffle survives. No randomness is drawn when the cutoff
/// group fits entirely.
pub fn truncate_by_crowding<R: Rng + ?Sized>(crowding: &[f64], need: usize, rng: &mut R) -> Vec<usize> {
    assert!(need <= crowding.len());
    if need == crowding.len() {
        return (0..need).collect();
    }
    if need == 0 {
        return Vec::new();
    }
    let mut order: Vec<usize> = (0..crowding.len()).collect();
    order.sort_by(|&a, &b| crowding[b].total_cmp(&crowding[a]));
    let cutoff = crowding[order[need - 1]];

    let mut chosen: Vec<usize> = order.iter().copied().take_while(|&i| crowding[i] > cutoff).collect();
    let mut tied: Vec<usize> = order[chosen.len()..]
        .iter()
        .copied()
        .take_while(|&i| crowding[i] == cutoff)
        .collect();
    let missing = need - chosen.len();
    if missing < tied.len() {
        let (picked, _) = tied.partial_shuffle(rng, missing);
        chosen.extend_from_slice(picked);
    } else {
        chosen.append(&mut tied);
    }
    chosen
}

/// Survivor selection on an mLOTZ population.
///
/// # Panics
///
/// If more than `4n + 2m` critical-front members get a positive crowding
/// distance, which the structure of mLOTZ rules out.
pub fn survivor_select<R: Rng + ?Sized>(
    combined: &Population,
    keep: usize,
    problem: &ProblemSpec,
    rng: &mut R,
) -> Result<(Population, Survival)> {
    let values = combined.values();
    let survival = select_survivors(&values, keep, rng)?;
    let bound = problem.positive_crowding_bound();
    assert!(
        survival.positive_crowding <= bound,
        "{} members with positive crowding distance exceed the bound {bound}",
        survival.positive_crowding
    );
    Ok((combined.subset(&survival.survivors), survival))
}
