use rand::Rng;

use super::sort::FrontPeeler;
use super::survival::{survivor_select, Survival};
use crate::config::RunConfig;
use crate::error::Result;
use crate::metrics::{front_stats, IterationRecord};
use crate::population::Population;
use crate::variation::{generate_offspring, RankedPopulation};

/// Result of one loop iteration.
#[derive(Debug, Clone)]
pub struct Step {
    pub population: Population,
    pub record: IterationRecord,
    pub survival: Survival,
}

/// `N` independent uniform individuals.
pub fn initial_population<R: Rng + ?Sized>(config: &RunConfig, rng: &mut R) -> Population {
    Population::random(&config.problem, config.population_size, rng)
}

/// One generation: offspring, union, survivor selection. `iteration` is
/// the index `t` of the population being produced.
pub fn nsga2_iteration<R: Rng + ?Sized>(
    parents: &Population,
    config: &RunConfig,
    iteration: usize,
    rng: &mut R,
) -> Result<Step> {
    let problem = &config.problem;
    let ranking = config.variation.needs_ranking().then(|| RankedPopulation::of(parents));
    let offspring = generate_offspring(parents, &config.variation, ranking.as_ref(), problem, rng)?;
    let combined = parents.combine(&offspring);
    let (population, survival) = survivor_select(&combined, config.population_size, problem, rng)?;

    let (covered_r, pareto_individuals_r) = front_stats(combined.iter().map(|m| m.value()), problem);
    let (covered_p_next, pareto_individuals_p_next) = front_stats(population.iter().map(|m| m.value()), problem);
    debug_assert!(covered_p_next <= covered_r);
    let record = IterationRecord {
        iteration,
        covered_r,
        covered_p_next,
        pareto_individuals_r,
        pareto_individuals_p_next,
        f1_size: survival.f1_size,
        full_coverage: covered_p_next as u64 == problem.front_size(),
    };
    Ok(Step {
        population,
        record,
        survival,
    })
}

fn initial_record(population: &Population, config: &RunConfig) -> IterationRecord {
    let values = population.values();
    let (covered, pareto) = front_stats(values.iter(), &config.problem);
    IterationRecord {
        iteration: 0,
        covered_r: covered,
        covered_p_next: covered,
        pareto_individuals_r: pareto,
        pareto_individuals_p_next: pareto,
        f1_size: FrontPeeler::new(&values).next().map_or(0, |f| f.len()),
        full_coverage: covered as u64 == config.problem.front_size(),
    }
}

/// Records of a complete run.
#[derive(Debug, Clone)]
pub struct RunOutcome {
    /// Row 0 describes `P_0`; row `t` the step producing `P_t`.
    pub records: Vec<IterationRecord>,
    /// Evaluations `N(t+1)` until `P_t` first covered the front.
    pub runtime: Option<u64>,
    /// Largest number of positive crowding distances seen in any critical front.
    pub max_positive_crowding: usize,
    pub final_population: Population,
}

pub fn run<R: Rng + ?Sized>(config: &RunConfig, rng: &mut R) -> Result<RunOutcome> {
    config.validate()?;
    let mut population = initial_population(config, rng);
    let first = initial_record(&population, config);
    let mut runtime = first.full_coverage.then_some(config.population_size as u64);
    let mut records = Vec::with_capacity(config.iterations + 1);
    records.push(first);
    let mut max_positive_crowding = 0;

    for t in 1..=config.iterations {
        if config.early_stop && runtime.is_some() {
            break;
        }
        let step = nsga2_iteration(&population, config, t, rng)?;
        max_positive_crowding = max_positive_crowding.max(step.survival.positive_crowding);
        if step.record.full_coverage && runtime.is_none() {
            runtime = Some(config.population_size as u64 * (t as u64 + 1));
        }
        records.push(step.record);
        population = step.population;
    }

    Ok(RunOutcome {
        records,
        runtime,
        max_positive_crowding,
        final_population: population,
    })
}
