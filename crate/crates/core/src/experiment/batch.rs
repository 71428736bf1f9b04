use std::fmt;
use std::fs::{self, File};
use std::io::BufWriter;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use super::records::{write_aggregate, write_records};
use crate::config::RunConfig;
use crate::engine::{run, RunOutcome};
use crate::error::{Error, Result};
use crate::metrics::IterationRecord;
use crate::rng::replicate_seed;

pub const AGGREGATE_FILE: &str = "aggregate.csv";

/// Replicates `0..replicates` of `base`, written below `out_dir`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentBatch {
    pub base: RunConfig,
    pub replicates: u64,
    pub out_dir: PathBuf,
    /// Worker threads; 0 lets the pool decide.
    pub threads: usize,
}

impl ExperimentBatch {
    pub fn replicate_file(&self, replicate: u64) -> PathBuf {
        replicate_path(&self.out_dir, replicate)
    }

    pub fn aggregate_file(&self) -> PathBuf {
        self.out_dir.join(AGGREGATE_FILE)
    }
}

fn replicate_path(dir: &Path, replicate: u64) -> PathBuf {
    dir.join(format!("replicate_{replicate:03}.csv"))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReplicateSummary {
    pub replicate_id: u64,
    pub seed: u64,
    pub final_covered_r: usize,
    pub final_covered_p_next: usize,
    /// Iterations in which `|F_1|` of `R_t` exceeded `N`.
    pub f1_exceeded_n: usize,
    pub runtime: Option<u64>,
    pub max_positive_crowding: usize,
}

impl ReplicateSummary {
    fn new(config: &RunConfig, outcome: &RunOutcome) -> Self {
        let last = outcome.records.last().expect("runs always have the initial record");
        Self {
            replicate_id: config.replicate_id,
            seed: replicate_seed(config.seed, config.replicate_id),
            final_covered_r: last.covered_r,
            final_covered_p_next: last.covered_p_next,
            f1_exceeded_n: outcome
                .records
                .iter()
                .filter(|r| r.f1_size > config.population_size)
                .count(),
            runtime: outcome.runtime,
            max_positive_crowding: outcome.max_positive_crowding,
        }
    }
}

#[derive(Debug, Clone)]
pub struct BatchReport {
    pub base: RunConfig,
    pub replicates: Vec<ReplicateSummary>,
    pub records: Vec<Vec<IterationRecord>>,
}

impl fmt::Display for BatchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.base;
        writeln!(
            f,
            "mLOTZ n={} m={} M={} N={} selection={} mutation={}{} iterations={}",
            c.problem.n(),
            c.problem.m(),
            c.problem.front_size(),
            c.population_size,
            c.variation.selection,
            c.variation.mutation,
            if c.variation.crossover {
                format!(" crossover(p={})", c.variation.crossover_probability)
            } else {
                String::new()
            },
            c.iterations,
        )?;
        writeln!(f, "replicate  covered_R  covered_P_next  |F1|>N iterations  runtime")?;
        for r in &self.replicates {
            writeln!(
                f,
                "{:>9}  {:>9}  {:>14}  {:>17}  {}",
                r.replicate_id,
                r.final_covered_r,
                r.final_covered_p_next,
                r.f1_exceeded_n,
                r.runtime.map_or_else(|| "not reached".to_string(), |t| t.to_string()),
            )?;
        }
        Ok(())
    }
}

fn thread_pool(threads: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidConfig(format!("cannot start worker pool: {e}")))
}

/// Runs replicates `0..replicates` of `base` without writing anything.
/// Each replicate owns its random stream, so results do not depend on
/// `threads` or on which other replicates run.
pub fn run_replicates(base: &RunConfig, replicates: u64, threads: usize) -> Result<Vec<RunOutcome>> {
    base.validate()?;
    thread_pool(threads)?.install(|| {
        (0..replicates)
            .into_par_iter()
            .map(|id| {
                let config = base.with_replicate(id);
                run(&config, &mut config.rng())
            })
            .collect()
    })
}

/// Runs the batch, writes one CSV per replicate and `aggregate.csv`.
pub fn run_batch(batch: &ExperimentBatch) -> Result<BatchReport> {
    batch.base.validate()?;
    if batch.replicates == 0 {
        return Err(Error::InvalidConfig("at least one replicate is required".into()));
    }
    // fail on an unwritable destination before computing anything
    fs::create_dir_all(&batch.out_dir)?;
    let aggregate = File::create(batch.aggregate_file())?;

    let outcomes = run_replicates(&batch.base, batch.replicates, batch.threads)?;
    let mut summaries = Vec::with_capacity(outcomes.len());
    for (id, outcome) in (0..).zip(&outcomes) {
        let file = BufWriter::new(File::create(batch.replicate_file(id))?);
        write_records(file, &outcome.records)?;
        summaries.push(ReplicateSummary::new(&batch.base.with_replicate(id), outcome));
    }
    let runs: Vec<&[IterationRecord]> = outcomes.iter().map(|o| o.records.as_slice()).collect();
    write_aggregate(BufWriter::new(aggregate), &runs)?;

    Ok(BatchReport {
        base: batch.base.clone(),
        replicates: summaries,
        records: outcomes.into_iter().map(|o| o.records).collect(),
    })
}
