//! NSGA-II on the many-objective LeadingOnesTrailingZeros benchmark.
//!
//! The crate provides the benchmark and its Pareto structure
//! ([`ProblemSpec`]), the NSGA-II machinery ([`engine`]), the parent
//! selection and mutation variants ([`variation`]), coverage metrics
//! ([`metrics`]) and a seeded replicate runner with CSV logs
//! ([`experiment`]).
//!
//! ```
//! use nsga_lotz::{ProblemSpec, RunConfig};
//!
//! let problem = ProblemSpec::new(8, 4)?;
//! let mut config = RunConfig::new(problem, 2 * problem.front_size() as usize);
//! config.iterations = 20;
//! let outcome = nsga_lotz::engine::run(&config, &mut config.rng())?;
//! assert_eq!(outcome.records.len(), 21);
//! # Ok::<(), nsga_lotz::Error>(())
//! ```

pub mod benchmark;
pub mod config;
pub mod engine;
pub mod error;
pub mod experiment;
pub mod individual;
pub mod metrics;
pub mod objective;
pub mod population;
pub mod rng;
pub mod variation;

#[cfg(test)]
mod testutil;

pub use benchmark::ProblemSpec;
pub use config::{PopulationSize, RunConfig};
pub use error::{Error, Result};
pub use individual::Individual;
pub use metrics::IterationRecord;
pub use objective::{compare_domination, Dominance, ObjectiveVector};
pub use population::{Member, Population};
pub use variation::{MutationMode, SelectionMode, VariationConfig};
